pub mod algebra;
pub mod spectra;
pub mod topology;
pub mod verify;
