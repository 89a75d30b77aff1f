//! Finite modules over Z/nZ: ideals, shapes, the submodule lattice and quotients.

mod bits;
mod lattice;
mod quotient;
mod ring;
mod shape;

pub use bits::Bits;
pub use lattice::{span, Lattice, LatticeBudget, SubId};
pub use quotient::{quotient_shape, Quotient};
pub use ring::{factorize, is_prime, Ideal, Ring};
pub use shape::{direct_sum, invariant_factors, Element, Shape};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("no invariant factors given")]
    NoFactors,
    #[error("invariant factor must be at least 2, got {0}")]
    TrivialFactor(u64),
    #[error("invariant factor {factor} does not divide the modulus {modulus}")]
    FactorNotDivisor { factor: u64, modulus: u64 },
    #[error("invariant factors {factors:?} do not form a divisibility chain (the same module is M={})", join(.canonical))]
    NotAChain { factors: Vec<u64>, canonical: Vec<u64> },
    #[error("module order overflows")]
    OrderOverflow,
    #[error("cannot parse instance `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("shapes live over different rings")]
    RingMismatch,
    #[error("module has {order} elements, over the element budget of {budget}")]
    OrderBudget { order: usize, budget: usize },
    #[error("submodule lattice has more than {budget} members")]
    LatticeBudget { budget: usize },
    #[error("quotient by the whole module is zero")]
    ZeroQuotient,
}

impl AlgebraError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            AlgebraError::OrderBudget { .. } | AlgebraError::LatticeBudget { .. }
        )
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
