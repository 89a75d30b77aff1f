//! Coprime and second submodules, their spectra and varieties, and structural predicates.

mod predicates;
mod structure;

pub use structure::Structure;

use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Bits, Ideal, Lattice, LatticeBudget, Quotient, Ring, Shape, SubId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("submodule {0} is not proper")]
    NotProper(SubId),
    #[error("submodule {0} is not contained in submodule {1}")]
    NotContained(SubId, SubId),
}

/// Which spectrum: second submodules or coprime submodules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Second,
    Coprime,
}

impl Side {
    pub fn short(self) -> &'static str {
        match self {
            Side::Second => "s",
            Side::Coprime => "c",
        }
    }
}

/// The members of a spectrum, in lattice order. Subsets of the spectrum are `Bits` over positions.
#[derive(Debug, Clone)]
pub struct Spectrum {
    side: Side,
    points: Vec<SubId>,
    position: Vec<Option<usize>>,
}

impl Spectrum {
    fn new(side: Side, lattice_len: usize, points: Vec<SubId>) -> Self {
        let mut position = vec![None; lattice_len];
        for (p, &id) in points.iter().enumerate() {
            position[id] = Some(p);
        }
        Spectrum {
            side,
            points,
            position,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn points(&self) -> &[SubId] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, id: SubId) -> bool {
        self.position[id].is_some()
    }

    pub fn position(&self, id: SubId) -> Option<usize> {
        self.position[id]
    }

    pub fn subset(&self, ids: impl IntoIterator<Item = SubId>) -> Bits {
        Bits::from_indices(
            self.len(),
            ids.into_iter().map(|id| self.position[id].expect("member of the spectrum")),
        )
    }

    pub fn members(&self, subset: &Bits) -> Vec<SubId> {
        subset.iter().map(|p| self.points[p]).collect()
    }

    pub fn full(&self) -> Bits {
        Bits::full(self.len())
    }
}

/// A finite module with its lattice and lazily computed spectra.
#[derive(Debug)]
pub struct Module {
    lattice: Lattice,
    second: OnceLock<Spectrum>,
    coprime: OnceLock<Spectrum>,
    strongly_hollow: OnceLock<Bits>,
    strongly_irreducible: OnceLock<Bits>,
    structure: OnceLock<Structure>,
}

impl Module {
    pub fn new(shape: &Shape, budget: LatticeBudget) -> Result<Self, AlgebraError> {
        Ok(Module::from_lattice(Lattice::enumerate(shape, budget)?))
    }

    pub fn from_lattice(lattice: Lattice) -> Self {
        Module {
            lattice,
            second: OnceLock::new(),
            coprime: OnceLock::new(),
            strongly_hollow: OnceLock::new(),
            strongly_irreducible: OnceLock::new(),
            structure: OnceLock::new(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn shape(&self) -> &Shape {
        self.lattice.shape()
    }

    pub fn ring(&self) -> &Ring {
        self.lattice.shape().ring()
    }

    pub fn top(&self) -> SubId {
        self.lattice.top()
    }

    /// Least ideal I (by divisor) with IL ≠ L and IL ≠ 0, or `None` if L is a coprime module.
    pub fn coprime_module_witness(&self, l: SubId) -> Option<Ideal> {
        let lat = &self.lattice;
        self.ring()
            .ideals()
            .find(|i| {
                let il = lat.ideal_times(i, l);
                il != l && il != lat.zero()
            })
    }

    pub fn is_coprime_module(&self, l: SubId) -> bool {
        self.coprime_module_witness(l).is_none()
    }

    /// Least ideal I with IL + K ≠ L and IL ⊄ K, or `None` if K is coprime in L.
    pub fn coprime_in_witness(&self, k: SubId, l: SubId) -> Result<Option<Ideal>, SpectraError> {
        let lat = &self.lattice;
        if k == l {
            return Err(SpectraError::NotProper(k));
        }
        if !lat.leq(k, l) {
            return Err(SpectraError::NotContained(k, l));
        }
        Ok(self.ring().ideals().find(|i| {
            let il = lat.ideal_times(i, l);
            lat.join(il, k) != l && !lat.leq(il, k)
        }))
    }

    /// K ⪇ L is coprime in L. False for K = L or K ⊄ L.
    pub fn is_coprime_in(&self, k: SubId, l: SubId) -> bool {
        matches!(self.coprime_in_witness(k, l), Ok(None))
    }

    /// K coprime in M, decided from the invariant factors of M/K alone.
    pub fn is_coprime_by_quotient(&self, k: SubId) -> bool {
        let q = Quotient::new(&self.lattice, k);
        !q.is_zero() && factors_coprime_witness(self.ring(), q.factors()).is_none()
    }

    pub fn is_second(&self, l: SubId) -> bool {
        l != self.lattice.zero() && self.is_coprime_module(l)
    }

    pub fn spectrum(&self, side: Side) -> &Spectrum {
        match side {
            Side::Second => self.second.get_or_init(|| {
                let pts = self.lattice.ids().filter(|&l| self.is_second(l)).collect();
                Spectrum::new(side, self.lattice.len(), pts)
            }),
            Side::Coprime => self.coprime.get_or_init(|| {
                let top = self.top();
                let pts = self
                    .lattice
                    .ids()
                    .filter(|&k| self.is_coprime_in(k, top))
                    .collect();
                Spectrum::new(side, self.lattice.len(), pts)
            }),
        }
    }

    pub fn spec_s(&self) -> &Spectrum {
        self.spectrum(Side::Second)
    }

    pub fn spec_c(&self) -> &Spectrum {
        self.spectrum(Side::Coprime)
    }

    /// V^s(L) = {K second : K ⊆ L}, or V^c(L) = {K coprime : L ⊆ K}.
    pub fn variety(&self, side: Side, l: SubId) -> Bits {
        let spec = self.spectrum(side);
        let rel = match side {
            Side::Second => self.lattice.down(l),
            Side::Coprime => self.lattice.up(l),
        };
        Bits::from_indices(
            spec.len(),
            spec.points()
                .iter()
                .enumerate()
                .filter(|(_, &k)| rel.contains(k))
                .map(|(p, _)| p),
        )
    }

    /// X(L), the complement of V(L) in the spectrum.
    pub fn covariety(&self, side: Side, l: SubId) -> Bits {
        self.variety(side, l).complement()
    }

    /// H(A) = ΣA on the second side (0 if empty), J(A) = ∩A on the coprime side (M if empty).
    pub fn hull(&self, side: Side, subset: &Bits) -> SubId {
        let members = self.spectrum(side).members(subset);
        match side {
            Side::Second => self.lattice.join_all(members),
            Side::Coprime => self.lattice.meet_all(members),
        }
    }

    /// Corad^s(L) = H(V^s(L)) or Rad^c(L) = J(V^c(L)).
    pub fn radical(&self, side: Side, l: SubId) -> SubId {
        self.hull(side, &self.variety(side, l))
    }

    pub fn corad_s(&self, l: SubId) -> SubId {
        self.radical(Side::Second, l)
    }

    pub fn rad_c(&self, l: SubId) -> SubId {
        self.radical(Side::Coprime, l)
    }

    /// L = (0 :_M (0 :_R L)).
    pub fn is_annihilator_closed(&self, l: SubId) -> bool {
        self.lattice.annihilated_by(&self.lattice.annihilator(l)) == l
    }

    /// L = IM for some ideal I.
    pub fn is_ideal_multiple(&self, l: SubId) -> bool {
        let top = self.top();
        self.lattice.ideal_times(&self.lattice.colon(l, top), top) == l
    }

    /// Parameters of the restricted variety families: L_c(M) on the second side, L_m(M) on the coprime side.
    pub fn restricted_parameters(&self, side: Side) -> Vec<SubId> {
        self.lattice
            .ids()
            .filter(|&l| match side {
                Side::Second => self.is_annihilator_closed(l),
                Side::Coprime => self.is_ideal_multiple(l),
            })
            .collect()
    }

    /// Primes p with p = ann_R(L) for some submodule L.
    pub fn associated_primes(&self) -> Vec<Ideal> {
        let mut out: Vec<Ideal> = self
            .lattice
            .ids()
            .map(|l| self.lattice.annihilator(l))
            .filter(Ideal::is_prime)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// M/K is divisible over R/q, q = (K :_R M): rM + K = M for every r that is a non-zero-divisor mod q.
    pub fn is_divisible_quotient(&self, k: SubId) -> bool {
        let lat = &self.lattice;
        let top = self.top();
        let g = lat.colon(k, top).divisor();
        let n = self.ring().modulus();
        (0..g)
            .filter(|&r| (1..g).all(|s| (r * s) % g != 0))
            .all(|r| lat.join(lat.ideal_times(&Ideal::new(n, r), top), k) == top)
    }

    /// rL = rM ∩ L for every r.
    pub fn is_relatively_divisible(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        let top = self.top();
        self.ring()
            .ideals()
            .all(|i| lat.ideal_times(&i, l) == lat.meet(lat.ideal_times(&i, top), l))
    }

    pub fn structure(&self) -> &Structure {
        self.structure.get_or_init(|| Structure::compute(self))
    }
}

/// Least divisor d for which d·(⊕ Z/e_i) is neither everything nor zero.
pub fn factors_coprime_witness(ring: &Ring, factors: &[u64]) -> Option<Ideal> {
    ring.ideals().find(|i| {
        let d = i.divisor();
        let whole = factors.iter().all(|e| e.gcd(&d) == 1);
        let zero = factors.iter().all(|e| d % e == 0);
        !whole && !zero
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(s: &str) -> Module {
        Module::new(&s.parse().unwrap(), LatticeBudget::default()).unwrap()
    }

    fn names(m: &Module, ids: &[SubId]) -> Vec<String> {
        ids.iter().map(|&i| m.lattice().name(i)).collect()
    }

    #[test]
    fn z6_is_not_coprime() {
        let m = module("n=6;M=6");
        let w = m.coprime_module_witness(m.top()).unwrap();
        assert_eq!(w.divisor(), 2);
        assert!(!m.is_coprime_in(0, m.top()));
        assert!(!m.is_coprime_by_quotient(0));
    }

    #[test]
    fn z12_spectra() {
        let m = module("n=12;M=12");
        assert_eq!(names(&m, m.spec_c().points()), vec!["<3>", "<2>"]);
        assert_eq!(names(&m, m.spec_s().points()), vec!["<6>", "<4>"]);
        assert_eq!(m.lattice().name(m.corad_s(m.top())), "<2>");
        assert_eq!(m.lattice().name(m.rad_c(0)), "<6>");
        assert_eq!(m.corad_s(0), 0);
        assert_eq!(m.rad_c(m.top()), m.top());
        let six = m.lattice().generated_by(&[6]);
        assert_eq!(m.spec_s().members(&m.variety(Side::Second, six)), vec![six]);
    }

    #[test]
    fn plane_spectra() {
        let m = module("n=3;M=3,3");
        assert_eq!(m.spec_s().len(), 5);
        assert_eq!(m.spec_c().len(), 5);
        assert!(m.is_coprime_module(m.top()));
    }

    #[test]
    fn z4_is_not_second() {
        let m = module("n=4;M=4");
        assert!(!m.is_second(m.top()));
        assert!(m.is_coprime_in(m.lattice().generated_by(&[2]), m.top()));
        assert!(!m.is_second(0));
    }

    #[test]
    fn coprime_in_rejects_improper() {
        let m = module("n=4;M=4");
        assert_eq!(
            m.coprime_in_witness(m.top(), m.top()),
            Err(SpectraError::NotProper(m.top()))
        );
        let two = m.lattice().generated_by(&[2]);
        assert!(matches!(
            m.coprime_in_witness(m.top(), two),
            Err(SpectraError::NotContained(..))
        ));
    }

    #[test]
    fn varieties_at_the_ends() {
        let m = module("n=12;M=2,6");
        assert!(m.variety(Side::Second, 0).is_empty());
        assert_eq!(m.variety(Side::Second, m.top()), m.spec_s().full());
        assert!(m.variety(Side::Coprime, m.top()).is_empty());
        assert_eq!(m.variety(Side::Coprime, 0), m.spec_c().full());
    }

    #[test]
    fn associated_primes() {
        let ideals = |s: &str| -> Vec<u64> {
            module(s).associated_primes().iter().map(Ideal::divisor).collect()
        };
        assert_eq!(ideals("n=12;M=12"), vec![2, 3]);
        assert_eq!(ideals("n=5;M=5"), vec![5]);
        assert_eq!(ideals("n=2;M=2,2"), vec![2]);
    }
}
