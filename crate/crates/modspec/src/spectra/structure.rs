use serde::Serialize;

use crate::algebra::{Lattice, SubId};

use super::Module;

// Above this many other maximal submodules, the max-property is decided on the full family
// only; intersections shrink as the family grows, so that family is the hardest case.
const MAX_PROPERTY_SUBSETS: usize = 16;

/// Module-level predicates, each decided by exhaustion over the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub cyclic: bool,
    pub simple: bool,
    pub coprime: bool,
    pub hollow: bool,
    pub local: bool,
    pub colocal: bool,
    pub uniform: bool,
    pub atomic: bool,
    pub coatomic: bool,
    pub multiplication: bool,
    pub comultiplication: bool,
    pub semisimple: bool,
    pub homogeneous_semisimple: bool,
    pub distributive: bool,
    pub completely_distributive: bool,
    pub min_property: bool,
    pub max_property: bool,
    pub complete_max_property: bool,
}

impl Structure {
    pub(super) fn compute(m: &Module) -> Self {
        let lat = m.lattice();
        let top = lat.top();
        let proper: Vec<SubId> = lat.ids().filter(|&x| x != top).collect();
        let nonzero: Vec<SubId> = lat.ids().filter(|&x| x != 0).collect();
        let simples = lat.simples();
        let maximals = lat.maximals();
        let sizes_agree = simples.windows(2).all(|w| lat.size(w[0]) == lat.size(w[1]));
        let semisimple = lat.socle() == top;
        Structure {
            cyclic: m.shape().is_cyclic(),
            simple: lat.len() == 2,
            coprime: m.is_coprime_module(top),
            hollow: all_pairs(&proper, |a, b| lat.join(a, b) != top),
            local: proper.iter().any(|&x| proper.iter().all(|&y| lat.leq(y, x))),
            colocal: nonzero.iter().any(|&x| nonzero.iter().all(|&y| lat.leq(x, y))),
            uniform: all_pairs(&nonzero, |a, b| lat.meet(a, b) != 0),
            atomic: nonzero.iter().all(|&x| simples.iter().any(|&s| lat.leq(s, x))),
            coatomic: proper.iter().all(|&x| maximals.iter().any(|&s| lat.leq(x, s))),
            multiplication: m.is_multiplication_sub(top),
            comultiplication: m.is_comultiplication_sub(top),
            semisimple,
            homogeneous_semisimple: semisimple && sizes_agree,
            distributive: distributive(lat),
            completely_distributive: dual_distributive(lat),
            min_property: simples
                .iter()
                .all(|&l| !lat.leq(l, l_e(lat, &simples, l))),
            max_property: max_property(lat, &maximals),
            complete_max_property: maximals
                .iter()
                .all(|&l| !lat.leq(l_upper_e(lat, &maximals, l), l)),
        }
    }
}

fn all_pairs(xs: &[SubId], f: impl Fn(SubId, SubId) -> bool) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, &a)| xs[i..].iter().all(|&b| f(a, b)))
}

/// L_e: the sum of the simple submodules other than L.
pub(crate) fn l_e(lat: &Lattice, simples: &[SubId], l: SubId) -> SubId {
    lat.join_all(simples.iter().copied().filter(|&x| x != l))
}

/// L^e: the intersection of the maximal submodules other than L.
pub(crate) fn l_upper_e(lat: &Lattice, maximals: &[SubId], l: SubId) -> SubId {
    lat.meet_all(maximals.iter().copied().filter(|&x| x != l))
}

fn max_property(lat: &Lattice, maximals: &[SubId]) -> bool {
    maximals.iter().all(|&l| {
        let others: Vec<SubId> = maximals.iter().copied().filter(|&x| x != l).collect();
        if others.len() > MAX_PROPERTY_SUBSETS {
            return !lat.leq(lat.meet_all(others), l);
        }
        (0u32..1 << others.len()).all(|mask| {
            let family = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x);
            !lat.leq(lat.meet_all(family), l)
        })
    })
}

// L ∩ (K1 + K2) = (L ∩ K1) + (L ∩ K2)
fn distributive(lat: &Lattice) -> bool {
    lat.ids().all(|l| {
        lat.ids().all(|a| {
            (a..lat.len()).all(|b| {
                lat.meet(l, lat.join(a, b)) == lat.join(lat.meet(l, a), lat.meet(l, b))
            })
        })
    })
}

// L + (K1 ∩ K2) = (L + K1) ∩ (L + K2); families of any finite size reduce to this by induction.
fn dual_distributive(lat: &Lattice) -> bool {
    lat.ids().all(|l| {
        lat.ids().all(|a| {
            (a..lat.len()).all(|b| {
                lat.join(l, lat.meet(a, b)) == lat.meet(lat.join(l, a), lat.join(l, b))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use crate::algebra::LatticeBudget;
    use crate::spectra::Module;

    fn structure(s: &str) -> super::Structure {
        let m = Module::new(&s.parse().unwrap(), LatticeBudget::default()).unwrap();
        m.structure().clone()
    }

    #[test]
    fn uniserial_is_everything_local() {
        let s = structure("n=27;M=27");
        assert!(s.hollow && s.local && s.colocal && s.uniform && s.distributive);
        assert!(s.multiplication && s.comultiplication && !s.semisimple);
    }

    #[test]
    fn plane_over_f2() {
        let s = structure("n=2;M=2,2");
        assert!(!s.multiplication && !s.comultiplication);
        assert!(!s.min_property && !s.max_property && !s.complete_max_property);
        assert!(s.semisimple && s.homogeneous_semisimple && s.coprime);
        assert!(!s.hollow && !s.uniform && !s.distributive && !s.completely_distributive);
    }

    #[test]
    fn z6() {
        let s = structure("n=6;M=6");
        assert!(s.min_property && s.max_property && s.complete_max_property);
        assert!(s.semisimple && !s.homogeneous_semisimple && !s.coprime);
        assert!(!s.local && !s.colocal && s.distributive);
        assert!(s.atomic && s.coatomic);
    }
}
