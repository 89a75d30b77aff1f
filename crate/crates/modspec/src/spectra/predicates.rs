use crate::algebra::{Bits, SubId};

use super::Module;

impl Module {
    /// L ≠ 0 and L ⊆ L1 + L2 ⇒ L ⊆ L1 or L ⊆ L2. Decided as L ⊄ Σ{X : L ⊄ X}.
    pub fn is_strongly_hollow(&self, l: SubId) -> bool {
        self.strongly_hollow_set().contains(l)
    }

    /// All strongly hollow members, as a row over lattice indices.
    pub fn strongly_hollow_set(&self) -> &Bits {
        self.strongly_hollow.get_or_init(|| {
            let lat = &self.lattice;
            Bits::from_indices(
                lat.len(),
                lat.ids().filter(|&l| {
                    let avoid = lat.up(l).complement();
                    !lat.leq(l, lat.join_all(avoid.iter()))
                }),
            )
        })
    }

    /// Least pair (L1, L2) with L ⊆ L1 + L2, L ⊄ L1 and L ⊄ L2.
    pub fn strongly_hollow_witness(&self, l: SubId) -> Option<(SubId, SubId)> {
        let lat = &self.lattice;
        let avoid: Vec<SubId> = lat.up(l).complement().iter().collect();
        for (i, &a) in avoid.iter().enumerate() {
            for &b in &avoid[i..] {
                if lat.leq(l, lat.join(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_strongly_hollow_pairwise(&self, l: SubId) -> bool {
        l != self.lattice.zero() && self.strongly_hollow_witness(l).is_none()
    }

    /// L = Σ L_λ ⇒ L = L_λ for some λ; on a finite lattice, the proper submodules of L sum to less than L.
    pub fn is_completely_hollow(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        l != lat.zero() && lat.join_all(lat.down(l).iter().filter(|&x| x != l)) != l
    }

    /// L ⪇ M and L1 ∩ L2 ⊆ L ⇒ L1 ⊆ L or L2 ⊆ L. Decided as ∩{X : X ⊄ L} ⊄ L.
    pub fn is_strongly_irreducible(&self, l: SubId) -> bool {
        self.strongly_irreducible_set().contains(l)
    }

    pub fn strongly_irreducible_set(&self) -> &Bits {
        self.strongly_irreducible.get_or_init(|| {
            let lat = &self.lattice;
            Bits::from_indices(
                lat.len(),
                lat.ids().filter(|&l| {
                    let avoid = lat.down(l).complement();
                    !lat.leq(lat.meet_all(avoid.iter()), l)
                }),
            )
        })
    }

    /// Least pair (L1, L2) with L1 ∩ L2 ⊆ L, L1 ⊄ L and L2 ⊄ L.
    pub fn strongly_irreducible_witness(&self, l: SubId) -> Option<(SubId, SubId)> {
        let lat = &self.lattice;
        let avoid: Vec<SubId> = lat.down(l).complement().iter().collect();
        for (i, &a) in avoid.iter().enumerate() {
            for &b in &avoid[i..] {
                if lat.leq(lat.meet(a, b), l) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_strongly_irreducible_pairwise(&self, l: SubId) -> bool {
        l != self.top() && self.strongly_irreducible_witness(l).is_none()
    }

    /// L ⪇ M and L1 ∩ L2 = L ⇒ L1 = L or L2 = L.
    pub fn is_irreducible(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        if l == self.top() {
            return false;
        }
        let over: Vec<SubId> = lat.up(l).iter().filter(|&x| x != l).collect();
        over.iter()
            .enumerate()
            .all(|(i, &a)| over[i..].iter().all(|&b| lat.meet(a, b) != l))
    }

    /// L ⪇ M and the strict overmodules of L intersect to more than L.
    pub fn is_completely_irreducible(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        l != self.top() && lat.meet_all(lat.up(l).iter().filter(|&x| x != l)) != l
    }

    /// L as a module in its own right: every N ≤ L equals (N :_R L)·L.
    pub fn is_multiplication_sub(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        lat.down(l)
            .iter()
            .all(|n| lat.ideal_times(&lat.colon(n, l), l) == n)
    }

    /// L as a module in its own right: every N ≤ L equals (0 :_L ann_R(N)).
    pub fn is_comultiplication_sub(&self, l: SubId) -> bool {
        let lat = &self.lattice;
        lat.down(l)
            .iter()
            .all(|n| lat.meet(lat.annihilated_by(&lat.annihilator(n)), l) == n)
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra::LatticeBudget;
    use crate::spectra::Module;

    fn module(s: &str) -> Module {
        Module::new(&s.parse().unwrap(), LatticeBudget::default()).unwrap()
    }

    const SHAPES: &[&str] = &[
        "n=8;M=8",
        "n=12;M=12",
        "n=2;M=2,2",
        "n=4;M=2,4",
        "n=12;M=2,6",
        "n=3;M=3,3",
        "n=2;M=2,2,2",
        "n=4;M=4,4",
    ];

    #[test]
    fn fast_routes_match_pairwise() {
        for s in SHAPES {
            let m = module(s);
            for l in m.lattice().ids() {
                assert_eq!(m.is_strongly_hollow(l), m.is_strongly_hollow_pairwise(l), "{s} SH {l}");
                assert_eq!(
                    m.is_strongly_irreducible(l),
                    m.is_strongly_irreducible_pairwise(l),
                    "{s} SI {l}"
                );
            }
        }
    }

    #[test]
    fn uniserial_everything_strong() {
        let m = module("n=8;M=8");
        for l in m.lattice().ids().skip(1) {
            assert!(m.is_strongly_hollow(l));
        }
        let m = module("n=9;M=9");
        for l in m.lattice().ids().take(m.lattice().len() - 1) {
            assert!(m.is_strongly_irreducible(l));
        }
    }

    #[test]
    fn diagonal_line_is_hollow_not_strongly() {
        let m = module("n=2;M=2,2");
        let diag = m.lattice().generated_by(&[m.shape().element(&[1, 1])]);
        assert!(m.is_completely_hollow(diag));
        assert!(!m.is_strongly_hollow(diag));
        let (a, b) = m.strongly_hollow_witness(diag).unwrap();
        assert!(m.lattice().leq(diag, m.lattice().join(a, b)));
        assert!(!m.is_strongly_hollow(0));
    }

    #[test]
    fn zero_in_z6_is_not_irreducible() {
        let m = module("n=6;M=6");
        assert!(!m.is_irreducible(0));
        assert!(!m.is_completely_irreducible(0));
        let two = m.lattice().generated_by(&[2]);
        assert!(m.is_irreducible(two));
        assert!(m.is_completely_irreducible(two));
        assert!(!m.is_irreducible(m.top()));
    }

    #[test]
    fn completely_irreducible_matches_definition() {
        // completely irreducible: L is not the intersection of any family of strict overmodules
        for s in SHAPES {
            let m = module(s);
            let lat = m.lattice();
            for l in lat.ids().take(lat.len() - 1) {
                let over: Vec<usize> = lat.up(l).iter().filter(|&x| x != l).collect();
                let by_family = (1u32..1 << over.len().min(12)).any(|mask| {
                    let fam = over.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x);
                    lat.meet_all(fam) == l
                });
                if over.len() <= 12 {
                    assert_eq!(m.is_completely_irreducible(l), !by_family, "{s} {l}");
                }
            }
        }
    }

    #[test]
    fn multiplication_and_comultiplication() {
        for s in ["n=12;M=12", "n=8;M=4", "n=6;M=6"] {
            let m = module(s);
            assert!(m.is_multiplication_sub(m.top()) && m.is_comultiplication_sub(m.top()), "{s}");
        }
        for s in ["n=2;M=2,2", "n=4;M=2,4"] {
            let m = module(s);
            assert!(!m.is_multiplication_sub(m.top()) && !m.is_comultiplication_sub(m.top()), "{s}");
        }
    }
}
