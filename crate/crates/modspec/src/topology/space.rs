use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Bits, SubId};

use super::{Provenance, TopologyError};

/// A finite space given by its closed sets, each a `Bits` over point positions.
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    points: Vec<SubId>,
    closed: Vec<Bits>,
    provenance: Option<Provenance>,
}

/// Topological properties decided by exhaustion. `compact`, `noetherian` and `artinian`
/// hold for every finite space and carry no information.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub connected: bool,
    pub ultraconnected: bool,
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub discrete: bool,
    pub compact: bool,
    pub noetherian: bool,
    pub artinian: bool,
}

impl FiniteSpace {
    /// Adjoins ∅ and the whole set, deduplicates, and checks closure under union and intersection.
    pub fn new(
        points: Vec<SubId>,
        family: impl IntoIterator<Item = Bits>,
        provenance: Option<Provenance>,
    ) -> Result<Self, TopologyError> {
        let n = points.len();
        let mut seen: HashSet<Bits> = HashSet::new();
        seen.insert(Bits::new(n));
        seen.insert(Bits::full(n));
        for f in family {
            if f.len() != n {
                return Err(TopologyError::Axiom("closed set over the wrong point set".into()));
            }
            seen.insert(f);
        }
        let mut closed: Vec<Bits> = seen.into_iter().collect();
        closed.sort_by(Bits::canonical_cmp);
        let set: HashSet<&Bits> = closed.iter().collect();
        for (i, a) in closed.iter().enumerate() {
            for b in &closed[i + 1..] {
                if !set.contains(&a.union(b)) {
                    return Err(TopologyError::Axiom(format!("union of {a:?} and {b:?} is not closed")));
                }
                if !set.contains(&a.intersection(b)) {
                    return Err(TopologyError::Axiom(format!(
                        "intersection of {a:?} and {b:?} is not closed"
                    )));
                }
            }
        }
        Ok(FiniteSpace {
            points,
            closed,
            provenance,
        })
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

    /// Closed sets ordered by size, then lexicographically.
    pub fn closed_sets(&self) -> &[Bits] {
        &self.closed
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    pub fn is_closed(&self, a: &Bits) -> bool {
        self.closed.binary_search_by(|c| c.canonical_cmp(a)).is_ok()
    }

    pub fn singleton(&self, p: usize) -> Bits {
        Bits::from_indices(self.len(), [p])
    }

    /// The least closed superset.
    pub fn closure(&self, a: &Bits) -> Bits {
        let mut out = Bits::full(self.len());
        for c in self.closed.iter().filter(|c| a.is_subset(c)) {
            out.intersect_with(c);
        }
        out
    }

    // Maximal closed sets strictly inside `c`.
    fn maximal_closed_below(&self, c: &Bits) -> Vec<&Bits> {
        let below: Vec<&Bits> = self
            .closed
            .iter()
            .filter(|x| x.is_subset(c) && *x != c)
            .collect();
        below
            .iter()
            .copied()
            .filter(|x| !below.iter().any(|y| y != x && x.is_subset(y)))
            .collect()
    }

    /// A ≠ ∅ and A ⊆ A1 ∪ A2 with A1, A2 closed forces A ⊆ A1 or A ⊆ A2.
    pub fn is_irreducible(&self, a: &Bits) -> bool {
        if a.is_empty() {
            return false;
        }
        // A1 ∩ cl(A) is closed and misses part of A exactly when it is a proper closed subset of cl(A)
        let c = self.closure(a);
        let below = self.maximal_closed_below(&c);
        below
            .iter()
            .enumerate()
            .all(|(i, x)| below[i..].iter().all(|y| !a.is_subset(&x.union(y))))
    }

    /// Irreducible closed sets, in closed-set order.
    pub fn irreducible_closed_sets(&self) -> Vec<&Bits> {
        self.closed.iter().filter(|c| self.is_irreducible(c)).collect()
    }

    /// Maximal irreducible subsets; these are closed.
    pub fn components(&self) -> Vec<Bits> {
        let irr = self.irreducible_closed_sets();
        irr.iter()
            .filter(|x| !irr.iter().any(|y| y != *x && x.is_subset(y)))
            .map(|x| (*x).clone())
            .collect()
    }

    /// Points whose closure is `a`.
    pub fn generic_points(&self, a: &Bits) -> Vec<usize> {
        (0..self.len())
            .filter(|&p| &self.closure(&self.singleton(p)) == a)
            .collect()
    }

    /// Every irreducible closed set has exactly one generic point.
    pub fn is_sober(&self) -> bool {
        self.irreducible_closed_sets()
            .iter()
            .all(|c| self.generic_points(c).len() == 1)
    }

    /// The subspace A is connected: no two closed sets split it into nonempty disjoint parts.
    pub fn is_connected_subset(&self, a: &Bits) -> bool {
        let traces: Vec<Bits> = self
            .closed
            .iter()
            .map(|c| c.intersection(a))
            .filter(|t| !t.is_empty() && t != a)
            .collect();
        !traces
            .iter()
            .any(|t| traces.iter().any(|u| !t.intersects(u) && &t.union(u) == a))
    }

    // Smallest open set containing p.
    fn open_hull(&self, p: usize) -> Bits {
        let mut avoid = Bits::new(self.len());
        for c in self.closed.iter().filter(|c| !c.contains(p)) {
            avoid.union_with(c);
        }
        avoid.complement()
    }

    pub fn properties(&self) -> Properties {
        let n = self.len();
        let full = Bits::full(n);
        let nonempty: Vec<&Bits> = self.closed.iter().filter(|c| !c.is_empty()).collect();
        let closures: Vec<Bits> = (0..n).map(|p| self.closure(&self.singleton(p))).collect();
        let hulls: Vec<Bits> = (0..n).map(|p| self.open_hull(p)).collect();
        let distinct_pairs = || (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y)));
        Properties {
            connected: !self
                .closed
                .iter()
                .any(|c| !c.is_empty() && c != &full && self.is_closed(&c.complement())),
            ultraconnected: nonempty
                .iter()
                .all(|a| nonempty.iter().all(|b| a.intersects(b))),
            t0: distinct_pairs().all(|(x, y)| closures[x] != closures[y]),
            t1: (0..n).all(|p| closures[p] == self.singleton(p)),
            t2: distinct_pairs().all(|(x, y)| !hulls[x].intersects(&hulls[y])),
            discrete: (0..n).all(|p| self.is_closed(&self.singleton(p).complement())),
            compact: true,
            noetherian: true,
            artinian: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize, sets: &[&[usize]]) -> FiniteSpace {
        let fam = sets.iter().map(|s| Bits::from_indices(n, s.iter().copied()));
        FiniteSpace::new((0..n).collect(), fam, None).unwrap()
    }

    #[test]
    fn sierpinski() {
        // closed: ∅, {1}, {0,1}
        let s = space(2, &[&[1]]);
        let p = s.properties();
        assert!(p.t0 && !p.t1 && !p.t2 && !p.discrete && p.connected && p.ultraconnected);
        assert_eq!(s.components(), vec![Bits::full(2)]);
        assert_eq!(s.generic_points(&Bits::full(2)), vec![0]);
        assert!(s.is_sober());
    }

    #[test]
    fn discrete_pair() {
        let s = space(2, &[&[0], &[1]]);
        let p = s.properties();
        assert!(p.t1 && p.t2 && p.discrete && !p.connected && !p.ultraconnected);
        assert!(!s.is_irreducible(&Bits::full(2)));
        assert_eq!(s.components().len(), 2);
        assert!(!s.is_connected_subset(&Bits::full(2)));
    }

    #[test]
    fn indiscrete_pair_is_not_sober() {
        let s = space(2, &[]);
        let p = s.properties();
        assert!(!p.t0 && p.connected);
        assert_eq!(s.generic_points(&Bits::full(2)).len(), 2);
        assert!(!s.is_sober());
    }

    #[test]
    fn rejects_non_topology() {
        let fam = [Bits::from_indices(3, [0]), Bits::from_indices(3, [1])];
        assert!(FiniteSpace::new(vec![0, 1, 2], fam, None).is_err());
    }

    #[test]
    fn closure_is_a_closure_operator() {
        let s = space(3, &[&[0], &[0, 1], &[2], &[0, 2]]);
        for mask in 0..8u64 {
            let a = Bits::from_mask(3, mask);
            let c = s.closure(&a);
            assert!(a.is_subset(&c));
            assert_eq!(s.closure(&c), c);
            assert!(s.is_closed(&c));
            for sup in 0..8u64 {
                let b = Bits::from_mask(3, sup);
                if a.is_subset(&b) {
                    assert!(c.is_subset(&s.closure(&b)));
                }
            }
        }
    }

    #[test]
    fn empty_space() {
        let s = FiniteSpace::new(vec![], [], None).unwrap();
        assert_eq!(s.closed_sets().len(), 1);
        assert!(s.is_sober());
        assert!(s.components().is_empty());
    }
}
