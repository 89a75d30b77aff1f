use std::collections::{HashMap, HashSet};

use super::bits::Bits;
use super::ring::Ideal;
use super::shape::{Element, Shape};
use super::AlgebraError;

/// Index of a submodule inside its lattice. 0 is the zero submodule, the last index is M.
pub type SubId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBudget {
    pub max_members: usize,
    pub max_order: usize,
}

impl Default for LatticeBudget {
    fn default() -> Self {
        LatticeBudget {
            max_members: 5000,
            max_order: 4096,
        }
    }
}

/// Every submodule of a finite module, sorted by (cardinality, element list).
#[derive(Debug)]
pub struct Lattice {
    shape: Shape,
    sets: Vec<Bits>,
    spanning: Vec<Vec<Element>>,
    index: HashMap<Bits, SubId>,
    up: Vec<Bits>,
    down: Vec<Bits>,
    // scaled[i][j] = d_j · L_i where d_j is the j-th divisor of n
    scaled: Vec<Vec<SubId>>,
    ann_ring: Vec<usize>,
    ann_module: Vec<SubId>,
}

/// The subgroup generated by `gens`.
pub fn span(shape: &Shape, gens: &[Element]) -> Bits {
    let adder = Adder { shape, table: None };
    let mut set = Bits::new(shape.order());
    set.insert(0);
    for &g in gens {
        let members: Vec<Element> = set.iter().collect();
        set = adder.extend(&set, &members, g);
    }
    set
}

// Addition with a lookup table for small modules.
struct Adder<'a> {
    shape: &'a Shape,
    table: Option<Vec<u16>>,
}

impl<'a> Adder<'a> {
    const TABLE_LIMIT: usize = 512;

    fn new(shape: &'a Shape) -> Self {
        let n = shape.order();
        let table = (n <= Self::TABLE_LIMIT).then(|| {
            (0..n * n)
                .map(|ab| shape.add(ab / n, ab % n) as u16)
                .collect()
        });
        Adder { shape, table }
    }

    fn add(&self, a: Element, b: Element) -> Element {
        match &self.table {
            Some(t) => t[a * self.shape.order() + b] as Element,
            None => self.shape.add(a, b),
        }
    }

    // X + <g> for a subgroup X with the given members, as the union of the cosets X + jg.
    fn extend(&self, x: &Bits, members: &[Element], g: Element) -> Bits {
        let mut out = x.clone();
        let mut t = g;
        while !x.contains(t) {
            for &e in members {
                out.insert(self.add(e, t));
            }
            t = self.add(t, g);
        }
        out
    }
}

impl Lattice {
    pub fn enumerate(shape: &Shape, budget: LatticeBudget) -> Result<Self, AlgebraError> {
        let order = shape.order();
        if order > budget.max_order {
            return Err(AlgebraError::OrderBudget {
                order,
                budget: budget.max_order,
            });
        }
        let adder = Adder::new(shape);
        let zero = Bits::from_indices(order, [0]);
        let mut seen_cyclic = HashSet::new();
        let mut cyclic_gens = Vec::new();
        for e in 1..order {
            let c = adder.extend(&zero, &[0], e);
            if seen_cyclic.insert(c) {
                cyclic_gens.push(e);
            }
        }

        let mut found: HashMap<Bits, Vec<Element>> = HashMap::new();
        let mut queue = Vec::new();
        found.insert(zero.clone(), Vec::new());
        queue.push(zero);
        while let Some(x) = queue.pop() {
            let gens = found[&x].clone();
            let members: Vec<Element> = x.iter().collect();
            for &g in &cyclic_gens {
                if x.contains(g) {
                    continue;
                }
                let y = adder.extend(&x, &members, g);
                if found.contains_key(&y) {
                    continue;
                }
                let mut ygens = gens.clone();
                ygens.push(g);
                found.insert(y.clone(), ygens);
                if found.len() > budget.max_members {
                    return Err(AlgebraError::LatticeBudget {
                        budget: budget.max_members,
                    });
                }
                queue.push(y);
            }
        }

        let mut entries: Vec<(Bits, Vec<Element>)> = found.into_iter().collect();
        entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let (sets, spanning): (Vec<Bits>, Vec<Vec<Element>>) = entries.into_iter().unzip();
        Ok(Lattice::from_sets(shape.clone(), sets, spanning))
    }

    fn from_sets(shape: Shape, sets: Vec<Bits>, spanning: Vec<Vec<Element>>) -> Self {
        let len = sets.len();
        let index: HashMap<Bits, SubId> =
            sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let sizes: Vec<usize> = sets.iter().map(Bits::count).collect();
        let mut up = vec![Bits::new(len); len];
        let mut down = vec![Bits::new(len); len];
        for i in 0..len {
            for j in i..len {
                if sizes[j].is_multiple_of(sizes[i]) && spanning[i].iter().all(|&g| sets[j].contains(g)) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let divisors = shape.ring().divisors().to_vec();
        let scaled: Vec<Vec<SubId>> = sets
            .iter()
            .map(|s| {
                divisors
                    .iter()
                    .map(|&d| {
                        let img = Bits::from_indices(shape.order(), s.iter().map(|e| shape.scale(d, e)));
                        index[&img]
                    })
                    .collect()
            })
            .collect();
        let ann_ring = scaled
            .iter()
            .map(|row| row.iter().position(|&x| x == 0).expect("n kills every submodule"))
            .collect();
        let ann_module = divisors
            .iter()
            .map(|&d| {
                let killed = (0..shape.order()).filter(|&e| shape.scale(d, e) == 0);
                index[&Bits::from_indices(shape.order(), killed)]
            })
            .collect();
        Lattice {
            shape,
            sets,
            spanning,
            index,
            up,
            down,
            scaled,
            ann_ring,
            ann_module,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn zero(&self) -> SubId {
        0
    }

    pub fn top(&self) -> SubId {
        self.sets.len() - 1
    }

    pub fn ids(&self) -> std::ops::Range<SubId> {
        0..self.sets.len()
    }

    pub fn set(&self, i: SubId) -> &Bits {
        &self.sets[i]
    }

    pub fn size(&self, i: SubId) -> usize {
        self.sets[i].count()
    }

    pub fn elements(&self, i: SubId) -> Vec<Element> {
        self.sets[i].iter().collect()
    }

    pub fn find(&self, set: &Bits) -> Option<SubId> {
        self.index.get(set).copied()
    }

    /// The submodule generated by the given elements.
    pub fn generated_by(&self, gens: &[Element]) -> SubId {
        self.index[&span(&self.shape, gens)]
    }

    /// Members containing `i`, as a row over lattice indices.
    pub fn up(&self, i: SubId) -> &Bits {
        &self.up[i]
    }

    /// Members contained in `i`.
    pub fn down(&self, i: SubId) -> &Bits {
        &self.down[i]
    }

    pub fn leq(&self, a: SubId, b: SubId) -> bool {
        self.up[a].contains(b)
    }

    /// a + b. The least common upper bound has the smallest index among the upper bounds.
    pub fn join(&self, a: SubId, b: SubId) -> SubId {
        self.up[a].intersection(&self.up[b]).first().unwrap()
    }

    /// a ∩ b.
    pub fn meet(&self, a: SubId, b: SubId) -> SubId {
        self.down[a].intersection(&self.down[b]).last().unwrap()
    }

    /// Sum of a family; 0 for the empty family.
    pub fn join_all(&self, it: impl IntoIterator<Item = SubId>) -> SubId {
        it.into_iter().fold(self.zero(), |acc, x| self.join(acc, x))
    }

    /// Intersection of a family; M for the empty family.
    pub fn meet_all(&self, it: impl IntoIterator<Item = SubId>) -> SubId {
        it.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// I·N = dN.
    pub fn ideal_times(&self, ideal: &Ideal, i: SubId) -> SubId {
        self.scaled[i][self.shape.ring().divisor_index(ideal.divisor())]
    }

    /// dN for the j-th divisor of n.
    pub fn scaled(&self, i: SubId, j: usize) -> SubId {
        self.scaled[i][j]
    }

    /// (K :_R N) = {r : rN ⊆ K}.
    pub fn colon(&self, k: SubId, n: SubId) -> Ideal {
        let j = self.scaled[n]
            .iter()
            .position(|&x| self.leq(x, k))
            .expect("nN = 0 lies in every K");
        self.shape.ring().ideal(self.shape.ring().divisors()[j])
    }

    /// ann_R(N) = (0 :_R N).
    pub fn annihilator(&self, i: SubId) -> Ideal {
        self.shape.ring().ideal(self.shape.ring().divisors()[self.ann_ring[i]])
    }

    /// (0 :_M I) = {m : dm = 0}.
    pub fn annihilated_by(&self, ideal: &Ideal) -> SubId {
        self.ann_module[self.shape.ring().divisor_index(ideal.divisor())]
    }

    /// Simple submodules (atoms), ascending.
    pub fn simples(&self) -> Vec<SubId> {
        self.ids().filter(|&i| self.down[i].count() == 2).collect()
    }

    /// Maximal submodules (coatoms), ascending.
    pub fn maximals(&self) -> Vec<SubId> {
        self.ids().filter(|&i| self.up[i].count() == 2).collect()
    }

    pub fn socle(&self) -> SubId {
        self.join_all(self.simples())
    }

    pub fn radical(&self) -> SubId {
        self.meet_all(self.maximals())
    }

    /// Cover pairs (a, b) with a ⋖ b, sorted.
    pub fn covers(&self) -> Vec<(SubId, SubId)> {
        let mut out = Vec::new();
        for b in self.ids() {
            for a in self.down[b].iter() {
                if a != b && self.down[b].intersection(&self.up[a]).count() == 2 {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A generating set of minimum size: repeatedly add the element of largest order modulo
    /// the current span (least index on ties), then sort by index.
    pub fn generators(&self, i: SubId) -> Vec<Element> {
        let target = &self.sets[i];
        let mut current = Bits::from_indices(self.shape.order(), [0]);
        let mut gens = Vec::new();
        while &current != target {
            let mut best = (0, 0);
            for g in target.iter() {
                let mut k = 1;
                let mut t = g;
                while !current.contains(t) {
                    t = self.shape.add(t, g);
                    k += 1;
                }
                if k > best.0 {
                    best = (k, g);
                }
            }
            gens.push(best.1);
            current = span(&self.shape, &gens);
        }
        gens.sort_unstable();
        gens
    }

    /// Human name such as `<6>` or `<(0,1),(1,0)>`; the zero submodule is `<0>`.
    pub fn name(&self, i: SubId) -> String {
        let gens = self.generators(i);
        if gens.is_empty() {
            return "<0>".to_string();
        }
        let parts: Vec<String> = gens.iter().map(|&g| self.shape.format_element(g)).collect();
        format!("<{}>", parts.join(","))
    }

    /// Recheck closure under sum and intersection and the order axioms by direct set operations.
    pub fn verify_closure(&self) -> Result<(), String> {
        if self.sets[0].count() != 1 || self.sets[self.top()].count() != self.shape.order() {
            return Err("lattice does not start at 0 and end at M".into());
        }
        for a in self.ids() {
            for b in a..self.len() {
                let meet = self.sets[a].intersection(&self.sets[b]);
                if self.find(&meet) != Some(self.meet(a, b)) {
                    return Err(format!("intersection of {a} and {b} is wrong"));
                }
                let mut gens = self.spanning[a].clone();
                gens.extend(&self.spanning[b]);
                if self.find(&span(&self.shape, &gens)) != Some(self.join(a, b)) {
                    return Err(format!("sum of {a} and {b} is wrong"));
                }
                let sub = self.sets[a].is_subset(&self.sets[b]);
                if sub != self.leq(a, b) {
                    return Err(format!("order between {a} and {b} is wrong"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(s: &str) -> Lattice {
        Lattice::enumerate(&s.parse().unwrap(), LatticeBudget::default()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(lattice("n=5;M=5").len(), 2);
        assert_eq!(lattice("n=2;M=2,2").len(), 5);
        assert_eq!(lattice("n=12;M=12").len(), 6);
        assert_eq!(lattice("n=3;M=3,3").len(), 6);
    }

    #[test]
    fn sum_and_intersection_of_lines() {
        let l = lattice("n=2;M=2,2");
        assert_eq!(l.join(1, 2), l.top());
        assert_eq!(l.meet(1, 2), l.zero());
        assert_eq!(l.join(0, 3), 3);
        assert_eq!(l.meet(l.top(), 3), 3);
    }

    #[test]
    fn colon_and_annihilators() {
        let l = lattice("n=12;M=12");
        let r = l.shape().ring().clone();
        let six = l.generated_by(&[6]);
        assert_eq!(l.annihilated_by(&r.ideal(2)), six);
        assert_eq!(l.annihilator(l.top()).divisor(), 12);
        assert_eq!(l.colon(l.top(), six).divisor(), 1);
        assert_eq!(l.annihilator(six).divisor(), 2);
        assert_eq!(l.ideal_times(&r.ideal(4), l.top()), l.generated_by(&[4]));
    }

    #[test]
    fn names() {
        let l = lattice("n=12;M=12");
        assert_eq!(l.name(l.generated_by(&[6])), "<6>");
        assert_eq!(l.name(0), "<0>");
        let l = lattice("n=2;M=2,2");
        assert_eq!(l.name(l.top()), "<(0,1),(1,0)>");
        let l = lattice("n=4;M=2,4");
        let d = l.generated_by(&[l.shape().element(&[1, 1])]);
        assert_eq!(l.generators(d).len(), 1);
    }

    #[test]
    fn budgets() {
        let s: Shape = "n=2;M=2,2,2,2".parse().unwrap();
        let tight = LatticeBudget {
            max_members: 10,
            max_order: 4096,
        };
        assert!(matches!(
            Lattice::enumerate(&s, tight),
            Err(AlgebraError::LatticeBudget { .. })
        ));
        let small = LatticeBudget {
            max_members: 5000,
            max_order: 8,
        };
        assert!(matches!(
            Lattice::enumerate(&s, small),
            Err(AlgebraError::OrderBudget { .. })
        ));
    }

    #[test]
    fn closure_holds() {
        for s in ["n=12;M=2,6", "n=4;M=2,4", "n=2;M=2,2,2", "n=9;M=3,9"] {
            lattice(s).verify_closure().unwrap();
        }
    }
}
