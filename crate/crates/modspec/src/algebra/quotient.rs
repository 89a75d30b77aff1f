use super::lattice::{Lattice, SubId};
use super::shape::{Element, Shape};
use super::AlgebraError;

/// M/L in invariant-factor form together with the canonical surjection.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: Shape,
    factors: Vec<u64>,
    // column transform: x ↦ xV, then keep the columns whose diagonal entry exceeds 1
    transform: Vec<Vec<i128>>,
    kept: Vec<(usize, u64)>,
}

impl Quotient {
    pub fn new(lattice: &Lattice, l: SubId) -> Self {
        let shape = lattice.shape();
        let k = shape.rank();
        let mut rows: Vec<Vec<i128>> = (0..k)
            .map(|i| {
                let mut r = vec![0; k];
                r[i] = shape.factors()[i] as i128;
                r
            })
            .collect();
        for g in lattice.generators(l) {
            rows.push(shape.coords(g).into_iter().map(|x| x as i128).collect());
        }
        let (diag, transform) = smith(rows, k);
        let kept: Vec<(usize, u64)> = diag
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 1)
            .map(|(i, &e)| (i, e as u64))
            .collect();
        Quotient {
            source: shape.clone(),
            factors: kept.iter().map(|&(_, e)| e).collect(),
            transform,
            kept,
        }
    }

    /// Invariant factors of M/L; empty for the zero module.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&e| e as usize).product()
    }

    /// The quotient as a module in its own right; `None` when L = M.
    pub fn shape(&self) -> Option<Shape> {
        if self.is_zero() {
            None
        } else {
            Shape::new(self.source.ring().clone(), self.factors.clone()).ok()
        }
    }

    /// Image of an element of M under the canonical surjection, as coordinates in ⊕ Z/e_i.
    pub fn project(&self, e: Element) -> Vec<u64> {
        let x = self.source.coords(e);
        self.kept
            .iter()
            .map(|&(col, m)| {
                let s: i128 = x
                    .iter()
                    .zip(&self.transform)
                    .map(|(&xi, row)| xi as i128 * row[col])
                    .sum();
                s.rem_euclid(m as i128) as u64
            })
            .collect()
    }
}

/// Quotient of the shape by the submodule, with an error when L = M.
pub fn quotient_shape(lattice: &Lattice, l: SubId) -> Result<Shape, AlgebraError> {
    Quotient::new(lattice, l).shape().ok_or(AlgebraError::ZeroQuotient)
}

// Smith normal form of an r×k integer matrix of full column rank.
// Returns the k diagonal entries and the column transform V.
fn smith(mut a: Vec<Vec<i128>>, k: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let r = a.len();
    let mut v: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();
    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(x, y);
        }
    };
    for t in 0..k.min(r) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..k).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            swap_cols(&mut a, &mut v, t, pj);

            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i][t..k].iter_mut().zip(&pivot_row[t..k]) {
                        *x -= q * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..k {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..r).find(|&i| (t + 1..k).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let other = a[i].clone();
                    for (x, y) in a[t][t..k].iter_mut().zip(&other[t..k]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for row in a.iter_mut().chain(v.iter_mut()) {
                row[t] = -row[t];
            }
        }
    }
    let diag = (0..k).map(|i| if i < r { a[i][i] } else { 0 }).collect();
    (diag, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LatticeBudget;

    fn lattice(s: &str) -> Lattice {
        Lattice::enumerate(&s.parse().unwrap(), LatticeBudget::default()).unwrap()
    }

    #[test]
    fn z4_mod_two() {
        let l = lattice("n=4;M=4");
        let q = Quotient::new(&l, l.generated_by(&[2]));
        assert_eq!(q.factors(), &[2]);
    }

    #[test]
    fn trivial_quotients() {
        let l = lattice("n=4;M=2,4");
        assert_eq!(Quotient::new(&l, 0).factors(), &[2, 4]);
        let top = Quotient::new(&l, l.top());
        assert!(top.is_zero());
        assert!(top.shape().is_none());
        assert!(quotient_shape(&l, l.top()).is_err());
    }

    #[test]
    fn projection_kills_exactly_the_submodule() {
        let l = lattice("n=12;M=2,6");
        for s in l.ids() {
            let q = Quotient::new(&l, s);
            let kernel: Vec<Element> = (0..l.shape().order())
                .filter(|&e| q.project(e).iter().all(|&c| c == 0))
                .collect();
            assert_eq!(kernel, l.elements(s));
        }
    }
}
