use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::ring::{factorize, Ring};
use super::AlgebraError;

/// Elements are addressed by their mixed-radix index; the first coordinate is most significant,
/// so index order is lexicographic order on coordinate tuples.
pub type Element = usize;

/// A finite Z/nZ-module ⊕ Z/d_i given by invariant factors d_1 | d_2 | … | d_k | n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    ring: Ring,
    factors: Vec<u64>,
    order: usize,
    strides: Vec<usize>,
}

impl Shape {
    pub fn new(ring: Ring, factors: Vec<u64>) -> Result<Self, AlgebraError> {
        if factors.is_empty() {
            return Err(AlgebraError::NoFactors);
        }
        for &d in &factors {
            if d < 2 {
                return Err(AlgebraError::TrivialFactor(d));
            }
            if !ring.modulus().is_multiple_of(d) {
                return Err(AlgebraError::FactorNotDivisor {
                    factor: d,
                    modulus: ring.modulus(),
                });
            }
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(AlgebraError::NotAChain {
                factors: factors.clone(),
                canonical: invariant_factors(&factors),
            });
        }
        let mut order: usize = 1;
        for &d in &factors {
            order = order
                .checked_mul(d as usize)
                .ok_or(AlgebraError::OrderOverflow)?;
        }
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        Ok(Shape {
            ring,
            factors,
            order,
            strides,
        })
    }

    /// Z/d over Z/n.
    pub fn cyclic(n: u64, d: u64) -> Result<Self, AlgebraError> {
        Shape::new(Ring::new(n)?, vec![d])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Exponent of M, the largest invariant factor.
    pub fn exponent(&self) -> u64 {
        *self.factors.last().unwrap()
    }

    pub fn coords(&self, e: Element) -> Vec<u64> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| ((e / s) as u64) % d)
            .collect()
    }

    pub fn element(&self, coords: &[u64]) -> Element {
        coords
            .iter()
            .zip(&self.factors)
            .zip(&self.strides)
            .map(|((&a, &d), &s)| (a % d) as usize * s)
            .sum()
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let d = d as usize;
            out += ((a / s) % d + (b / s) % d) % d * s;
        }
        out
    }

    pub fn scale(&self, r: u64, a: Element) -> Element {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let x = ((a / s) as u64) % d;
            out += ((x * (r % d)) % d) as usize * s;
        }
        out
    }

    pub fn additive_order(&self, a: Element) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / x.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn format_element(&self, e: Element) -> String {
        let c = self.coords(e);
        if c.len() == 1 {
            c[0].to_string()
        } else {
            let parts: Vec<String> = c.iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() == 1
    }

    /// Faithful over Z/n iff the exponent is n.
    pub fn is_faithful(&self) -> bool {
        self.exponent() == self.ring.modulus()
    }

    pub fn is_semisimple(&self) -> bool {
        self.factors.iter().all(|&d| squarefree(d))
    }

    pub fn is_homogeneous_semisimple(&self) -> bool {
        self.factors.iter().all(|&d| ring_prime(d)) && self.factors.windows(2).all(|w| w[0] == w[1])
    }

    /// Cyclic of prime-power order: the submodule lattice is a chain.
    pub fn is_uniserial(&self) -> bool {
        self.is_cyclic() && factorize(self.exponent()).len() == 1
    }

    /// The instance string `n=..;M=..`.
    pub fn instance(&self) -> String {
        let f: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        format!("n={};M={}", self.ring.modulus(), f.join(","))
    }
}

fn squarefree(d: u64) -> bool {
    factorize(d).iter().all(|&(_, e)| e == 1)
}

fn ring_prime(d: u64) -> bool {
    super::ring::is_prime(d)
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.instance())
    }
}

impl FromStr for Shape {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| AlgebraError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut n = None;
        let mut m = None;
        for part in s.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad("expected `key=value` parts separated by `;`"))?;
            match key.trim() {
                "n" if n.is_none() => {
                    n = Some(
                        value
                            .trim()
                            .parse::<u64>()
                            .map_err(|_| bad("modulus is not a non-negative integer"))?,
                    )
                }
                "M" if m.is_none() => {
                    let fs = value
                        .split(',')
                        .map(|x| x.trim().parse::<u64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| bad("invariant factors must be non-negative integers"))?;
                    m = Some(fs)
                }
                "n" | "M" => return Err(bad("duplicate key")),
                _ => return Err(bad("unknown key; expected `n` and `M`")),
            }
        }
        let n = n.ok_or_else(|| bad("missing `n=`"))?;
        let m = m.ok_or_else(|| bad("missing `M=`"))?;
        Shape::new(Ring::new(n)?, m)
    }
}

/// Canonical invariant factors of ⊕ Z/f_i (factors of 1 dropped).
pub fn invariant_factors(factors: &[u64]) -> Vec<u64> {
    let mut by_prime: Vec<(u64, Vec<u64>)> = Vec::new();
    for &f in factors {
        for (p, e) in factorize(f) {
            let q = p.pow(e);
            match by_prime.iter_mut().find(|(r, _)| *r == p) {
                Some((_, v)) => v.push(q),
                None => by_prime.push((p, vec![q])),
            }
        }
    }
    let k = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; k];
    for (_, mut v) in by_prime {
        v.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in v.into_iter().enumerate() {
            out[k - 1 - i] *= q;
        }
    }
    out
}

/// M1 ⊕ M2 in invariant-factor form.
pub fn direct_sum(a: &Shape, b: &Shape) -> Result<Shape, AlgebraError> {
    if a.ring != b.ring {
        return Err(AlgebraError::RingMismatch);
    }
    let all: Vec<u64> = a.factors.iter().chain(&b.factors).copied().collect();
    Shape::new(a.ring.clone(), invariant_factors(&all))
}
