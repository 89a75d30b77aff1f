use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::AlgebraError;

/// The ring Z/nZ. Divisors and primes of n are computed once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: u64,
    primes: Vec<u64>,
    divisors: Vec<u64>,
}

impl Ring {
    pub fn new(n: u64) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::BadModulus(n));
        }
        let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        let primes = divisors.iter().copied().filter(|&d| is_prime(d)).collect();
        Ok(Ring { n, primes, divisors })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Primes dividing n, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Divisors of n, ascending. Position in this list is the ideal's index.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn ideal(&self, generator: u64) -> Ideal {
        Ideal::new(self.n, generator)
    }

    /// All ideals, ordered by generating divisor (so R first, 0 last).
    pub fn ideals(&self) -> impl Iterator<Item = Ideal> + '_ {
        self.divisors.iter().map(move |&d| Ideal { n: self.n, d })
    }

    pub fn prime_ideals(&self) -> impl Iterator<Item = Ideal> + '_ {
        self.primes.iter().map(move |&p| Ideal { n: self.n, d: p })
    }

    pub fn divisor_index(&self, d: u64) -> usize {
        self.divisors
            .binary_search(&d)
            .expect("divisor of the modulus")
    }

    /// Zero divisors of the ring, 0 included.
    pub fn zero_divisors(&self) -> Vec<u64> {
        (0..self.n).filter(|&r| r.gcd(&self.n) != 1).collect()
    }
}

/// The ideal dZ/nZ, stored by its canonical generator d | n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ideal {
    #[serde(skip)]
    n: u64,
    #[serde(rename = "divisor")]
    d: u64,
}

impl Ideal {
    /// The ideal generated by `r` mod n; any integer is accepted and normalised to gcd(r, n).
    pub fn new(n: u64, r: u64) -> Self {
        Ideal { n, d: r.gcd(&n) }
    }

    pub fn divisor(&self) -> u64 {
        self.d
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.d == self.n
    }

    pub fn is_whole(&self) -> bool {
        self.d == 1
    }

    pub fn is_prime(&self) -> bool {
        is_prime(self.d)
    }

    pub fn contains(&self, other: &Ideal) -> bool {
        other.d.is_multiple_of(self.d)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal::new(self.n, self.d.gcd(&other.d))
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal::new(self.n, self.d.lcm(&other.d))
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        Ideal::new(self.n, (self.d * other.d) % self.n)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.d)
    }
}

pub fn is_prime(d: u64) -> bool {
    d >= 2 && (2..).take_while(|q| q * q <= d).all(|q| !d.is_multiple_of(q))
}

/// Prime-power factorisation, ascending by prime.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_and_primes_of_twelve() {
        let r = Ring::new(12).unwrap();
        assert_eq!(r.divisors(), &[1, 2, 3, 4, 6, 12]);
        assert_eq!(r.primes(), &[2, 3]);
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(Ring::new(1).is_err());
        assert!(Ring::new(0).is_err());
    }

    #[test]
    fn ideal_arithmetic() {
        let r = Ring::new(12).unwrap();
        let a = r.ideal(4);
        let b = r.ideal(6);
        assert_eq!(a.sum(&b).divisor(), 2);
        assert_eq!(a.intersection(&b).divisor(), 12);
        assert!(a.product(&b).is_zero());
        assert!(r.ideal(0).is_zero());
        assert_eq!(r.ideal(9).divisor(), 3);
        assert!(r.ideal(3).is_prime());
        assert!(!r.ideal(6).is_prime());
    }

    #[test]
    fn zero_divisors_of_six() {
        let r = Ring::new(6).unwrap();
        assert_eq!(r.zero_divisors(), vec![0, 2, 3, 4]);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
    }
}
