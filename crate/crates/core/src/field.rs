//! Arithmetic in the prime field `F_p`.

use crate::error::{Error, Result};

/// Largest characteristic accepted; elements are stored as `u8`.
pub const MAX_CHARACTERISTIC: u32 = 251;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_CHARACTERISTIC).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse in F_{}", self.p);
        // Fermat: a^(p-2)
        let mut result = 1u32;
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// `p^d`, saturating at `u64::MAX`.
    pub fn count(self, d: usize) -> u64 {
        let mut acc: u64 = 1;
        for _ in 0..d {
            acc = acc.saturating_mul(self.p as u64);
        }
        acc
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Iterates over all vectors of `F_p^d` in lexicographic order (last coordinate fastest).
pub struct VectorIter {
    p: u32,
    current: Option<Vec<u32>>,
}

impl VectorIter {
    pub fn new(field: PrimeField, d: usize) -> Self {
        VectorIter {
            p: field.characteristic(),
            current: Some(vec![0; d]),
        }
    }
}

impl Iterator for VectorIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.p {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(257).is_err());
        assert!(PrimeField::new(251).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 251] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn vector_iter_counts() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(VectorIter::new(f, 2).count(), 9);
        assert_eq!(VectorIter::new(f, 0).count(), 1);
    }
}
