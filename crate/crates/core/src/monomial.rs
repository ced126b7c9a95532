use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A monomial `x^a`, stored as its exponent vector.
///
/// The all-zero vector is the monomial `1`. Ordering is lexicographic on the
/// exponent vector, which is the canonical order used for generator lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new<I: IntoIterator<Item = u32>>(exponents: I) -> Self {
        Self(exponents.into_iter().collect())
    }

    pub fn one(n: usize) -> Self {
        Self(alloc::vec![0; n])
    }

    /// The variable `x_i` in a ring with `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; n];
        e[i] = 1;
        Self(e)
    }

    /// Squarefree monomial with the given support.
    pub fn from_support(n: usize, support: &BitSet) -> Self {
        let mut e = alloc::vec![0; n];
        for i in support.iter() {
            e[i] = 1;
        }
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> BitSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect(),
        ))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect(),
        ))
    }

    /// `self / gcd(self, other)`: componentwise `max(a - b, 0)`.
    pub fn colon(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Exact quotient, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| self.colon(other))
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u32) -> Self {
        let mut v = self.0.clone();
        v[i] = e;
        Self(v)
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.0.len() == other.0.len() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lcm_cases() {
        // x^2 y, y z
        assert_eq!(m(&[2, 1, 0]).lcm(&m(&[0, 1, 1])).unwrap(), m(&[2, 1, 1]));
        let u = m(&[3, 0, 2]);
        assert_eq!(u.lcm(&Monomial::one(3)).unwrap(), u);
        assert_eq!(m(&[1]).lcm(&m(&[3])).unwrap(), m(&[3]));
        assert_eq!(m(&[1]).lcm(&m(&[1, 0])), Err(Error::AmbientMismatch));
    }

    #[test]
    fn division_and_colon() {
        let xy = m(&[1, 1]);
        assert_eq!(xy.div(&m(&[1, 0])), Some(m(&[0, 1])));
        assert_eq!(xy.div(&m(&[2, 0])), None);
        assert_eq!(m(&[2, 1]).colon(&m(&[1, 3])), m(&[1, 0]));
        assert_eq!(m(&[u32::MAX]).mul(&m(&[1])), Err(Error::ExponentOverflow));
    }

    #[test]
    fn predicates() {
        assert!(Monomial::one(2).is_one());
        assert!(m(&[1, 0, 1]).is_squarefree());
        assert!(!m(&[2, 0]).is_squarefree());
        assert_eq!(m(&[2, 0, 3]).degree(), 5);
        assert_eq!(m(&[2, 0, 3]).support(), BitSet::from_indices([0, 2]));
    }
}
