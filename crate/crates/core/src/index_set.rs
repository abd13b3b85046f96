//! Subsets of `{1, …, 2n}` as bitmasks, with the operations `E*` and `E^⊥`.

use std::fmt;

use crate::root_datum::star;
use crate::{Error, Result};

/// A subset of `{1, …, 2n}`; bit `j - 1` is set iff `j ∈ E`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: u8,
    bits: u64,
}

impl IndexSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::InvalidIndexSet(format!("n = {n} out of range")));
        }
        let mut bits = 0u64;
        for &j in members {
            if j == 0 || j > 2 * n {
                return Err(Error::InvalidIndexSet(format!("{j} not in 1..={}", 2 * n)));
            }
            bits |= 1 << (j - 1);
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Zero positions of a 0/1 vector, `E = {j : μ(j) = 0}`.
    pub fn zeros_of(v: &[i64]) -> Self {
        let mut bits = 0u64;
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                bits |= 1 << j;
            }
        }
        Self {
            n: (v.len() / 2) as u8,
            bits,
        }
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        Self { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        (1..=2 * self.n()).contains(&j) && self.bits >> (j - 1) & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=2 * self.n()).filter(|&j| self.contains(j)).collect()
    }

    fn full_mask(&self) -> u64 {
        if self.n() == 32 {
            u64::MAX
        } else {
            (1u64 << (2 * self.n())) - 1
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            bits: !self.bits & self.full_mask(),
        }
    }

    /// `E* = 2n + 1 - E`.
    pub fn star(&self) -> Self {
        let n = self.n();
        let mut bits = 0u64;
        for j in self.members() {
            bits |= 1 << (star(n, j) - 1);
        }
        Self { n: self.n, bits }
    }

    /// `E^⊥ = (E*)^c`.
    pub fn perp(&self) -> Self {
        self.star().complement()
    }

    pub fn is_totally_isotropic(&self) -> bool {
        *self == self.perp()
    }

    /// `#(E ∩ {1, …, i})`.
    pub fn count_up_to(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else if i >= 64 {
            self.len()
        } else {
            (self.bits & ((1u64 << i) - 1)).count_ones() as usize
        }
    }

    /// Image under a signed permutation, `σE = {σ(j) : j ∈ E}`.
    pub fn permuted(&self, sigma: &crate::SignedPermutation) -> Self {
        let mut bits = 0u64;
        for j in self.members() {
            bits |= 1 << (sigma.apply(j) - 1);
        }
        Self { n: self.n, bits }
    }

    /// All subsets of size `n` in increasing bitmask order.
    pub fn all_of_half_size(n: usize) -> Vec<Self> {
        (0u64..(1u64 << (2 * n)))
            .filter(|b| b.count_ones() as usize == n)
            .map(|bits| Self { n: n as u8, bits })
            .collect()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_perp() {
        let e = IndexSet::from_members(2, &[1, 3]).unwrap();
        assert_eq!(e.star().members(), vec![2, 4]);
        assert_eq!(e.perp().members(), vec![1, 3]);
        assert!(e.is_totally_isotropic());
        let e = IndexSet::from_members(2, &[1, 2]).unwrap();
        assert_eq!(e.perp().members(), vec![1, 2]);
        let e = IndexSet::from_members(2, &[1, 4]).unwrap();
        assert_eq!(e.perp().members(), vec![2, 3]);
        assert!(!e.is_totally_isotropic());
    }

    #[test]
    fn perp_is_an_involution() {
        for n in 1..=5 {
            let all = IndexSet::all_of_half_size(n);
            let mut isotropic = 0;
            for e in &all {
                assert_eq!(e.perp().perp(), *e);
                assert_eq!(e.perp().len(), n);
                if e.is_totally_isotropic() {
                    isotropic += 1;
                }
            }
            assert_eq!(isotropic, 1 << n);
        }
    }

    #[test]
    fn rejects_out_of_range_members() {
        assert!(IndexSet::from_members(2, &[0]).is_err());
        assert!(IndexSet::from_members(2, &[5]).is_err());
        assert!(IndexSet::from_members(0, &[]).is_err());
    }
}
