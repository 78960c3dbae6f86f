use std::fmt;

use crate::error::{Error, Result};

/// A set of simple reflections `s_0, ..., s_{n-1}` of the affine symmetric
/// group, stored as a bitmask. Doubles as the subset `J` generating a
/// parabolic subgroup `W_J`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    n: usize,
    mask: u64,
}

impl ParabolicSubset {
    pub fn empty(n: usize) -> Self {
        ParabolicSubset { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        ParabolicSubset { n, mask }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut mask = 0u64;
        for i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            mask |= 1 << i;
        }
        Ok(ParabolicSubset { n, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        ParabolicSubset { n, mask: mask & Self::full(n).mask }
    }

    pub fn period(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.mask & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.mask |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.mask &= !(1 << i);
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        ParabolicSubset { n: self.n, mask: self.mask | other.mask }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        ParabolicSubset { n: self.n, mask: self.mask & other.mask }
    }

    pub fn difference(&self, other: &Self) -> Self {
        ParabolicSubset { n: self.n, mask: self.mask & !other.mask }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    /// Every proper subgraph of the `n`-cycle is a union of type A paths, so
    /// `W_J` is finite exactly when `J` misses at least one node.
    pub fn is_finite_type(&self) -> bool {
        self.len() < self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.n).filter(move |&i| mask & (1 << i) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Connected components in the cycle graph, each listed in cyclic order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        if self.is_empty() {
            return Vec::new();
        }
        if self.len() == self.n {
            return vec![(0..self.n).collect()];
        }
        // start each run right after a missing node
        let gap = (0..self.n).find(|&i| !self.contains(i)).unwrap();
        let mut out = Vec::new();
        let mut current = Vec::new();
        for step in 1..=self.n {
            let i = (gap + step) % self.n;
            if self.contains(i) {
                current.push(i);
            } else if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        }
        if !current.is_empty() {
            out.push(current);
        }
        out
    }
}

impl fmt::Debug for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}
