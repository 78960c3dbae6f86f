//! Affine permutations in window notation.
//!
//! An element `w` of the affine symmetric group on period `n` is a bijection of
//! the integers with `w(i + n) = w(i) + n` and `w(1) + ... + w(n) = n(n+1)/2`.
//! It is stored as its window `[w(1), ..., w(n)]`. Simple reflection `s_i`
//! swaps `i` and `i + 1` modulo `n`; `s_0` swaps `0` and `1`.

use std::fmt;

use crate::coxeter::ParabolicSubset;
use crate::error::{Error, Result};

/// Largest supported period; reflection sets are 64-bit masks.
pub const MAX_PERIOD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

fn check_period(n: usize) -> Result<()> {
    if (2..=MAX_PERIOD).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidPeriod(n))
    }
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_period(n)?;
        Ok(AffinePermutation { n, window: (1..=n as i64).collect() })
    }

    pub(crate) fn identity_unchecked(n: usize) -> Self {
        AffinePermutation { n, window: (1..=n as i64).collect() }
    }

    /// Builds an element from its window, checking residue distinctness and
    /// the sum condition.
    pub fn from_window(n: usize, window: Vec<i64>) -> Result<Self> {
        check_period(n)?;
        if window.len() != n {
            return Err(Error::InvalidWindow(format!(
                "expected {n} entries, got {}",
                window.len()
            )));
        }
        let ni = n as i64;
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow(format!("residue {r} repeated")));
            }
            seen[r] = true;
        }
        let sum: i64 = window.iter().sum();
        if sum != ni * (ni + 1) / 2 {
            return Err(Error::InvalidWindow(format!(
                "entries sum to {sum}, expected {}",
                ni * (ni + 1) / 2
            )));
        }
        Ok(AffinePermutation { n, window })
    }

    /// The product `s_{word[0]} s_{word[1]} ...` read left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        check_period(n)?;
        let mut w = Self::identity_unchecked(n);
        for &i in word {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            w.right_multiply_in_place(i);
        }
        Ok(w)
    }

    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        Self::from_word(n, &[i])
    }

    pub fn period(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i64 + 1)
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch(self.n, other.n));
        }
        Ok(self.compose(other))
    }

    /// `(self * other)(i) = self(other(i))`; periods must agree.
    pub(crate) fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let window = other.window.iter().map(|&v| self.apply(v)).collect();
        AffinePermutation { n: self.n, window }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n as i64;
        let mut window = vec![0i64; self.n];
        for (k, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let q = (v - 1).div_euclid(n);
            window[r as usize] = k as i64 + 1 - q * n;
        }
        AffinePermutation { n: self.n, window }
    }

    fn right_multiply_in_place(&mut self, i: usize) {
        let n = self.n;
        if i == 0 {
            let first = self.window[0];
            let last = self.window[n - 1];
            self.window[0] = last - n as i64;
            self.window[n - 1] = first + n as i64;
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// `w * s_i`.
    pub fn right_multiply(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.right_multiply_in_place(i);
        w
    }

    /// `s_i * w`.
    pub fn left_multiply(&self, i: usize) -> Self {
        self.inverse().right_multiply(i).inverse()
    }

    /// Coxeter length via the inversion count
    /// `sum_{1 <= i < j <= n} |floor((w(j) - w(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let mut total = 0i64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.window[self.n - 1] - self.n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    pub fn right_descents(&self) -> ParabolicSubset {
        let mut d = ParabolicSubset::empty(self.n);
        for i in 0..self.n {
            if self.has_right_descent(i) {
                d.insert(i);
            }
        }
        d
    }

    pub fn left_descents(&self) -> ParabolicSubset {
        self.inverse().right_descents()
    }

    /// Reduced word obtained by repeatedly stripping the smallest right
    /// descent. `from_word(n, &w.reduced_word()) == w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (0..self.n).find(|&i| w.has_right_descent(i)) {
            w.right_multiply_in_place(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Support `S(w)`: the letters of any reduced word.
    pub fn support(&self) -> ParabolicSubset {
        let mut s = ParabolicSubset::empty(self.n);
        for i in self.reduced_word() {
            s.insert(i);
        }
        s
    }

    /// Whether `w` lies in `W^J`, i.e. has no right descent in `J`.
    pub fn is_minimal_in_coset(&self, j: &ParabolicSubset) -> bool {
        self.right_descents().intersection(j).is_empty()
    }

    /// `max_i |w(i) - i|` over one window.
    pub fn displacement(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(k, &v)| (v - (k as i64 + 1)).abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Every element of length at most `max_length`, sorted by length and then
/// window.
pub fn elements_up_to_length(n: usize, max_length: usize) -> Result<Vec<AffinePermutation>> {
    let mut level = vec![AffinePermutation::identity(n)?];
    let mut out = level.clone();
    for _ in 0..max_length {
        let mut next: Vec<AffinePermutation> = level
            .iter()
            .flat_map(|w| (0..n).filter(|&i| !w.has_right_descent(i)).map(|i| w.right_multiply(i)))
            .collect();
        next.sort();
        next.dedup();
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
