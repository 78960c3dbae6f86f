//! Bruhat order, lower intervals and Poincaré polynomials.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;

use crate::coxeter::{AffinePermutation, ParabolicSubset, Polynomial};
use crate::error::{Error, Result};

/// Default cap on `l(w)` for interval enumeration.
pub const DEFAULT_LENGTH_CAP: usize = 16;

/// `x <= w` in Bruhat order.
///
/// Uses the lifting property: for a right descent `s` of `w`, if `xs < x` then
/// `x <= w` iff `xs <= ws`, otherwise `x <= w` iff `x <= ws`.
pub fn bruhat_leq(x: &AffinePermutation, w: &AffinePermutation) -> Result<bool> {
    if x.period() != w.period() {
        return Err(Error::PeriodMismatch(x.period(), w.period()));
    }
    let mut x = x.clone();
    let mut w = w.clone();
    loop {
        if x.length() > w.length() {
            return Ok(false);
        }
        if w.is_identity() {
            return Ok(x.is_identity());
        }
        let s = (0..w.period()).find(|&i| w.has_right_descent(i)).unwrap();
        if x.has_right_descent(s) {
            x = x.right_multiply(s);
        }
        w = w.right_multiply(s);
    }
}

/// All `x <= w` (subword property on one reduced word of `w`), filtered to
/// minimal coset representatives `x in W^J`.
pub fn bruhat_lower_interval(
    w: &AffinePermutation,
    j: &ParabolicSubset,
    cap: usize,
) -> Result<BTreeSet<AffinePermutation>> {
    let all = full_lower_interval(w, cap)?;
    Ok(all.into_iter().filter(|x| x.is_minimal_in_coset(j)).collect())
}

fn full_lower_interval(w: &AffinePermutation, cap: usize) -> Result<HashSet<AffinePermutation>> {
    let length = w.length();
    if length > cap {
        return Err(Error::CapExceeded { length, cap });
    }
    let mut current: HashSet<AffinePermutation> = HashSet::new();
    current.insert(AffinePermutation::identity_unchecked(w.period()));
    for s in w.reduced_word() {
        let extended: Vec<_> = current.iter().map(|x| x.right_multiply(s)).collect();
        current.extend(extended);
    }
    Ok(current)
}

/// `P^J_w(q) = sum over x <= w, x in W^J of q^{l(x)}`; requires `w in W^J`.
pub fn poincare_polynomial(
    w: &AffinePermutation,
    j: &ParabolicSubset,
    cap: usize,
) -> Result<Polynomial> {
    if !w.is_minimal_in_coset(j) {
        return Err(Error::NotInQuotient);
    }
    let interval = full_lower_interval(w, cap)?;
    let mut coeffs = vec![BigInt::from(0); w.length() + 1];
    for x in interval.iter().filter(|x| x.is_minimal_in_coset(j)) {
        coeffs[x.length()] += 1;
    }
    Ok(Polynomial::new(coeffs))
}
