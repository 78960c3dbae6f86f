//! Parabolic subgroups: longest elements and coset decompositions.

use crate::coxeter::{AffinePermutation, ParabolicSubset};
use crate::error::{Error, Result};

/// Longest element of the finite parabolic subgroup `W_J`.
///
/// Built by right-multiplying by any non-descent in `J` until every element
/// of `J` is a right descent.
pub fn longest_element(j: &ParabolicSubset) -> Result<AffinePermutation> {
    let n = j.period();
    if !j.is_finite_type() {
        return Err(Error::InfiniteParabolic);
    }
    let mut w = AffinePermutation::identity(n)?;
    while let Some(i) = j.iter().find(|&i| !w.has_right_descent(i)) {
        w = w.right_multiply(i);
    }
    Ok(w)
}

/// `m(m+1)/2` summed over the connected components of `J`, `m` being the
/// component size. Equals the length of [`longest_element`].
pub fn longest_length(j: &ParabolicSubset) -> usize {
    j.components().iter().map(|c| c.len() * (c.len() + 1) / 2).sum()
}

/// Parabolic decomposition `w = v * u` with `u` in `W_K` and `v` in `W^K`.
///
/// Strips right descents lying in `K` (smallest index first).
pub fn coset_decompose(
    w: &AffinePermutation,
    k: &ParabolicSubset,
) -> (AffinePermutation, AffinePermutation) {
    let mut v = w.clone();
    let mut stripped = Vec::new();
    while let Some(i) = k.iter().find(|&i| v.has_right_descent(i)) {
        v = v.right_multiply(i);
        stripped.push(i);
    }
    stripped.reverse();
    let u = AffinePermutation::from_word(w.period(), &stripped)
        .expect("stripped letters are valid reflection indices");
    (v, u)
}

/// Left-handed decomposition `w = u * v` with `u` in `W_K` and `v` in `^K W`.
pub fn coset_decompose_left(
    w: &AffinePermutation,
    k: &ParabolicSubset,
) -> (AffinePermutation, AffinePermutation) {
    let (v, u) = coset_decompose(&w.inverse(), k);
    (u.inverse(), v.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, idx: &[usize]) -> ParabolicSubset {
        ParabolicSubset::from_indices(n, idx.iter().copied()).unwrap()
    }

    #[test]
    fn longest_of_single_node() {
        let w = longest_element(&set(4, &[1])).unwrap();
        assert_eq!(w, AffinePermutation::simple_reflection(4, 1).unwrap());
    }

    #[test]
    fn longest_of_a2_has_length_three() {
        let j = set(4, &[1, 2]);
        let w = longest_element(&j).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(longest_length(&j), 3);
    }

    #[test]
    fn longest_over_components() {
        let j = set(5, &[0, 1, 3]);
        let w = longest_element(&j).unwrap();
        assert_eq!(w.length(), 4);
        for i in j.iter() {
            assert!(w.right_multiply(i).length() < w.length());
        }
        assert_eq!(w.right_descents(), j);
    }

    #[test]
    fn longest_of_full_set_is_infinite() {
        assert_eq!(longest_element(&ParabolicSubset::full(3)), Err(Error::InfiniteParabolic));
    }

    #[test]
    fn decompose_s2s1_by_s1() {
        let w = AffinePermutation::from_word(4, &[2, 1]).unwrap();
        let (v, u) = coset_decompose(&w, &set(4, &[1]));
        assert_eq!(v, AffinePermutation::from_word(4, &[2]).unwrap());
        assert_eq!(u, AffinePermutation::from_word(4, &[1]).unwrap());
    }

    #[test]
    fn decompose_inside_parabolic() {
        let w = AffinePermutation::from_word(4, &[1, 2, 1]).unwrap();
        let (v, u) = coset_decompose(&w, &set(4, &[1, 2]));
        assert!(v.is_identity());
        assert_eq!(u, w);
    }

    #[test]
    fn left_decomposition_multiplies_back() {
        let w = AffinePermutation::from_word(3, &[1, 0, 2, 1]).unwrap();
        let k = set(3, &[1]);
        let (u, v) = coset_decompose_left(&w, &k);
        assert_eq!(u.compose(&v), w);
        assert!(v.left_descents().intersection(&k).is_empty());
    }
}
