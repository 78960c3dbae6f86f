use affine_schubert::bp::{
    complete_bp_decomposition, fibre_tower, find_grassmannian_bp, is_bp, is_bp_by_poincare, is_smooth_partial,
};
use affine_schubert::coxeter::{
    elements_up_to_length, poincare_polynomial, AffinePermutation, ParabolicSubset, Polynomial, DEFAULT_LENGTH_CAP,
};
use affine_schubert::selftest::SMOOTH_COUNTS;
use affine_schubert::smoothness::{enumerate_smooth, is_smooth, EnumerationOptions};
use num_bigint::BigInt;

fn subsets(n: usize) -> Vec<ParabolicSubset> {
    (0u64..(1 << n) - 1)
        .map(|mask| ParabolicSubset::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap())
        .collect()
}

fn smooth_set(n: usize) -> Vec<AffinePermutation> {
    enumerate_smooth(n, &EnumerationOptions::new(Some(SMOOTH_COUNTS[n - 2]))).unwrap()
}

/// Gaussian binomial `[m choose a]_q` from Pascal's rule
/// `[m, a] = [m-1, a-1] + q^a [m-1, a]`.
fn gaussian(m: usize, a: usize) -> Polynomial {
    let mut table = vec![vec![Polynomial::one()]];
    for row in 1..=m {
        let prev = &table[row - 1];
        let mut next = Vec::with_capacity(row + 1);
        for k in 0..=row {
            let mut coeffs = vec![BigInt::from(0); k * (row - k) + 1];
            if k >= 1 {
                for (d, c) in prev[k - 1].coeffs().iter().enumerate() {
                    coeffs[d] += c;
                }
            }
            if k < row {
                for (d, c) in prev[k].coeffs().iter().enumerate() {
                    coeffs[d + k] += c;
                }
            }
            next.push(Polynomial::new(coeffs));
        }
        table.push(next);
    }
    table[m][a].clone()
}

#[test]
fn lift_criterion_matches_poincare_identity() {
    for n in 2..=3 {
        for w in elements_up_to_length(n, 6).unwrap() {
            for k in subsets(n) {
                for j in subsets(n) {
                    if !j.is_subset(&k) || !w.is_minimal_in_coset(&j) {
                        continue;
                    }
                    let fast = is_bp(&w, &k, &j).unwrap();
                    let slow = is_bp_by_poincare(&w, &k, &j, DEFAULT_LENGTH_CAP).unwrap();
                    assert_eq!(fast, slow, "w = {w}, K = {:?}, J = {:?}", k.to_vec(), j.to_vec());
                }
            }
        }
    }
}

#[test]
fn finite_example() {
    let w = AffinePermutation::from_word(4, &[2, 1]).unwrap();
    let k = ParabolicSubset::from_indices(4, [1]).unwrap();
    let empty = ParabolicSubset::empty(4);
    assert!(is_bp(&w, &k, &empty).unwrap());
    assert!(is_bp_by_poincare(&w, &k, &empty, DEFAULT_LENGTH_CAP).unwrap());
}

#[test]
fn smooth_elements_decompose_into_maximal_factors() {
    for n in 2..=4 {
        let empty = ParabolicSubset::empty(n);
        for w in smooth_set(n) {
            let d = complete_bp_decomposition(&w, &empty).unwrap().expect("decomposes");
            assert!(d.all_maximal(), "{w}");
            assert_eq!(d.heads().pop().unwrap(), w);
            assert_eq!(d.factors.iter().map(|f| f.v.length()).sum::<usize>(), w.length());
            if !w.is_identity() {
                assert!(find_grassmannian_bp(&w, &empty).unwrap().is_some());
            }
        }
    }
}

#[test]
fn poincare_polynomials_factor_over_the_fibres() {
    for n in 2..=3 {
        let empty = ParabolicSubset::empty(n);
        for w in smooth_set(n).into_iter().filter(|w| w.length() <= 10) {
            let tower = fibre_tower(&w, &empty).unwrap();
            let product = tower.iter().fold(Polynomial::one(), |acc, l| &acc * &gaussian(l.gr.1, l.gr.0));
            let p = poincare_polynomial(&w, &empty, DEFAULT_LENGTH_CAP).unwrap();
            assert_eq!(p, product, "{w}");
        }
    }
}

#[test]
fn partial_smoothness_with_parabolic() {
    for n in 2..=3 {
        for w in elements_up_to_length(n, 5).unwrap() {
            for j in subsets(n) {
                if !w.is_minimal_in_coset(&j) {
                    continue;
                }
                let smooth = is_smooth_partial(&w, &j).unwrap();
                if j.is_empty() {
                    assert_eq!(smooth, is_smooth(&w));
                }
                if smooth {
                    let d = complete_bp_decomposition(&w, &j).unwrap().expect("decomposes");
                    assert!(d.all_maximal(), "{w} J = {:?}", j.to_vec());
                }
            }
        }
    }
}

#[test]
fn non_minimal_elements_are_rejected() {
    let w = AffinePermutation::from_word(3, &[0]).unwrap();
    let j = ParabolicSubset::from_indices(3, [0]).unwrap();
    assert!(complete_bp_decomposition(&w, &j).is_err());
    assert!(is_smooth_partial(&w, &j).is_err());
}
