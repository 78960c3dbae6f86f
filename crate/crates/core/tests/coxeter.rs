use affine_schubert::coxeter::{
    bruhat_leq, bruhat_lower_interval, coset_decompose, coset_decompose_left, elements_up_to_length, longest_element,
    longest_length, poincare_polynomial, AffinePermutation, ParabolicSubset, Polynomial, DEFAULT_LENGTH_CAP,
};
use proptest::prelude::*;

fn element() -> impl Strategy<Value = AffinePermutation> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(0..n, 0..14).prop_map(move |word| AffinePermutation::from_word(n, &word).unwrap())
    })
}

fn element_and_subset() -> impl Strategy<Value = (AffinePermutation, ParabolicSubset)> {
    element().prop_flat_map(|w| {
        let n = w.period();
        prop::collection::vec(0..n, 0..n).prop_map(move |idx| {
            let k = ParabolicSubset::from_indices(n, idx).unwrap();
            (w.clone(), k)
        })
    })
}

/// Inversions `(i, j)` with `1 <= i <= n`, `i < j`, `w(i) > w(j)`, counted
/// directly over a window wide enough to hold all of them.
fn inversion_count(w: &AffinePermutation) -> usize {
    let n = w.period() as i64;
    let reach = 2 * w.displacement() + n;
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=i + reach {
            if w.apply(i) > w.apply(j) {
                count += 1;
            }
        }
    }
    count
}

/// `[k]_q! = (1)(1 + q)...(1 + ... + q^{k-1})`.
fn q_factorial(k: usize) -> Polynomial {
    (1..=k).fold(Polynomial::one(), |acc, m| &acc * &Polynomial::from_i64(&vec![1; m]))
}

proptest! {
    #[test]
    fn length_moves_by_one(w in element(), i in 0usize..5) {
        let i = i % w.period();
        let right = w.right_multiply(i).length() as i64 - w.length() as i64;
        let left = w.left_multiply(i).length() as i64 - w.length() as i64;
        prop_assert_eq!(right.abs(), 1);
        prop_assert_eq!(left.abs(), 1);
        prop_assert_eq!(right == -1, w.has_right_descent(i));
    }

    #[test]
    fn window_stays_a_window(w in element()) {
        let n = w.period() as i64;
        prop_assert_eq!(w.window().iter().sum::<i64>(), n * (n + 1) / 2);
        let mut residues: Vec<i64> = w.window().iter().map(|v| v.rem_euclid(n)).collect();
        residues.sort();
        prop_assert_eq!(residues, (0..n).collect::<Vec<_>>());
        prop_assert!(AffinePermutation::from_window(w.period(), w.window().to_vec()).is_ok());
    }

    #[test]
    fn length_is_the_inversion_count(w in element()) {
        prop_assert_eq!(w.length(), inversion_count(&w));
    }

    #[test]
    fn inverse_and_reduced_word(w in element()) {
        let inv = w.inverse();
        prop_assert!(w.multiply(&inv).unwrap().is_identity());
        prop_assert_eq!(inv.length(), w.length());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(AffinePermutation::from_word(w.period(), &word).unwrap(), w);
    }

    #[test]
    fn coset_lengths_add((w, k) in element_and_subset()) {
        let (v, u) = coset_decompose(&w, &k);
        prop_assert_eq!(v.multiply(&u).unwrap(), w.clone());
        prop_assert_eq!(v.length() + u.length(), w.length());
        prop_assert!(u.support().is_subset(&k));
        prop_assert!(v.is_minimal_in_coset(&k));
        let (u2, v2) = coset_decompose_left(&w, &k);
        prop_assert_eq!(u2.multiply(&v2).unwrap(), w.clone());
        prop_assert_eq!(u2.length() + v2.length(), w.length());
        prop_assert!(u2.support().is_subset(&k));
    }

    #[test]
    fn subwords_lie_below(w in element(), picks in prop::collection::vec(any::<bool>(), 14)) {
        let word = w.reduced_word();
        let sub: Vec<usize> = word.iter().zip(&picks).filter(|(_, &keep)| keep).map(|(&s, _)| s).collect();
        let x = AffinePermutation::from_word(w.period(), &sub).unwrap();
        prop_assert!(bruhat_leq(&x, &w).unwrap());
        if x != w {
            prop_assert!(!bruhat_leq(&w, &x).unwrap());
        }
    }
}

#[test]
fn bruhat_agrees_with_subwords_in_period_three() {
    let elements = elements_up_to_length(3, 5).unwrap();
    let empty = ParabolicSubset::empty(3);
    for w in &elements {
        let interval = bruhat_lower_interval(w, &empty, DEFAULT_LENGTH_CAP).unwrap();
        let word = w.reduced_word();
        let mut below = std::collections::BTreeSet::new();
        for mask in 0u32..1 << word.len() {
            let sub: Vec<usize> = (0..word.len()).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            below.insert(AffinePermutation::from_word(3, &sub).unwrap());
        }
        let interval: std::collections::BTreeSet<_> = interval.into_iter().collect();
        assert_eq!(interval, below, "{w}");
        for x in &elements {
            assert_eq!(bruhat_leq(x, w).unwrap(), below.contains(x), "{x} <= {w}");
        }
    }
}

#[test]
fn longest_elements_have_factorial_poincare_polynomials() {
    let n = 6;
    for mask in 0u64..(1 << n) - 1 {
        let j = ParabolicSubset::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap();
        let w0 = longest_element(&j).unwrap();
        assert_eq!(w0.length(), longest_length(&j));
        if w0.length() > 10 {
            continue;
        }
        let expected = j.components().iter().fold(Polynomial::one(), |acc, c| &acc * &q_factorial(c.len() + 1));
        let p = poincare_polynomial(&w0, &ParabolicSubset::empty(n), DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(p, expected, "J = {:?}", j.to_vec());
    }
}

#[test]
fn rank_two_longest_element() {
    let j = ParabolicSubset::from_indices(4, [1, 2]).unwrap();
    let p = poincare_polynomial(&longest_element(&j).unwrap(), &ParabolicSubset::empty(4), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(p, Polynomial::from_i64(&[1, 2, 2, 1]));
    assert!(p.is_palindromic());
}

#[test]
fn ball_sizes() {
    // closure of the identity under right multiplication, level by level
    for n in 2..=4 {
        let mut level = vec![AffinePermutation::identity(n).unwrap()];
        let mut all = level.clone();
        for _ in 0..6 {
            let mut next: Vec<_> = level
                .iter()
                .flat_map(|w| (0..n).map(move |i| w.right_multiply(i)))
                .filter(|x| !all.contains(x))
                .collect();
            next.sort();
            next.dedup();
            all.extend(next.iter().cloned());
            level = next;
        }
        let listed = elements_up_to_length(n, 6).unwrap();
        assert_eq!(listed.len(), all.len(), "n = {n}");
        assert!(listed.windows(2).all(|p| p[0].length() <= p[1].length()));
    }
}
