use affine_schubert::series::{
    alpha, assembled_series, closed_series, series_a_assembled, series_a_closed, series_ab, series_am,
    sqrt_one_minus_4t, IntSeries, SeriesKind,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// `C_n = (2n)! / (n! (n+1)!)` by the product formula.
fn catalan(n: usize) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for k in 2..=n {
        num *= BigInt::from(n + k);
        den *= BigInt::from(k);
    }
    num / den
}

fn series(coeffs: Vec<i64>) -> IntSeries {
    let order = coeffs.len() - 1;
    IntSeries::from_i64(&coeffs, order)
}

fn small_series() -> impl Strategy<Value = IntSeries> {
    prop::collection::vec(-20i64..20, 12).prop_map(series)
}

fn unit_series() -> impl Strategy<Value = IntSeries> {
    (prop::bool::ANY, prop::collection::vec(-20i64..20, 11)).prop_map(|(sign, mut rest)| {
        rest.insert(0, if sign { 1 } else { -1 });
        series(rest)
    })
}

proptest! {
    #[test]
    fn multiplication_commutes(a in small_series(), b in small_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn division_undoes_multiplication(a in small_series(), u in unit_series()) {
        prop_assert_eq!(a.mul(&u).div(&u).unwrap(), a.clone());
        prop_assert_eq!(a.div(&u).unwrap().mul(&u), a);
    }

    #[test]
    fn theta_is_a_derivation(a in small_series(), b in small_series()) {
        prop_assert_eq!(a.mul(&b).theta(), a.theta().mul(&b).add(&a.mul(&b.theta())));
    }

    #[test]
    fn shifts_are_inverse(a in small_series()) {
        prop_assert_eq!(a.shift_up().shift_down().unwrap(), a);
    }
}

#[test]
fn increasing_counts_are_catalan() {
    let am = series_am(40);
    assert!(am.coeff(0).is_zero());
    for n in 1..=40 {
        assert_eq!(am.coeff(n), &catalan(n), "n = {n}");
    }
}

#[test]
fn broken_counts_are_catalan_differences() {
    let ab = series_ab(30);
    for n in 1..=30 {
        assert_eq!(ab.coeff(n), &(catalan(n + 1) - catalan(n)), "n = {n}");
    }
}

#[test]
fn square_root_squares_back() {
    let r = sqrt_one_minus_4t(200);
    assert_eq!(r.mul(&r), IntSeries::from_i64(&[1, -4], 200));
    // -c_k = 2 C_{k-1}
    for k in 1..=50 {
        assert_eq!(-r.coeff(k), BigInt::from(2) * catalan(k - 1));
    }
}

#[test]
fn known_counts() {
    let a = series_a_closed(9);
    let counts = [5u64, 31, 173, 891, 4373, 20833, 97333, 448663];
    for (k, &v) in counts.iter().enumerate() {
        assert_eq!(a.coeff(k + 2), &BigInt::from(v));
    }
}

#[test]
fn closed_and_assembled_agree() {
    assert_eq!(series_a_closed(60), series_a_assembled(60));
    for kind in SeriesKind::ALL {
        assert_eq!(closed_series(kind, 60), assembled_series(kind, 60), "{}", kind.name());
    }
}

#[test]
fn coefficients_are_nonnegative() {
    let a = series_a_closed(200);
    assert!((2..=200).all(|n| !a.coeff(n).is_negative()));
    for kind in SeriesKind::ALL {
        let s = closed_series(kind, 80);
        assert!((1..=80).all(|n| !s.coeff(n).is_negative()), "{}", kind.name());
    }
}

#[test]
fn growth_rate_is_one_over_alpha() {
    let a = series_a_closed(120);
    let ratio = |n: usize| {
        let hi: f64 = a.coeff(n).to_string().parse().unwrap();
        let lo: f64 = a.coeff(n - 1).to_string().parse().unwrap();
        hi / lo
    };
    assert!((ratio(120) * alpha() - 1.0).abs() < 1e-3, "{}", ratio(120) * alpha());
}
