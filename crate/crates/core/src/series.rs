//! Exact truncated power series over arbitrary-precision integers, and the
//! generating functions for staircase diagrams and smooth Schubert varieties.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A power series known through `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// Pads or truncates `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64(&[1], order)
    }

    /// `t` (or zero when `order` is 0).
    pub fn t(order: usize) -> Self {
        Self::from_i64(&[0, 1], order)
    }

    /// `1 / (1 - t)`.
    pub fn geometric(order: usize) -> Self {
        IntSeries { coeffs: vec![BigInt::one(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        IntSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        IntSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        IntSeries { coeffs }
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        IntSeries { coeffs: self.coeffs.iter().map(|x| x * &c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        IntSeries { coeffs }
    }

    /// Exact quotient; the divisor's constant term must be `±1`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let c0 = &other.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitDivisor);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc -= &other.coeffs[i] * &q[k - i];
            }
            q.push(acc * c0);
        }
        Ok(IntSeries { coeffs: q })
    }

    /// `d/dt`; known through one order less.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=order).map(|k| &self.coeffs[k] * BigInt::from(k)).collect();
        IntSeries { coeffs }
    }

    /// `t * d/dt`; keeps the order.
    pub fn theta(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c * BigInt::from(k)).collect();
        IntSeries { coeffs }
    }

    /// Multiplication by `t`; the order grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntSeries { coeffs }
    }

    /// Division by `t`; requires a zero constant term.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput("series has a nonzero constant term".into()));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(IntSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Exact division of every coefficient by `d`.
    fn exact_div(&self, d: i64) -> Self {
        let d = BigInt::from(d);
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % &d).is_zero());
                    c / &d
                })
                .collect(),
        }
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSeries{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

/// `sqrt(1 - 4t) = 1 - 2t - 2t^2 - 4t^3 - 10t^4 - ...`, via the ratio
/// `c_k / c_{k-1} = 2(2k - 3) / k`.
pub fn sqrt_one_minus_4t(order: usize) -> IntSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BigInt::one());
    for k in 1..=order {
        let prev: &BigInt = &coeffs[k - 1];
        let next = prev * BigInt::from(2 * (2 * k as i64 - 3)) / BigInt::from(k);
        coeffs.push(next);
    }
    IntSeries { coeffs }
}

/// `A_M(t) = (1 - 2t - sqrt(1 - 4t)) / (2t)`: fully supported increasing
/// staircase diagrams on a path.
pub fn series_am(order: usize) -> IntSeries {
    let root = sqrt_one_minus_4t(order + 1);
    let numerator = IntSeries::from_i64(&[1, -2], order + 1).sub(&root);
    numerator.shift_down().expect("constant term cancels").exact_div(2)
}

/// `Σ_{n≥1} C_n t^n` from the Catalan convolution `C_{k+1} = Σ C_i C_{k-i}`.
pub fn catalan_am(order: usize) -> IntSeries {
    let mut c = vec![BigInt::one()];
    for k in 0..order {
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c[0] = BigInt::zero();
    IntSeries { coeffs: c }
}

/// `A_B` from `A_M` known one order further.
fn ab_from(am: &IntSeries) -> IntSeries {
    let order = am.order() - 1;
    let one_minus_t = IntSeries::from_i64(&[1, -1], order + 1);
    let lifted = one_minus_t.mul(am).shift_down().expect("A_M has no constant term");
    lifted.sub(&IntSeries::one(order))
}

fn abar_from(ab: &IntSeries) -> IntSeries {
    let order = ab.order();
    let numerator = ab.mul(&ab.theta()).scale(2);
    let denominator = IntSeries::one(order).sub(&ab.mul(ab));
    numerator.div(&denominator).expect("1 - A_B^2 has unit constant term")
}

fn af_from(am: &IntSeries, ab: &IntSeries) -> IntSeries {
    let denominator = IntSeries::one(ab.order()).sub(ab);
    am.truncate(ab.order()).div(&denominator).expect("1 - A_B has unit constant term")
}

fn astar_from(af: &IntSeries) -> IntSeries {
    let order = af.order();
    af.shift_up().truncate(order).mul(&IntSeries::geometric(order))
}

fn a_from(abar: &IntSeries, astar: &IntSeries) -> IntSeries {
    let order = abar.order();
    let non_full = astar
        .theta()
        .div(&IntSeries::one(order).sub(astar))
        .expect("1 - A_* has unit constant term");
    let empty = IntSeries::from_i64(&[0, 0, 1], order).mul(&IntSeries::geometric(order));
    abar.add(&non_full).add(&empty)
}

/// `A_B(t) = (1 - t) A_M(t) / t - 1`: broken staircases.
pub fn series_ab(order: usize) -> IntSeries {
    ab_from(&series_am(order + 1))
}

/// `Ā(t) = 2 A_B · t A_B' / (1 - A_B^2)`: fully supported spherical staircase
/// diagrams on a cycle.
pub fn series_abar(order: usize) -> IntSeries {
    abar_from(&series_ab(order))
}

/// `A_F(t) = A_M(t) / (1 - A_B(t))`: fully supported staircase diagrams on a
/// path.
pub fn series_af(order: usize) -> IntSeries {
    af_from(&series_am(order), &series_ab(order))
}

/// `A_*(t) = t A_F(t) / (1 - t)`.
pub fn series_astar(order: usize) -> IntSeries {
    astar_from(&series_af(order))
}

/// `A(t) = Ā(t) + t A_*'(t) / (1 - A_*(t)) + t^2 / (1 - t)`, assembled from
/// the auxiliary series.
pub fn series_a_assembled(order: usize) -> IntSeries {
    a_from(&series_abar(order), &series_astar(order))
}

/// The generating functions exposed by [`closed_series`] and
/// [`assembled_series`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    A,
    AM,
    AB,
    AF,
    ABar,
    AStar,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 6] =
        [SeriesKind::A, SeriesKind::AM, SeriesKind::AB, SeriesKind::AF, SeriesKind::ABar, SeriesKind::AStar];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::A => "A",
            SeriesKind::AM => "AM",
            SeriesKind::AB => "AB",
            SeriesKind::AF => "AF",
            SeriesKind::ABar => "ABAR",
            SeriesKind::AStar => "ASTAR",
        }
    }

    /// Case-insensitive inverse of [`SeriesKind::name`].
    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::InvalidInput(format!("unknown series {name}")))
    }

    /// Whether the coefficient of `t^n` counts anything: `A` is defined for
    /// periods `n >= 2`, the others for every `n >= 1`.
    pub fn in_domain(self, n: usize) -> bool {
        match self {
            SeriesKind::A => in_domain(n),
            _ => n >= 1,
        }
    }
}

/// Closed forms: `A` from `P - Q sqrt(1 - 4t)`, the others from the
/// square-root expansion of `A_M`.
pub fn closed_series(kind: SeriesKind, order: usize) -> IntSeries {
    match kind {
        SeriesKind::A => series_a_closed(order),
        SeriesKind::AM => series_am(order),
        SeriesKind::AB => series_ab(order),
        SeriesKind::AF => series_af(order),
        SeriesKind::ABar => series_abar(order),
        SeriesKind::AStar => series_astar(order),
    }
}

/// The same series assembled from `A_M` built by the Catalan recurrence,
/// with `A` assembled from its auxiliary series.
pub fn assembled_series(kind: SeriesKind, order: usize) -> IntSeries {
    let am = catalan_am(order + 1);
    let ab = ab_from(&am);
    match kind {
        SeriesKind::AM => am.truncate(order),
        SeriesKind::AB => ab,
        SeriesKind::ABar => abar_from(&ab),
        SeriesKind::AF => af_from(&am, &ab),
        SeriesKind::AStar => astar_from(&af_from(&am, &ab)),
        SeriesKind::A => a_from(&abar_from(&ab), &astar_from(&af_from(&am, &ab))),
    }
}

/// Numerator polynomial `P(t) = (1 - 4t)(2 - 11t + 18t^2 - 16t^3 + 10t^4 - 4t^5)`.
pub fn formula_p(order: usize) -> IntSeries {
    IntSeries::from_i64(&[1, -4], order).mul(&IntSeries::from_i64(&[2, -11, 18, -16, 10, -4], order))
}

/// `Q(t) = (1 - t)(2 - t)(1 - 6t + 6t^2)`.
pub fn formula_q(order: usize) -> IntSeries {
    IntSeries::from_i64(&[1, -1], order)
        .mul(&IntSeries::from_i64(&[2, -1], order))
        .mul(&IntSeries::from_i64(&[1, -6, 6], order))
}

/// `(1 - t)(1 - 4t)(1 - 6t + 8t^2 - 4t^3)`.
pub fn formula_denominator(order: usize) -> IntSeries {
    IntSeries::from_i64(&[1, -1], order)
        .mul(&IntSeries::from_i64(&[1, -4], order))
        .mul(&IntSeries::from_i64(&[1, -6, 8, -4], order))
}

/// Closed form `A(t) = (P(t) - Q(t) sqrt(1 - 4t)) / ((1-t)(1-4t)(1-6t+8t^2-4t^3))`.
pub fn series_a_closed(order: usize) -> IntSeries {
    let numerator = formula_p(order).sub(&formula_q(order).mul(&sqrt_one_minus_4t(order)));
    numerator.div(&formula_denominator(order)).expect("denominator has unit constant term")
}

/// Coefficients of `A(t)` below `t^2` lie outside the range of periods the
/// count is defined for.
pub fn in_domain(n: usize) -> bool {
    n >= 2
}

fn cubic(t: f64) -> f64 {
    1.0 - 6.0 * t + 8.0 * t * t - 4.0 * t * t * t
}

/// The real root of `1 - 6t + 8t^2 - 4t^3`, by bisection on `[0, 1/2]`.
pub fn alpha() -> f64 {
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if cubic(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() < f64::EPSILON {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Residual `|1 - 6a + 8a^2 - 4a^3|` at [`alpha`].
pub fn alpha_residual() -> f64 {
    cubic(alpha()).abs()
}

/// `a_n * alpha^n` for each requested `n`.
pub fn asymptotic_check(samples: &[usize]) -> Vec<(usize, f64)> {
    let max = samples.iter().copied().max().unwrap_or(0);
    let a = series_a_closed(max);
    let alpha = alpha();
    samples
        .iter()
        .map(|&n| {
            let an = a.coeff(n).to_f64().unwrap_or(f64::INFINITY);
            (n, an * alpha.powi(n as i32))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn geometric_times_one_minus_t() {
        let g = IntSeries::geometric(10);
        let p = IntSeries::from_i64(&[1, -1], 10).mul(&g);
        assert_eq!(p, IntSeries::one(10));
    }

    #[test]
    fn theta_multiplies_by_index() {
        let g = IntSeries::geometric(6);
        assert_eq!(ints(&g.theta()), vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(ints(&g.derivative().shift_up()), vec![0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn geometric_squared() {
        let g = IntSeries::geometric(10);
        let sq = IntSeries::one(10).div(&IntSeries::from_i64(&[1, -2, 1], 10)).unwrap();
        assert_eq!(g.mul(&g), sq);
        assert_eq!(ints(&sq), (1..=11).collect::<Vec<_>>());
    }

    #[test]
    fn non_unit_division_fails() {
        let two = IntSeries::from_i64(&[2], 3);
        assert_eq!(IntSeries::one(3).div(&two), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn sqrt_coefficients() {
        let r = sqrt_one_minus_4t(6);
        assert_eq!(ints(&r), vec![1, -2, -2, -4, -10, -28, -84]);
        let root = sqrt_one_minus_4t(100);
        assert_eq!(root.mul(&root), IntSeries::from_i64(&[1, -4], 100));
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(ints(&series_am(5)), vec![0, 1, 2, 5, 14, 42]);
        assert_eq!(ints(&series_ab(4)), vec![0, 1, 3, 9, 28]);
        let abar = series_abar(3);
        assert_eq!(abar.coeff(1), &BigInt::zero());
        assert_eq!(abar.coeff(2), &BigInt::from(2));
        let af = series_af(2);
        assert_eq!(ints(&af), vec![0, 1, 3]);
    }

    #[test]
    fn known_counts_from_closed_form() {
        let a = series_a_closed(9);
        assert_eq!(
            ints(&a)[2..],
            [5, 31, 173, 891, 4373, 20833, 97333, 448663]
        );
    }

    #[test]
    fn alpha_root() {
        assert!((alpha() - 0.228155).abs() < 1e-6);
        assert!(alpha_residual() <= 1e-12);
    }

    #[test]
    fn assembled_matches_closed() {
        assert_eq!(series_a_assembled(60), series_a_closed(60));
    }

    #[test]
    fn catalan_base_agrees_with_square_root() {
        for kind in SeriesKind::ALL {
            assert_eq!(assembled_series(kind, 40), closed_series(kind, 40), "{}", kind.name());
        }
        assert_eq!(SeriesKind::parse("abar"), Ok(SeriesKind::ABar));
        assert!(SeriesKind::parse("B").is_err());
    }

    #[test]
    fn asymptotic_ratio() {
        let (_, r) = asymptotic_check(&[60])[0];
        assert!((0.98..=1.02).contains(&r), "{r}");
    }
}
