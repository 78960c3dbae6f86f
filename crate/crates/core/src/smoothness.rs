//! Affine pattern avoidance, spiral and twisted spiral permutations, and the
//! smoothness and rational smoothness tests.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::coxeter::{longest_element, AffinePermutation, ParabolicSubset};
use crate::error::{Error, Result};

/// A finite permutation pattern, given by its values `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<usize>);

impl Pattern {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(k, &v)| v != k + 1) {
            return Err(Error::InvalidInput(format!("{values:?} is not a permutation of 1..k")));
        }
        Ok(Pattern(values))
    }

    pub fn p3412() -> Self {
        Pattern(vec![3, 4, 1, 2])
    }

    pub fn p4231() -> Self {
        Pattern(vec![4, 2, 3, 1])
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

/// Whether `w`, viewed as a sequence indexed by all integers, has positions
/// `i_1 < ... < i_k` whose values are in the relative order of `p`.
///
/// Occurrences are invariant under shifting all positions by `n`, so the
/// first position ranges over one window. When the first entry of `p` exceeds
/// the last, positions 1 and k form an inversion; with
/// `D = max |w(j) - j|` every inversion spans fewer than `2D` positions, so
/// the search below is complete. Other patterns are searched over a window of
/// width `2D + k n`.
pub fn contains_pattern(w: &AffinePermutation, p: &Pattern) -> bool {
    let k = p.0.len();
    if k == 0 {
        return true;
    }
    if k == 1 {
        return true;
    }
    let d = w.displacement();
    let span = if p.0[0] > p.0[k - 1] {
        (2 * d).max(1)
    } else {
        2 * d + (k * w.period()) as i64
    };
    let n = w.period() as i64;
    let mut chosen: Vec<i64> = Vec::with_capacity(k);
    (1..=n).any(|first| {
        chosen.clear();
        chosen.push(w.apply(first));
        extend_occurrence(w, &p.0, first, first + span, &mut chosen)
    })
}

fn extend_occurrence(
    w: &AffinePermutation,
    pattern: &[usize],
    last_pos: i64,
    limit: i64,
    chosen: &mut Vec<i64>,
) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    for pos in (last_pos + 1)..limit {
        let value = w.apply(pos);
        // new value must sit in the same place relative to earlier entries
        let consistent = (0..depth).all(|t| (pattern[t] < pattern[depth]) == (chosen[t] < value));
        if consistent {
            chosen.push(value);
            if extend_occurrence(w, pattern, pos, limit, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Avoids both 3412 and 4231.
pub fn is_smooth(w: &AffinePermutation) -> bool {
    !contains_pattern(w, &Pattern::p3412()) && !contains_pattern(w, &Pattern::p4231())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpiralDirection {
    /// `x(i, m) = s_{i+m-1} s_{i+m-2} ... s_i`
    X,
    /// `y(i, m) = s_{i-m+1} s_{i-m+2} ... s_i`
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpiralSpec {
    pub base: usize,
    pub repetitions: usize,
    pub direction: SpiralDirection,
}

impl SpiralSpec {
    pub fn new(base: usize, repetitions: usize, direction: SpiralDirection) -> Self {
        SpiralSpec { base, repetitions, direction }
    }
}

/// Word of `x(i, m)` or `y(i, m)` with indices taken mod `n`.
fn spiral_word(n: usize, base: usize, m: usize, direction: SpiralDirection) -> Vec<usize> {
    let n = n as i64;
    let i = base as i64;
    let m = m as i64;
    match direction {
        SpiralDirection::X => (0..m).map(|t| (i + m - 1 - t).rem_euclid(n) as usize).collect(),
        SpiralDirection::Y => (0..m).map(|t| (i - m + 1 + t).rem_euclid(n) as usize).collect(),
    }
}

/// Spiral permutation `x(i, k(n-1))` or `y(i, k(n-1))`.
pub fn spiral(spec: SpiralSpec, n: usize) -> Result<AffinePermutation> {
    if spec.repetitions < 2 {
        return Err(Error::InvalidSpiral(spec.repetitions));
    }
    if spec.base >= n {
        return Err(Error::IndexOutOfRange { index: spec.base, n });
    }
    let m = spec.repetitions * (n - 1);
    AffinePermutation::from_word(n, &spiral_word(n, spec.base, m, spec.direction))
}

/// Spiral times the longest element of `W_{S \ {s_i}}`.
pub fn twisted_spiral(spec: SpiralSpec, n: usize) -> Result<AffinePermutation> {
    let v = spiral(spec, n)?;
    let u0 = longest_element(&ParabolicSubset::full(n).without(spec.base))?;
    Ok(v.compose(&u0))
}

/// Recognises twisted spirals: the right descent set must be `S \ {s_i}`,
/// and stripping the longest element of that parabolic must leave a spiral.
pub fn twisted_spiral_spec(w: &AffinePermutation) -> Option<SpiralSpec> {
    let n = w.period();
    let descents = w.right_descents();
    if descents.len() != n - 1 {
        return None;
    }
    let base = descents.complement().iter().next()?;
    let u0 = longest_element(&descents).ok()?;
    let v = w.compose(&u0);
    if v.length() + u0.length() != w.length() {
        return None;
    }
    let m = v.length();
    if !m.is_multiple_of(n - 1) || m / (n - 1) < 2 {
        return None;
    }
    let repetitions = m / (n - 1);
    [SpiralDirection::X, SpiralDirection::Y].into_iter().find_map(|direction| {
        let spec = SpiralSpec::new(base, repetitions, direction);
        (spiral(spec, n).ok()? == v).then_some(spec)
    })
}

pub fn is_twisted_spiral(w: &AffinePermutation) -> bool {
    twisted_spiral_spec(w).is_some()
}

/// Smooth, or a twisted spiral.
pub fn is_rationally_smooth(w: &AffinePermutation) -> bool {
    is_smooth(w) || is_twisted_spiral(w)
}

/// Options for [`enumerate_smooth`].
#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// Expected number of avoiders; the search stops only once this many
    /// have been found and `2n` consecutive lengths produced none.
    pub expected: Option<u64>,
    /// Hard limit on the explored length.
    pub max_length: usize,
    pub workers: usize,
    pub deadline: Option<Instant>,
}

impl EnumerationOptions {
    pub fn new(expected: Option<u64>) -> Self {
        EnumerationOptions { expected, max_length: 200, workers: 1, deadline: None }
    }
}

/// All 3412- and 4231-avoiding elements of the affine symmetric group on
/// period `n`, sorted by length and then window.
///
/// Explores the group breadth-first by length. Stops once `2n` consecutive
/// lengths contain no avoider and the running count equals
/// `options.expected` (when given).
pub fn enumerate_smooth(n: usize, options: &EnumerationOptions) -> Result<Vec<AffinePermutation>> {
    let identity = AffinePermutation::identity(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let mut found = vec![identity.clone()];
    let mut level = vec![identity];
    let mut empty_run = 0usize;
    let mut length = 0usize;
    loop {
        if let Some(deadline) = options.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExceeded(format!("time budget hit at length {length}")));
            }
        }
        let count_ok = options.expected.is_none_or(|e| e == found.len() as u64);
        if empty_run >= 2 * n && count_ok {
            break;
        }
        if length >= options.max_length {
            return Err(Error::BudgetExceeded(format!(
                "no stable count up to length {length} ({} avoiders found)",
                found.len()
            )));
        }
        let mut next: HashSet<AffinePermutation> = HashSet::new();
        for w in &level {
            for i in 0..n {
                if !w.has_right_descent(i) {
                    next.insert(w.right_multiply(i));
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        let mut smooth: Vec<AffinePermutation> =
            pool.install(|| next.par_iter().filter(|w| is_smooth(w)).cloned().collect());
        smooth.sort();
        if smooth.is_empty() {
            empty_run += 1;
        } else {
            empty_run = 0;
        }
        found.extend(smooth);
        level = next;
        length += 1;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, window: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(n, window.to_vec()).unwrap()
    }

    #[test]
    fn identity_avoids() {
        let e = AffinePermutation::identity(4).unwrap();
        assert!(!contains_pattern(&e, &Pattern::p3412()));
        assert!(is_smooth(&e));
        assert!(is_rationally_smooth(&e));
        assert!(!is_twisted_spiral(&e));
    }

    #[test]
    fn finite_3412_is_detected() {
        let x = w(4, &[3, 4, 1, 2]);
        assert!(contains_pattern(&x, &Pattern::p3412()));
        assert!(!is_smooth(&x));
    }

    #[test]
    fn pattern_validation() {
        assert!(Pattern::new(vec![1, 3]).is_err());
        assert!(Pattern::new(vec![2, 1]).is_ok());
    }

    #[test]
    fn spiral_example_word() {
        // m = 4: s_3 s_2 s_1 s_0 with indices mod 3.
        assert_eq!(spiral_word(3, 0, 4, SpiralDirection::X), vec![0, 2, 1, 0]);
        let v = spiral(SpiralSpec::new(0, 2, SpiralDirection::X), 3).unwrap();
        assert_eq!(v.length(), 4);
        assert_eq!(v.right_descents().to_vec(), vec![0]);
    }

    #[test]
    fn spirals_have_single_descent() {
        for n in 2..=5 {
            for k in 2..=3 {
                for base in 0..n {
                    for dir in [SpiralDirection::X, SpiralDirection::Y] {
                        let v = spiral(SpiralSpec::new(base, k, dir), n).unwrap();
                        assert_eq!(v.length(), k * (n - 1));
                        assert_eq!(v.right_descents().to_vec(), vec![base]);
                    }
                }
            }
        }
    }

    #[test]
    fn spiral_rejects_k1() {
        let spec = SpiralSpec::new(0, 1, SpiralDirection::X);
        assert_eq!(spiral(spec, 3), Err(Error::InvalidSpiral(1)));
        assert_eq!(twisted_spiral(spec, 3), Err(Error::InvalidSpiral(1)));
    }

    #[test]
    fn twisted_spiral_basics() {
        let spec = SpiralSpec::new(0, 2, SpiralDirection::X);
        let t = twisted_spiral(spec, 3).unwrap();
        assert_eq!(t.length(), 7);
        assert_eq!(t.right_descents().to_vec(), vec![1, 2]);
        assert!(!is_smooth(&t));
        assert!(contains_pattern(&t, &Pattern::p3412()) || contains_pattern(&t, &Pattern::p4231()));
        assert!(is_rationally_smooth(&t));
        let spec1 = SpiralSpec::new(1, 2, SpiralDirection::X);
        let t1 = twisted_spiral(spec1, 3).unwrap();
        assert_eq!(twisted_spiral_spec(&t1), Some(spec1));
    }

    #[test]
    fn proper_support_is_never_twisted() {
        let x = AffinePermutation::from_word(4, &[1, 2, 1]).unwrap();
        assert!(!is_twisted_spiral(&x));
    }

    #[test]
    fn smooth_count_period_two() {
        let all = enumerate_smooth(2, &EnumerationOptions::new(Some(5))).unwrap();
        assert_eq!(all.len(), 5);
    }
}
