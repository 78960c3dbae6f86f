//! Parabolic and Billey-Postnikov (BP) decompositions.
//!
//! For `J ⊆ K` and `w` in `W^J`, the parabolic decomposition `w = v u` has
//! `v` in `W^K` and `u` in `W_K ∩ W^J`. It is BP when
//! `P^J_w = P^K_v * P^J_u`. With `J` empty this is equivalent to
//! `S(v) ∩ K ⊆ D_L(u)`.

use serde::Serialize;

use crate::coxeter::{
    coset_decompose, longest_element, longest_length, poincare_polynomial, AffinePermutation,
    ParabolicSubset,
};
use crate::error::{Error, Result};
use crate::smoothness::is_smooth;

fn check_quotient(w: &AffinePermutation, j: &ParabolicSubset) -> Result<()> {
    if w.is_minimal_in_coset(j) {
        Ok(())
    } else {
        Err(Error::NotInQuotient)
    }
}

/// `S(v) ∩ K ⊆ D_L(u)` for the parabolic decomposition of `w` by `K`.
fn left_descent_criterion(w: &AffinePermutation, k: &ParabolicSubset) -> bool {
    let (v, u) = coset_decompose(w, k);
    v.support().intersection(k).is_subset(&u.left_descents())
}

/// Whether the parabolic decomposition of `w` with respect to `K` is BP
/// relative to `J`.
///
/// For nonempty `J` the question is lifted to `w u_0` with `u_0` the longest
/// element of `W_{J ∩ S(w)}`: both `w u_0` and `u u_0` factor as BP products
/// over `J`, so the Poincaré identity for `w` holds exactly when the
/// `J = ∅` criterion holds for `w u_0`.
pub fn is_bp(w: &AffinePermutation, k: &ParabolicSubset, j: &ParabolicSubset) -> Result<bool> {
    if !j.is_subset(k) {
        return Err(Error::InvalidInput("J must be contained in K".into()));
    }
    check_quotient(w, j)?;
    if j.is_empty() {
        return Ok(left_descent_criterion(w, k));
    }
    let u0 = longest_element(&j.intersection(&w.support()))?;
    Ok(left_descent_criterion(&w.compose(&u0), k))
}

/// Checks the defining identity `P^J_w = P^K_v * P^J_u` by enumerating
/// Bruhat intervals (subject to `cap`).
pub fn is_bp_by_poincare(
    w: &AffinePermutation,
    k: &ParabolicSubset,
    j: &ParabolicSubset,
    cap: usize,
) -> Result<bool> {
    if !j.is_subset(k) {
        return Err(Error::InvalidInput("J must be contained in K".into()));
    }
    check_quotient(w, j)?;
    let (v, u) = coset_decompose(w, k);
    let pw = poincare_polynomial(w, j, cap)?;
    let pv = poincare_polynomial(&v, k, cap)?;
    let pu = poincare_polynomial(&u, j, cap)?;
    Ok(pw == &pv * &pu)
}

/// A Grassmannian BP decomposition `w = v u` with respect to
/// `K = (S(w) ∪ J) \ {s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianBp {
    pub v: AffinePermutation,
    pub u: AffinePermutation,
    pub k: ParabolicSubset,
    pub dropped: usize,
}

/// Finds a Grassmannian BP decomposition of `w` relative to `J` whose
/// right factor satisfies `S(u) ∪ J = K`.
///
/// Candidates `s ∈ S(w) \ J` are tried with non-descents of `w` first, then
/// descents, each in increasing index. Decompositions with both factors in
/// proper parabolic subgroups are preferred; failing that, the first BP
/// decomposition with a fully supported left factor is returned.
pub fn find_grassmannian_bp(
    w: &AffinePermutation,
    j: &ParabolicSubset,
) -> Result<Option<GrassmannianBp>> {
    check_quotient(w, j)?;
    Ok(grassmannian_candidates(w, j)?.into_iter().next())
}

/// Every admissible Grassmannian BP decomposition, in preference order.
pub fn grassmannian_candidates(
    w: &AffinePermutation,
    j: &ParabolicSubset,
) -> Result<Vec<GrassmannianBp>> {
    check_quotient(w, j)?;
    let support = w.support();
    let top = support.union(j);
    let descents = w.right_descents();
    let mut order: Vec<usize> = support.difference(j).iter().collect();
    order.sort_by_key(|&s| (descents.contains(s), s));

    let mut proper = Vec::new();
    let mut improper = Vec::new();
    for s in order {
        let k = top.without(s);
        let (v, u) = coset_decompose(w, &k);
        if u.support().union(j) != k || !is_bp(w, &k, j)? {
            continue;
        }
        let found = GrassmannianBp { v, u, k, dropped: s };
        if found.v.support().is_finite_type() && found.u.support().is_finite_type() {
            proper.push(found);
        } else {
            improper.push(found);
        }
    }
    proper.extend(improper);
    Ok(proper)
}

/// Grassmannian parameters of one factor: `v` maximal in
/// `W_{S(v)}^{K ∩ S(v)}` with `S(v)` a path of `p` nodes gives `Gr(a, p+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianLabel {
    /// `S(v)` in path order.
    pub nodes: Vec<usize>,
    /// The node of `S(v)` outside `K`.
    pub missing: usize,
    /// `(a, p + 1)`.
    pub gr: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpFactor {
    pub v: AffinePermutation,
    /// `K_i`, the parabolic subset the factor is taken relative to.
    pub k: ParabolicSubset,
    pub maximal: bool,
    pub label: Option<GrassmannianLabel>,
}

/// A complete BP decomposition `w = v_1 ... v_m` relative to `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpDecomposition {
    pub w: AffinePermutation,
    pub j: ParabolicSubset,
    /// `K_0 = S(w) ∪ J`.
    pub k0: ParabolicSubset,
    pub factors: Vec<BpFactor>,
}

impl BpDecomposition {
    pub fn all_maximal(&self) -> bool {
        self.factors.iter().all(|f| f.maximal)
    }

    /// The chain `K_0 ⊋ K_1 ⊋ ... ⊋ K_m = J`.
    pub fn chain(&self) -> Vec<ParabolicSubset> {
        std::iter::once(self.k0).chain(self.factors.iter().map(|f| f.k)).collect()
    }

    /// `u_i = v_i ... v_m` for `i = 1..=m+1`.
    pub fn tails(&self) -> Vec<AffinePermutation> {
        let mut out = vec![AffinePermutation::identity_unchecked(self.w.period())];
        for f in self.factors.iter().rev() {
            let next = f.v.compose(out.last().unwrap());
            out.push(next);
        }
        out.reverse();
        out
    }

    /// `w_i = v_1 ... v_i` for `i = 0..=m`.
    pub fn heads(&self) -> Vec<AffinePermutation> {
        let mut out = vec![AffinePermutation::identity_unchecked(self.w.period())];
        for f in &self.factors {
            let next = out.last().unwrap().compose(&f.v);
            out.push(next);
        }
        out
    }
}

/// Whether `v` is the longest element of `W_{S(v)}^{K ∩ S(v)}`.
pub fn is_maximal_factor(v: &AffinePermutation, k: &ParabolicSubset) -> bool {
    let support = v.support();
    if !support.is_finite_type() {
        return false;
    }
    v.length() + longest_length(&k.intersection(&support)) == longest_length(&support)
}

fn label_for(v: &AffinePermutation, k: &ParabolicSubset) -> Option<GrassmannianLabel> {
    let support = v.support();
    let comps = support.components();
    if comps.len() != 1 || !support.is_finite_type() {
        return None;
    }
    let nodes = comps.into_iter().next().unwrap();
    let outside: Vec<usize> = nodes.iter().copied().filter(|&s| !k.contains(s)).collect();
    if outside.len() != 1 {
        return None;
    }
    let missing = outside[0];
    let a = nodes.iter().position(|&s| s == missing).unwrap() + 1;
    let p = nodes.len();
    Some(GrassmannianLabel { nodes, missing, gr: (a, p + 1) })
}

/// Complete BP decomposition relative to `J`, found by repeatedly splitting
/// off Grassmannian BP factors (with backtracking over the dropped node).
/// Decompositions with every factor maximal are preferred.
pub fn complete_bp_decomposition(
    w: &AffinePermutation,
    j: &ParabolicSubset,
) -> Result<Option<BpDecomposition>> {
    check_quotient(w, j)?;
    let k0 = w.support().union(j);
    let mut factors = Vec::new();
    if search(w, j, true, &mut factors)? {
        return Ok(Some(BpDecomposition { w: w.clone(), j: *j, k0, factors }));
    }
    factors.clear();
    if search(w, j, false, &mut factors)? {
        return Ok(Some(BpDecomposition { w: w.clone(), j: *j, k0, factors }));
    }
    Ok(None)
}

fn search(
    w: &AffinePermutation,
    j: &ParabolicSubset,
    require_maximal: bool,
    factors: &mut Vec<BpFactor>,
) -> Result<bool> {
    if w.support().is_subset(j) {
        return Ok(w.is_identity());
    }
    for cand in grassmannian_candidates(w, j)? {
        let maximal = is_maximal_factor(&cand.v, &cand.k);
        if require_maximal && !maximal {
            continue;
        }
        let label = if maximal { label_for(&cand.v, &cand.k) } else { None };
        factors.push(BpFactor { v: cand.v, k: cand.k, maximal, label });
        if search(&cand.u, j, require_maximal, factors)? {
            return Ok(true);
        }
        factors.pop();
    }
    Ok(false)
}

/// Grassmannian fibres of the iterated bundle `X^J(w) -> ... -> pt`, base
/// first.
pub fn fibre_tower(w: &AffinePermutation, j: &ParabolicSubset) -> Result<Vec<GrassmannianLabel>> {
    match complete_bp_decomposition(w, j)? {
        Some(d) if d.all_maximal() => d
            .factors
            .into_iter()
            .map(|f| f.label.ok_or(Error::NotSmooth))
            .collect(),
        _ => Err(Error::NotSmooth),
    }
}

/// Smoothness of `X^J(w)`: `w u_0` avoids 3412 and 4231, where `u_0` is the
/// longest element of `W_{J ∩ S(w)}`.
pub fn is_smooth_partial(w: &AffinePermutation, j: &ParabolicSubset) -> Result<bool> {
    check_quotient(w, j)?;
    let u0 = longest_element(&j.intersection(&w.support()))?;
    Ok(is_smooth(&w.compose(&u0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_LENGTH_CAP;
    use crate::smoothness::{is_rationally_smooth, spiral, twisted_spiral, SpiralDirection, SpiralSpec};

    fn set(n: usize, idx: &[usize]) -> ParabolicSubset {
        ParabolicSubset::from_indices(n, idx.iter().copied()).unwrap()
    }

    fn word(n: usize, w: &[usize]) -> AffinePermutation {
        AffinePermutation::from_word(n, w).unwrap()
    }

    #[test]
    fn element_of_k_is_bp() {
        let w = word(4, &[1, 2, 1]);
        assert!(is_bp(&w, &set(4, &[1, 2]), &set(4, &[])).unwrap());
    }

    #[test]
    fn s2s1_by_s1_is_bp() {
        let w = word(4, &[2, 1]);
        let k = set(4, &[1]);
        let e = set(4, &[]);
        assert!(is_bp(&w, &k, &e).unwrap());
        assert!(is_bp_by_poincare(&w, &k, &e, DEFAULT_LENGTH_CAP).unwrap());
    }

    #[test]
    fn s1s2_by_s1_is_not_bp() {
        let w = word(4, &[1, 2]);
        let k = set(4, &[1]);
        let e = set(4, &[]);
        assert!(!is_bp(&w, &k, &e).unwrap());
        assert!(!is_bp_by_poincare(&w, &k, &e, DEFAULT_LENGTH_CAP).unwrap());
    }

    #[test]
    fn longest_a2_splits() {
        let w = longest_element(&set(4, &[1, 2])).unwrap();
        let g = find_grassmannian_bp(&w, &set(4, &[])).unwrap().unwrap();
        assert!(g.k == set(4, &[1]) || g.k == set(4, &[2]));
        assert_eq!(g.v.compose(&g.u), w);
    }

    #[test]
    fn twisted_spiral_splits_at_base() {
        let spec = SpiralSpec::new(0, 2, SpiralDirection::X);
        let t = twisted_spiral(spec, 3).unwrap();
        let g = find_grassmannian_bp(&t, &set(3, &[])).unwrap().unwrap();
        assert_eq!(g.k, set(3, &[1, 2]));
        assert_eq!(g.u, longest_element(&set(3, &[1, 2])).unwrap());
        assert_eq!(g.v, spiral(spec, 3).unwrap());

        let d = complete_bp_decomposition(&t, &set(3, &[])).unwrap().unwrap();
        assert!(!d.factors[0].maximal);
        assert_eq!(d.factors[0].v.length(), 4);
        assert!(d.factors[1..].iter().all(|f| f.maximal));
        assert!(fibre_tower(&t, &set(3, &[])).is_err());
    }

    #[test]
    fn identity_has_empty_decomposition() {
        let e = AffinePermutation::identity(3).unwrap();
        let d = complete_bp_decomposition(&e, &set(3, &[])).unwrap().unwrap();
        assert!(d.factors.is_empty());
    }

    #[test]
    fn towers_of_small_longest_elements() {
        let w = longest_element(&set(4, &[1])).unwrap();
        let tower = fibre_tower(&w, &set(4, &[])).unwrap();
        assert_eq!(tower.len(), 1);
        assert_eq!(tower[0].gr, (1, 2));

        let w = longest_element(&set(4, &[1, 2])).unwrap();
        let tower = fibre_tower(&w, &set(4, &[])).unwrap();
        assert_eq!(tower.len(), 2);
        assert_eq!(tower[0].nodes, vec![1, 2]);
        assert_eq!(tower[0].gr.1, 3);
        assert_eq!(tower[1].gr, (1, 2));
    }

    #[test]
    fn partial_smoothness() {
        let w = word(4, &[1]);
        assert!(is_smooth_partial(&w, &set(4, &[2])).unwrap());
        assert!(is_smooth_partial(&w, &set(4, &[1])).is_err());

        let spec = SpiralSpec::new(1, 2, SpiralDirection::X);
        let v = spiral(spec, 3).unwrap();
        let j = set(3, &[0, 2]);
        assert!(!is_smooth_partial(&v, &j).unwrap());
        let u0 = longest_element(&j).unwrap();
        assert!(is_rationally_smooth(&v.compose(&u0)));
    }

    #[test]
    fn general_j_agrees_with_poincare_identity() {
        let n = 3;
        let j = set(n, &[1]);
        let words: [&[usize]; 4] = [&[0], &[1, 0], &[2, 1, 0], &[0, 2, 1, 0]];
        for wd in words {
            let w = word(n, wd);
            if !w.is_minimal_in_coset(&j) {
                continue;
            }
            for s in [0, 2] {
                let k = set(n, &[0, 1, 2]).without(s);
                assert_eq!(
                    is_bp(&w, &k, &j).unwrap(),
                    is_bp_by_poincare(&w, &k, &j, DEFAULT_LENGTH_CAP).unwrap(),
                    "{wd:?} {s}"
                );
            }
        }
    }
}
