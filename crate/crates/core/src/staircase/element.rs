use crate::coxeter::{longest_element, AffinePermutation, ParabolicSubset};
use crate::error::{Error, Result};
use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::graph::GraphKind;

/// Period of the affine symmetric group whose Coxeter graph contains the
/// diagram's graph: `Γ̃_n` is the graph of period `n` and `Γ_n` sits inside
/// period `n + 1` as `s_1..s_n`.
pub fn ambient_period(d: &StaircaseDiagram) -> usize {
    match d.graph().kind {
        GraphKind::Cycle => d.graph().n,
        GraphKind::Path => d.graph().n + 1,
    }
}

/// The element of a spherical diagram.
///
/// Blocks are taken bottom-up along a linear extension. Each block `B`
/// contributes the longest element of `W_B` modulo `W_{B ∩ L}`, where `L` is
/// the union of the blocks below `B`, multiplied on the left of the product
/// so far.
pub fn to_element(d: &StaircaseDiagram) -> Result<AffinePermutation> {
    if !d.is_spherical() {
        return Err(Error::NotSpherical);
    }
    let period = ambient_period(d);
    let mut w = AffinePermutation::identity(period)?;
    for i in d.linear_extension() {
        let block = d.blocks()[i];
        let lower = (0..d.len()).filter(|&j| d.precedes(j, i)).fold(0u64, |acc, j| acc | d.blocks()[j]);
        let b = ParabolicSubset::from_mask(period, block);
        let overlap = ParabolicSubset::from_mask(period, block & lower);
        let top = longest_element(&b)?;
        let factor = top.multiply(&longest_element(&overlap)?)?;
        w = factor.multiply(&w)?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::graph::CoxGraph;

    #[test]
    fn empty_is_identity() {
        let g = CoxGraph::cycle(4).unwrap();
        assert!(to_element(&StaircaseDiagram::empty(g)).unwrap().is_identity());
    }

    #[test]
    fn single_block_is_longest() {
        let g = CoxGraph::cycle(5).unwrap();
        let mask = g.interval(3, 1).unwrap();
        let d = StaircaseDiagram::from_masks(g, vec![mask], &[]).unwrap();
        let w0 = longest_element(&ParabolicSubset::from_mask(5, mask)).unwrap();
        assert_eq!(to_element(&d).unwrap(), w0);
    }

    #[test]
    fn flip_gives_inverse_on_a_chain() {
        let g = CoxGraph::path(2).unwrap();
        let d = StaircaseDiagram::new(g, &[vec![1], vec![2]], &[(0, 1)]).unwrap();
        let w = to_element(&d).unwrap();
        assert_eq!(w, AffinePermutation::from_word(3, &[2, 1]).unwrap());
        assert_eq!(to_element(&d.flip()).unwrap(), w.inverse());
    }

    #[test]
    fn non_spherical_is_rejected() {
        let g = CoxGraph::cycle(3).unwrap();
        let d = StaircaseDiagram::from_masks(g, vec![g.full_mask()], &[]).unwrap();
        assert_eq!(to_element(&d), Err(Error::NotSpherical));
    }
}
