//! Closed-form Hamiltonian completion numbers for the supported caterpillar
//! classes, plus the leaf-count lower bounds.

use std::fmt;

use crate::caterpillar::{classify, decompose_segments, CaterpillarSpec, ClassLabel, SegmentDecomposition};
use crate::error::{Error, Result};

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `⌈n/2⌉`
    HalfSpine,
    /// `n`
    SpineLength,
    /// `n(k-1)`
    RegularClaws,
    /// `Σl - n`
    LeafExcess,
    /// `P(0) + Σ_{l≥2}(l-1)`
    ZeroSegments,
    /// `Σ_{l≥2}(l-1) + P(0) + γ + τ`
    DesertedPendants,
}

impl Formula {
    pub fn for_class(class: ClassLabel) -> Option<Formula> {
        Some(match class {
            ClassLabel::Regular1 => Formula::HalfSpine,
            ClassLabel::Regular2 => Formula::SpineLength,
            ClassLabel::RegularK(_) => Formula::RegularClaws,
            ClassLabel::AllAtLeastThree => Formula::LeafExcess,
            ClassLabel::ZeroOrAtLeastTwo => Formula::ZeroSegments,
            ClassLabel::DesertedSegments => Formula::DesertedPendants,
            ClassLabel::Unsupported => return None,
        })
    }

    /// Evaluates this formula on `spec` regardless of whether the spec
    /// satisfies the formula's hypothesis.
    pub fn evaluate(self, spec: &CaterpillarSpec, decomp: &SegmentDecomposition) -> usize {
        let l = spec.leaf_counts();
        let n = l.len();
        let heavy_excess: usize = l.iter().filter(|&&x| x >= 2).map(|&x| x - 1).sum();
        match self {
            Formula::HalfSpine => n.div_ceil(2),
            Formula::SpineLength => n,
            Formula::RegularClaws => n * (l[0].saturating_sub(1)),
            Formula::LeafExcess => spec.leaf_total().saturating_sub(n),
            Formula::ZeroSegments => decomp.zero_leaf_segment_count + heavy_excess,
            Formula::DesertedPendants => {
                heavy_excess
                    + decomp.zero_leaf_segment_count
                    + decomp.deserted_segment_count
                    + decomp.deserted_pendant_count
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Formula::HalfSpine => "ceil(n/2)",
            Formula::SpineLength => "n",
            Formula::RegularClaws => "n(k-1)",
            Formula::LeafExcess => "sum(l)-n",
            Formula::ZeroSegments => "P0+sum(l-1)",
            Formula::DesertedPendants => "sum(l-1)+P0+gamma+tau",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaResult {
    pub value: usize,
    pub class_used: ClassLabel,
    pub formula: Formula,
}

/// `⌈leaves/2⌉`: every leaf needs a new edge, each new edge serves two.
pub fn lambda_lower_bound(leaf_count: usize) -> usize {
    leaf_count.div_ceil(2)
}

/// Completion number of the star with `num_leaves` leaves.
pub fn lambda_star(num_leaves: usize) -> Result<usize> {
    if num_leaves <= 1 {
        return Err(Error::TooSmallForCycle(num_leaves + 1));
    }
    Ok(num_leaves - 1)
}

/// `⌈Σl/2⌉` for a caterpillar spec.
pub fn lemma_lower_bound_01(spec: &CaterpillarSpec) -> usize {
    lambda_lower_bound(spec.leaf_total())
}

/// Evaluates the formula of the spec's class.
pub fn lambda_closed_form(spec: &CaterpillarSpec, decomp: &SegmentDecomposition) -> Result<LambdaResult> {
    if spec.vertex_count() < 3 {
        return Err(Error::TooSmallForCycle(spec.vertex_count()));
    }
    let class = classify(spec);
    let formula = Formula::for_class(class).ok_or_else(|| Error::Unsupported(spec.leaf_counts().to_vec()))?;
    Ok(LambdaResult {
        value: formula.evaluate(spec, decomp),
        class_used: class,
        formula,
    })
}

/// [`lambda_closed_form`] with the decomposition computed internally.
pub fn lambda(spec: &CaterpillarSpec) -> Result<LambdaResult> {
    lambda_closed_form(spec, &decompose_segments(spec))
}

/// Completion number for a spanning path: one less than for a cycle unless
/// the graph is already Hamiltonian.
pub fn delta_from_lambda(lambda: usize, already_hamiltonian: bool) -> Result<usize> {
    match (lambda, already_hamiltonian) {
        (0, true) => Ok(0),
        (_, true) | (0, false) => Err(Error::Inconsistent),
        (l, false) => Ok(l - 1),
    }
}
