//! Caterpillar instances: a spine path `v_1..v_n` where spine vertex `v_i`
//! carries `l(v_i)` pendant leaves.
//!
//! Vertex labeling is fixed: spine vertices are `0..n` in spine order, then
//! leaves are numbered consecutively from `n`, grouped by spine vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Per-spine-vertex leaf counts. Always has at least one spine vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct CaterpillarSpec {
    leaves: Vec<usize>,
}

#[derive(Deserialize)]
struct RawSpec {
    leaves: Vec<usize>,
}

impl TryFrom<RawSpec> for CaterpillarSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        CaterpillarSpec::new(raw.leaves)
    }
}

impl CaterpillarSpec {
    pub fn new(leaves: Vec<usize>) -> Result<Self> {
        if leaves.is_empty() {
            return Err(Error::EmptySpine);
        }
        Ok(CaterpillarSpec { leaves })
    }

    /// `k`-regular caterpillar on `n` spine vertices.
    pub fn regular(n: usize, k: usize) -> Result<Self> {
        CaterpillarSpec::new(vec![k; n])
    }

    pub fn leaf_counts(&self) -> &[usize] {
        &self.leaves
    }

    pub fn spine_len(&self) -> usize {
        self.leaves.len()
    }

    /// Total number of pendant leaves, `Σ l(v_i)`.
    pub fn leaf_total(&self) -> usize {
        self.leaves.iter().sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.spine_len() + self.leaf_total()
    }

    /// Canonical JSON form, e.g. `{"leaves":[1,2,1]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// True if `l(v_t) = 1` and both spine neighbours exist with no leaves.
    pub fn is_deserted_pendant(&self, t: usize) -> bool {
        let l = &self.leaves;
        t > 0 && t + 1 < l.len() && l[t] == 1 && l[t - 1] == 0 && l[t + 1] == 0
    }
}

impl fmt::Display for CaterpillarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.leaves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Maps caterpillar roles onto graph vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    pub spine: Vec<VertexId>,
    pub leaf_groups: Vec<Vec<VertexId>>,
}

/// Builds the caterpillar graph and its labeling.
pub fn build_graph(spec: &CaterpillarSpec) -> (Graph, VertexLabeling) {
    let n = spec.spine_len();
    let mut g = Graph::new(spec.vertex_count());
    for i in 1..n {
        g.add_edge(i - 1, i).expect("spine edge");
    }
    let mut next = n;
    let mut leaf_groups = Vec::with_capacity(n);
    for (i, &l) in spec.leaf_counts().iter().enumerate() {
        let group: Vec<VertexId> = (next..next + l).collect();
        for &u in &group {
            g.add_edge(i, u).expect("pendant edge");
        }
        next += l;
        leaf_groups.push(group);
    }
    let labeling = VertexLabeling {
        spine: (0..n).collect(),
        leaf_groups,
    };
    (g, labeling)
}

/// Which closed form applies to a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    /// Every spine vertex has exactly one leaf.
    Regular1,
    /// Every spine vertex has exactly two leaves.
    Regular2,
    /// Every spine vertex has exactly `k >= 3` leaves.
    RegularK(usize),
    /// Every spine vertex has at least three leaves, not all equal.
    AllAtLeastThree,
    /// Every spine vertex has no leaves or at least two.
    ZeroOrAtLeastTwo,
    /// Every single-leaf spine vertex is a deserted pendant.
    DesertedSegments,
    Unsupported,
}

impl ClassLabel {
    pub fn is_supported(self) -> bool {
        self != ClassLabel::Unsupported
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Regular1 => write!(f, "Regular1"),
            ClassLabel::Regular2 => write!(f, "Regular2"),
            ClassLabel::RegularK(k) => write!(f, "RegularK({k})"),
            ClassLabel::AllAtLeastThree => write!(f, "AllAtLeastThree"),
            ClassLabel::ZeroOrAtLeastTwo => write!(f, "ZeroOrAtLeastTwo"),
            ClassLabel::DesertedSegments => write!(f, "DesertedSegments"),
            ClassLabel::Unsupported => write!(f, "Unsupported"),
        }
    }
}

/// Assigns the most specific matching class.
pub fn classify(spec: &CaterpillarSpec) -> ClassLabel {
    let l = spec.leaf_counts();
    let first = l[0];
    if l.iter().all(|&x| x == first) {
        match first {
            1 => return ClassLabel::Regular1,
            2 => return ClassLabel::Regular2,
            k if k >= 3 => return ClassLabel::RegularK(k),
            _ => {}
        }
    }
    if l.iter().all(|&x| x >= 3) {
        return ClassLabel::AllAtLeastThree;
    }
    if l.iter().all(|&x| x != 1) {
        return ClassLabel::ZeroOrAtLeastTwo;
    }
    let ones_deserted = (0..l.len()).all(|t| l[t] != 1 || spec.is_deserted_pendant(t));
    if ones_deserted {
        return ClassLabel::DesertedSegments;
    }
    ClassLabel::Unsupported
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    /// No vertex in the run has a leaf.
    ZeroLeaf,
    /// Some vertex in the run has exactly one leaf.
    ZeroOne,
}

/// A maximal run of spine vertices with at most one leaf each (inclusive
/// 0-based bounds).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub kind: SegmentKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDecomposition {
    /// `P(0)`: number of [`SegmentKind::ZeroLeaf`] segments.
    pub zero_leaf_segment_count: usize,
    /// `τ`: number of deserted pendants.
    pub deserted_pendant_count: usize,
    /// `γ`: number of [`SegmentKind::ZeroOne`] segments whose single-leaf
    /// vertices are all deserted pendants.
    pub deserted_segment_count: usize,
    /// Spine indices with `l >= 2`.
    pub heavy_vertices: Vec<usize>,
    pub segments: Vec<Segment>,
}

/// Splits the spine into heavy vertices and maximal runs of light ones.
/// Runs touching a spine end are segments too.
pub fn decompose_segments(spec: &CaterpillarSpec) -> SegmentDecomposition {
    let l = spec.leaf_counts();
    let n = l.len();
    let heavy_vertices: Vec<usize> = (0..n).filter(|&i| l[i] >= 2).collect();

    let mut segments = Vec::new();
    let mut i = 0;
    while i < n {
        if l[i] >= 2 {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < n && l[i + 1] <= 1 {
            i += 1;
        }
        let kind = if l[start..=i].iter().all(|&x| x == 0) {
            SegmentKind::ZeroLeaf
        } else {
            SegmentKind::ZeroOne
        };
        segments.push(Segment { start, end: i, kind });
        i += 1;
    }

    let deserted_pendant_count = (0..n).filter(|&t| spec.is_deserted_pendant(t)).count();
    let zero_leaf_segment_count = segments
        .iter()
        .filter(|s| s.kind == SegmentKind::ZeroLeaf)
        .count();
    let deserted_segment_count = segments
        .iter()
        .filter(|s| {
            s.kind == SegmentKind::ZeroOne
                && (s.start..=s.end).all(|t| l[t] != 1 || spec.is_deserted_pendant(t))
        })
        .count();

    SegmentDecomposition {
        zero_leaf_segment_count,
        deserted_pendant_count,
        deserted_segment_count,
        heavy_vertices,
        segments,
    }
}
