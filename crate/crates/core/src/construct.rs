//! Explicit completing edge sets with witness spanning cycles.
//!
//! Every construction builds a cyclic vertex order in which each claw is
//! traversed as `u(1) -> v -> u(2) -> ... -> u(l)` and each light spine
//! segment is walked along the spine, stepping out to a deserted pendant
//! and back in to the next spine vertex. The added edges are exactly the
//! consecutive pairs of that order that are not already in the graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caterpillar::{build_graph, classify, CaterpillarSpec, ClassLabel, VertexLabeling};
use crate::closed_form::lambda;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::ham::verify_cycle;

/// Added edges (sorted, disjoint from the graph) plus a spanning cycle of the
/// augmented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationPlan {
    pub added_edges: Vec<Edge>,
    pub witness_cycle: Vec<VertexId>,
}

#[derive(Serialize, Deserialize)]
struct PlanJson {
    added_edges: Vec<[VertexId; 2]>,
    witness_cycle: Vec<VertexId>,
}

impl AugmentationPlan {
    /// Derives the added edges from a cyclic order over `g`.
    pub fn from_cycle(g: &Graph, order: Vec<VertexId>) -> Self {
        let n = order.len();
        let added: BTreeSet<Edge> = (0..n)
            .filter_map(|i| {
                let (a, b) = (order[i], order[(i + 1) % n]);
                (!g.has_edge(a, b)).then(|| Edge::new(a, b)).flatten()
            })
            .collect();
        AugmentationPlan {
            added_edges: added.into_iter().collect(),
            witness_cycle: order,
        }
    }

    pub fn size(&self) -> usize {
        self.added_edges.len()
    }

    /// `{"added_edges":[[u,v],...],"witness_cycle":[...]}` with sorted edges.
    pub fn to_json(&self) -> String {
        let raw = PlanJson {
            added_edges: self.added_edges.iter().map(|e| [e.lo(), e.hi()]).collect(),
            witness_cycle: self.witness_cycle.clone(),
        };
        serde_json::to_string(&raw).expect("plan serialization")
    }

    /// Parses a plan. Edges are normalized and sorted; loops are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PlanJson = serde_json::from_str(text)?;
        let mut added_edges = raw
            .added_edges
            .iter()
            .map(|&[u, v]| Edge::new(u, v).ok_or_else(|| Error::Parse(format!("loop edge [{u},{v}] in plan"))))
            .collect::<Result<Vec<_>>>()?;
        added_edges.sort_unstable();
        Ok(AugmentationPlan {
            added_edges,
            witness_cycle: raw.witness_cycle,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanViolation {
    EdgeOutOfRange(Edge),
    DuplicateAddedEdge(Edge),
    EdgeAlreadyPresent(Edge),
    BadWitness,
}

impl fmt::Display for PlanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanViolation::EdgeOutOfRange(e) => write!(f, "added edge {e} out of range"),
            PlanViolation::DuplicateAddedEdge(e) => write!(f, "added edge {e} listed twice"),
            PlanViolation::EdgeAlreadyPresent(e) => write!(f, "added edge {e} already in graph"),
            PlanViolation::BadWitness => write!(f, "witness is not a spanning cycle of the augmented graph"),
        }
    }
}

/// Checks a plan against a graph: added edges must be new, distinct and in
/// range, and the witness must be a spanning cycle of `g` plus those edges.
pub fn verify_plan(g: &Graph, plan: &AugmentationPlan) -> std::result::Result<(), PlanViolation> {
    let mut augmented = g.clone();
    for &e in &plan.added_edges {
        if e.hi() >= g.vertex_count() {
            return Err(PlanViolation::EdgeOutOfRange(e));
        }
        if g.has_edge(e.lo(), e.hi()) {
            return Err(PlanViolation::EdgeAlreadyPresent(e));
        }
        if !augmented.add_edge(e.lo(), e.hi()).expect("in range") {
            return Err(PlanViolation::DuplicateAddedEdge(e));
        }
    }
    if verify_cycle(&augmented, &plan.witness_cycle) {
        Ok(())
    } else {
        Err(PlanViolation::BadWitness)
    }
}

/// Builds and validates a plan for any supported spec.
pub fn construct(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    if spec.vertex_count() < 3 {
        return Err(Error::TooSmallForCycle(spec.vertex_count()));
    }
    match classify(spec) {
        ClassLabel::Regular1 => construct_regular1(spec),
        ClassLabel::Regular2 => construct_regular2(spec),
        ClassLabel::RegularK(_) => construct_regular_k(spec),
        ClassLabel::AllAtLeastThree => construct_all_atleast3(spec),
        ClassLabel::ZeroOrAtLeastTwo => construct_zero_or_atleast2(spec),
        ClassLabel::DesertedSegments => construct_deserted(spec),
        ClassLabel::Unsupported => Err(unsupported(spec)),
    }
}

fn unsupported(spec: &CaterpillarSpec) -> Error {
    Error::Unsupported(spec.leaf_counts().to_vec())
}

fn require(spec: &CaterpillarSpec, ok: impl Fn(&[usize]) -> bool) -> Result<()> {
    if spec.vertex_count() < 3 {
        return Err(Error::TooSmallForCycle(spec.vertex_count()));
    }
    if ok(spec.leaf_counts()) {
        Ok(())
    } else {
        Err(unsupported(spec))
    }
}

/// One leaf per spine vertex. Even spines pair `(v_1,v_2), (v_3,v_4), ...`
/// joined leaf to leaf and closed by `u_n u_1`; odd spines join
/// `u_1u_2, u_3u_4, ..., u_{n-2}u_{n-1}` and close with `u_n v_1`.
pub fn construct_regular1(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| l.iter().all(|&x| x == 1))?;
    let (g, lab) = build_graph(spec);
    let n = spec.spine_len();
    let leaf = |i: usize| lab.leaf_groups[i][0];
    let mut order = Vec::with_capacity(2 * n);
    if n.is_multiple_of(2) {
        for i in (0..n).step_by(2) {
            order.extend([leaf(i), i, i + 1, leaf(i + 1)]);
        }
    } else {
        for i in (0..n - 1).step_by(2) {
            order.extend([i, leaf(i), leaf(i + 1), i + 1]);
        }
        order.extend([n - 1, leaf(n - 1)]);
    }
    finish(spec, &g, order)
}

/// Two leaves per spine vertex: `u_i(1) -> v_i -> u_i(2)`, then on to the
/// next claw, closing with `u_n(2) u_1(1)`.
pub fn construct_regular2(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| l.iter().all(|&x| x == 2))?;
    claws_in_spine_order(spec)
}

/// `k >= 3` leaves per spine vertex.
pub fn construct_regular_k(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| l[0] >= 3 && l.iter().all(|&x| x == l[0]))?;
    claws_in_spine_order(spec)
}

/// At least three leaves per spine vertex: `Σ(l-2)` edges inside claws plus
/// one link per claw.
pub fn construct_all_atleast3(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| l.iter().all(|&x| x >= 3))?;
    claws_in_spine_order(spec)
}

fn claws_in_spine_order(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    let (g, lab) = build_graph(spec);
    let mut order = Vec::with_capacity(g.vertex_count());
    for i in 0..spec.spine_len() {
        push_claw(&mut order, &lab, i);
    }
    finish(spec, &g, order)
}

fn push_claw(order: &mut Vec<VertexId>, lab: &VertexLabeling, i: usize) {
    let leaves = &lab.leaf_groups[i];
    order.push(leaves[0]);
    order.push(lab.spine[i]);
    order.extend_from_slice(&leaves[1..]);
}

/// Spine vertices carry no leaf or at least two. Each 0-leaf segment is
/// entered from the previous claw's last leaf and left towards the next
/// claw's first leaf.
pub fn construct_zero_or_atleast2(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| l.iter().all(|&x| x != 1))?;
    blocks_in_spine_order(spec)
}

/// Every single-leaf spine vertex is a deserted pendant: the walk along its
/// segment detours through the pendant and re-enters the spine at the next
/// vertex.
pub fn construct_deserted(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    require(spec, |l| {
        l.contains(&1) && (0..l.len()).all(|t| l[t] != 1 || spec.is_deserted_pendant(t))
    })?;
    blocks_in_spine_order(spec)
}

fn blocks_in_spine_order(spec: &CaterpillarSpec) -> Result<AugmentationPlan> {
    let (g, lab) = build_graph(spec);
    let l = spec.leaf_counts();
    let mut order = Vec::with_capacity(g.vertex_count());
    for (i, &li) in l.iter().enumerate() {
        if li >= 2 {
            push_claw(&mut order, &lab, i);
        } else {
            order.push(lab.spine[i]);
            order.extend_from_slice(&lab.leaf_groups[i]);
        }
    }
    finish(spec, &g, order)
}

fn finish(spec: &CaterpillarSpec, g: &Graph, order: Vec<VertexId>) -> Result<AugmentationPlan> {
    let plan = AugmentationPlan::from_cycle(g, order);
    verify_plan(g, &plan).map_err(|v| Error::InvalidPlan(v.to_string()))?;
    let expected = lambda(spec)?.value;
    if plan.size() != expected {
        return Err(Error::InvalidPlan(format!(
            "{} edges added, closed form gives {expected}",
            plan.size()
        )));
    }
    Ok(plan)
}
