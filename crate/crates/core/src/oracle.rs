//! Exact minimum augmentation by exhaustive search.
//!
//! For `k = L, L+1, ...` every `k`-subset of the graph's non-edges is tried
//! in lexicographic order until the augmented graph has a spanning cycle
//! (or path). The first hit is both minimum and lexicographically least.
//!
//! At the minimum level every added edge lies on the witness, so only
//! subsets forming vertex-disjoint paths are enumerated; any working subset
//! at a lower level would contain such a subset, so levels below the minimum
//! are still refuted exhaustively. Subsets are also cut when the remaining
//! picks cannot lift every vertex to the degree the target needs.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::ham::{self, CycleWitness, PathWitness, DP_MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Cycle,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Serial,
    /// Fans out over the first chosen edge; the result is identical to
    /// serial search.
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Cycle(CycleWitness),
    Path(PathWitness),
}

impl Witness {
    pub fn order(&self) -> &[VertexId] {
        match self {
            Witness::Cycle(w) => &w.order,
            Witness::Path(w) => &w.order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub minimum: usize,
    /// Lexicographically least optimal edge set, sorted.
    pub optimal_edges: Vec<Edge>,
    pub witness: Witness,
    /// Search nodes visited; diagnostic only, depends on `Mode`.
    pub nodes_explored: u64,
}

/// Minimum number of new edges that make `g` Hamiltonian.
pub fn min_cycle_augmentation(g: &Graph, budget: usize) -> Result<OracleResult> {
    min_augmentation(g, budget, Target::Cycle, Mode::Serial)
}

/// Minimum number of new edges that give `g` a spanning path.
pub fn min_path_augmentation(g: &Graph, budget: usize) -> Result<OracleResult> {
    min_augmentation(g, budget, Target::Path, Mode::Serial)
}

/// True iff `g` already has a spanning cycle.
pub fn already_hamiltonian(g: &Graph) -> bool {
    ham::hamiltonian_cycle(g).is_some()
}

/// First search level for the cycle target: every vertex needs degree two,
/// and each new edge raises two degrees. This dominates `⌈leaves/2⌉`.
pub fn cycle_lower_bound(g: &Graph) -> usize {
    let deficit: usize = (0..g.vertex_count())
        .map(|v| 2usize.saturating_sub(g.degree_unchecked(v)))
        .sum();
    deficit.div_ceil(2).max(g.leaves().len().div_ceil(2))
}

pub fn min_augmentation(g: &Graph, budget: usize, target: Target, mode: Mode) -> Result<OracleResult> {
    let n = g.vertex_count();
    if target == Target::Cycle && n < 3 {
        return Err(Error::TooSmallForCycle(n));
    }
    assert!(n <= 64, "oracle supports at most 64 vertices");
    if target == Target::Path && n <= 1 {
        return Ok(OracleResult {
            minimum: 0,
            optimal_edges: Vec::new(),
            witness: Witness::Path(PathWitness { order: (0..n).collect() }),
            nodes_explored: 0,
        });
    }
    let start = match target {
        Target::Cycle => cycle_lower_bound(g),
        Target::Path => 0,
    };
    let search = Search::new(g, target);
    let mut nodes = 0;
    for k in start..=budget.min(search.candidates.len()) {
        let (hit, explored) = match mode {
            Mode::Serial => search.level_serial(k),
            Mode::Parallel => search.level_parallel(k),
        };
        nodes += explored;
        if let Some((chosen, order)) = hit {
            let optimal_edges = chosen.iter().map(|&i| search.candidates[i]).collect();
            let witness = match target {
                Target::Cycle => Witness::Cycle(CycleWitness { order }),
                Target::Path => Witness::Path(PathWitness { order }),
            };
            return Ok(OracleResult {
                minimum: k,
                optimal_edges,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    Err(Error::BudgetExceeded(budget))
}

struct Search<'a> {
    graph: &'a Graph,
    target: Target,
    n: usize,
    base_adj: Vec<u64>,
    base_deg: Vec<usize>,
    candidates: Vec<Edge>,
    /// Candidate indices incident to each vertex, ascending.
    incident: Vec<Vec<usize>>,
}

/// Mutable per-branch state.
#[derive(Clone)]
struct State {
    chosen: Vec<usize>,
    added_deg: Vec<u8>,
    /// For an endpoint of a path of added edges, the other endpoint.
    other_end: Vec<usize>,
    nodes: u64,
}

type Hit = (Vec<usize>, Vec<VertexId>);

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, target: Target) -> Self {
        let n = graph.vertex_count();
        let candidates = graph.non_edges();
        let mut incident = vec![Vec::new(); n];
        for (i, e) in candidates.iter().enumerate() {
            incident[e.lo()].push(i);
            incident[e.hi()].push(i);
        }
        Search {
            graph,
            target,
            n,
            base_adj: graph.adjacency_masks(),
            base_deg: (0..n).map(|v| graph.degree_unchecked(v)).collect(),
            candidates,
            incident,
        }
    }

    fn fresh_state(&self, k: usize) -> State {
        State {
            chosen: Vec::with_capacity(k),
            added_deg: vec![0; self.n],
            other_end: (0..self.n).collect(),
            nodes: 0,
        }
    }

    fn level_serial(&self, k: usize) -> (Option<Hit>, u64) {
        let mut st = self.fresh_state(k);
        let hit = self.dfs(&mut st, 0, k);
        (hit, st.nodes)
    }

    fn level_parallel(&self, k: usize) -> (Option<Hit>, u64) {
        if k == 0 {
            return self.level_serial(0);
        }
        let nodes = AtomicU64::new(0);
        let hit = (0..self.candidates.len()).into_par_iter().find_map_first(|first| {
            let mut st = self.fresh_state(k);
            st.nodes += 1;
            let hit = self.push(&mut st, first, k).and_then(|_| {
                if self.feasible(&st, first + 1, k) {
                    self.dfs(&mut st, first + 1, k)
                } else {
                    None
                }
            });
            nodes.fetch_add(st.nodes, Ordering::Relaxed);
            hit
        });
        (hit, nodes.into_inner())
    }

    fn dfs(&self, st: &mut State, from: usize, k: usize) -> Option<Hit> {
        st.nodes += 1;
        if st.chosen.len() == k {
            return self.check(st);
        }
        let remaining = k - st.chosen.len();
        let last = self.candidates.len() + 1 - remaining;
        for i in from..last {
            let Some(undo) = self.push(st, i, k) else {
                continue;
            };
            if self.feasible(st, i + 1, k) {
                if let Some(hit) = self.dfs(st, i + 1, k) {
                    return Some(hit);
                }
            }
            self.pop(st, i, undo);
        }
        None
    }

    /// Adds candidate `i` if the chosen edges stay a set of disjoint paths.
    /// Returns the overwritten `other_end` entries for [`Search::pop`].
    fn push(&self, st: &mut State, i: usize, k: usize) -> Option<(usize, usize, usize, usize)> {
        let (a, b) = self.candidates[i].endpoints();
        if st.added_deg[a] >= 2 || st.added_deg[b] >= 2 {
            return None;
        }
        if st.other_end[a] == b {
            // closes a cycle of new edges; only a spanning one can be a witness
            let spanning = self.target == Target::Cycle && st.chosen.len() + 1 == self.n && k == self.n;
            if !spanning {
                return None;
            }
        }
        let (ea, eb) = (st.other_end[a], st.other_end[b]);
        let undo = (ea, st.other_end[ea], eb, st.other_end[eb]);
        st.other_end[ea] = eb;
        st.other_end[eb] = ea;
        st.added_deg[a] += 1;
        st.added_deg[b] += 1;
        st.chosen.push(i);
        Some(undo)
    }

    fn pop(&self, st: &mut State, i: usize, undo: (usize, usize, usize, usize)) {
        let (a, b) = self.candidates[i].endpoints();
        st.chosen.pop();
        st.added_deg[a] -= 1;
        st.added_deg[b] -= 1;
        let (ea, old_a, eb, old_b) = undo;
        st.other_end[eb] = old_b;
        st.other_end[ea] = old_a;
    }

    /// Can `k - chosen` more picks from candidates `from..` still give every
    /// vertex the degree the target needs?
    fn feasible(&self, st: &State, from: usize, k: usize) -> bool {
        let remaining = k - st.chosen.len();
        let mut total_short = 0;
        for v in 0..self.n {
            let deg = self.base_deg[v] + usize::from(st.added_deg[v]);
            let short = 2usize.saturating_sub(deg);
            if short == 0 {
                continue;
            }
            total_short += short;
            let hard = match self.target {
                Target::Cycle => short,
                Target::Path => usize::from(deg == 0),
            };
            if hard > 0 {
                let inc = &self.incident[v];
                let available = inc.len() - inc.partition_point(|&j| j < from);
                if available < hard {
                    return false;
                }
            }
        }
        match self.target {
            Target::Cycle => total_short <= 2 * remaining,
            // two path endpoints may stay at degree one
            Target::Path => total_short.saturating_sub(2) <= 2 * remaining,
        }
    }

    fn check(&self, st: &State) -> Option<Hit> {
        let mut adj = self.base_adj.clone();
        for &i in &st.chosen {
            let (a, b) = self.candidates[i].endpoints();
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let order = if self.n <= DP_MAX_VERTICES {
            match self.target {
                Target::Cycle => ham::cycle_on_masks(&adj),
                Target::Path => ham::path_on_masks(&adj),
            }
        } else {
            let g = self
                .graph
                .augmented(st.chosen.iter().map(|&i| &self.candidates[i]))
                .expect("candidates are non-edges");
            match self.target {
                Target::Cycle => ham::hamiltonian_cycle(&g).map(|w| w.order),
                Target::Path => ham::hamiltonian_path(&g).map(|w| w.order),
            }
        }?;
        Some((st.chosen.clone(), order))
    }
}
