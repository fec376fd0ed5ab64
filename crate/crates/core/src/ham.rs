//! Exact Hamiltonian cycle and path search with witness extraction.
//!
//! Graphs with at most [`DP_MAX_VERTICES`] vertices are decided by subset
//! dynamic programming over reachable path endpoints; larger graphs fall
//! back to depth-first backtracking with degree pruning. Both routes are
//! exact and return the same answer; witnesses are chosen deterministically.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

pub const DP_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub order: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub order: Vec<VertexId>,
}

/// Finds a spanning cycle starting at vertex 0, or proves none exists.
/// Graphs on fewer than 3 vertices have none.
pub fn hamiltonian_cycle(g: &Graph) -> Option<CycleWitness> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let order = if n <= DP_MAX_VERTICES {
        cycle_on_masks(&g.adjacency_masks())
    } else if (0..n).any(|v| g.degree_unchecked(v) < 2) || !g.is_biconnected() {
        None
    } else {
        cycle_backtrack(g)
    }?;
    Some(CycleWitness { order })
}

/// Finds a spanning path, or proves none exists. The empty graph and a
/// single vertex have trivial paths.
pub fn hamiltonian_path(g: &Graph) -> Option<PathWitness> {
    let n = g.vertex_count();
    if n <= 1 {
        return Some(PathWitness { order: (0..n).collect() });
    }
    let order = if n <= DP_MAX_VERTICES {
        path_on_masks(&g.adjacency_masks())
    } else if !g.is_connected() || (0..n).filter(|&v| g.degree_unchecked(v) == 1).count() > 2 {
        None
    } else {
        path_backtrack(g)
    }?;
    Some(PathWitness { order })
}

/// True iff `order` lists every vertex once and each cyclically consecutive
/// pair is an edge.
pub fn verify_cycle(g: &Graph, order: &[VertexId]) -> bool {
    let n = g.vertex_count();
    n >= 3 && is_permutation(n, order) && {
        order.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(order[n - 1], order[0])
    }
}

/// True iff `order` lists every vertex once and consecutive pairs are edges.
pub fn verify_path(g: &Graph, order: &[VertexId]) -> bool {
    is_permutation(g.vertex_count(), order) && order.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn is_permutation(n: usize, order: &[VertexId]) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Spanning cycle search on bitmask adjacency (`n <= DP_MAX_VERTICES`),
/// with quick rejection on minimum degree and cut vertices.
pub(crate) fn cycle_on_masks(adj: &[u64]) -> Option<Vec<VertexId>> {
    let n = adj.len();
    if n < 3 || adj.iter().any(|m| m.count_ones() < 2) {
        return None;
    }
    let all = full_mask(n);
    if (0..n).any(|cut| reachable(adj, all & !(1 << cut)) != all & !(1 << cut)) {
        return None;
    }
    cycle_dp(adj)
}

/// Spanning path search on bitmask adjacency (`1 <= n <= DP_MAX_VERTICES`).
pub(crate) fn path_on_masks(adj: &[u64]) -> Option<Vec<VertexId>> {
    let n = adj.len();
    if n == 1 {
        return Some(vec![0]);
    }
    if adj.iter().filter(|m| m.count_ones() <= 1).count() > 2 || reachable(adj, full_mask(n)) != full_mask(n) {
        return None;
    }
    path_dp(adj)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices of `within` reachable from its lowest vertex inside `within`.
fn reachable(adj: &[u64], within: u64) -> u64 {
    if within == 0 {
        return 0;
    }
    let mut seen = within & within.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

fn lowest(bits: u32) -> usize {
    bits.trailing_zeros() as usize
}

/// `reach[m]` holds the possible endpoints of a path from vertex 0 covering
/// exactly `{0} ∪ m'`, where `m = m' >> 1`.
fn cycle_dp(adj: &[u64]) -> Option<Vec<VertexId>> {
    let n = adj.len();
    let adj: Vec<u32> = adj.iter().map(|&m| m as u32).collect();
    let size = 1usize << (n - 1);
    let mut reach = vec![0u32; size];
    reach[0] = 1;
    for rest in 0..size {
        let mut ends = reach[rest];
        if ends == 0 {
            continue;
        }
        let mask = ((rest as u32) << 1) | 1;
        while ends != 0 {
            let v = lowest(ends);
            ends &= ends - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = lowest(next);
                next &= next - 1;
                reach[rest | (1 << (w - 1))] |= 1 << w;
            }
        }
    }
    let full_rest = size - 1;
    let closing = reach[full_rest] & adj[0] & !1;
    if closing == 0 {
        return None;
    }
    let mut cur = lowest(closing);
    let mut rest = full_rest;
    let mut reversed = vec![cur];
    while cur != 0 {
        rest &= !(1 << (cur - 1));
        let prev_ends = reach[rest] & adj[cur];
        cur = lowest(prev_ends);
        reversed.push(cur);
    }
    reversed.reverse();
    // orient so the smaller neighbour of 0 comes second
    if reversed[1] > reversed[n - 1] {
        reversed[1..].reverse();
    }
    Some(reversed)
}

/// `reach[m]` holds the endpoints of paths covering exactly `m`.
fn path_dp(adj: &[u64]) -> Option<Vec<VertexId>> {
    let n = adj.len();
    let adj: Vec<u32> = adj.iter().map(|&m| m as u32).collect();
    let size = 1usize << n;
    let mut reach = vec![0u32; size];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..size {
        let mut ends = reach[mask];
        while ends != 0 {
            let v = lowest(ends);
            ends &= ends - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = lowest(next);
                next &= next - 1;
                reach[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    let full = size - 1;
    if reach[full] == 0 {
        return None;
    }
    let mut cur = lowest(reach[full]);
    let mut mask = full;
    let mut order = vec![cur];
    while mask.count_ones() > 1 {
        mask &= !(1 << cur);
        cur = lowest(reach[mask] & adj[cur]);
        order.push(cur);
    }
    Some(order)
}

struct Search<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    /// Number of unvisited-or-endpoint neighbours still usable per vertex.
    free: Vec<usize>,
    order: Vec<VertexId>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            visited: vec![false; n],
            free: (0..n).map(|v| g.degree_unchecked(v)).collect(),
            order: Vec::with_capacity(n),
        }
    }

    fn visit(&mut self, v: VertexId) {
        self.visited[v] = true;
        self.order.push(v);
        for w in self.g.neighbors(v) {
            self.free[w] -= 1;
        }
    }

    fn unvisit(&mut self, v: VertexId) {
        self.visited[v] = false;
        self.order.pop();
        for w in self.g.neighbors(v) {
            self.free[w] += 1;
        }
    }

    /// Unvisited neighbours of `end` with no other way in must come next and
    /// last, so at most one may exist and only when it is the final vertex.
    fn path_dead_end(&self, end: VertexId) -> bool {
        let trapped = self
            .g
            .neighbors(end)
            .filter(|&w| !self.visited[w] && self.free[w] == 0)
            .count();
        let remaining = self.g.vertex_count() - self.order.len();
        trapped > 1 || (trapped == 1 && remaining > 1)
    }

    fn extend_cycle(&mut self) -> bool {
        let n = self.g.vertex_count();
        let end = *self.order.last().expect("non-empty");
        if self.order.len() == n {
            return self.g.has_edge(end, self.order[0]);
        }
        let next: Vec<VertexId> = self.g.neighbors(end).filter(|&w| !self.visited[w]).collect();
        for w in next {
            self.visit(w);
            let ok = !self.cycle_dead_end(w);
            if ok && self.extend_cycle() {
                return true;
            }
            self.unvisit(w);
        }
        false
    }

    /// An unvisited neighbour of `end` needs two cycle neighbours among the
    /// unvisited vertices, `end` itself and the start vertex.
    fn cycle_dead_end(&self, end: VertexId) -> bool {
        let start = self.order[0];
        self.g.neighbors(end).any(|w| {
            !self.visited[w] && {
                let back_to_start = usize::from(self.g.has_edge(w, start));
                self.free[w] + 1 + back_to_start < 2
            }
        })
    }

    fn extend_path(&mut self) -> bool {
        let n = self.g.vertex_count();
        if self.order.len() == n {
            return true;
        }
        let end = *self.order.last().expect("non-empty");
        let next: Vec<VertexId> = self.g.neighbors(end).filter(|&w| !self.visited[w]).collect();
        for w in next {
            self.visit(w);
            if !self.path_dead_end(w) && self.extend_path() {
                return true;
            }
            self.unvisit(w);
        }
        false
    }
}

fn cycle_backtrack(g: &Graph) -> Option<Vec<VertexId>> {
    let mut s = Search::new(g);
    s.visit(0);
    s.extend_cycle().then_some(s.order)
}

fn path_backtrack(g: &Graph) -> Option<Vec<VertexId>> {
    let mut s = Search::new(g);
    for start in 0..g.vertex_count() {
        s.visit(start);
        if s.extend_path() {
            return Some(s.order);
        }
        s.unvisit(start);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caterpillar::{build_graph, CaterpillarSpec};
    use proptest::prelude::*;

    /// Reference: try every vertex ordering that starts at 0.
    fn brute_cycle(g: &Graph) -> bool {
        let n = g.vertex_count();
        if n < 3 {
            return false;
        }
        let mut rest: Vec<VertexId> = (1..n).collect();
        permute(&mut rest, 0, &mut |p| {
            let mut order = vec![0];
            order.extend_from_slice(p);
            verify_cycle(g, &order)
        })
    }

    fn brute_path(g: &Graph) -> bool {
        let mut all: Vec<VertexId> = (0..g.vertex_count()).collect();
        permute(&mut all, 0, &mut |p| verify_path(g, p))
    }

    fn permute(xs: &mut Vec<VertexId>, k: usize, f: &mut impl FnMut(&[VertexId]) -> bool) -> bool {
        if k == xs.len() {
            return f(xs);
        }
        for i in k..xs.len() {
            xs.swap(k, i);
            if permute(xs, k + 1, f) {
                xs.swap(k, i);
                return true;
            }
            xs.swap(k, i);
        }
        false
    }

    #[test]
    fn cycle_examples() {
        let w = hamiltonian_cycle(&Graph::cycle(5)).unwrap();
        assert_eq!(w.order, vec![0, 1, 2, 3, 4]);
        assert!(hamiltonian_cycle(&Graph::star(3)).is_none());
        assert!(hamiltonian_cycle(&Graph::complete(2)).is_none());

        let (mut g, lab) = build_graph(&CaterpillarSpec::new(vec![1, 1]).unwrap());
        g.add_edge(lab.leaf_groups[0][0], lab.leaf_groups[1][0]).unwrap();
        let w = hamiltonian_cycle(&g).unwrap();
        assert_eq!(w.order.len(), 4);
        assert!(verify_cycle(&g, &w.order));
    }

    #[test]
    fn path_examples() {
        assert_eq!(hamiltonian_path(&Graph::path(4)).unwrap().order.len(), 4);
        assert!(verify_path(&Graph::path(4), &hamiltonian_path(&Graph::path(4)).unwrap().order));
        assert!(hamiltonian_path(&Graph::star(3)).is_none());
        assert!(hamiltonian_path(&Graph::star(2)).is_some());
        assert_eq!(hamiltonian_path(&Graph::new(1)).unwrap().order, vec![0]);
        assert!(hamiltonian_path(&Graph::new(2)).is_none());
    }

    #[test]
    fn verify_examples() {
        let c4 = Graph::cycle(4);
        assert!(verify_cycle(&c4, &[0, 1, 2, 3]));
        assert!(!verify_cycle(&c4, &[0, 2, 1, 3]));
        assert!(!verify_cycle(&c4, &[0, 1, 2]));
        assert!(!verify_cycle(&c4, &[0, 1, 2, 9]));
        assert!(!verify_cycle(&c4, &[0, 1, 1, 3]));

        let p4 = Graph::path(4);
        assert!(verify_path(&p4, &[0, 1, 2, 3]));
        assert!(verify_path(&p4, &[3, 2, 1, 0]));
        assert!(!verify_path(&p4, &[0, 2, 1, 3]));
    }

    #[test]
    fn backtracking_on_large_graphs() {
        let c = Graph::cycle(30);
        let w = hamiltonian_cycle(&c).unwrap();
        assert!(verify_cycle(&c, &w.order));
        assert!(hamiltonian_path(&Graph::path(30)).is_some());

        // two 15-cycles joined by one bridge: connected, no spanning cycle
        let mut g = Graph::new(30);
        for i in 0..15 {
            g.add_edge(i, (i + 1) % 15).unwrap();
            g.add_edge(15 + i, 15 + (i + 1) % 15).unwrap();
        }
        g.add_edge(0, 15).unwrap();
        assert!(hamiltonian_cycle(&g).is_none());
        let p = hamiltonian_path(&g).unwrap();
        assert!(verify_path(&g, &p.order));

        // a spine of 26 with a leaf at the end is a path; a middle leaf is not
        let (t, _) = build_graph(&CaterpillarSpec::new([vec![0; 25], vec![1]].concat()).unwrap());
        assert!(hamiltonian_path(&t).is_some());
        let (t, _) = build_graph(&CaterpillarSpec::new([vec![0; 12], vec![1], vec![0; 12]].concat()).unwrap());
        assert!(hamiltonian_path(&t).is_none());
    }

    #[test]
    fn backtracking_matches_dp_on_dense_graphs() {
        // circulant graphs C_n(1, 3) and K_{4,5}
        for n in [9usize, 12, 14] {
            let mut g = Graph::cycle(n);
            for i in 0..n {
                let _ = g.add_edge(i, (i + 3) % n);
            }
            let dp = cycle_dp(&g.adjacency_masks()).unwrap();
            let bt = cycle_backtrack(&g).unwrap();
            assert!(verify_cycle(&g, &dp) && verify_cycle(&g, &bt));
        }
        let mut k45 = Graph::new(9);
        for a in 0..4 {
            for b in 4..9 {
                k45.add_edge(a, b).unwrap();
            }
        }
        assert!(cycle_dp(&k45.adjacency_masks()).is_none());
        assert!(cycle_backtrack(&k45).is_none());
        assert!(path_dp(&k45.adjacency_masks()).is_some());
        assert!(path_backtrack(&k45).is_some());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn agrees_with_permutation_enumeration(g in arb_graph(8)) {
            let cycle = hamiltonian_cycle(&g);
            prop_assert_eq!(cycle.is_some(), brute_cycle(&g));
            if let Some(w) = &cycle {
                prop_assert!(verify_cycle(&g, &w.order));
                prop_assert!(hamiltonian_path(&g).is_some());
            }
            let path = hamiltonian_path(&g);
            prop_assert_eq!(path.is_some(), brute_path(&g));
            if let Some(w) = &path {
                prop_assert!(verify_path(&g, &w.order));
            }
            prop_assert_eq!(cycle_backtrack(&g).is_some() && g.vertex_count() >= 3, cycle.is_some());
            prop_assert_eq!(path_backtrack(&g).is_some(), path.is_some());
        }

        #[test]
        fn deterministic(g in arb_graph(10)) {
            prop_assert_eq!(hamiltonian_cycle(&g), hamiltonian_cycle(&g.clone()));
            prop_assert_eq!(hamiltonian_path(&g), hamiltonian_path(&g.clone()));
        }
    }
}
