//! Undirected simple graphs with a deterministic, sorted edge set.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::GraphError;

/// 0-based vertex index.
pub type VertexId = usize;

/// An undirected edge stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Builds a normalized edge. Returns `None` for loops.
    pub fn new(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> VertexId {
        self.0
    }

    pub fn hi(&self) -> VertexId {
        self.1
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Undirected simple graph: vertex count plus a sorted edge set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
    adjacency: Vec<BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
            adjacency: vec![BTreeSet::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and duplicates.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert(n - 1, 0);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// Star with center 0 and `leaves` outer vertices.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    /// Adds `{u, v}`. Returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u >= self.vertex_count || v >= self.vertex_count || u == v {
            return Err(GraphError::InvalidEdge(u, v));
        }
        Ok(self.insert(u, v))
    }

    fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        let e = Edge::new(u, v).expect("loop");
        if self.edges.insert(e) {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
            true
        } else {
            false
        }
    }

    /// Returns a copy with `extra` added. Fails if any extra edge is invalid
    /// or already present.
    pub fn augmented<'a, I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for e in extra {
            if !g.add_edge(e.lo(), e.hi())? {
                return Err(GraphError::DuplicateEdge(e.lo(), e.hi()));
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        Edge::new(u, v).is_some_and(|e| self.edges.contains(&e))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(BTreeSet::len)
            .ok_or(GraphError::InvalidVertex(v))
    }

    pub(crate) fn degree_unchecked(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Degree-1 vertices, ascending.
    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.vertex_count)
            .filter(|&v| self.adjacency[v].len() == 1)
            .collect()
    }

    /// All vertex pairs not joined by an edge, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if !self.adjacency[u].contains(&v) {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        self.component_size_without(0, None) == self.vertex_count
    }

    /// Number of vertices reachable from `start` when `removed` is deleted.
    fn component_size_without(&self, start: VertexId, removed: Option<VertexId>) -> usize {
        let mut seen = vec![false; self.vertex_count];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// True if the graph is connected and stays connected after deleting any
    /// single vertex. Graphs on fewer than 3 vertices are not biconnected.
    pub fn is_biconnected(&self) -> bool {
        let n = self.vertex_count;
        if n < 3 || !self.is_connected() {
            return false;
        }
        (0..n).all(|r| {
            let start = if r == 0 { 1 } else { 0 };
            self.component_size_without(start, Some(r)) == n - 1
        })
    }

    /// Adjacency as bitmasks; requires `vertex_count <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64, "bitmask adjacency needs <= 64 vertices");
        self.adjacency
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_and_isolated() {
        let g = Graph::new(0);
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
        let g = Graph::new(3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.degree(2).unwrap(), 0);
    }

    #[test]
    fn path_by_hand() {
        let mut g = Graph::new(5);
        for i in 0..4 {
            assert!(g.add_edge(i, i + 1).unwrap());
        }
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, Graph::path(5));
    }

    #[test]
    fn add_edge_cases() {
        let mut g = Graph::path(3);
        assert!(g.add_edge(0, 2).unwrap());
        assert_eq!(g, Graph::cycle(3));
        assert_eq!(g.add_edge(1, 1), Err(GraphError::InvalidEdge(1, 1)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::InvalidEdge(0, 3)));
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn degrees_and_leaves() {
        let s = Graph::star(4);
        assert_eq!(s.degree(0).unwrap(), 4);
        assert_eq!(s.degree(3).unwrap(), 1);
        assert_eq!(s.leaves(), vec![1, 2, 3, 4]);
        assert_eq!(s.degree(5), Err(GraphError::InvalidVertex(5)));
        assert!(Graph::cycle(5).leaves().is_empty());
        assert_eq!(Graph::path(4).leaves(), vec![0, 3]);
    }

    #[test]
    fn non_edge_lists() {
        assert!(Graph::complete(3).non_edges().is_empty());
        assert_eq!(Graph::path(3).non_edges(), vec![Edge(0, 2)]);
        assert_eq!(
            Graph::new(3).non_edges(),
            vec![Edge(0, 1), Edge(0, 2), Edge(1, 2)]
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(Graph::cycle(5).is_biconnected());
        assert!(!Graph::path(5).is_biconnected());
        assert!(!Graph::star(3).is_biconnected());
    }

    #[test]
    fn from_edges_rejects_duplicates() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..20).prop_map(move |pairs| {
                let mut g = Graph::new(n);
                for (u, v) in pairs {
                    let _ = g.add_edge(u, v);
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn handshake_and_complement(g in arb_graph()) {
            let n = g.vertex_count();
            let degree_sum: usize = (0..n).map(|v| g.degree(v).unwrap()).sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
            prop_assert_eq!(g.edge_count() + g.non_edges().len(), n * n.saturating_sub(1) / 2);
            let leaves: Vec<_> = (0..n).filter(|&v| g.degree(v).unwrap() == 1).collect();
            prop_assert_eq!(g.leaves(), leaves);
        }

        #[test]
        fn edge_normalization(u in 0usize..20, v in 0usize..20) {
            prop_assume!(u != v);
            prop_assert_eq!(Edge::new(u, v), Edge::new(v, u));
            let mut g = Graph::new(20);
            g.add_edge(u, v).unwrap();
            prop_assert!(g.has_edge(v, u));
            prop_assert!(!g.add_edge(v, u).unwrap());
        }
    }
}
