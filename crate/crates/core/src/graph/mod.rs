//! Simple undirected graphs on at most 63 vertices, stored as adjacency
//! bit rows.

mod chordal;
mod io;
mod series_parallel;
mod spec;

pub use chordal::{clique_tree, is_chordal, maximal_cliques, CliqueTree};
pub use io::{parse_graph, serialize_graph};
pub use series_parallel::is_series_parallel;
pub use spec::parse_spec;

use crate::error::{Error, Result};

/// Subsets of a vertex set, vertex `v` at bit `v`.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 63;

/// Iterates the members of a vertex set in ascending order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(v)
    })
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

/// Renders a vertex set as `[0,2,3]`.
pub fn fmt_set(set: VertexSet) -> String {
    let parts: Vec<String> = members(set).map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// An undirected simple graph. Two graphs compare equal when they have the
/// same order and edge set; a recorded disjoint-union factorization does not
/// participate in equality.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    component_spec: Option<Vec<(Graph, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            component_spec: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge {{{u},{v}}} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("self-loop at {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from the upper-triangle edge-slot mask used by the
    /// exhaustive enumerators: slot order is (0,1),(0,2),...,(0,n-1),(1,2),...
    /// Slots past the 64th are empty.
    pub fn from_edge_slots(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mut bit = 0u32;
        for u in 0..n {
            for v in u + 1..n {
                if mask.checked_shr(bit).unwrap_or(0) & 1 == 1 {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// The path with `k` edges on vertices `0..=k`.
    ///
    /// Panics when `k + 1` exceeds [`MAX_VERTICES`].
    pub fn path(k: usize) -> Self {
        assert!(k < MAX_VERTICES, "path length {k} exceeds vertex cap");
        let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Graph::from_edges(k + 1, &edges).expect("path edges are valid")
    }

    /// The cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::MalformedInput(format!("cycle needs >= 3 vertices, got {k}")));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edges(k, &edges)
    }

    pub fn complete(k: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::from_edges(k, &edges)
    }

    /// The star with a center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Vertex-disjoint union; copies are laid out in order with shifted
    /// labels and the factorization is recorded.
    pub fn disjoint_union(parts: &[(Graph, usize)]) -> Result<Self> {
        if let [(g, 1)] = parts {
            return Ok(g.clone());
        }
        let n: usize = parts.iter().map(|(g, m)| g.n * m).sum();
        let mut out = Graph::empty(n)?;
        let mut offset = 0;
        for (g, m) in parts {
            for _ in 0..*m {
                for u in 0..g.n {
                    out.adj[offset + u] = g.adj[u] << offset;
                }
                offset += g.n;
            }
        }
        out.component_spec = Some(parts.iter().filter(|(_, m)| *m > 0).cloned().collect());
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn component_spec(&self) -> Option<&[(Graph, usize)]> {
        self.component_spec.as_deref()
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    /// No edge of `self` joins `a` and `b`.
    pub fn no_edges_between(&self, a: VertexSet, b: VertexSet) -> bool {
        members(a).all(|v| self.adj[v] & b == 0)
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Induced subgraph on `set`, relabeled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set).collect();
        let mut g = Graph::empty(verts.len()).expect("subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Connected components grouped into (graph, multiplicity) pairs,
    /// expanding a recorded factorization when present. Components that are
    /// equal after relabeling are merged; order follows first appearance.
    pub fn component_multiset(&self) -> Vec<(Graph, usize)> {
        let mut out: Vec<(Graph, usize)> = Vec::new();
        let mut push = |g: Graph, m: usize| {
            if let Some(entry) = out.iter_mut().find(|(h, _)| *h == g) {
                entry.1 += m;
            } else {
                out.push((g, m));
            }
        };
        match &self.component_spec {
            Some(parts) => {
                for (part, m) in parts {
                    for (c, k) in part.component_multiset() {
                        push(c, k * m);
                    }
                }
            }
            None => {
                for comp in self.connected_components() {
                    push(self.induced(comp), 1);
                }
            }
        }
        out
    }

    /// Whether the graph is a path `P_k` for some `k` on its own labels,
    /// i.e. isomorphic to a path. Returns the path length.
    pub fn as_path_length(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() || self.edge_count() != self.n - 1 {
            return None;
        }
        if (0..self.n).all(|v| self.degree(v) <= 2) {
            Some(self.n - 1)
        } else {
            None
        }
    }
}
