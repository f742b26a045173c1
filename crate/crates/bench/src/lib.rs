//! Shared fixtures for the criterion benches.

use walkhde::graph::Graph;

pub fn path_target(t: usize) -> Graph {
    Graph::path(t)
}

/// Deterministic dense-ish graph on `n` vertices: `u ~ v` when `(u * 7 + v * 3) % 5 < 3`.
pub fn walk_fixture(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (u * 7 + v * 3) % 5 < 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("fixture fits the vertex cap")
}
