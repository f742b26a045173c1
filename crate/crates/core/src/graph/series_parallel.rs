use super::{members, Graph};

/// K4-minor-freeness by exhaustive reduction: delete vertices of degree at
/// most one and suppress degree-two vertices (the new edge merges with any
/// parallel one) until nothing is left or no rule applies.
pub fn is_series_parallel(g: &Graph) -> bool {
    let mut adj = g.adjacency().to_vec();
    let mut alive = g.vertex_set();
    loop {
        if alive == 0 {
            return true;
        }
        let Some(v) = members(alive).find(|&v| adj[v].count_ones() <= 2) else {
            return false;
        };
        let nbrs: Vec<usize> = members(adj[v]).collect();
        for &u in &nbrs {
            adj[u] &= !(1 << v);
        }
        if let [a, b] = nbrs[..] {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
}
