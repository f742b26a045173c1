use super::{members, Graph, VertexSet};
use crate::error::{Error, Result};

/// All inclusion-maximal cliques, sorted by their ascending vertex lists.
/// Isolated vertices are cliques of size one.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, 0, g.vertex_set(), 0, &mut out);
    out.sort_by_key(|&c| members(c).collect::<Vec<_>>());
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    // pivot on the vertex of P ∪ X with most neighbours in P
    let pivot = members(p | x)
        .max_by_key(|&u| ((g.neighbors(u) & p).count_ones(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    for v in members(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Lexicographic breadth-first search. Ties between equal labels go to the
/// smallest vertex.
pub(crate) fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        visited |= 1 << v;
        order.push(v);
        for u in members(g.neighbors(v) & !visited) {
            labels[u].push(n - step);
        }
    }
    order
}

fn is_perfect_elimination_ordering(g: &Graph, peo: &[usize]) -> bool {
    let mut later = g.vertex_set();
    for &v in peo {
        later &= !(1 << v);
        let nbrs = g.neighbors(v) & later;
        if members(nbrs).any(|u| nbrs & !(1 << u) & !g.neighbors(u) != 0) {
            return false;
        }
    }
    true
}

/// Chordality test. On success also returns a perfect elimination ordering
/// (the reverse of a lexicographic BFS order), checked before returning.
pub fn is_chordal(g: &Graph) -> (bool, Option<Vec<usize>>) {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        (true, Some(peo))
    } else {
        (false, None)
    }
}

/// A clique forest of a chordal graph: one tree over the maximal cliques of
/// each connected component. Components are not linked to each other, which
/// is equivalent to joining them through empty separators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    /// `separators[i]` is the intersection of the cliques joined by `edges[i]`.
    pub separators: Vec<VertexSet>,
    /// Clique indices per connected component; the first entry is that
    /// component's root.
    pub components: Vec<Vec<usize>>,
}

impl CliqueTree {
    /// For each vertex, the cliques containing it induce a connected subtree.
    pub fn satisfies_running_intersection(&self, n: usize) -> bool {
        (0..n).all(|v| {
            let holders: Vec<usize> = (0..self.cliques.len())
                .filter(|&c| self.cliques[c] >> v & 1 == 1)
                .collect();
            let Some(&first) = holders.first() else {
                return true;
            };
            let mut reached = vec![first];
            let mut frontier = vec![first];
            while let Some(c) = frontier.pop() {
                for &(a, b) in &self.edges {
                    let other = if a == c {
                        b
                    } else if b == c {
                        a
                    } else {
                        continue;
                    };
                    if self.cliques[other] >> v & 1 == 1 && !reached.contains(&other) {
                        reached.push(other);
                        frontier.push(other);
                    }
                }
            }
            reached.len() == holders.len()
        })
    }
}

/// Clique tree via a maximum-weight spanning forest of the clique
/// intersection graph (Prim's algorithm, smallest index on ties).
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    if !is_chordal(g).0 {
        return Err(Error::NotChordal);
    }
    let cliques = maximal_cliques(g);
    let mut edges = Vec::new();
    let mut separators = Vec::new();
    let mut components = Vec::new();
    for comp in g.connected_components() {
        let idx: Vec<usize> = (0..cliques.len()).filter(|&c| cliques[c] & comp != 0).collect();
        let mut in_tree = vec![idx[0]];
        while in_tree.len() < idx.len() {
            let mut best: Option<(u32, usize, usize)> = None;
            for &a in &in_tree {
                for &b in idx.iter().filter(|b| !in_tree.contains(b)) {
                    let w = (cliques[a] & cliques[b]).count_ones();
                    if w > 0 && best.is_none_or(|(bw, _, _)| w > bw) {
                        best = Some((w, a, b));
                    }
                }
            }
            let (_, a, b) = best.expect("clique intersection graph of a component is connected");
            edges.push((a, b));
            separators.push(cliques[a] & cliques[b]);
            in_tree.push(b);
        }
        components.push(in_tree);
    }
    Ok(CliqueTree {
        cliques,
        edges,
        separators,
        components,
    })
}
