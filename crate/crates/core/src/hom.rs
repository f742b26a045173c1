//! Homomorphism enumeration and counting, walk counts and densities.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::rational::{from_count, upow, BigCount, Rational};

/// A vertex map from a source graph into a target graph that sends edges to
/// edges. `map[v]` is the image of source vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    /// Validates `map` against the two graphs.
    pub fn new(source: &Graph, target: &Graph, map: Vec<usize>) -> Result<Self> {
        let h = Homomorphism { map };
        if h.is_valid(source, target) {
            Ok(h)
        } else {
            Err(Error::MalformedInput(format!(
                "{:?} is not a homomorphism between the given graphs",
                h.map
            )))
        }
    }

    pub fn is_valid(&self, source: &Graph, target: &Graph) -> bool {
        self.map.len() == source.n()
            && self.map.iter().all(|&x| x < target.n())
            && source.edges().all(|(u, v)| target.has_edge(self.map[u], self.map[v]))
    }

    /// Image of a vertex set.
    pub fn image(&self, set: u64) -> u64 {
        members(set).fold(0, |acc, v| acc | 1 << self.map[v])
    }
}

/// Lazy enumeration of `Hom(F; G)` in lexicographic order of the map array.
///
/// Source vertices are assigned in index order; each candidate set is the
/// intersection of the target neighbourhoods of already-placed neighbours.
pub struct HomIter<'a> {
    source: &'a Graph,
    target: &'a Graph,
    map: Vec<usize>,
    candidates: Vec<u64>,
    depth: usize,
    started: bool,
    done: bool,
}

impl<'a> HomIter<'a> {
    fn domain(&self, v: usize) -> u64 {
        let earlier = self.source.neighbors(v) & ((1u64 << v) - 1);
        members(earlier).fold(self.target.vertex_set(), |d, u| d & self.target.neighbors(self.map[u]))
    }
}

impl Iterator for HomIter<'_> {
    type Item = Homomorphism;

    fn next(&mut self) -> Option<Homomorphism> {
        if self.done {
            return None;
        }
        let n = self.source.n();
        if n == 0 {
            self.done = true;
            return Some(Homomorphism { map: Vec::new() });
        }
        if !self.started {
            self.started = true;
            self.candidates[0] = self.domain(0);
        }
        loop {
            let cand = self.candidates[self.depth];
            if cand == 0 {
                if self.depth == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.candidates[self.depth] = cand & (cand - 1);
            self.map[self.depth] = cand.trailing_zeros() as usize;
            if self.depth + 1 == n {
                return Some(Homomorphism { map: self.map.clone() });
            }
            self.depth += 1;
            self.candidates[self.depth] = self.domain(self.depth);
        }
    }
}

pub fn enumerate_homs<'a>(source: &'a Graph, target: &'a Graph) -> HomIter<'a> {
    HomIter {
        source,
        target,
        map: vec![0; source.n()],
        candidates: vec![0; source.n()],
        depth: 0,
        started: false,
        done: false,
    }
}

/// Exact `|Hom(F; G)|`, multiplied out over the connected components of
/// `F`. Path components use walk counts; others are counted by backtracking.
pub fn count_homs(source: &Graph, target: &Graph) -> BigCount {
    let mut total = BigUint::one();
    for (comp, mult) in source.component_multiset() {
        let c = match comp.as_path_length() {
            Some(k) => walk_count(target, k),
            None => BigUint::from(enumerate_homs(&comp, target).count()),
        };
        if c.is_zero() {
            return c;
        }
        total *= upow(&c, mult);
    }
    total
}

/// Number of walks with `k` edges: the entry sum of `A^k`, computed as `k`
/// products of the adjacency matrix with the all-ones vector.
pub fn walk_count(g: &Graph, k: usize) -> BigCount {
    let mut vec = vec![BigUint::one(); g.n()];
    for _ in 0..k {
        vec = (0..g.n())
            .map(|v| members(g.neighbors(v)).map(|u| &vec[u]).sum())
            .collect();
    }
    vec.into_iter().sum()
}

/// `w_k(G)`: walks of length `k` divided by the number of vertices.
pub fn normalized_walks(g: &Graph, k: usize) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(from_count(&walk_count(g, k)) / crate::rational::int(g.n() as i64))
}

/// `t(F; G) = |Hom(F; G)| / |V(G)|^|V(F)|`.
pub fn hom_density(source: &Graph, target: &Graph) -> Result<Rational> {
    if target.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let denom = upow(&BigUint::from(target.n()), source.n());
    Ok(from_count(&count_homs(source, target)) / from_count(&denom))
}

pub fn average_degree(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(crate::rational::ratio(2 * g.edge_count() as i64, g.n() as i64))
}
