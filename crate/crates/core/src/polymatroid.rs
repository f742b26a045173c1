//! The polytope of normalized polymatroidal set functions over the vertex
//! set of a graph, modular on every pair whose intersection separates the
//! two differences.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{fmt_set, Graph, VertexSet};
use crate::lp::{self, LinearProgram, Relation, Sense};
use crate::rational::{fmt_rational, int, ratio, Rational};

pub const MAX_GROUND: usize = 20;

/// A rational value for every subset of `0..ground`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFunction {
    ground: usize,
    values: Vec<Rational>,
}

impl SetFunction {
    pub fn new(ground: usize, values: Vec<Rational>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::GroundTooLarge(ground));
        }
        if values.len() != 1 << ground {
            return Err(Error::MalformedInput(format!(
                "set function over {ground} elements needs {} values, got {}",
                1usize << ground,
                values.len()
            )));
        }
        Ok(SetFunction { ground, values })
    }

    pub fn from_fn(ground: usize, f: impl Fn(VertexSet) -> Rational) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::GroundTooLarge(ground));
        }
        Ok(SetFunction {
            ground,
            values: (0..1u64 << ground).map(f).collect(),
        })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn full_set(&self) -> VertexSet {
        (1u64 << self.ground) - 1
    }

    pub fn get(&self, set: VertexSet) -> &Rational {
        &self.values[set as usize]
    }

    pub fn set(&mut self, set: VertexSet, value: Rational) {
        self.values[set as usize] = value;
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Uniform average of functions over the same ground set.
    pub fn average(points: &[SetFunction]) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::MalformedInput("average of no points".into()))?;
        let k = int(points.len() as i64);
        let mut values = vec![Rational::zero(); first.values.len()];
        for p in points {
            if p.ground != first.ground {
                return Err(Error::GroundMismatch {
                    expected: first.ground,
                    found: p.ground,
                });
            }
            for (acc, v) in values.iter_mut().zip(&p.values) {
                *acc += v;
            }
        }
        for v in &mut values {
            *v /= &k;
        }
        SetFunction::new(first.ground, values)
    }

    /// `(subset, value)` pairs in bitmask order, formatted as `[0,2]` and `p/q`.
    pub fn entries(&self) -> Vec<(String, String)> {
        self.values
            .iter()
            .enumerate()
            .map(|(s, v)| (fmt_set(s as VertexSet), fmt_rational(v)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintTag {
    Normalization,
    Monotone,
    Submodular,
    ModularSeparation,
}

impl ConstraintTag {
    pub fn name(self) -> &'static str {
        match self {
            ConstraintTag::Normalization => "normalization",
            ConstraintTag::Monotone => "monotone",
            ConstraintTag::Submodular => "submodular",
            ConstraintTag::ModularSeparation => "modular-separation",
        }
    }
}

/// `Σ coeff * p[subset]  relation  rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyConstraint {
    pub tag: ConstraintTag,
    pub terms: Vec<(VertexSet, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl PolyConstraint {
    fn new(tag: ConstraintTag, raw: &[(VertexSet, i64)], relation: Relation, rhs: i64) -> Self {
        let mut terms: Vec<(VertexSet, Rational)> = Vec::new();
        for &(s, c) in raw {
            match terms.iter_mut().find(|(t, _)| *t == s) {
                Some(entry) => entry.1 += int(c),
                None => terms.push((s, int(c))),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        PolyConstraint {
            tag,
            terms,
            relation,
            rhs: int(rhs),
        }
    }

    pub fn holds(&self, p: &SetFunction) -> bool {
        let lhs: Rational = self.terms.iter().map(|(s, c)| c * p.get(*s)).sum();
        self.relation.holds(&lhs, &self.rhs)
    }

    pub fn render(&self) -> String {
        let body = if self.terms.is_empty() {
            "0".to_string()
        } else {
            self.terms
                .iter()
                .map(|(s, c)| format!("{}*p{}", fmt_rational(c), fmt_set(*s)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        format!(
            "{}: {} {} {}",
            self.tag.name(),
            body,
            self.relation.symbol(),
            fmt_rational(&self.rhs)
        )
    }
}

/// Linear constraints over the variables `p[S]`, one per subset `S`; the
/// variable index of `S` is its bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub ground: usize,
    pub constraints: Vec<PolyConstraint>,
}

impl ConstraintSystem {
    pub fn num_vars(&self) -> usize {
        1 << self.ground
    }

    pub fn variable(&self, set: VertexSet) -> usize {
        set as usize
    }

    /// One constraint per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in &self.constraints {
            out.push_str(&c.render());
            out.push('\n');
        }
        out
    }

    /// LP over all `2^ground` subset variables, each bounded below by zero
    /// (implied by monotonicity and `p[∅] = 0`).
    pub fn to_linear_program(&self, sense: Sense, objective: &[(VertexSet, Rational)]) -> LinearProgram {
        let mut lp = LinearProgram::new(sense, self.num_vars());
        for v in 0..self.num_vars() {
            lp.set_lower(v, Rational::zero());
        }
        lp.set_objective(objective.iter().map(|(s, c)| (self.variable(*s), c.clone())).collect());
        for c in &self.constraints {
            let row = c.terms.iter().map(|(s, a)| (self.variable(*s), a.clone())).collect();
            lp.add_constraint(row, c.relation, c.rhs.clone());
        }
        lp
    }
}

/// No edge of `f2` joins `A \ B` and `B \ A`.
pub fn separates(f2: &Graph, a: VertexSet, b: VertexSet) -> bool {
    f2.no_edges_between(a & !b, b & !a)
}

fn check_ground(f2: &Graph) -> Result<usize> {
    if f2.n() > MAX_GROUND {
        Err(Error::GroundTooLarge(f2.n()))
    } else {
        Ok(f2.n())
    }
}

fn pair_constraint(f2: &Graph, a: VertexSet, b: VertexSet) -> PolyConstraint {
    let raw = [(a & b, 1), (a | b, 1), (a, -1), (b, -1)];
    if separates(f2, a, b) {
        PolyConstraint::new(ConstraintTag::ModularSeparation, &raw, Relation::Eq, 0)
    } else {
        PolyConstraint::new(ConstraintTag::Submodular, &raw, Relation::Le, 0)
    }
}

fn normalization(n: usize) -> [PolyConstraint; 2] {
    let full = (1u64 << n) - 1;
    [
        PolyConstraint::new(ConstraintTag::Normalization, &[(0, 1)], Relation::Eq, 0),
        PolyConstraint::new(ConstraintTag::Normalization, &[(full, 1)], Relation::Eq, 1),
    ]
}

/// The pruned description: monotonicity on covering pairs only, and a
/// single pair condition per incomparable pair (the modular equality when
/// the pair is separated, the submodular inequality otherwise).
pub fn build_polytope(f2: &Graph) -> Result<ConstraintSystem> {
    let n = check_ground(f2)?;
    let mut constraints: Vec<PolyConstraint> = normalization(n).into();
    let size = 1u64 << n;
    for b in 1..size {
        for v in crate::graph::members(b) {
            let a = b & !(1 << v);
            constraints.push(PolyConstraint::new(
                ConstraintTag::Monotone,
                &[(a, 1), (b, -1)],
                Relation::Le,
                0,
            ));
        }
    }
    for a in 0..size {
        for b in a + 1..size {
            if a & b != a && a & b != b {
                constraints.push(pair_constraint(f2, a, b));
            }
        }
    }
    Ok(ConstraintSystem { ground: n, constraints })
}

/// The literal description: monotonicity for every strict inclusion and
/// both pair conditions for every unordered pair of distinct subsets.
pub fn build_polytope_unpruned(f2: &Graph) -> Result<ConstraintSystem> {
    let n = check_ground(f2)?;
    let mut constraints: Vec<PolyConstraint> = normalization(n).into();
    let size = 1u64 << n;
    for b in 0..size {
        let mut a = b;
        // proper subsets of b, descending
        while a > 0 {
            a = (a - 1) & b;
            constraints.push(PolyConstraint::new(
                ConstraintTag::Monotone,
                &[(a, 1), (b, -1)],
                Relation::Le,
                0,
            ));
        }
    }
    for a in 0..size {
        for b in a + 1..size {
            let raw = [(a & b, 1), (a | b, 1), (a, -1), (b, -1)];
            constraints.push(PolyConstraint::new(ConstraintTag::Submodular, &raw, Relation::Le, 0));
            if separates(f2, a, b) {
                constraints.push(PolyConstraint::new(
                    ConstraintTag::ModularSeparation,
                    &raw,
                    Relation::Eq,
                    0,
                ));
            }
        }
    }
    Ok(ConstraintSystem { ground: n, constraints })
}

/// Result of a membership test: the violated constraints, if any.
#[derive(Clone, Debug)]
pub struct Membership {
    pub violated: Vec<PolyConstraint>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.violated.is_empty()
    }
}

pub fn is_member(p: &SetFunction, f2: &Graph) -> Result<Membership> {
    if p.ground() != f2.n() {
        return Err(Error::GroundMismatch {
            expected: f2.n(),
            found: p.ground(),
        });
    }
    let system = build_polytope(f2)?;
    Ok(check_system(p, &system))
}

pub fn check_system(p: &SetFunction, system: &ConstraintSystem) -> Membership {
    Membership {
        violated: system.constraints.iter().filter(|c| !c.holds(p)).cloned().collect(),
    }
}

/// `p_i(S) = 1` if `i ∈ S`, else `0`.
pub fn indicator_point(f2: &Graph, i: usize) -> Result<SetFunction> {
    if i >= f2.n() {
        return Err(Error::BadVertex(i));
    }
    SetFunction::from_fn(f2.n(), |s| {
        if s >> i & 1 == 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Average of the indicator points of the path with `t` edges, i.e.
/// `p*(S) = |S| / (t + 1)`.
pub fn p_star(t: usize) -> Result<SetFunction> {
    if t == 0 {
        return Err(Error::BadIndex {
            index: 0,
            max: usize::MAX,
        });
    }
    let path = Graph::path(t);
    let points: Result<Vec<_>> = (0..path.n()).map(|i| indicator_point(&path, i)).collect();
    SetFunction::average(&points?)
}

/// The optimal vertex of `system` for a linear objective over subsets.
pub fn vertex_for_system(system: &ConstraintSystem, objective: &[(VertexSet, Rational)]) -> Result<SetFunction> {
    let lp = system.to_linear_program(Sense::Minimize, objective);
    let outcome = lp::solve_presolved(&lp);
    match outcome.point {
        Some(point) => SetFunction::new(system.ground, point),
        None => Err(Error::Solver(format!("polytope LP ended {:?}", outcome.status))),
    }
}

pub fn vertex_for_objective(f2: &Graph, objective: &[(VertexSet, Rational)]) -> Result<SetFunction> {
    vertex_for_system(&build_polytope(f2)?, objective)
}

/// Seeded pseudo-random objective with small rational coefficients on every
/// subset.
pub fn random_objective(ground: usize, seed: u64) -> Vec<(VertexSet, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..1u64 << ground)
        .map(|s| (s, ratio(rng.gen_range(-20..=20), rng.gen_range(1..=4))))
        .collect()
}

/// A vertex of the polytope, minimizing a seeded random objective.
pub fn random_vertex_point(f2: &Graph, seed: u64) -> Result<SetFunction> {
    check_ground(f2)?;
    vertex_for_objective(f2, &random_objective(f2.n(), seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set_of;

    #[test]
    fn separation_examples() {
        let p3 = Graph::path(3);
        assert!(separates(&p3, set_of(&[0, 1, 2]), set_of(&[2, 3])));
        assert!(!separates(&p3, set_of(&[0, 1]), set_of(&[0, 2])));
        assert!(separates(&p3, set_of(&[0]), set_of(&[2])));
        assert!(separates(&p3, set_of(&[0, 1]), set_of(&[0, 1, 2])));
    }

    #[test]
    fn polytope_of_single_edge() {
        let sys = build_polytope(&Graph::path(1)).unwrap();
        assert_eq!(sys.num_vars(), 4);
        let dump = sys.dump();
        let expected = "\
normalization: 1/1*p[] = 0/1
normalization: 1/1*p[0,1] = 1/1
monotone: 1/1*p[] + -1/1*p[0] <= 0/1
monotone: 1/1*p[] + -1/1*p[1] <= 0/1
monotone: 1/1*p[1] + -1/1*p[0,1] <= 0/1
monotone: 1/1*p[0] + -1/1*p[0,1] <= 0/1
submodular: 1/1*p[] + 1/1*p[0,1] + -1/1*p[0] + -1/1*p[1] <= 0/1
";
        assert_eq!(dump, expected);
    }

    #[test]
    fn separated_pair_is_equality_on_p3() {
        let sys = build_polytope(&Graph::path(3)).unwrap();
        assert_eq!(sys.num_vars(), 16);
        let (a, b) = (set_of(&[0]), set_of(&[2]));
        let hit = sys.constraints.iter().find(|c| {
            c.tag == ConstraintTag::ModularSeparation
                && c.terms.iter().any(|(s, _)| *s == a)
                && c.terms.iter().any(|(s, _)| *s == b)
                && c.terms.iter().any(|(s, _)| *s == a | b)
        });
        assert!(hit.is_some());
        assert_eq!(hit.unwrap().relation, Relation::Eq);
    }

    #[test]
    fn edgeless_pairs_are_all_modular() {
        let sys = build_polytope(&Graph::empty(2).unwrap()).unwrap();
        let pairs: Vec<_> = sys
            .constraints
            .iter()
            .filter(|c| matches!(c.tag, ConstraintTag::Submodular | ConstraintTag::ModularSeparation))
            .collect();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].tag, ConstraintTag::ModularSeparation);
    }

    #[test]
    fn indicator_examples() {
        let p1 = Graph::path(1);
        let q = indicator_point(&p1, 0).unwrap();
        assert_eq!(q.values(), &[int(0), int(1), int(0), int(1)]);
        let q = indicator_point(&Graph::path(3), 1).unwrap();
        assert_eq!(q.get(set_of(&[0, 2])), &int(0));
        assert_eq!(q.get(0), &int(0));
        assert_eq!(q.get(q.full_set()), &int(1));
        assert_eq!(indicator_point(&p1, 2), Err(Error::BadVertex(2)));
    }

    #[test]
    fn p_star_values() {
        let p = p_star(3).unwrap();
        for v in 0..4 {
            assert_eq!(p.get(1 << v), &ratio(1, 4));
        }
        assert_eq!(p.get(set_of(&[1, 2])), &ratio(1, 2));
        assert_eq!(p.get(p.full_set()), &int(1));
        for s in 0..16u64 {
            assert_eq!(p.get(s), &ratio(s.count_ones() as i64, 4));
        }
    }

    #[test]
    fn membership_examples() {
        let p3 = Graph::path(3);
        assert!(is_member(&indicator_point(&p3, 0).unwrap(), &p3).unwrap().is_member());
        assert!(is_member(&p_star(3).unwrap(), &p3).unwrap().is_member());
        let mut bad = p_star(3).unwrap();
        bad.set(bad.full_set(), int(2));
        let m = is_member(&bad, &p3).unwrap();
        assert!(!m.is_member());
        assert!(m.violated.iter().any(|c| c.tag == ConstraintTag::Normalization));
        let wrong = p_star(2).unwrap();
        assert!(matches!(is_member(&wrong, &p3), Err(Error::GroundMismatch { .. })));
    }

    #[test]
    fn rigged_objective_recovers_indicator() {
        let p4 = Graph::path(4);
        for i in 0..p4.n() {
            let objective: Vec<_> = (0..32u64).filter(|s| s >> i & 1 == 0).map(|s| (s, int(1))).collect();
            let v = vertex_for_objective(&p4, &objective).unwrap();
            assert_eq!(v, indicator_point(&p4, i).unwrap());
        }
    }

    #[test]
    fn random_vertex_of_edge() {
        let p1 = Graph::path(1);
        let v = random_vertex_point(&p1, 7).unwrap();
        assert_eq!(v.get(0), &int(0));
        assert_eq!(v.get(3), &int(1));
        assert!(is_member(&v, &p1).unwrap().is_member());
    }

    #[test]
    fn ground_cap() {
        let big = Graph::empty(21).unwrap();
        assert_eq!(build_polytope(&big), Err(Error::GroundTooLarge(21)));
    }
}
