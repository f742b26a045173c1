//! Verification harness for the walk inequalities, the path identity for
//! polymatroids, exponent chaining and the domination-exponent definition.
//! Every comparison is made on exact integers or rationals.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{serialize_graph, Graph};
use crate::hom::{count_homs, hom_density, walk_count};
use crate::polymatroid::{indicator_point, is_member, p_star, random_vertex_point, SetFunction};
use crate::rational::{fmt_rational, from_count, pow, upow, Rational};

/// Largest order for which all labeled graphs may be enumerated.
pub const MAX_EXHAUSTIVE_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    CounterexampleFound,
}

/// A graph together with both sides of the comparison evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub graph: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub graphs_checked: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckReport {
    fn new(name: &str, params: BTreeMap<String, String>) -> Self {
        CheckReport {
            name: name.to_string(),
            params,
            verdict: Verdict::Holds,
            graphs_checked: 0,
            witnesses: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Both sides of an inequality `lhs >= rhs` on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl Comparison {
    fn witness(&self, role: &str, g: &Graph) -> Witness {
        Witness {
            role: role.to_string(),
            graph: serialize_graph(g),
            lhs: fmt_rational(&self.lhs),
            rhs: fmt_rational(&self.rhs),
        }
    }

    /// `lhs / rhs`, or `None` when the right side vanishes.
    fn margin(&self) -> Option<Rational> {
        (!self.rhs.is_zero()).then(|| &self.lhs / &self.rhs)
    }

    fn into_report(self, name: &str, params: BTreeMap<String, String>, g: &Graph) -> CheckReport {
        let mut report = CheckReport::new(name, params);
        report.graphs_checked = 1;
        if !self.holds {
            report.verdict = Verdict::Violated;
        }
        report.witnesses.push(self.witness("input", g));
        report
    }
}

fn nonempty(g: &Graph) -> Result<BigUint> {
    if g.n() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(BigUint::from(g.n()))
    }
}

fn check_order(t: usize, k: usize) -> Result<()> {
    if t == 0 || t > k {
        return Err(Error::InvalidParameter(format!("need 1 <= t <= k, got t={t} k={k}")));
    }
    Ok(())
}

/// `w_k >= d^k`, compared as `W_k n^k >= (2e)^k n`.
pub fn blakley_roy(g: &Graph, k: usize) -> Result<Comparison> {
    let n = nonempty(g)?;
    let walks = walk_count(g, k);
    let twice_edges = BigUint::from(2 * g.edge_count());
    let holds = &walks * upow(&n, k) >= upow(&twice_edges, k) * &n;
    let nr = from_count(&n);
    Ok(Comparison {
        lhs: from_count(&walks) / &nr,
        rhs: pow(&(from_count(&twice_edges) / &nr), k),
        holds,
    })
}

pub fn check_blakley_roy(g: &Graph, k: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = blakley_roy(g, k)?.into_report("blakley-roy", params(&[("k", k.to_string())]), g);
    r.runtime = start.elapsed();
    Ok(r)
}

/// `w_k^t >= w_t^k`, compared as `W_k^t n^k >= W_t^k n^t`.
pub fn walk_inequality(g: &Graph, t: usize, k: usize) -> Result<Comparison> {
    check_order(t, k)?;
    let n = nonempty(g)?;
    let wk = walk_count(g, k);
    let wt = walk_count(g, t);
    let holds = upow(&wk, t) * upow(&n, k) >= upow(&wt, k) * upow(&n, t);
    let nr = from_count(&n);
    Ok(Comparison {
        lhs: pow(&(from_count(&wk) / &nr), t),
        rhs: pow(&(from_count(&wt) / &nr), k),
        holds,
    })
}

pub fn check_walk_inequality(g: &Graph, t: usize, k: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let p = params(&[("t", t.to_string()), ("k", k.to_string())]);
    let mut r = walk_inequality(g, t, k)?.into_report("walk-inequality", p, g);
    r.runtime = start.elapsed();
    Ok(r)
}

/// `t(P_k; G)^t >= t(P_t; G)^k`, evaluated from homomorphism densities.
pub fn density_form(g: &Graph, t: usize, k: usize) -> Result<Comparison> {
    check_order(t, k)?;
    let dk = hom_density(&Graph::path(k), g)?;
    let dt = hom_density(&Graph::path(t), g)?;
    let lhs = pow(&dk, t);
    let rhs = pow(&dt, k);
    // cross-multiplied: both denominators are positive
    let holds = lhs.numer() * rhs.denom() >= rhs.numer() * lhs.denom();
    Ok(Comparison { lhs, rhs, holds })
}

/// Density form of the walk inequality, also recording whether its verdict
/// matches the walk-count form.
pub fn check_density_form(g: &Graph, t: usize, k: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let density = density_form(g, t, k)?;
    let walks = walk_inequality(g, t, k)?;
    let p = params(&[
        ("t", t.to_string()),
        ("k", k.to_string()),
        ("forms_agree", (density.holds == walks.holds).to_string()),
    ]);
    let mut r = density.into_report("density-form", p, g);
    r.runtime = start.elapsed();
    Ok(r)
}

/// A finite family of graphs to run a check over.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Scope {
    /// Every labeled graph on exactly `n` vertices.
    Exhaustive { n: usize },
    /// Every labeled graph on `1..=n_max` vertices.
    ExhaustiveUpTo { n_max: usize },
    /// Seeded Erdős–Rényi samples with rational edge probability.
    Random {
        samples: usize,
        n: usize,
        #[serde(serialize_with = "ser_rational")]
        edge_prob: Rational,
        seed: u64,
    },
    /// Paths `P_1..` and stars `K_{1,1}..` on at most `n_max` vertices.
    StarsAndPaths { n_max: usize },
    /// Every regular labeled graph on `1..=n_max` vertices.
    RegularUpTo { n_max: usize },
    /// An explicit list, e.g. graphs read from files.
    Given {
        #[serde(serialize_with = "ser_graphs")]
        graphs: Vec<Graph>,
    },
}

fn ser_graphs<S: serde::Serializer>(gs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(serialize_graph))
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

fn all_labeled(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::ScopeTooLarge(format!(
            "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    let slots = n * n.saturating_sub(1) / 2;
    (0..1u64 << slots).map(|mask| Graph::from_edge_slots(n, mask)).collect()
}

impl Scope {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Scope::Exhaustive { n } => all_labeled(*n),
            Scope::ExhaustiveUpTo { n_max } => {
                let mut out = Vec::new();
                for n in 1..=*n_max {
                    out.extend(all_labeled(n)?);
                }
                Ok(out)
            }
            Scope::Random {
                samples,
                n,
                edge_prob,
                seed,
            } => {
                let (Some(num), Some(den)) = (edge_prob.numer().to_u64(), edge_prob.denom().to_u64()) else {
                    return Err(Error::InvalidParameter("edge probability out of range".into()));
                };
                if num > den {
                    return Err(Error::InvalidParameter("edge probability exceeds 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*samples)
                    .map(|_| {
                        let mut edges = Vec::new();
                        for u in 0..*n {
                            for v in u + 1..*n {
                                if rng.gen_range(0..den) < num {
                                    edges.push((u, v));
                                }
                            }
                        }
                        Graph::from_edges(*n, &edges)
                    })
                    .collect()
            }
            Scope::StarsAndPaths { n_max } => {
                let mut out = Vec::new();
                for n in 2..=*n_max {
                    out.push(Graph::path(n - 1));
                    if n >= 4 {
                        out.push(Graph::star(n - 1)?);
                    }
                }
                Ok(out)
            }
            Scope::RegularUpTo { n_max } => {
                let mut out = Vec::new();
                for n in 1..=*n_max {
                    out.extend(all_labeled(n)?.into_iter().filter(Graph::is_regular));
                }
                Ok(out)
            }
            Scope::Given { graphs } => Ok(graphs.clone()),
        }
    }

    fn describe(&self, p: &mut BTreeMap<String, String>) {
        let entries: Vec<(&str, String)> = match self {
            Scope::Exhaustive { n } => vec![("scope", "exhaustive".into()), ("n", n.to_string())],
            Scope::ExhaustiveUpTo { n_max } => {
                vec![("scope", "exhaustive-up-to".into()), ("n_max", n_max.to_string())]
            }
            Scope::Random {
                samples,
                n,
                edge_prob,
                seed,
            } => vec![
                ("scope", "random".into()),
                ("samples", samples.to_string()),
                ("n", n.to_string()),
                ("edge_prob", fmt_rational(edge_prob)),
                ("seed", seed.to_string()),
            ],
            Scope::StarsAndPaths { n_max } => {
                vec![("scope", "stars-and-paths".into()), ("n_max", n_max.to_string())]
            }
            Scope::RegularUpTo { n_max } => vec![("scope", "regular".into()), ("n_max", n_max.to_string())],
            Scope::Given { graphs } => vec![("scope", "given".into()), ("graphs", graphs.len().to_string())],
        };
        for (k, v) in entries {
            p.insert(k.to_string(), v);
        }
    }
}

/// Which inequality a sweep runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "check")]
pub enum WalkCheck {
    BlakleyRoy { k: usize },
    WalkInequality { t: usize, k: usize },
    DensityForm { t: usize, k: usize },
}

impl WalkCheck {
    fn name(&self) -> &'static str {
        match self {
            WalkCheck::BlakleyRoy { .. } => "blakley-roy",
            WalkCheck::WalkInequality { .. } => "walk-inequality",
            WalkCheck::DensityForm { .. } => "density-form",
        }
    }

    pub fn compare(&self, g: &Graph) -> Result<Comparison> {
        match *self {
            WalkCheck::BlakleyRoy { k } => blakley_roy(g, k),
            WalkCheck::WalkInequality { t, k } => walk_inequality(g, t, k),
            WalkCheck::DensityForm { t, k } => density_form(g, t, k),
        }
    }

    fn params(&self) -> BTreeMap<String, String> {
        match *self {
            WalkCheck::BlakleyRoy { k } => params(&[("k", k.to_string())]),
            WalkCheck::WalkInequality { t, k } | WalkCheck::DensityForm { t, k } => {
                params(&[("t", t.to_string()), ("k", k.to_string())])
            }
        }
    }
}

/// Runs `compare` over every graph in parallel and reduces in graph order:
/// records the first violation and the graph with the smallest `lhs/rhs`.
fn aggregate<F>(name: &str, mut p: BTreeMap<String, String>, scope: &Scope, compare: F) -> Result<CheckReport>
where
    F: Fn(&Graph) -> Result<Comparison> + Sync,
{
    let start = Instant::now();
    scope.describe(&mut p);
    let graphs = scope.graphs()?;
    let results: Vec<Comparison> = graphs.par_iter().map(&compare).collect::<Result<_>>()?;
    let mut report = CheckReport::new(name, p);
    report.graphs_checked = graphs.len();
    let mut worst: Option<(Rational, usize)> = None;
    let mut first_violation = None;
    for (i, c) in results.iter().enumerate() {
        if !c.holds && first_violation.is_none() {
            first_violation = Some(i);
        }
        if let Some(m) = c.margin() {
            if worst.as_ref().is_none_or(|(w, _)| m < *w) {
                worst = Some((m, i));
            }
        }
    }
    if let Some(i) = first_violation {
        report.verdict = Verdict::CounterexampleFound;
        report.witnesses.push(results[i].witness("first-violation", &graphs[i]));
    }
    if let Some((_, i)) = worst {
        report.witnesses.push(results[i].witness("worst-margin", &graphs[i]));
    }
    report.runtime = start.elapsed();
    Ok(report)
}

pub fn sweep_with(check: WalkCheck, scope: &Scope) -> Result<CheckReport> {
    aggregate(&format!("sweep:{}", check.name()), check.params(), scope, |g| {
        check.compare(g)
    })
}

/// The walk inequality over every graph in `scope`.
pub fn sweep(t: usize, k: usize, scope: &Scope) -> Result<CheckReport> {
    check_order(t, k)?;
    sweep_with(WalkCheck::WalkInequality { t, k }, scope)
}

/// The density form over every graph in `scope`. The `forms_agree` parameter
/// records whether every graph got the same verdict from the walk-count form.
pub fn sweep_density_form(t: usize, k: usize, scope: &Scope) -> Result<CheckReport> {
    check_order(t, k)?;
    let agree = AtomicBool::new(true);
    let check = WalkCheck::DensityForm { t, k };
    let mut r = aggregate("sweep:density-form", check.params(), scope, |g| {
        let density = density_form(g, t, k)?;
        if density.holds != walk_inequality(g, t, k)?.holds {
            agree.store(false, Ordering::Relaxed);
        }
        Ok(density)
    })?;
    r.params.insert("forms_agree".into(), agree.into_inner().to_string());
    Ok(r)
}

/// First graph in `scope` violating `w_k^t >= w_t^k` for even `t` and odd `k`.
pub fn find_counterexample(t: usize, k: usize, scope: &Scope) -> Result<CheckReport> {
    if !t.is_multiple_of(2) || k.is_multiple_of(2) || t >= k {
        return Err(Error::BadParity(format!("need even t < odd k, got t={t} k={k}")));
    }
    let start = Instant::now();
    let mut p = params(&[("t", t.to_string()), ("k", k.to_string())]);
    scope.describe(&mut p);
    let mut report = CheckReport::new("counterexample", p);
    for g in scope.graphs()? {
        report.graphs_checked += 1;
        let c = walk_inequality(&g, t, k)?;
        if !c.holds {
            report.verdict = Verdict::CounterexampleFound;
            report.witnesses.push(c.witness("counterexample", &g));
            break;
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// Telescoping product `(t+2)/t · (t+4)/(t+2) ⋯ k/(k-2)` for odd `t <= k`.
pub fn chain_exponents(t: usize, k: usize) -> Result<Rational> {
    if t % 2 != 1 || k % 2 != 1 {
        return Err(Error::BadParity(format!("need odd t and k, got t={t} k={k}")));
    }
    check_order(t, k)?;
    let mut product = Rational::one();
    let mut s = t;
    while s < k {
        product *= Rational::new((s as i64 + 2).into(), (s as i64).into());
        s += 2;
    }
    Ok(product)
}

/// `t(P_k; G) >= t(P_t; G)^(k/t)` on one graph, cross-powered to
/// `t(P_k; G)^t >= t(P_t; G)^k`, together with every intermediate step
/// `t(P_{s+2}; G)^s >= t(P_s; G)^(s+2)`.
pub fn check_chain(g: &Graph, t: usize, k: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let exponent = chain_exponents(t, k)?;
    let mut p = params(&[
        ("t", t.to_string()),
        ("k", k.to_string()),
        ("exponent", fmt_rational(&exponent)),
    ]);
    let mut steps_hold = true;
    let mut s = t;
    while s < k {
        steps_hold &= density_form(g, s, s + 2)?.holds;
        s += 2;
    }
    p.insert("steps_hold".into(), steps_hold.to_string());
    let mut r = density_form(g, t, k)?.into_report("chain", p, g);
    if !steps_hold {
        r.verdict = Verdict::Violated;
    }
    r.runtime = start.elapsed();
    Ok(r)
}

/// [`check_chain`] over every graph in `scope`; a graph passes when the final
/// inequality and every intermediate step hold.
pub fn sweep_chain(t: usize, k: usize, scope: &Scope) -> Result<CheckReport> {
    let exponent = chain_exponents(t, k)?;
    let p = params(&[
        ("t", t.to_string()),
        ("k", k.to_string()),
        ("exponent", fmt_rational(&exponent)),
    ]);
    aggregate("sweep:chain", p, scope, |g| {
        let mut c = density_form(g, t, k)?;
        let mut s = t;
        while s < k {
            c.holds &= density_form(g, s, s + 2)?.holds;
            s += 2;
        }
        Ok(c)
    })
}

/// `p(V) = Σ_edges p(edge) − Σ_inner p({v})` for a member `p` of the polytope
/// of the path with `t` edges.
pub fn check_lemma_identity(t: usize, p: &SetFunction) -> Result<CheckReport> {
    let start = Instant::now();
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let path = Graph::path(t);
    if !is_member(p, &path)?.is_member() {
        return Err(Error::NotMember);
    }
    let lhs = p.get(p.full_set()).clone();
    let edges: Rational = path.edges().map(|(u, v)| p.get(1 << u | 1 << v)).sum();
    let inner: Rational = (1..t).map(|v| p.get(1 << v)).sum();
    let rhs = edges - inner;
    let mut r = CheckReport::new("lemma-identity", params(&[("t", t.to_string())]));
    r.graphs_checked = 1;
    if lhs != rhs {
        r.verdict = Verdict::Violated;
    }
    r.witnesses.push(Witness {
        role: "set-function".into(),
        graph: serialize_graph(&path),
        lhs: fmt_rational(&lhs),
        rhs: fmt_rational(&rhs),
    });
    r.runtime = start.elapsed();
    Ok(r)
}

/// [`check_lemma_identity`] for `t` on every indicator point, on `p*` and on
/// `batch` random polytope vertices seeded `seed, seed + 1, ...`.
pub fn lemma_identity_suite(t: usize, batch: usize, seed: u64) -> Result<CheckReport> {
    let start = Instant::now();
    let path = Graph::path(t);
    let mut points: Vec<(String, SetFunction)> = Vec::new();
    for i in 0..path.n() {
        points.push((format!("indicator:{i}"), indicator_point(&path, i)?));
    }
    points.push(("p-star".into(), p_star(t)?));
    let random: Vec<(String, SetFunction)> = (0..batch as u64)
        .into_par_iter()
        .map(|i| {
            Ok((
                format!("vertex:seed={}", seed + i),
                random_vertex_point(&path, seed + i)?,
            ))
        })
        .collect::<Result<_>>()?;
    points.extend(random);
    let reports: Vec<CheckReport> = points
        .par_iter()
        .map(|(_, p)| check_lemma_identity(t, p))
        .collect::<Result<_>>()?;
    let mut r = CheckReport::new(
        "lemma-identity-suite",
        params(&[
            ("t", t.to_string()),
            ("batch", batch.to_string()),
            ("seed", seed.to_string()),
        ]),
    );
    r.graphs_checked = reports.len();
    for ((label, _), rep) in points.iter().zip(reports) {
        if !rep.holds() {
            r.verdict = Verdict::Violated;
            let mut w = rep.witnesses[0].clone();
            w.role = label.clone();
            r.witnesses.push(w);
        }
    }
    r.runtime = start.elapsed();
    Ok(r)
}

/// `|Hom(F1; G)|^b >= |Hom(F2; G)|^a` for `c = a/b`. A graph with no
/// homomorphism from `F2` satisfies it trivially, including at `c = 0`.
pub fn hde_definition(f1: &Graph, f2: &Graph, c: &Rational, g: &Graph) -> Result<Comparison> {
    let (Some(a), Some(b)) = (c.numer().to_biguint(), c.denom().to_usize()) else {
        return Err(Error::InvalidExponent(format!(
            "{} must be non-negative",
            fmt_rational(c)
        )));
    };
    let a = a
        .to_usize()
        .ok_or_else(|| Error::InvalidExponent("numerator too large".into()))?;
    let h1 = count_homs(f1, g);
    let h2 = count_homs(f2, g);
    let lhs = upow(&h1, b);
    let rhs = if h2.is_zero() { h2 } else { upow(&h2, a) };
    Ok(Comparison {
        holds: lhs >= rhs,
        lhs: from_count(&lhs),
        rhs: from_count(&rhs),
    })
}

pub fn check_hde_definition(f1: &Graph, f2: &Graph, c: &Rational, scope: &Scope) -> Result<CheckReport> {
    let p = params(&[
        ("f1", serialize_graph(f1)),
        ("f2", serialize_graph(f2)),
        ("c", fmt_rational(c)),
    ]);
    aggregate("hde-definition", p, scope, |g| hde_definition(f1, f2, c, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn blakley_roy_examples() {
        let c = blakley_roy(&Graph::path(2), 3).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (ratio(8, 3), ratio(64, 27)));
        assert!(c.holds);
        let petersen_like = Graph::cycle(6).unwrap();
        for k in 0..6 {
            let c = blakley_roy(&petersen_like, k).unwrap();
            assert_eq!(c.lhs, c.rhs);
        }
        let c = blakley_roy(&Graph::empty(4).unwrap(), 2).unwrap();
        assert!(c.holds && c.lhs.is_zero() && c.rhs.is_zero());
        assert!(matches!(
            check_blakley_roy(&Graph::empty(0).unwrap(), 1),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn walk_inequality_examples() {
        let p2 = Graph::path(2);
        let c = walk_inequality(&p2, 1, 3).unwrap();
        assert_eq!(
            (c.lhs.clone(), c.rhs.clone(), c.holds),
            (ratio(8, 3), ratio(64, 27), true)
        );
        let c = walk_inequality(&p2, 2, 3).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (ratio(64, 9), int(8), false));
        let k3 = Graph::complete(3).unwrap();
        for (t, k) in [(1, 1), (1, 4), (2, 3), (3, 5)] {
            let c = walk_inequality(&k3, t, k).unwrap();
            assert_eq!(c.lhs, c.rhs);
            assert_eq!(c.lhs, pow(&int(2), t * k));
        }
        assert!(matches!(walk_inequality(&p2, 3, 2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn density_form_matches_walk_form() {
        let p2 = Graph::path(2);
        let r = check_density_form(&p2, 1, 3).unwrap();
        assert_eq!((r.verdict, r.params["forms_agree"].as_str()), (Verdict::Holds, "true"));
        let r = check_density_form(&p2, 2, 3).unwrap();
        assert_eq!(
            (r.verdict, r.params["forms_agree"].as_str()),
            (Verdict::Violated, "true")
        );
        let c = density_form(&Graph::star(3).unwrap(), 3, 3).unwrap();
        assert_eq!(c.lhs, c.rhs);
    }

    #[test]
    fn sweep_examples() {
        assert!(sweep(1, 3, &Scope::Exhaustive { n: 4 }).unwrap().holds());
        let r = sweep(2, 3, &Scope::Exhaustive { n: 3 }).unwrap();
        assert_eq!(r.verdict, Verdict::CounterexampleFound);
        assert_eq!(r.graphs_checked, 8);
        assert!(matches!(
            sweep(1, 3, &Scope::Exhaustive { n: 7 }),
            Err(Error::ScopeTooLarge(_))
        ));
    }

    #[test]
    fn counterexample_examples() {
        let r = find_counterexample(2, 3, &Scope::StarsAndPaths { n_max: 5 }).unwrap();
        assert_eq!(r.verdict, Verdict::CounterexampleFound);
        assert_eq!(r.witnesses[0].graph, serialize_graph(&Graph::path(2)));
        let r = find_counterexample(2, 5, &Scope::StarsAndPaths { n_max: 6 }).unwrap();
        assert_eq!(r.verdict, Verdict::CounterexampleFound);
        let r = find_counterexample(2, 3, &Scope::RegularUpTo { n_max: 5 }).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(matches!(
            find_counterexample(3, 5, &Scope::StarsAndPaths { n_max: 4 }),
            Err(Error::BadParity(_))
        ));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_exponents(3, 7).unwrap(), ratio(7, 3));
        assert_eq!(chain_exponents(1, 9).unwrap(), int(9));
        assert_eq!(chain_exponents(5, 5).unwrap(), int(1));
        assert!(matches!(chain_exponents(2, 5), Err(Error::BadParity(_))));
        let r = check_chain(&Graph::star(3).unwrap(), 1, 7).unwrap();
        assert!(r.holds());
        assert_eq!(r.params["steps_hold"], "true");
    }

    #[test]
    fn lemma_identity_even_t() {
        let p = SetFunction::from_fn(5, |s| ratio(s.count_ones() as i64, 5)).unwrap();
        let r = check_lemma_identity(4, &p).unwrap();
        assert!(r.holds());
        assert_eq!(
            (r.witnesses[0].lhs.as_str(), r.witnesses[0].rhs.as_str()),
            ("1/1", "1/1")
        );
    }

    #[test]
    fn hde_definition_examples() {
        let f1 = crate::hde::flagship_source(1).unwrap();
        let f2 = Graph::path(1);
        assert!(
            check_hde_definition(&f1, &f2, &int(3), &Scope::ExhaustiveUpTo { n_max: 4 })
                .unwrap()
                .holds()
        );
        let r = check_hde_definition(&f1, &f2, &ratio(31, 10), &Scope::ExhaustiveUpTo { n_max: 3 }).unwrap();
        assert_eq!(r.verdict, Verdict::CounterexampleFound);
        let c4 = Graph::cycle(4).unwrap();
        assert!(check_hde_definition(&c4, &c4, &int(1), &Scope::Exhaustive { n: 4 })
            .unwrap()
            .holds());
        assert!(matches!(
            hde_definition(&f1, &f2, &ratio(-1, 2), &f2),
            Err(Error::InvalidExponent(_))
        ));
        let k3 = Graph::complete(3).unwrap();
        assert!(hde_definition(&k3, &k3, &int(0), &Graph::path(1)).unwrap().holds);
    }

    #[test]
    fn sweeps_over_density_and_chain() {
        let r = sweep_density_form(2, 3, &Scope::Exhaustive { n: 3 }).unwrap();
        assert_eq!(
            (r.verdict, r.params["forms_agree"].as_str()),
            (Verdict::CounterexampleFound, "true")
        );
        assert!(sweep_chain(1, 5, &Scope::ExhaustiveUpTo { n_max: 4 }).unwrap().holds());
    }

    #[test]
    fn lemma_suite_small() {
        let r = lemma_identity_suite(2, 5, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.graphs_checked, 3 + 1 + 5);
    }

    #[test]
    fn random_scope_is_deterministic() {
        let scope = Scope::Random {
            samples: 20,
            n: 7,
            edge_prob: ratio(1, 3),
            seed: 11,
        };
        assert_eq!(scope.graphs().unwrap(), scope.graphs().unwrap());
        assert!(sweep(3, 5, &scope).unwrap().holds());
    }
}
