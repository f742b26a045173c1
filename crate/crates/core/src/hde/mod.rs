//! Homomorphism domination exponents of a chordal source and a
//! series-parallel target, computed as an exact min–max linear program over
//! the polymatroid polytope of the target.

mod certificate;

pub use certificate::{certify_lower, certify_lower_batch, certify_upper, flagship_source, phi_i, psi};

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{clique_tree, is_chordal, is_series_parallel, maximal_cliques, Graph, VertexSet};
use crate::hom::{enumerate_homs, Homomorphism};
use crate::lp::{self, LinearProgram, Relation, Sense};
use crate::polymatroid::{build_polytope, SetFunction, MAX_GROUND};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ObjectiveForm {
    /// Inclusion–exclusion over subsets of maximal cliques.
    Subset,
    /// One term per clique-tree node and separator.
    #[default]
    CliqueTree,
}

/// The linear functional `p ↦ Σ coeff_S p(S)` that one homomorphism
/// contributes to the inner maximum. The empty set never carries a term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ObjectiveProfile {
    pub coeffs: BTreeMap<VertexSet, Rational>,
    pub form: ObjectiveForm,
    pub phi: Homomorphism,
}

impl ObjectiveProfile {
    fn from_counts(counts: BTreeMap<VertexSet, i64>, form: ObjectiveForm, phi: &Homomorphism) -> Self {
        ObjectiveProfile {
            coeffs: counts
                .into_iter()
                .filter(|(s, c)| *s != 0 && *c != 0)
                .map(|(s, c)| (s, int(c)))
                .collect(),
            form,
            phi: phi.clone(),
        }
    }

    pub fn evaluate(&self, p: &SetFunction) -> Rational {
        self.coeffs.iter().map(|(s, c)| c * p.get(*s)).sum()
    }

    pub fn coefficient(&self, set: VertexSet) -> Rational {
        self.coeffs.get(&set).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Precomputed clique structure of a source graph, reused across the
/// homomorphisms of one component.
enum CliqueData {
    Subset(Vec<VertexSet>),
    Tree {
        nodes: Vec<VertexSet>,
        separators: Vec<VertexSet>,
    },
}

impl CliqueData {
    fn new(f1: &Graph, form: ObjectiveForm) -> Result<Self> {
        Ok(match form {
            ObjectiveForm::Subset => CliqueData::Subset(maximal_cliques(f1)),
            ObjectiveForm::CliqueTree => {
                let tree = clique_tree(f1)?;
                CliqueData::Tree {
                    nodes: tree.cliques,
                    separators: tree.separators,
                }
            }
        })
    }

    fn form(&self) -> ObjectiveForm {
        match self {
            CliqueData::Subset(_) => ObjectiveForm::Subset,
            CliqueData::Tree { .. } => ObjectiveForm::CliqueTree,
        }
    }

    fn profile(&self, phi: &Homomorphism) -> ObjectiveProfile {
        let mut counts = BTreeMap::new();
        match self {
            CliqueData::Subset(cliques) => subset_terms(cliques, phi, 0, 0, 0, &mut counts),
            CliqueData::Tree { nodes, separators } => {
                for c in nodes {
                    *counts.entry(phi.image(*c)).or_insert(0) += 1;
                }
                for s in separators.iter().filter(|s| **s != 0) {
                    *counts.entry(phi.image(*s)).or_insert(0) -= 1;
                }
            }
        }
        ObjectiveProfile::from_counts(counts, self.form(), phi)
    }
}

/// Adds `-(-1)^|S|` at `φ(∩S)` for every clique subset `S` extending the
/// current one with a nonempty intersection; empty intersections are pruned
/// with all their supersets.
fn subset_terms(
    cliques: &[VertexSet],
    phi: &Homomorphism,
    start: usize,
    inter: VertexSet,
    size: usize,
    counts: &mut BTreeMap<VertexSet, i64>,
) {
    for j in start..cliques.len() {
        let next = if size == 0 { cliques[j] } else { inter & cliques[j] };
        if next == 0 {
            continue;
        }
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        *counts.entry(phi.image(next)).or_insert(0) += sign;
        subset_terms(cliques, phi, j + 1, next, size + 1, counts);
    }
}

fn check_hom(f1: &Graph, phi: &Homomorphism, f2: &Graph) -> Result<()> {
    if phi.is_valid(f1, f2) {
        Ok(())
    } else {
        Err(Error::MalformedInput(format!("{:?} is not a homomorphism", phi.map)))
    }
}

pub fn objective_subset_form(f1: &Graph, phi: &Homomorphism, f2: &Graph) -> Result<ObjectiveProfile> {
    check_hom(f1, phi, f2)?;
    Ok(CliqueData::new(f1, ObjectiveForm::Subset)?.profile(phi))
}

pub fn objective_clique_tree_form(f1: &Graph, phi: &Homomorphism, f2: &Graph) -> Result<ObjectiveProfile> {
    check_hom(f1, phi, f2)?;
    Ok(CliqueData::new(f1, ObjectiveForm::CliqueTree)?.profile(phi))
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LpStats {
    pub vars: usize,
    pub constraints: usize,
    pub pivots: usize,
}

/// Maximizing homomorphisms of one distinct connected component of the
/// source at the optimal point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentWitness {
    pub component: Graph,
    pub multiplicity: usize,
    pub value: Rational,
    pub distinct_profiles: usize,
    pub argmax: Homomorphism,
    /// Set when the clique-tree and subset forms disagreed on this component
    /// and the subset form was used instead.
    pub fell_back_to_subset_form: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HdeResult {
    pub value: Rational,
    pub optimal_p: SetFunction,
    pub witnesses: Vec<ComponentWitness>,
    pub lp: LpStats,
    /// The LP optimum passed the independent certificate check.
    pub verified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HdeOptions {
    pub form: ObjectiveForm,
    /// Use one epigraph variable per distinct connected component instead
    /// of one constraint per homomorphism of the whole source.
    pub decompose: bool,
}

impl Default for HdeOptions {
    fn default() -> Self {
        HdeOptions {
            form: ObjectiveForm::CliqueTree,
            decompose: true,
        }
    }
}

pub fn compute_hde(f1: &Graph, f2: &Graph) -> Result<HdeResult> {
    compute_hde_with(f1, f2, HdeOptions::default())
}

struct Block {
    component: Graph,
    multiplicity: usize,
    profiles: Vec<ObjectiveProfile>,
    fell_back: bool,
}

fn build_block(component: Graph, multiplicity: usize, index: usize, f2: &Graph, form: ObjectiveForm) -> Result<Block> {
    let data = CliqueData::new(&component, form)?;
    // paths need no cross-check: both forms give +1 per edge, -1 per inner vertex
    let oracle = match form {
        ObjectiveForm::CliqueTree if component.as_path_length().is_none() => {
            Some(CliqueData::new(&component, ObjectiveForm::Subset)?)
        }
        _ => None,
    };
    let mut seen = HashMap::new();
    let mut profiles = Vec::new();
    let mut fallback_profiles = Vec::new();
    let mut fell_back = false;
    for phi in enumerate_homs(&component, f2) {
        let prof = data.profile(&phi);
        if let Some(o) = &oracle {
            let check = o.profile(&phi);
            fell_back |= check.coeffs != prof.coeffs;
            fallback_profiles.push(check);
        }
        if seen.insert(prof.coeffs.clone(), ()).is_none() {
            profiles.push(prof);
        }
    }
    if profiles.is_empty() {
        return Err(Error::NoHomomorphism(index));
    }
    if fell_back {
        let mut seen = HashMap::new();
        profiles = fallback_profiles
            .into_iter()
            .filter(|p| seen.insert(p.coeffs.clone(), ()).is_none())
            .collect();
    }
    Ok(Block {
        component,
        multiplicity,
        profiles,
        fell_back,
    })
}

/// Exact `HDE(F1; F2)`. Refuses unless `F1` is chordal and `F2` is
/// series-parallel.
pub fn compute_hde_with(f1: &Graph, f2: &Graph, options: HdeOptions) -> Result<HdeResult> {
    if f2.n() > MAX_GROUND {
        return Err(Error::GroundTooLarge(f2.n()));
    }
    if !is_chordal(f1).0 {
        return Err(Error::NotChordal);
    }
    if !is_series_parallel(f2) {
        return Err(Error::NotSeriesParallel);
    }
    let parts = if options.decompose {
        f1.component_multiset()
    } else {
        vec![(f1.clone(), 1)]
    };
    let blocks: Vec<Block> = parts
        .into_iter()
        .enumerate()
        .map(|(i, (c, m))| build_block(c, m, i, f2, options.form))
        .collect::<Result<_>>()?;

    let n2 = f2.n();
    let full: VertexSet = f2.vertex_set();
    let mut var_of: Vec<Option<usize>> = vec![None; 1 << n2];
    let mut subset_of_var = Vec::new();
    for s in 1..full {
        var_of[s as usize] = Some(subset_of_var.len());
        subset_of_var.push(s);
    }
    let num_p = subset_of_var.len();
    let mut lp = LinearProgram::new(Sense::Minimize, num_p + blocks.len());
    for v in 0..num_p {
        lp.set_lower(v, Rational::zero());
    }

    // p(∅) = 0 and p(V) = 1 are substituted; rows left without variables
    // must hold as constants
    let substitute = |terms: &[(VertexSet, Rational)], rhs: &Rational| {
        let mut row = Vec::new();
        let mut rhs = rhs.clone();
        for (s, c) in terms {
            if *s == full {
                rhs -= c;
            } else if let Some(v) = var_of[*s as usize] {
                row.push((v, c.clone()));
            }
        }
        (row, rhs)
    };
    for c in build_polytope(f2)?.constraints {
        let (row, rhs) = substitute(&c.terms, &c.rhs);
        if row.is_empty() {
            if !c.relation.holds(&Rational::zero(), &rhs) {
                return Err(Error::Solver(format!("constant constraint fails: {}", c.render())));
            }
            continue;
        }
        lp.add_constraint(row, c.relation, rhs);
    }
    for (b, block) in blocks.iter().enumerate() {
        let z = num_p + b;
        for prof in &block.profiles {
            let terms: Vec<_> = prof.coeffs.iter().map(|(s, c)| (*s, c.clone())).collect();
            let (mut row, rhs) = substitute(&terms, &Rational::zero());
            row.push((z, -Rational::one()));
            lp.add_constraint(row, Relation::Le, rhs);
        }
    }
    lp.set_objective(
        blocks
            .iter()
            .enumerate()
            .map(|(b, block)| (num_p + b, int(block.multiplicity as i64)))
            .collect(),
    );

    let outcome = lp::solve_presolved(&lp);
    let (Some(point), Some(value)) = (&outcome.point, &outcome.value) else {
        return Err(Error::Solver(format!("HDE program ended {:?}", outcome.status)));
    };
    let verified = lp::verify(&lp, &outcome);

    let mut optimal_p = SetFunction::from_fn(n2, |_| Rational::zero())?;
    optimal_p.set(full, Rational::one());
    for (v, s) in subset_of_var.iter().enumerate() {
        optimal_p.set(*s, point[v].clone());
    }
    let witnesses = blocks
        .into_iter()
        .map(|block| {
            let (best, argmax) = block
                .profiles
                .iter()
                .map(|p| (p.evaluate(&optimal_p), p))
                .fold(None::<(Rational, &ObjectiveProfile)>, |acc, (v, p)| match acc {
                    Some((bv, bp)) if bv >= v => Some((bv, bp)),
                    _ => Some((v, p)),
                })
                .expect("blocks have at least one profile");
            ComponentWitness {
                distinct_profiles: block.profiles.len(),
                argmax: argmax.phi.clone(),
                component: block.component,
                multiplicity: block.multiplicity,
                value: best,
                fell_back_to_subset_form: block.fell_back,
            }
        })
        .collect();

    Ok(HdeResult {
        value: value.clone(),
        optimal_p,
        witnesses,
        lp: LpStats {
            vars: lp.num_vars(),
            constraints: lp.constraints.len(),
            pivots: outcome.pivots,
        },
        verified,
    })
}
