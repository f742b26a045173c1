use std::path::Path;

use serde_json::{json, Value};
use walkhde::graph::{parse_graph, parse_spec, serialize_graph};
use walkhde::hde::{certify_lower_batch, certify_upper};
use walkhde::hom::{average_degree, walk_count};
use walkhde::lab::{
    chain_exponents, check_hde_definition, find_counterexample, lemma_identity_suite, sweep, sweep_chain,
    sweep_density_form, sweep_with, CheckReport, Scope, WalkCheck,
};
use walkhde::polymatroid::{build_polytope, build_polytope_unpruned};
use walkhde::rational::{fmt_rational, from_count, int, parse_rational, Rational};
use walkhde::{compute_hde, Error, Graph};

use crate::config::{Command, Expect, Mode, RunConfig, ScopeArgs, VerifyArgs};

pub const OK: u8 = 0;
pub const UNEXPECTED: u8 = 1;
pub const USAGE: u8 = 2;
pub const PRECONDITION: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: String) -> Self {
        Failure { code: USAGE, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotChordal
            | Error::NotSeriesParallel
            | Error::NoHomomorphism(_)
            | Error::GroundTooLarge(_)
            | Error::GraphTooLarge(_) => PRECONDITION,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(Value, u8), Failure>;

fn read_graph_file(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

/// A graph spec, or failing that, a graph file.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    match parse_spec(arg) {
        Ok(g) => Ok(g),
        Err(e) if Path::new(arg).is_file() => read_graph_file(Path::new(arg)).map_err(|_| e.into()),
        Err(e) => Err(e.into()),
    }
}

fn required<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for this mode")))
}

fn rational_arg(text: &str, flag: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| Failure::usage(format!("--{flag}: not a rational number: {text}")))
}

fn scope_of(args: &ScopeArgs, graph: Option<&Path>) -> Result<Option<Scope>, Failure> {
    let mut scopes = Vec::new();
    if let Some(path) = graph {
        scopes.push(Scope::Given {
            graphs: vec![read_graph_file(path)?],
        });
    }
    if let Some(n_max) = args.exhaustive_n {
        scopes.push(Scope::ExhaustiveUpTo { n_max });
    }
    if let Some(n_max) = args.stars_and_paths {
        scopes.push(Scope::StarsAndPaths { n_max });
    }
    if let Some(n_max) = args.regular {
        scopes.push(Scope::RegularUpTo { n_max });
    }
    if let Some(samples) = args.samples {
        scopes.push(Scope::Random {
            samples,
            n: required(args.n, "n")?,
            edge_prob: rational_arg(&args.edge_prob, "edge-prob")?,
            seed: args.seed,
        });
    }
    match scopes.len() {
        0 | 1 => Ok(scopes.pop()),
        _ => Err(Failure::usage("give at most one scope".into())),
    }
}

pub fn dispatch(config: &RunConfig) -> Outcome {
    match &config.command {
        Command::Hde { f1, f2 } => cmd_hde(f1, f2),
        Command::Walks { graph, k } => cmd_walks(graph, *k),
        Command::Verify(args) => cmd_verify(args),
        Command::Certificate { t, batch, seed } => cmd_certificate(*t, *batch, *seed),
        Command::DumpPolytope { f2, unpruned } => cmd_dump_polytope(f2, *unpruned),
        Command::Replay { .. } => Err(Failure::usage("nested replay".into())),
    }
}

fn cmd_hde(f1: &str, f2: &str) -> Outcome {
    let g1 = load_graph(f1)?;
    let g2 = load_graph(f2)?;
    let r = compute_hde(&g1, &g2)?;
    let components: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "component": serialize_graph(&w.component),
                "multiplicity": w.multiplicity,
                "value": fmt_rational(&w.value),
                "distinct_profiles": w.distinct_profiles,
                "argmax": w.argmax.map,
                "fell_back_to_subset_form": w.fell_back_to_subset_form,
            })
        })
        .collect();
    let witness_p: Vec<Value> = r
        .optimal_p
        .entries()
        .into_iter()
        .map(|(set, value)| json!({ "set": set, "value": value }))
        .collect();
    let result = json!({
        "f1": f1,
        "f2": f2,
        "hde": fmt_rational(&r.value),
        "verified": r.verified,
        "lp": { "vars": r.lp.vars, "constraints": r.lp.constraints, "pivots": r.lp.pivots },
        "components": components,
        "witness_p": witness_p,
    });
    Ok((result, if r.verified { OK } else { UNEXPECTED }))
}

fn cmd_walks(path: &Path, k: usize) -> Outcome {
    let g = read_graph_file(path)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    let walks = walk_count(&g, k);
    let w_k = from_count(&walks) / int(g.n() as i64);
    let result = json!({
        "n": g.n(),
        "e": g.edge_count(),
        "k": k,
        "d": fmt_rational(&average_degree(&g)?),
        "walks": walks.to_string(),
        "w_k": fmt_rational(&w_k),
    });
    Ok((result, OK))
}

fn report_value(report: &CheckReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let scope = scope_of(&args.scope, args.graph.as_deref())?;
    let need_scope = || {
        scope
            .clone()
            .ok_or_else(|| Failure::usage("this mode needs a scope".into()))
    };
    let expect = args.expect.unwrap_or(match args.mode {
        Mode::Counterexample => Expect::Violation,
        _ => Expect::Holds,
    });
    let mut extra = serde_json::Map::new();
    let report = match args.mode {
        Mode::BlakleyRoy => sweep_with(
            WalkCheck::BlakleyRoy {
                k: required(args.k, "k")?,
            },
            &need_scope()?,
        )?,
        Mode::WalkInequality => sweep(required(args.t, "t")?, required(args.k, "k")?, &need_scope()?)?,
        Mode::DensityForm => sweep_density_form(required(args.t, "t")?, required(args.k, "k")?, &need_scope()?)?,
        Mode::Counterexample => find_counterexample(required(args.t, "t")?, required(args.k, "k")?, &need_scope()?)?,
        Mode::LemmaIdentity => {
            let ts: Vec<usize> = match args.t {
                Some(t) => vec![t],
                None => (1..=6).collect(),
            };
            let mut reports = Vec::new();
            for t in ts {
                reports.push(lemma_identity_suite(t, args.batch, args.scope.seed)?);
            }
            let holds = reports.iter().all(CheckReport::holds);
            let code = if holds == (expect == Expect::Holds) {
                OK
            } else {
                UNEXPECTED
            };
            let result = json!({
                "mode": args.mode,
                "expect": expect,
                "holds": holds,
                "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
            });
            return Ok((result, code));
        }
        Mode::Chain => {
            let t = required(args.t, "t")?;
            let k = required(args.k, "k")?;
            let product = chain_exponents(t, k)?;
            extra.insert("product".into(), json!(fmt_rational(&product)));
            let expected = Rational::new((k as i64).into(), (t as i64).into());
            extra.insert("product_matches".into(), json!(product == expected));
            match &scope {
                Some(s) => sweep_chain(t, k, s)?,
                None => {
                    let code = if product == expected { OK } else { UNEXPECTED };
                    let mut result = json!({ "mode": args.mode, "t": t, "k": k });
                    result.as_object_mut().expect("object").extend(extra);
                    return Ok((result, code));
                }
            }
        }
        Mode::HdeDefinition => {
            let f1 = load_graph(
                args.f1
                    .as_deref()
                    .ok_or_else(|| Failure::usage("--f1 is required".into()))?,
            )?;
            let f2 = load_graph(
                args.f2
                    .as_deref()
                    .ok_or_else(|| Failure::usage("--f2 is required".into()))?,
            )?;
            let c = rational_arg(
                args.c
                    .as_deref()
                    .ok_or_else(|| Failure::usage("--c is required".into()))?,
                "c",
            )?;
            check_hde_definition(&f1, &f2, &c, &need_scope()?)?
        }
    };
    let mut ok = report.holds() == (expect == Expect::Holds);
    if report.params.get("forms_agree").is_some_and(|v| v != "true") {
        ok = false;
    }
    if extra.get("product_matches") == Some(&json!(false)) {
        ok = false;
    }
    let mut result = json!({
        "mode": args.mode,
        "expect": expect,
        "report": report_value(&report),
    });
    result.as_object_mut().expect("object").extend(extra);
    Ok((result, if ok { OK } else { UNEXPECTED }))
}

fn cmd_certificate(t: usize, batch: usize, seed: u64) -> Outcome {
    if t.is_multiple_of(2) {
        return Err(Failure::usage(format!("t must be odd, got {t}")));
    }
    let expected = int(t as i64 + 2);
    let upper = certify_upper(t)?;
    let lower = certify_lower_batch(t, batch, seed)?;
    let all_equal = upper == expected && lower.iter().all(|v| *v == expected);
    let result = json!({
        "t": t,
        "expected": fmt_rational(&expected),
        "upper": fmt_rational(&upper),
        "lower": lower.iter().map(fmt_rational).collect::<Vec<_>>(),
        "batch": batch,
        "seed": seed,
        "all_equal": all_equal,
    });
    Ok((result, if all_equal { OK } else { UNEXPECTED }))
}

fn cmd_dump_polytope(f2: &str, unpruned: bool) -> Outcome {
    let g = load_graph(f2)?;
    let system = if unpruned {
        build_polytope_unpruned(&g)?
    } else {
        build_polytope(&g)?
    };
    let lines: Vec<String> = system.constraints.iter().map(|c| c.render()).collect();
    let result = json!({
        "f2": f2,
        "ground": system.ground,
        "variables": system.num_vars(),
        "constraints": lines.len(),
        "rows": lines,
    });
    Ok((result, OK))
}
