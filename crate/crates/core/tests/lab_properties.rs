use walkhde::graph::{parse_graph, Graph};
use walkhde::lab::{
    blakley_roy, density_form, find_counterexample, sweep, sweep_with, walk_inequality, CheckReport, Scope, Verdict,
    WalkCheck,
};
use walkhde::rational::{fmt_rational, ratio};

fn all_up_to_five() -> Vec<Graph> {
    Scope::ExhaustiveUpTo { n_max: 5 }.graphs().unwrap()
}

#[test]
fn even_k_holds_for_every_t() {
    let graphs = all_up_to_five();
    for k in [2usize, 4, 6] {
        for t in 1..=k {
            for g in &graphs {
                assert!(walk_inequality(g, t, k).unwrap().holds, "t={t} k={k}");
            }
        }
    }
}

#[test]
fn density_and_walk_verdicts_coincide() {
    let graphs = all_up_to_five();
    for k in 1..=6 {
        for t in 1..=k {
            for g in &graphs {
                let w = walk_inequality(g, t, k).unwrap();
                let d = density_form(g, t, k).unwrap();
                assert_eq!(w.holds, d.holds, "t={t} k={k}");
                if t == k {
                    assert_eq!(w.lhs, w.rhs);
                    assert_eq!(d.lhs, d.rhs);
                }
            }
        }
    }
}

/// Recomputes a report's comparison from its witness graph text.
fn reproduce(report: &CheckReport, check: WalkCheck) {
    for w in &report.witnesses {
        let g = parse_graph(&w.graph).unwrap();
        let c = check.compare(&g).unwrap();
        assert_eq!(
            (fmt_rational(&c.lhs), fmt_rational(&c.rhs)),
            (w.lhs.clone(), w.rhs.clone())
        );
    }
}

#[test]
fn witnesses_reproduce_from_graph_text() {
    let scope = Scope::Random {
        samples: 40,
        n: 8,
        edge_prob: ratio(1, 3),
        seed: 2,
    };
    for check in [
        WalkCheck::BlakleyRoy { k: 5 },
        WalkCheck::WalkInequality { t: 3, k: 7 },
        WalkCheck::WalkInequality { t: 2, k: 5 },
        WalkCheck::DensityForm { t: 1, k: 5 },
    ] {
        let r = sweep_with(check, &scope).unwrap();
        assert!(!r.witnesses.is_empty());
        reproduce(&r, check);
    }
    let r = find_counterexample(2, 5, &Scope::StarsAndPaths { n_max: 6 }).unwrap();
    assert_eq!(r.verdict, Verdict::CounterexampleFound);
    reproduce(&r, WalkCheck::WalkInequality { t: 2, k: 5 });
}

#[test]
fn reports_serialize_without_runtime() {
    let r = sweep(1, 3, &Scope::Exhaustive { n: 4 }).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["verdict"], "holds");
    assert_eq!(json["graphs_checked"], 64);
    assert_eq!(json["params"]["scope"], "exhaustive");
    assert!(json.get("runtime").is_none());
}

#[test]
fn sweeps_are_deterministic_under_parallelism() {
    let scope = Scope::ExhaustiveUpTo { n_max: 5 };
    let a = serde_json::to_string(&sweep(2, 3, &scope).unwrap()).unwrap();
    let b = serde_json::to_string(&sweep(2, 3, &scope).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn blakley_roy_on_random_graphs() {
    let scope = Scope::Random {
        samples: 100,
        n: 12,
        edge_prob: ratio(1, 4),
        seed: 7,
    };
    for g in scope.graphs().unwrap() {
        for k in 0..=8 {
            assert!(blakley_roy(&g, k).unwrap().holds);
        }
    }
}
