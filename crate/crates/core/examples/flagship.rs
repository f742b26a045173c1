use std::time::Instant;
use walkhde::graph::Graph;
use walkhde::hde::{compute_hde, flagship_source};

fn main() {
    let t: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let r = compute_hde(&flagship_source(t).unwrap(), &Graph::path(t)).unwrap();
    println!(
        "t={t} hde={} vars={} constraints={} pivots={} verified={} elapsed={:?}",
        r.value,
        r.lp.vars,
        r.lp.constraints,
        r.lp.pivots,
        r.verified,
        start.elapsed()
    );
}
