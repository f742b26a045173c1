//! Brute-force LP oracle shared by the oracle and acceptance suites: status
//! and optimum by vertex and extreme-ray enumeration over pointed polyhedra.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use walkhde::lp::{solve, solve_presolved, verify, LinearProgram, LpStatus, Relation, Sense};
use walkhde::rational::{int, Rational};

/// Dense row, relation, right side.
type Half = (Vec<Rational>, Relation, Rational);

fn halfspaces(lp: &LinearProgram) -> Vec<Half> {
    let n = lp.num_vars();
    let mut out = Vec::new();
    for c in &lp.constraints {
        let mut a = vec![Rational::zero(); n];
        for (j, v) in &c.coeffs {
            a[*j] += v;
        }
        out.push((a, c.relation, c.rhs.clone()));
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        let mut e = vec![Rational::zero(); n];
        e[j] = int(1);
        if let Some(l) = &b.lower {
            out.push((e.clone(), Relation::Ge, l.clone()));
        }
        if let Some(u) = &b.upper {
            out.push((e, Relation::Le, u.clone()));
        }
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (v, w) in m[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * w;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn satisfies(h: &[Half], x: &[Rational]) -> bool {
    h.iter().all(|(a, rel, b)| {
        let lhs: Rational = a.iter().zip(x).map(|(p, q)| p * q).sum();
        rel.holds(&lhs, b)
    })
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize == size {
            out.push((0..m).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

fn vertices(h: &[Half], n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for s in subsets(h.len(), n) {
        let mut m: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| {
                let mut row = h[i].0.clone();
                row.push(h[i].2.clone());
                row
            })
            .collect();
        if rref(&mut m, n).len() < n {
            continue;
        }
        let x: Vec<Rational> = (0..n).map(|j| m[j][n].clone()).collect();
        if satisfies(h, &x) {
            out.push(x);
        }
    }
    out
}

fn extreme_rays(h: &[Half], n: usize) -> Vec<Vec<Rational>> {
    let cone: Vec<Half> = h.iter().map(|(a, r, _)| (a.clone(), *r, Rational::zero())).collect();
    let mut out = Vec::new();
    for s in subsets(h.len(), n - 1) {
        let mut m: Vec<Vec<Rational>> = s.iter().map(|&i| h[i].0.clone()).collect();
        let pivots = rref(&mut m, n);
        if pivots.len() != n - 1 {
            continue;
        }
        let free = (0..n).find(|c| !pivots.contains(c)).unwrap();
        let mut d = vec![Rational::zero(); n];
        d[free] = int(1);
        for (r, &p) in pivots.iter().enumerate() {
            d[p] = -m[r][free].clone();
        }
        for sign in [1, -1] {
            let dir: Vec<Rational> = d.iter().map(|v| v * int(sign)).collect();
            if satisfies(&cone, &dir) {
                out.push(dir);
            }
        }
    }
    out
}

fn pointed(h: &[Half], n: usize) -> bool {
    let mut m: Vec<Vec<Rational>> = h.iter().map(|(a, _, _)| a.clone()).collect();
    rref(&mut m, n).len() == n
}

/// Status and optimal value by enumeration over a pointed polyhedron.
pub fn oracle(lp: &LinearProgram) -> (LpStatus, Option<Rational>) {
    let n = lp.num_vars();
    let h = halfspaces(lp);
    let verts = vertices(&h, n);
    if verts.is_empty() {
        return (LpStatus::Infeasible, None);
    }
    let sign = if lp.sense == Sense::Minimize { int(1) } else { int(-1) };
    let mut c = vec![Rational::zero(); n];
    for (j, v) in &lp.objective {
        c[*j] += v * &sign;
    }
    let dot = |x: &[Rational]| -> Rational { c.iter().zip(x).map(|(p, q)| p * q).sum() };
    if extreme_rays(&h, n).iter().any(|d| dot(d).is_negative()) {
        return (LpStatus::Unbounded, None);
    }
    let best = verts.iter().map(|x| dot(x)).min().unwrap();
    (LpStatus::Optimal, Some(best * sign))
}

pub fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    loop {
        let n = rng.gen_range(1..=3);
        let sense = if rng.gen_bool(0.5) {
            Sense::Minimize
        } else {
            Sense::Maximize
        };
        let mut lp = LinearProgram::new(sense, n);
        let objective = (0..n)
            .map(|j| (j, int(rng.gen_range(-4..=4))))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        lp.set_objective(objective);
        for _ in 0..rng.gen_range(1..=4) {
            let mut row = Vec::new();
            for j in 0..n {
                let a = rng.gen_range(-4..=4);
                if a != 0 && rng.gen_bool(0.8) {
                    row.push((j, int(a)));
                }
            }
            let relation = match rng.gen_range(0..20) {
                0..=2 => Relation::Eq,
                3..=11 => Relation::Le,
                _ => Relation::Ge,
            };
            lp.add_constraint(row, relation, int(rng.gen_range(-6..=6)));
        }
        for j in 0..n {
            match rng.gen_range(0..6) {
                0..=2 => lp.set_lower(j, int(rng.gen_range(-3..=3))),
                3 => {
                    let l = rng.gen_range(-3..=3);
                    lp.set_lower(j, int(l));
                    lp.set_upper(j, int(l + rng.gen_range(0..=4)));
                }
                4 => lp.set_upper(j, int(rng.gen_range(-3..=3))),
                _ => {}
            }
        }
        if pointed(&halfspaces(&lp), n) {
            return lp;
        }
    }
}

/// Runs both solvers on `count` seeded random LPs; returns the first
/// mismatch, if any, and how many of each status were seen.
pub fn compare_random_lps(count: usize, seed: u64) -> (Option<String>, [usize; 3]) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = [0usize; 3];
    for case in 0..count {
        let lp = random_lp(&mut rng);
        let (status, value) = oracle(&lp);
        seen[status as usize] += 1;
        for (name, out) in [("plain", solve(&lp)), ("presolved", solve_presolved(&lp))] {
            let agrees = out.status == status
                && out.value == value
                && (status != LpStatus::Optimal
                    || (out.point.as_ref().is_some_and(|x| lp.is_feasible(x)) && verify(&lp, &out)));
            if !agrees {
                return (Some(format!("case {case} ({name} solver)")), seen);
            }
        }
    }
    (None, seen)
}
