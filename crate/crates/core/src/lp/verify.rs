use num_traits::{Signed, Zero};

use super::standard::StandardForm;
use super::{eval_row, Basis, LinearProgram, LpOutcome, LpStatus, Relation, Sense};
use crate::rational::Rational;

/// Dual values, one per standard-form row, determined by the basis:
/// rows whose own slack is basic get zero, the rest solve `y^T B = c_B`.
/// Returns `None` when the basis is malformed or singular.
pub fn dual_values(lp: &LinearProgram, basis: &Basis) -> Option<Vec<Rational>> {
    let sf = StandardForm::from_lp(lp);
    duals_for(&sf, basis)
}

fn duals_for(sf: &StandardForm, basis: &Basis) -> Option<Vec<Rational>> {
    let m = sf.rows.len();
    if basis.rows.len() != basis.columns.len() || basis.rows.len() + basis.dropped_rows.len() != m {
        return None;
    }
    let mut row_seen = vec![false; m];
    for &r in basis.rows.iter().chain(&basis.dropped_rows) {
        if r >= m || std::mem::replace(&mut row_seen[r], true) {
            return None;
        }
    }
    let mut col_seen = vec![false; sf.num_cols];
    for &c in &basis.columns {
        if c >= sf.num_cols || std::mem::replace(&mut col_seen[c], true) {
            return None;
        }
    }

    let slack_owner: std::collections::HashMap<usize, usize> = sf
        .slack
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.as_ref().map(|(c, _)| (*c, i)))
        .collect();
    let mut known_zero = vec![false; m];
    for &r in &basis.dropped_rows {
        known_zero[r] = true;
    }
    let mut equations = Vec::new();
    for &c in &basis.columns {
        match slack_owner.get(&c) {
            Some(&r) if basis.rows.contains(&r) => known_zero[r] = true,
            _ => equations.push(c),
        }
    }
    let unknown: Vec<usize> = (0..m).filter(|&r| !known_zero[r]).collect();
    if unknown.len() != equations.len() {
        return None;
    }

    let mut col_index = vec![usize::MAX; sf.num_cols];
    for (k, &c) in equations.iter().enumerate() {
        col_index[c] = k;
    }
    let mut pos = vec![usize::MAX; m];
    for (k, &r) in unknown.iter().enumerate() {
        pos[r] = k;
    }
    let size = unknown.len();
    // system: for each equation column c, Σ_r y_r A[r][c] = cost[c]
    let mut mat = vec![vec![Rational::zero(); size + 1]; size];
    for (r, row) in sf.rows.iter().enumerate() {
        if pos[r] == usize::MAX {
            continue;
        }
        for (c, a) in row {
            if col_index[*c] != usize::MAX {
                mat[col_index[*c]][pos[r]] = a.clone();
            }
        }
    }
    for (k, &c) in equations.iter().enumerate() {
        mat[k][size] = sf.cost[c].clone();
    }
    let sol = gauss_solve(mat)?;
    let mut y = vec![Rational::zero(); m];
    for (k, &r) in unknown.iter().enumerate() {
        y[r] = sol[k].clone();
    }
    Some(y)
}

/// Multipliers for the original constraints derived from a basis, in the
/// convention of [`verify_duals`]. Duplicate constraints after the first get
/// zero.
pub fn constraint_duals(lp: &LinearProgram, basis: &Basis) -> Option<Vec<Rational>> {
    let sf = StandardForm::from_lp(lp);
    let y = duals_for(&sf, basis)?;
    let mut out = vec![Rational::zero(); lp.constraints.len()];
    for (r, (origin, negated)) in sf.source.iter().enumerate() {
        if let Some(i) = origin {
            out[*i] = if *negated { -&y[r] } else { y[r].clone() };
        }
    }
    Some(out)
}

/// Checks a Lagrangian optimality certificate in the original variables.
///
/// With `c` the objective of the minimization form, `y` one multiplier per
/// constraint (`>= 0` on `>=` rows, `<= 0` on `<=` rows) and
/// `d = c - Σ y_i a_i`, every positive `d_j` must sit at a lower bound of
/// `x_j`, every negative one at an upper bound, nonzero multipliers must
/// belong to tight rows, and the dual objective must equal the value.
pub fn verify_duals(lp: &LinearProgram, point: &[Rational], value: &Rational, y: &[Rational]) -> bool {
    if y.len() != lp.constraints.len() || !lp.is_feasible(point) || &lp.objective_value(point) != value {
        return false;
    }
    let flip = lp.sense == Sense::Maximize;
    let mut d = vec![Rational::zero(); lp.num_vars()];
    for (j, a) in &lp.objective {
        d[*j] += if flip { -a } else { a.clone() };
    }
    let mut dual_objective = Rational::zero();
    for (c, yi) in lp.constraints.iter().zip(y) {
        if yi.is_zero() {
            continue;
        }
        let sign_ok = match c.relation {
            Relation::Ge => yi.is_positive(),
            Relation::Le => yi.is_negative(),
            Relation::Eq => true,
        };
        if !sign_ok || eval_row(&c.coeffs, point) != c.rhs {
            return false;
        }
        for (j, a) in &c.coeffs {
            d[*j] -= yi * a;
        }
        dual_objective += yi * &c.rhs;
    }
    for (j, dj) in d.iter().enumerate() {
        let bound = if dj.is_positive() {
            &lp.bounds[j].lower
        } else if dj.is_negative() {
            &lp.bounds[j].upper
        } else {
            continue;
        };
        match bound {
            Some(b) if *b == point[j] => dual_objective += dj * b,
            _ => return false,
        }
    }
    let primal = if flip { -value } else { value.clone() };
    dual_objective == primal
}

/// Solves a square augmented system exactly; `None` if singular.
pub(crate) fn gauss_solve(mut a: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in &mut a[col][col..] {
            *x = &*x / &p;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&prow[col..]) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Re-proves an optimal outcome: the point satisfies every constraint and
/// bound, attains the reported value, and the duals recovered from the basis
/// are dual feasible with zero duality gap and complementary slackness.
///
/// Outcomes without a basis are checked through their constraint duals with
/// [`verify_duals`].
pub fn verify(lp: &LinearProgram, outcome: &LpOutcome) -> bool {
    if outcome.status != LpStatus::Optimal {
        return false;
    }
    let (Some(point), Some(value)) = (&outcome.point, &outcome.value) else {
        return false;
    };
    let Some(basis) = &outcome.basis else {
        return outcome
            .duals
            .as_ref()
            .is_some_and(|y| verify_duals(lp, point, value, y));
    };
    if !lp.is_feasible(point) || &lp.objective_value(point) != value {
        return false;
    }
    let sf = StandardForm::from_lp(lp);
    let Some(y) = duals_for(&sf, basis) else {
        return false;
    };
    let x = sf.lift(point);
    if x.iter().any(|v| v.is_negative()) {
        return false;
    }
    let mut reduced = sf.cost.clone();
    for (r, row) in sf.rows.iter().enumerate() {
        if y[r].is_zero() {
            continue;
        }
        for (c, a) in row {
            reduced[*c] -= &y[r] * a;
        }
    }
    if reduced.iter().any(|r| r.is_negative()) {
        return false;
    }
    // complementary slackness on columns
    if reduced.iter().zip(&x).any(|(r, v)| !r.is_zero() && !v.is_zero()) {
        return false;
    }
    let dual_objective: Rational = y.iter().zip(&sf.rhs).map(|(a, b)| a * b).sum::<Rational>() + &sf.offset;
    let primal = match lp.sense {
        Sense::Minimize => value.clone(),
        Sense::Maximize => -value,
    };
    dual_objective == primal
}
