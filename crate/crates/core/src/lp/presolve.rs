//! Equality elimination ahead of the simplex method.
//!
//! Equality rows are brought to reduced row echelon form and their pivot
//! variables substituted away. The remaining inequalities, including the
//! bounds of eliminated variables, are scaled to `>=` rows with a unit
//! leading coefficient and deduplicated, keeping the tightest right side.
//! The reduced problem is solved with [`solve`] and its duals are mapped
//! back to one multiplier per original constraint.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::simplex::solve;
use super::verify::{constraint_duals, gauss_solve};
use super::{LinearProgram, LpOutcome, LpStatus, Relation, Row, Sense};
use crate::rational::Rational;

#[derive(Clone, Copy)]
enum Origin {
    Constraint(usize),
    Lower(usize),
    Upper(usize),
}

/// Dense `coeffs | rhs` with a unit entry at `var`, zero at every other pivot.
struct PivotRow {
    var: usize,
    coeffs: Vec<Rational>,
    rhs: Rational,
}

fn dense(row: &Row, n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for (j, a) in row {
        v[*j] += a;
    }
    v
}

fn eliminate(coeffs: &mut [Rational], rhs: &mut Rational, pivots: &[PivotRow]) {
    for p in pivots {
        if coeffs[p.var].is_zero() {
            continue;
        }
        let f = coeffs[p.var].clone();
        for (a, b) in coeffs.iter_mut().zip(&p.coeffs) {
            if !b.is_zero() {
                *a -= &f * b;
            }
        }
        *rhs -= &f * &p.rhs;
    }
}

pub fn solve_presolved(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars();
    let mut pivots: Vec<PivotRow> = Vec::new();
    let mut independent = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.relation != Relation::Eq {
            continue;
        }
        let mut coeffs = dense(&c.coeffs, n);
        let mut rhs = c.rhs.clone();
        eliminate(&mut coeffs, &mut rhs, &pivots);
        let Some(var) = coeffs.iter().position(|a| !a.is_zero()) else {
            if !rhs.is_zero() {
                return LpOutcome::without_solution(LpStatus::Infeasible, 0);
            }
            continue;
        };
        let lead = coeffs[var].clone();
        for a in coeffs.iter_mut() {
            *a /= &lead;
        }
        rhs /= &lead;
        let new = PivotRow { var, coeffs, rhs };
        for p in pivots.iter_mut() {
            eliminate(&mut p.coeffs, &mut p.rhs, std::slice::from_ref(&new));
        }
        pivots.push(new);
        independent.push(i);
    }

    let mut is_pivot = vec![false; n];
    for p in &pivots {
        is_pivot[p.var] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut reduced_index = vec![usize::MAX; n];
    for (k, &j) in free.iter().enumerate() {
        reduced_index[j] = k;
    }
    let compress = |coeffs: &[Rational]| -> Row {
        free.iter()
            .filter(|&&j| !coeffs[j].is_zero())
            .map(|&j| (reduced_index[j], coeffs[j].clone()))
            .collect()
    };

    // substituted inequalities, each as `σ · row >= σ · rhs`
    let mut candidates: Vec<(Origin, Vec<Rational>, Relation, Rational)> = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.relation != Relation::Eq {
            candidates.push((Origin::Constraint(i), dense(&c.coeffs, n), c.relation, c.rhs.clone()));
        }
    }
    for p in &pivots {
        let unit = dense(&vec![(p.var, Rational::one())], n);
        if let Some(l) = &lp.bounds[p.var].lower {
            candidates.push((Origin::Lower(p.var), unit.clone(), Relation::Ge, l.clone()));
        }
        if let Some(u) = &lp.bounds[p.var].upper {
            candidates.push((Origin::Upper(p.var), unit, Relation::Le, u.clone()));
        }
    }
    let mut kept: Vec<(Origin, Rational, Row, Rational)> = Vec::new();
    let mut by_row: HashMap<Row, usize> = HashMap::new();
    for (origin, mut coeffs, relation, mut rhs) in candidates {
        eliminate(&mut coeffs, &mut rhs, &pivots);
        let Some(lead) = free.iter().map(|&j| &coeffs[j]).find(|a| !a.is_zero()) else {
            if !relation.holds(&Rational::zero(), &rhs) {
                return LpOutcome::without_solution(LpStatus::Infeasible, 0);
            }
            continue;
        };
        let mut scale = Rational::one() / lead.abs();
        if relation == Relation::Le {
            scale = -scale;
        }
        let row: Row = compress(&coeffs).into_iter().map(|(k, a)| (k, a * &scale)).collect();
        let rhs = rhs * &scale;
        match by_row.get(&row) {
            Some(&at) if kept[at].3 >= rhs => {}
            Some(&at) => kept[at] = (origin, scale, row, rhs),
            None => {
                by_row.insert(row.clone(), kept.len());
                kept.push((origin, scale, row, rhs));
            }
        }
    }

    let mut reduced = LinearProgram::new(lp.sense, free.len());
    for (k, &j) in free.iter().enumerate() {
        reduced.bounds[k] = lp.bounds[j].clone();
    }
    let mut objective = dense(&lp.objective, n);
    let mut constant = Rational::zero();
    eliminate(&mut objective, &mut constant, &pivots);
    reduced.set_objective(compress(&objective));
    for (_, _, row, rhs) in &kept {
        reduced.add_constraint(row.clone(), Relation::Ge, rhs.clone());
    }

    let inner = solve(&reduced);
    let (Some(xr), Some(basis)) = (&inner.point, &inner.basis) else {
        return LpOutcome::without_solution(inner.status, inner.pivots);
    };
    let mut point = vec![Rational::zero(); n];
    for (k, &j) in free.iter().enumerate() {
        point[j] = xr[k].clone();
    }
    for p in &pivots {
        let mut v = p.rhs.clone();
        for &j in &free {
            if !p.coeffs[j].is_zero() {
                v -= &p.coeffs[j] * &point[j];
            }
        }
        point[p.var] = v;
    }
    let value = lp.objective_value(&point);
    let duals = constraint_duals(&reduced, basis).and_then(|yr| lift_duals(lp, &pivots, &independent, &kept, &yr));
    LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(point),
        basis: None,
        duals,
        pivots: inner.pivots,
    }
}

/// Multipliers of the original constraints: inequalities inherit the scaled
/// duals of their reduced rows, and the independent equalities are solved so
/// that each eliminated variable's reduced cost matches its bound multiplier.
fn lift_duals(
    lp: &LinearProgram,
    pivots: &[PivotRow],
    independent: &[usize],
    kept: &[(Origin, Rational, Row, Rational)],
    yr: &[Rational],
) -> Option<Vec<Rational>> {
    let n = lp.num_vars();
    let mut y = vec![Rational::zero(); lp.constraints.len()];
    let mut bound_mult = vec![Rational::zero(); n];
    for ((origin, scale, _, _), v) in kept.iter().zip(yr) {
        let m = scale * v;
        match origin {
            Origin::Constraint(i) => y[*i] = m,
            Origin::Lower(j) | Origin::Upper(j) => bound_mult[*j] += m,
        }
    }
    let mut residual = dense(&lp.objective, n);
    if lp.sense == Sense::Maximize {
        for a in residual.iter_mut() {
            *a = -a.clone();
        }
    }
    for (c, yi) in lp.constraints.iter().zip(&y) {
        if !yi.is_zero() {
            for (j, a) in &c.coeffs {
                residual[*j] -= yi * a;
            }
        }
    }
    let size = pivots.len();
    let mut column = vec![usize::MAX; n];
    for (k, p) in pivots.iter().enumerate() {
        column[p.var] = k;
    }
    // Σ_e y_e a_e[p] = residual[p] - bound_mult[p] for every pivot variable p
    let mut system = vec![vec![Rational::zero(); size + 1]; size];
    for (k, &e) in independent.iter().enumerate() {
        for (j, a) in &lp.constraints[e].coeffs {
            if column[*j] != usize::MAX {
                system[column[*j]][k] += a;
            }
        }
    }
    for p in pivots {
        system[column[p.var]][size] = &residual[p.var] - &bound_mult[p.var];
    }
    let ye = gauss_solve(system)?;
    for (k, &e) in independent.iter().enumerate() {
        y[e] = ye[k].clone();
    }
    Some(y)
}
