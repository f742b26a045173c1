//! Conversion to `min c·x, A x = b, x >= 0, b >= 0` with one slack or
//! surplus column per inequality row.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use super::{Constraint, LinearProgram, Relation, Row, Sense};
use crate::rational::Rational;

/// How an original variable is expressed through standard columns:
/// `x = offset + sign * col`, or `x = pos - neg` for free variables.
#[derive(Clone, Debug)]
pub(crate) enum VarMap {
    Shifted { col: usize, offset: Rational },
    Reflected { col: usize, offset: Rational },
    Split { pos: usize, neg: usize },
}

#[derive(Clone, Debug)]
pub(crate) struct StandardForm {
    pub rows: Vec<Row>,
    pub rhs: Vec<Rational>,
    pub cost: Vec<Rational>,
    /// Constant added to `cost · x` to give the minimization objective.
    pub offset: Rational,
    pub num_cols: usize,
    pub var_map: Vec<VarMap>,
    /// Slack or surplus column of each row, with its coefficient after
    /// orientation.
    pub slack: Vec<Option<(usize, Rational)>>,
    /// Original constraint behind each row (`None` for upper-bound rows) and
    /// whether the row was negated to make its right side non-negative.
    pub source: Vec<(Option<usize>, bool)>,
}

impl StandardForm {
    pub fn from_lp(lp: &LinearProgram) -> Self {
        let mut num_cols = 0;
        let mut var_map = Vec::with_capacity(lp.num_vars());
        let mut extra = Vec::new();
        for b in &lp.bounds {
            let m = match (&b.lower, &b.upper) {
                (Some(l), upper) => {
                    let col = num_cols;
                    num_cols += 1;
                    if let Some(u) = upper {
                        extra.push(Constraint {
                            coeffs: vec![(col, Rational::one())],
                            relation: Relation::Le,
                            rhs: u - l,
                        });
                    }
                    VarMap::Shifted { col, offset: l.clone() }
                }
                (None, Some(u)) => {
                    num_cols += 1;
                    VarMap::Reflected {
                        col: num_cols - 1,
                        offset: u.clone(),
                    }
                }
                (None, None) => {
                    num_cols += 2;
                    VarMap::Split {
                        pos: num_cols - 2,
                        neg: num_cols - 1,
                    }
                }
            };
            var_map.push(m);
        }

        let substitute = |row: &Row| -> (Row, Rational) {
            let mut out: Vec<(usize, Rational)> = Vec::new();
            let mut constant = Rational::zero();
            for (j, a) in row {
                match &var_map[*j] {
                    VarMap::Shifted { col, offset } => {
                        out.push((*col, a.clone()));
                        constant += a * offset;
                    }
                    VarMap::Reflected { col, offset } => {
                        out.push((*col, -a));
                        constant += a * offset;
                    }
                    VarMap::Split { pos, neg } => {
                        out.push((*pos, a.clone()));
                        out.push((*neg, -a));
                    }
                }
            }
            out.sort_by_key(|(c, _)| *c);
            let mut merged: Row = Vec::with_capacity(out.len());
            for (c, a) in out {
                match merged.last_mut() {
                    Some((lc, la)) if *lc == c => *la += a,
                    _ => merged.push((c, a)),
                }
            }
            merged.retain(|(_, a)| !a.is_zero());
            (merged, constant)
        };

        let mut seen = HashSet::new();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut slack = Vec::new();
        let mut pending = Vec::new();
        let mut source = Vec::new();
        let substituted = lp.constraints.iter().enumerate().map(|(i, c)| {
            let (row, constant) = substitute(&c.coeffs);
            (Some(i), (row, c.relation, &c.rhs - constant))
        });
        // upper-bound rows are already expressed in standard columns
        let bound_rows = extra.into_iter().map(|c| (None, (c.coeffs, c.relation, c.rhs)));
        for (origin, entry) in substituted.chain(bound_rows) {
            if seen.insert(entry.clone()) {
                pending.push((origin, entry));
            }
        }
        for (origin, (mut row, rel, mut b)) in pending {
            let mut s = match rel {
                Relation::Le => Some(Rational::one()),
                Relation::Ge => Some(-Rational::one()),
                Relation::Eq => None,
            };
            // a zero right side on a >= row flips too, so its slack can start basic
            let negated = b.is_negative() || (b.is_zero() && rel == Relation::Ge);
            if negated {
                for (_, a) in row.iter_mut() {
                    *a = -a.clone();
                }
                b = -b;
                s = s.map(|v| -v);
            }
            source.push((origin, negated));
            let entry = s.map(|coef| {
                let col = num_cols;
                num_cols += 1;
                row.push((col, coef.clone()));
                (col, coef)
            });
            rows.push(row);
            rhs.push(b);
            slack.push(entry);
        }

        let flip = lp.sense == Sense::Maximize;
        let objective: Row = lp
            .objective
            .iter()
            .map(|(j, a)| (*j, if flip { -a } else { a.clone() }))
            .collect();
        let (obj_row, offset) = substitute(&objective);
        let mut cost = vec![Rational::zero(); num_cols];
        for (c, a) in obj_row {
            cost[c] = a;
        }
        StandardForm {
            rows,
            rhs,
            cost,
            offset,
            num_cols,
            var_map,
            slack,
            source,
        }
    }

    /// Standard-form values implied by an original point, including slacks.
    pub fn lift(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.num_cols];
        for (j, m) in self.var_map.iter().enumerate() {
            match m {
                VarMap::Shifted { col, offset } => out[*col] = &x[j] - offset,
                VarMap::Reflected { col, offset } => out[*col] = offset - &x[j],
                VarMap::Split { pos, neg } => {
                    if x[j].is_negative() {
                        out[*neg] = -&x[j];
                    } else {
                        out[*pos] = x[j].clone();
                    }
                }
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            if let Some((col, coef)) = &self.slack[i] {
                let activity: Rational = row.iter().filter(|(c, _)| c != col).map(|(c, a)| a * &out[*c]).sum();
                out[*col] = (&self.rhs[i] - activity) / coef;
            }
        }
        out
    }

    /// Original point from standard-form values.
    pub fn project(&self, values: &[Rational]) -> Vec<Rational> {
        self.var_map
            .iter()
            .map(|m| match m {
                VarMap::Shifted { col, offset } => offset + &values[*col],
                VarMap::Reflected { col, offset } => offset - &values[*col],
                VarMap::Split { pos, neg } => &values[*pos] - &values[*neg],
            })
            .collect()
    }
}
