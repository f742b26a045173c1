//! Exact rational linear programming.
//!
//! Problems are solved by a two-phase simplex method on a dictionary
//! tableau with Bland's rule, so every run terminates and is deterministic.
//! Optimal outcomes carry the final basis, from which [`verify`] recovers
//! dual values and re-proves optimality independently of the pivoting.
//! [`solve_presolved`] first eliminates equality rows and instead returns
//! one dual value per original constraint, checked by [`verify_duals`].

mod dump;
mod presolve;
mod simplex;
mod standard;
mod verify;

pub use dump::{parse_dump, to_dump};
pub use presolve::solve_presolved;
pub use simplex::solve;
pub use verify::{constraint_duals, dual_values, verify, verify_duals};

use num_traits::Zero;
use serde::Serialize;

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

/// Sparse row: `(variable, coefficient)` pairs.
pub type Row = Vec<(usize, Rational)>;

pub fn eval_row(row: &[(usize, Rational)], x: &[Rational]) -> Rational {
    row.iter().map(|(j, a)| a * &x[*j]).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Row,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

/// A linear program over exact rationals. Variables are free unless bounds
/// are set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Row,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<Bounds>,
}

impl LinearProgram {
    pub fn new(sense: Sense, num_vars: usize) -> Self {
        LinearProgram {
            sense,
            objective: Vec::new(),
            constraints: Vec::new(),
            bounds: vec![Bounds::default(); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn add_var(&mut self) -> usize {
        self.bounds.push(Bounds::default());
        self.bounds.len() - 1
    }

    pub fn set_objective(&mut self, objective: Row) {
        self.objective = objective;
    }

    pub fn add_constraint(&mut self, coeffs: Row, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn set_lower(&mut self, var: usize, value: Rational) {
        self.bounds[var].lower = Some(value);
    }

    pub fn set_upper(&mut self, var: usize, value: Rational) {
        self.bounds[var].upper = Some(value);
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        eval_row(&self.objective, x)
    }

    /// Indices of violated constraints, followed by `constraints.len() + j`
    /// for each violated bound on variable `j`.
    pub fn violations(&self, x: &[Rational]) -> Vec<usize> {
        let mut bad: Vec<usize> = self
            .constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.relation.holds(&eval_row(&c.coeffs, x), &c.rhs))
            .map(|(i, _)| i)
            .collect();
        for (j, b) in self.bounds.iter().enumerate() {
            let low = b.lower.as_ref().is_some_and(|l| &x[j] < l);
            let high = b.upper.as_ref().is_some_and(|u| &x[j] > u);
            if low || high {
                bad.push(self.constraints.len() + j);
            }
        }
        bad
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars() && self.violations(x).is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Final basis in terms of the internal standard form: `columns[i]` is basic
/// in standard row `rows[i]`. Rows found redundant during phase one are
/// listed in `dropped_rows`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Basis {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
    pub dropped_rows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
    pub basis: Option<Basis>,
    /// One multiplier per original constraint for the minimization form of
    /// the problem (objective negated when maximizing).
    pub duals: Option<Vec<Rational>>,
    pub pivots: usize,
}

impl LpOutcome {
    pub(crate) fn without_solution(status: LpStatus, pivots: usize) -> Self {
        LpOutcome {
            status,
            value: None,
            point: None,
            basis: None,
            duals: None,
            pivots,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    r > &Rational::zero()
}
