use num_traits::{One, Zero};

use super::standard::StandardForm;
use super::{is_positive, Basis, LinearProgram, LpOutcome, LpStatus};
use crate::rational::Rational;

/// Tableau variable: a standard-form column or the artificial of a row.
/// Bland's rule orders standard columns before artificials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    Col(usize),
    Art(usize),
}

/// Dictionary tableau: row `i` reads `x_{basic[i]} + Σ_j rows[i][j] x_{nonbasic[j]} = rhs[i]`,
/// and the objective row reads `z + Σ_j obj[j] x_{nonbasic[j]} = obj_rhs`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basic: Vec<Var>,
    /// Standard row index of each tableau row.
    origin: Vec<usize>,
    nonbasic: Vec<Var>,
    obj: Vec<Rational>,
    obj_rhs: Rational,
    pivots: usize,
}

enum Step {
    Optimal,
    Unbounded,
    Pivoted,
}

impl Tableau {
    fn new(sf: &StandardForm) -> Self {
        let m = sf.rows.len();
        let mut is_basic = vec![false; sf.num_cols];
        let mut basic = Vec::with_capacity(m);
        for (i, s) in sf.slack.iter().enumerate() {
            match s {
                Some((col, coef)) if coef.is_one() => {
                    is_basic[*col] = true;
                    basic.push(Var::Col(*col));
                }
                _ => basic.push(Var::Art(i)),
            }
        }
        let nonbasic: Vec<Var> = (0..sf.num_cols).filter(|&c| !is_basic[c]).map(Var::Col).collect();
        let mut position = vec![usize::MAX; sf.num_cols];
        for (j, v) in nonbasic.iter().enumerate() {
            if let Var::Col(c) = v {
                position[*c] = j;
            }
        }
        let rows = sf
            .rows
            .iter()
            .map(|row| {
                let mut dense = vec![Rational::zero(); nonbasic.len()];
                for (c, a) in row {
                    if position[*c] != usize::MAX {
                        dense[position[*c]] = a.clone();
                    }
                }
                dense
            })
            .collect();
        Tableau {
            rows,
            rhs: sf.rhs.clone(),
            basic,
            origin: (0..m).collect(),
            obj: vec![Rational::zero(); nonbasic.len()],
            nonbasic,
            obj_rhs: Rational::zero(),
            pivots: 0,
        }
    }

    fn set_phase_one_objective(&mut self) {
        let width = self.nonbasic.len();
        self.obj = vec![Rational::zero(); width];
        self.obj_rhs = Rational::zero();
        for (i, b) in self.basic.iter().enumerate() {
            if let Var::Art(_) = b {
                for (o, t) in self.obj.iter_mut().zip(&self.rows[i]) {
                    *o += t;
                }
                self.obj_rhs += &self.rhs[i];
            }
        }
    }

    fn set_phase_two_objective(&mut self, cost: &[Rational]) {
        let cost_of = |v: &Var| match v {
            Var::Col(c) => cost[*c].clone(),
            Var::Art(_) => Rational::zero(),
        };
        self.obj = self.nonbasic.iter().map(|v| -cost_of(v)).collect();
        self.obj_rhs = Rational::zero();
        for (i, b) in self.basic.iter().enumerate() {
            let cb = cost_of(b);
            if cb.is_zero() {
                continue;
            }
            for (o, t) in self.obj.iter_mut().zip(&self.rows[i]) {
                if !t.is_zero() {
                    *o += &cb * t;
                }
            }
            self.obj_rhs += &cb * &self.rhs[i];
        }
    }

    fn pivot(&mut self, r: usize, s: usize) {
        self.pivots += 1;
        let p = self.rows[r][s].clone();
        let inv = Rational::one() / &p;
        for (j, t) in self.rows[r].iter_mut().enumerate() {
            if j != s && !t.is_zero() {
                *t = &*t * &inv;
            }
        }
        self.rows[r][s] = inv.clone();
        self.rhs[r] = &self.rhs[r] * &inv;

        let support: Vec<usize> = (0..self.nonbasic.len())
            .filter(|&j| j != s && !self.rows[r][j].is_zero())
            .collect();
        let (pivot_row, rest) = split_row(&mut self.rows, r);
        let pivot_rhs = self.rhs[r].clone();
        let eliminate = |row: &mut Vec<Rational>, rhs: &mut Rational| {
            let f = row[s].clone();
            if f.is_zero() {
                return;
            }
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
            row[s] = -(&f * &inv);
            *rhs -= &f * &pivot_rhs;
        };
        for (row, rhs) in rest {
            let (row, rhs) = (row, &mut self.rhs[rhs]);
            eliminate(row, rhs);
        }
        eliminate(&mut self.obj, &mut self.obj_rhs);

        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[s]);
        let leaving = self.nonbasic[s];
        if let Var::Art(_) = leaving {
            self.drop_column(s);
        }
    }

    fn drop_column(&mut self, s: usize) {
        for row in &mut self.rows {
            row.swap_remove(s);
        }
        self.obj.swap_remove(s);
        self.nonbasic.swap_remove(s);
    }

    /// One Bland step: smallest improving variable enters, smallest basic
    /// variable among minimum-ratio rows leaves.
    fn step(&mut self) -> Step {
        let entering = (0..self.nonbasic.len())
            .filter(|&j| is_positive(&self.obj[j]))
            .min_by_key(|&j| self.nonbasic[j]);
        let Some(s) = entering else {
            return Step::Optimal;
        };
        let mut best: Option<(Rational, usize)> = None;
        for i in 0..self.rows.len() {
            let a = &self.rows[i][s];
            if !is_positive(a) {
                continue;
            }
            let ratio = &self.rhs[i] / a;
            let better = match &best {
                None => true,
                Some((br, bi)) => ratio < *br || (ratio == *br && self.basic[i] < self.basic[*bi]),
            };
            if better {
                best = Some((ratio, i));
            }
        }
        match best {
            None => Step::Unbounded,
            Some((_, r)) => {
                self.pivot(r, s);
                Step::Pivoted
            }
        }
    }

    fn run(&mut self) -> Step {
        loop {
            match self.step() {
                Step::Pivoted => continue,
                done => return done,
            }
        }
    }

    /// After a zero-valued phase one, pivots remaining artificials out of the
    /// basis or drops their rows when they are linear combinations of others.
    fn expel_artificials(&mut self) -> Vec<usize> {
        let mut dropped = Vec::new();
        let mut i = 0;
        while i < self.rows.len() {
            if let Var::Art(_) = self.basic[i] {
                let col = (0..self.nonbasic.len())
                    .filter(|&j| !self.rows[i][j].is_zero())
                    .min_by_key(|&j| self.nonbasic[j]);
                match col {
                    Some(s) => self.pivot(i, s),
                    None => {
                        dropped.push(self.origin[i]);
                        self.rows.remove(i);
                        self.rhs.remove(i);
                        self.basic.remove(i);
                        self.origin.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        dropped.sort_unstable();
        dropped
    }
}

fn split_row(
    rows: &mut [Vec<Rational>],
    r: usize,
) -> (Vec<Rational>, impl Iterator<Item = (&mut Vec<Rational>, usize)>) {
    let pivot = rows[r].clone();
    let iter = rows
        .iter_mut()
        .enumerate()
        .filter(move |(i, _)| *i != r)
        .map(|(i, row)| (row, i));
    (pivot, iter)
}

/// Solves `lp` exactly.
pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let sf = StandardForm::from_lp(lp);
    let mut tab = Tableau::new(&sf);

    if tab.basic.iter().any(|b| matches!(b, Var::Art(_))) {
        tab.set_phase_one_objective();
        if let Step::Unbounded = tab.run() {
            unreachable!("phase one objective is bounded below by zero");
        }
        if is_positive(&tab.obj_rhs) {
            return LpOutcome::without_solution(LpStatus::Infeasible, tab.pivots);
        }
    }
    let dropped_rows = tab.expel_artificials();
    // artificials that are still nonbasic never re-enter
    let mut j = 0;
    while j < tab.nonbasic.len() {
        if let Var::Art(_) = tab.nonbasic[j] {
            tab.drop_column(j);
        } else {
            j += 1;
        }
    }

    tab.set_phase_two_objective(&sf.cost);
    if let Step::Unbounded = tab.run() {
        return LpOutcome::without_solution(LpStatus::Unbounded, tab.pivots);
    }

    let mut values = vec![Rational::zero(); sf.num_cols];
    let mut columns = Vec::with_capacity(tab.basic.len());
    for (i, b) in tab.basic.iter().enumerate() {
        let Var::Col(c) = b else {
            unreachable!("artificials were expelled before phase two");
        };
        values[*c] = tab.rhs[i].clone();
        columns.push(*c);
    }
    let point = sf.project(&values);
    let value = lp.objective_value(&point);
    LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(point),
        basis: Some(Basis {
            rows: tab.origin.clone(),
            columns,
            dropped_rows,
        }),
        duals: None,
        pivots: tab.pivots,
    }
}
