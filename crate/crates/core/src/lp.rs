//! Dense two-phase tableau simplex with Bland's rule over any exact ordered field.
//!
//! Works unchanged over the rationals and over Q(w): the only operations are
//! field arithmetic and sign tests, so every pivot is exact.

use crate::error::{Error, Result};
use crate::field::OrderedField;

pub const DEFAULT_PIVOT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint<F> {
    pub coeffs: Vec<F>,
    pub sense: Sense,
    pub rhs: F,
}

impl<F: OrderedField> Constraint<F> {
    pub fn new(coeffs: Vec<F>, sense: Sense, rhs: F) -> Self {
        Constraint { coeffs, sense, rhs }
    }
}

/// Minimize `objective · x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram<F> {
    pub objective: Vec<F>,
    pub constraints: Vec<Constraint<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<F> {
    Optimal { x: Vec<F>, value: F, pivots: usize },
    Infeasible,
    Unbounded,
}

struct Tableau<F> {
    rows: Vec<Vec<F>>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vec<F>,
    basis: Vec<usize>,
    /// Columns allowed to enter the basis.
    active: usize,
    pivots: usize,
    budget: usize,
}

impl<F: OrderedField> Tableau<F> {
    fn rhs(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, j: usize) -> Result<()> {
        self.pivots += 1;
        if self.pivots > self.budget {
            return Err(Error::PivotBudgetExceeded(self.budget));
        }
        let p = self.rows[r][j].clone();
        if p != F::one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v = v.div(&p);
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<F>| {
            let factor = row[j].clone();
            if factor.is_zero() {
                return;
            }
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.sub(&factor.mul(pv));
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = j;
        Ok(())
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic variable index.
    fn run(&mut self) -> Result<bool> {
        loop {
            let Some(j) = (0..self.active).find(|&j| self.cost[j].is_negative()) else {
                return Ok(true);
            };
            let rhs = self.rhs();
            let mut best: Option<(usize, F)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = row[rhs].div(&row[j]);
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j)?,
                None => return Ok(false),
            }
        }
    }

    fn set_cost(&mut self, costs: &[F]) {
        let width = self.cost.len();
        self.cost = (0..width)
            .map(|j| costs.get(j).cloned().unwrap_or_else(F::zero))
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = costs.get(b).cloned().unwrap_or_else(F::zero);
            if cb.is_zero() {
                continue;
            }
            for (c, v) in self.cost.iter_mut().zip(&self.rows[i]) {
                if !v.is_zero() {
                    *c = c.sub(&cb.mul(v));
                }
            }
        }
    }
}

impl<F: OrderedField> LinearProgram<F> {
    pub fn new(objective: Vec<F>) -> Self {
        LinearProgram {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<F>, sense: Sense, rhs: F) -> &mut Self {
        self.constraints.push(Constraint::new(coeffs, sense, rhs));
        self
    }

    pub fn minimize(&self) -> Result<LpOutcome<F>> {
        self.minimize_with_budget(DEFAULT_PIVOT_BUDGET)
    }

    pub fn minimize_with_budget(&self, budget: usize) -> Result<LpOutcome<F>> {
        let n = self.objective.len();
        if let Some(c) = self.constraints.iter().find(|c| c.coeffs.len() != n) {
            return Err(Error::Shape(format!(
                "constraint has {} coefficients, objective has {n}",
                c.coeffs.len()
            )));
        }
        // rows with nonnegative right-hand sides
        let normalized: Vec<(Vec<F>, Sense, F)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.sense {
                        Sense::Le => Sense::Ge,
                        Sense::Ge => Sense::Le,
                        Sense::Eq => Sense::Eq,
                    };
                    (c.coeffs.iter().map(F::neg).collect(), flipped, c.rhs.neg())
                } else {
                    (c.coeffs.clone(), c.sense, c.rhs.clone())
                }
            })
            .collect();
        let slacks = normalized.iter().filter(|(_, s, _)| *s != Sense::Eq).count();
        let artificials = normalized.iter().filter(|(_, s, _)| *s != Sense::Le).count();
        let width = n + slacks + artificials;
        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_art) = (n, n + slacks);
        for (coeffs, sense, rhs) in normalized {
            let mut row = coeffs;
            row.resize(width + 1, F::zero());
            row[width] = rhs;
            match sense {
                Sense::Le => {
                    row[next_slack] = F::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Sense::Ge => {
                    row[next_slack] = F::one().neg();
                    next_slack += 1;
                    row[next_art] = F::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Sense::Eq => {
                    row[next_art] = F::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        let mut t = Tableau {
            rows,
            cost: vec![F::zero(); width + 1],
            basis,
            active: width,
            pivots: 0,
            budget,
        };

        // phase 1: minimize the sum of artificials
        let art_start = n + slacks;
        if artificials > 0 {
            let phase1: Vec<F> = (0..width)
                .map(|j| if j >= art_start { F::one() } else { F::zero() })
                .collect();
            t.set_cost(&phase1);
            t.run()?;
            let rhs = t.rhs();
            if t.cost[rhs].is_negative() {
                return Ok(LpOutcome::Infeasible);
            }
            // drive zero-valued artificials out of the basis, dropping redundant rows
            let mut i = 0;
            while i < t.rows.len() {
                if t.basis[i] >= art_start {
                    match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                        Some(j) => {
                            t.pivot(i, j)?;
                            i += 1;
                        }
                        None => {
                            t.rows.remove(i);
                            t.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
            t.active = art_start;
        }

        // phase 2
        t.set_cost(&self.objective);
        if !t.run()? {
            return Ok(LpOutcome::Unbounded);
        }
        let rhs = t.rhs();
        let mut x = vec![F::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                x[b] = t.rows[i][rhs].clone();
            }
        }
        let value = t.cost[rhs].neg();
        Ok(LpOutcome::Optimal {
            x,
            value,
            pivots: t.pivots,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, SurrealRF};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn textbook_minimum() {
        // min -x - y s.t. x + 2y <= 4, 3x + y <= 6
        let mut lp = LinearProgram::new(vec![q(-1), q(-1)]);
        lp.constrain(vec![q(1), q(2)], Sense::Le, q(4))
            .constrain(vec![q(3), q(1)], Sense::Le, q(6));
        match lp.minimize().unwrap() {
            LpOutcome::Optimal { x, value, .. } => {
                assert_eq!(x, vec![Rational::new(8.into(), 5.into()), Rational::new(6.into(), 5.into())]);
                assert_eq!(value, Rational::new((-14).into(), 5.into()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x0 s.t. x0 + x1 = 1, x1 <= 1/4 → x0 = 3/4
        let mut lp = LinearProgram::new(vec![q(1), q(0)]);
        lp.constrain(vec![q(1), q(1)], Sense::Eq, q(1))
            .constrain(vec![q(0), q(4)], Sense::Le, q(1));
        let LpOutcome::Optimal { value, .. } = lp.minimize().unwrap() else { panic!() };
        assert_eq!(value, Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn detects_infeasible() {
        let mut lp = LinearProgram::new(vec![q(1)]);
        lp.constrain(vec![q(1)], Sense::Ge, q(2))
            .constrain(vec![q(1)], Sense::Le, q(1));
        assert_eq!(lp.minimize().unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let mut lp = LinearProgram::new(vec![q(-1)]);
        lp.constrain(vec![q(1)], Sense::Ge, q(1));
        assert_eq!(lp.minimize().unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(vec![q(1), q(1)]);
        lp.constrain(vec![q(1), q(1)], Sense::Eq, q(2))
            .constrain(vec![q(2), q(2)], Sense::Eq, q(4));
        let LpOutcome::Optimal { value, .. } = lp.minimize().unwrap() else { panic!() };
        assert_eq!(value, q(2));
    }

    #[test]
    fn negative_rhs_is_flipped() {
        // -x <= -3  ⇔  x >= 3
        let mut lp = LinearProgram::new(vec![q(1)]);
        lp.constrain(vec![q(-1)], Sense::Le, q(-3));
        let LpOutcome::Optimal { value, .. } = lp.minimize().unwrap() else { panic!() };
        assert_eq!(value, q(3));
    }

    #[test]
    fn infinitesimal_coefficients() {
        // min x s.t. w·x >= 1 → x = 1/w
        let w = SurrealRF::omega();
        let mut lp = LinearProgram::new(vec![SurrealRF::one()]);
        lp.constrain(vec![w.clone()], Sense::Ge, SurrealRF::one());
        let LpOutcome::Optimal { x, .. } = lp.minimize().unwrap() else { panic!() };
        assert_eq!(x[0], SurrealRF::one().checked_div(&w).unwrap());
    }

    #[test]
    fn pivot_budget() {
        let mut lp = LinearProgram::new(vec![q(-1), q(-1)]);
        lp.constrain(vec![q(1), q(2)], Sense::Le, q(4))
            .constrain(vec![q(3), q(1)], Sense::Le, q(6));
        assert_eq!(lp.minimize_with_budget(0), Err(Error::PivotBudgetExceeded(0)));
    }
}
