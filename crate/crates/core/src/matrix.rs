//! Two-person zero-sum games and Dutch book coherence over an exact ordered field.
//!
//! Alice picks an outcome `a` (a column), a bookmaker picks `b` (a row), and
//! Alice receives `entries[b][a]`. Payoffs, strategies and values live in any
//! [`OrderedField`]; the default is Q(w) so infinitesimal probabilities and
//! values come out exactly.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{OrderedField, SurrealRF};
use crate::lp::{LinearProgram, LpOutcome, Sense};

/// Outcome × bookmaker payoff table, stored row-per-bookmaker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayoffMatrix<F = SurrealRF> {
    outcomes: Vec<String>,
    bookmakers: Vec<String>,
    entries: Vec<Vec<F>>,
}

impl<F: OrderedField> PayoffMatrix<F> {
    pub fn new(outcomes: Vec<String>, bookmakers: Vec<String>, entries: Vec<Vec<F>>) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::schema("outcomes", "must be nonempty"));
        }
        if bookmakers.is_empty() {
            return Err(Error::schema("bookmakers", "must be nonempty"));
        }
        check_unique("outcomes", &outcomes)?;
        check_unique("bookmakers", &bookmakers)?;
        if entries.len() != bookmakers.len() {
            return Err(Error::schema(
                "entries",
                format!("has {} rows, expected one per bookmaker ({})", entries.len(), bookmakers.len()),
            ));
        }
        if let Some((i, row)) = entries.iter().enumerate().find(|(_, r)| r.len() != outcomes.len()) {
            return Err(Error::schema(
                format!("entries[{i}]"),
                format!("has {} entries, expected one per outcome ({})", row.len(), outcomes.len()),
            ));
        }
        Ok(PayoffMatrix {
            outcomes,
            bookmakers,
            entries,
        })
    }

    /// Matrix with generated labels `a1..` and `b1..`; rows are bookmakers.
    pub fn from_rows(entries: Vec<Vec<F>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        let outcomes = (1..=cols).map(|i| format!("a{i}")).collect();
        let bookmakers = (1..=entries.len()).map(|i| format!("b{i}")).collect();
        Self::new(outcomes, bookmakers, entries)
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn bookmakers(&self) -> &[String] {
        &self.bookmakers
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.entries
    }

    /// `g(a, b)`
    pub fn payoff(&self, a: usize, b: usize) -> &F {
        &self.entries[b][a]
    }

    /// Adds the zero-payoff bank bookmaker.
    pub fn with_bank(&self) -> Self {
        let mut m = self.clone();
        let mut label = "bank".to_string();
        while m.bookmakers.contains(&label) {
            label.push('\'');
        }
        m.bookmakers.push(label);
        m.entries.push(vec![F::zero(); m.outcomes.len()]);
        m
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        PayoffMatrix {
            outcomes: self.outcomes.clone(),
            bookmakers: self.bookmakers.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Alice's expected payoff `Σ_a p_a g(a, b)` against pure bookmaker `b`.
    pub fn row_payoff(&self, p: &[F], b: usize) -> F {
        p.iter()
            .zip(&self.entries[b])
            .fold(F::zero(), |acc, (pa, g)| acc.add(&pa.mul(g)))
    }

    /// `Σ_b q_b g(a, b)` for pure outcome `a`.
    pub fn column_payoff(&self, q: &[F], a: usize) -> F {
        q.iter()
            .zip(&self.entries)
            .fold(F::zero(), |acc, (qb, row)| acc.add(&qb.mul(&row[a])))
    }

    fn min_entry(&self) -> F {
        self.entries
            .iter()
            .flatten()
            .min()
            .cloned()
            .expect("matrix is nonempty")
    }
}

fn check_unique(field: &str, labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    match labels.iter().find(|l| !seen.insert(l.as_str())) {
        Some(dup) => Err(Error::schema(field, format!("duplicate label `{dup}`"))),
        None => Ok(()),
    }
}

/// Probability vector over labelled pure strategies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedStrategy<F = SurrealRF> {
    pub labels: Vec<String>,
    pub weights: Vec<F>,
}

impl<F: OrderedField> MixedStrategy<F> {
    pub fn new(labels: Vec<String>, weights: Vec<F>) -> Self {
        MixedStrategy { labels, weights }
    }

    /// Point mass on index `i`.
    pub fn pure(labels: Vec<String>, i: usize) -> Self {
        let weights = (0..labels.len())
            .map(|j| if j == i { F::one() } else { F::zero() })
            .collect();
        MixedStrategy { labels, weights }
    }

    /// Nonnegative weights summing to exactly one.
    pub fn is_probability(&self) -> bool {
        self.labels.len() == self.weights.len()
            && self.weights.iter().all(|w| !w.is_negative())
            && self.weights.iter().fold(F::zero(), |acc, w| acc.add(w)) == F::one()
    }
}

/// Optimal value with optimal strategies for both players.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution<F = SurrealRF> {
    pub value: F,
    /// Alice's mix over outcomes.
    pub row_strategy: MixedStrategy<F>,
    /// The bookmakers' mix.
    pub column_strategy: MixedStrategy<F>,
}

/// Either a probability witness or a Dutch book portfolio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CoherenceResult<F = SurrealRF> {
    /// `Σ_a p_a g(a, b) >= 0` for every bookmaker.
    Coherent { witness: MixedStrategy<F> },
    /// `Σ_b q_b g(a, b) < 0` for every outcome.
    DutchBook { portfolio: MixedStrategy<F> },
}

impl<F> CoherenceResult<F> {
    pub fn is_dutch_book(&self) -> bool {
        matches!(self, CoherenceResult::DutchBook { .. })
    }
}

/// Exact minimax solution by linear programming.
///
/// Entries are shifted by `c = 1 - min g` so every entry is at least 1; then
/// `min Σx` subject to `Σ_a x_a (g(a,b) + c) >= 1` gives Alice's strategy
/// `x / Σx` and value `1/Σx - c`, and the dual program gives the bookmakers'.
pub fn solve_zero_sum<F: OrderedField>(m: &PayoffMatrix<F>) -> Result<Solution<F>> {
    let shift = F::one().sub(&m.min_entry());
    let shifted = m.map(|g| g.add(&shift));
    let (na, nb) = (m.outcomes.len(), m.bookmakers.len());

    let mut primal = LinearProgram::new(vec![F::one(); na]);
    for b in 0..nb {
        primal.constrain(shifted.entries[b].clone(), Sense::Ge, F::one());
    }
    let mut dual = LinearProgram::new(vec![F::one().neg(); nb]);
    for a in 0..na {
        let column = (0..nb).map(|b| shifted.entries[b][a].clone()).collect();
        dual.constrain(column, Sense::Le, F::one());
    }
    let (x, total_x) = optimal(primal.minimize()?)?;
    let (y, neg_total_y) = optimal(dual.minimize()?)?;
    let total_y = neg_total_y.neg();
    if total_x != total_y {
        return Err(Error::Verification(format!(
            "primal optimum {total_x} differs from dual optimum {total_y}"
        )));
    }
    let scale = F::one().div(&total_x);
    let solution = Solution {
        value: scale.sub(&shift),
        row_strategy: MixedStrategy::new(
            m.outcomes.clone(),
            x.iter().map(|v| v.mul(&scale)).collect(),
        ),
        column_strategy: MixedStrategy::new(
            m.bookmakers.clone(),
            y.iter().map(|v| v.mul(&scale)).collect(),
        ),
    };
    if !verify_solution(m, &solution) {
        return Err(Error::Verification("minimax solution failed substitution check".into()));
    }
    Ok(solution)
}

fn optimal<F>(outcome: LpOutcome<F>) -> Result<(Vec<F>, F)> {
    match outcome {
        LpOutcome::Optimal { x, value, .. } => Ok((x, value)),
        LpOutcome::Infeasible => Err(Error::Verification("shifted game LP reported infeasible".into())),
        LpOutcome::Unbounded => Err(Error::Verification("shifted game LP reported unbounded".into())),
    }
}

/// Replays a solution: both strategies are probability vectors over the right
/// labels, Alice's guarantees at least `value` against every bookmaker with
/// equality at the worst one, and the bookmakers' holds every outcome to at
/// most `value` with equality at the best one.
pub fn verify_solution<F: OrderedField>(m: &PayoffMatrix<F>, s: &Solution<F>) -> bool {
    let p = &s.row_strategy;
    let q = &s.column_strategy;
    if p.labels != m.outcomes || q.labels != m.bookmakers || !p.is_probability() || !q.is_probability() {
        return false;
    }
    let worst_for_alice = (0..m.bookmakers.len()).map(|b| m.row_payoff(&p.weights, b)).min();
    let best_for_alice = (0..m.outcomes.len()).map(|a| m.column_payoff(&q.weights, a)).max();
    worst_for_alice.as_ref() == Some(&s.value) && best_for_alice.as_ref() == Some(&s.value)
}

/// Coherent (value >= 0, Alice's optimal mix as witness) or Dutch book
/// (value < 0, the bookmakers' optimal mix as portfolio).
pub fn analyze_coherence<F: OrderedField>(m: &PayoffMatrix<F>) -> Result<CoherenceResult<F>> {
    let s = solve_zero_sum(m)?;
    let result = if s.value.is_negative() {
        CoherenceResult::DutchBook {
            portfolio: s.column_strategy,
        }
    } else {
        CoherenceResult::Coherent {
            witness: s.row_strategy,
        }
    };
    if !verify_coherence(m, &result) {
        return Err(Error::Verification("coherence certificate failed substitution check".into()));
    }
    Ok(result)
}

pub fn verify_coherence<F: OrderedField>(m: &PayoffMatrix<F>, r: &CoherenceResult<F>) -> bool {
    match r {
        CoherenceResult::Coherent { witness } => {
            witness.labels == m.outcomes
                && witness.is_probability()
                && (0..m.bookmakers.len()).all(|b| !m.row_payoff(&witness.weights, b).is_negative())
        }
        CoherenceResult::DutchBook { portfolio } => {
            portfolio.labels == m.bookmakers
                && portfolio.is_probability()
                && (0..m.outcomes.len()).all(|a| m.column_payoff(&portfolio.weights, a).is_negative())
        }
    }
}

/// Pure-strategy bounds `(max_a min_b g(a,b), min_b max_a g(a,b))`.
pub fn minimax_gap<F: OrderedField>(m: &PayoffMatrix<F>) -> (F, F) {
    let (na, nb) = (m.outcomes.len(), m.bookmakers.len());
    let maximin = (0..na)
        .map(|a| (0..nb).map(|b| m.payoff(a, b)).min().unwrap())
        .max()
        .unwrap()
        .clone();
    let minimax = (0..nb)
        .map(|b| (0..na).map(|a| m.payoff(a, b)).max().unwrap())
        .min()
        .unwrap()
        .clone();
    (maximin, minimax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn rf(s: &str) -> SurrealRF {
        s.parse().unwrap()
    }

    fn table1() -> PayoffMatrix {
        PayoffMatrix::from_rows(vec![
            vec![rf("1+1/w"), rf("-1-2/w")],
            vec![rf("-1"), rf("1+1/w")],
        ])
        .unwrap()
    }

    #[test]
    fn table1_solution() {
        let s = solve_zero_sum(&table1()).unwrap();
        assert_eq!(
            s.row_strategy.weights,
            vec![rf("(2*w+3)/(4*w+4)"), rf("(2*w+1)/(4*w+4)")]
        );
        assert_eq!(s.value, rf("1/(4*w*(w+1))"));
        assert!(verify_solution(&table1(), &s));
    }

    #[test]
    fn matching_pennies() {
        let m = PayoffMatrix::<Rational>::from_rows(vec![
            vec![Rational::from_integer(1.into()), Rational::from_integer((-1).into())],
            vec![Rational::from_integer((-1).into()), Rational::from_integer(1.into())],
        ])
        .unwrap();
        let s = solve_zero_sum(&m).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(s.value, Rational::from_integer(0.into()));
        assert_eq!(s.row_strategy.weights, vec![half.clone(), half.clone()]);
        assert_eq!(s.column_strategy.weights, vec![half.clone(), half]);
        let (lo, hi) = minimax_gap(&m);
        assert_eq!((lo, hi), (Rational::from_integer((-1).into()), Rational::from_integer(1.into())));
    }

    #[test]
    fn single_entry() {
        let m = PayoffMatrix::from_rows(vec![vec![rf("w - 3")]]).unwrap();
        let s = solve_zero_sum(&m).unwrap();
        assert_eq!(s.value, rf("w-3"));
        assert_eq!(s.row_strategy.weights, vec![SurrealRF::one()]);
        assert_eq!(minimax_gap(&m), (rf("w-3"), rf("w-3")));
    }

    #[test]
    fn coherence_cases() {
        assert!(matches!(
            analyze_coherence(&table1()).unwrap(),
            CoherenceResult::Coherent { .. }
        ));
        let neg = PayoffMatrix::from_rows(vec![vec![rf("-1"); 2]; 2]).unwrap();
        let r = analyze_coherence(&neg).unwrap();
        assert!(r.is_dutch_book());
        assert!(verify_coherence(&neg, &r));
        let pos = PayoffMatrix::from_rows(vec![vec![rf("1"); 2]; 2]).unwrap();
        assert!(!analyze_coherence(&pos).unwrap().is_dutch_book());
    }

    #[test]
    fn corrupted_witness_fails() {
        let m = table1();
        let mut s = solve_zero_sum(&m).unwrap();
        s.row_strategy.weights.swap(0, 1);
        assert!(!verify_solution(&m, &s));
        let r = CoherenceResult::Coherent {
            witness: s.row_strategy,
        };
        assert!(!verify_coherence(&m, &r));
    }

    #[test]
    fn zero_matrix_uniform_witness() {
        let m = PayoffMatrix::from_rows(vec![vec![SurrealRF::zero(); 2]; 3]).unwrap();
        let half = rf("1/2");
        let r = CoherenceResult::Coherent {
            witness: MixedStrategy::new(m.outcomes().to_vec(), vec![half.clone(), half]),
        };
        assert!(verify_coherence(&m, &r));
    }

    #[test]
    fn table1_gap() {
        assert_eq!(minimax_gap(&table1()), (rf("-1"), rf("1+1/w")));
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            PayoffMatrix::from_rows(vec![vec![rf("1"), rf("2")], vec![rf("1")]]),
            Err(Error::Schema { .. })
        ));
        assert!(matches!(
            PayoffMatrix::new(vec!["a".into(), "a".into()], vec!["b".into()], vec![vec![rf("1"), rf("2")]]),
            Err(Error::Schema { .. })
        ));
        assert!(PayoffMatrix::<SurrealRF>::from_rows(vec![]).is_err());
    }

    #[test]
    fn bank_row() {
        let m = table1().with_bank();
        assert_eq!(m.bookmakers().last().unwrap(), "bank");
        assert!(m.rows().last().unwrap().iter().all(SurrealRF::is_zero));
    }
}
