//! Bets whose payoffs are short games, classified by the mean-value trichotomy.
//!
//! The thermographic means of the entries form a rational zero-sum game. A
//! negative value yields natural-number bookmaker coefficients whose combined
//! bets Alice loses for every outcome; a positive value yields a multiple of
//! Alice's strategy that she wins against every bookmaker; a zero value is
//! left undecided. Both winning certificates are checked by exact game
//! comparison before they are returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rational_str, Rational};
use crate::game::{format_game, scaled_canonical, status, sum_canonical, Game, Status};
use crate::matrix::{solve_zero_sum, PayoffMatrix};
use crate::thermo::{mean, temperature};

/// Largest multiplier tried by the doubling search.
pub const DEFAULT_MULTIPLIER_BUDGET: u64 = 1 << 20;

/// Label recorded with every classification.
pub const CLASSIFICATION_POLICY: &str = "classification policy: mean-LP sign";

/// Outcome × bookmaker matrix of games, stored row-per-bookmaker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameMatrix {
    outcomes: Vec<String>,
    bookmakers: Vec<String>,
    entries: Vec<Vec<Game>>,
}

impl GameMatrix {
    pub fn new(outcomes: Vec<String>, bookmakers: Vec<String>, entries: Vec<Vec<Game>>) -> Result<Self> {
        // reuse the payoff-matrix shape checks on a placeholder matrix
        let shape: Vec<Vec<Rational>> = entries
            .iter()
            .map(|row| vec![Rational::zero(); row.len()])
            .collect();
        PayoffMatrix::new(outcomes.clone(), bookmakers.clone(), shape)?;
        Ok(GameMatrix {
            outcomes,
            bookmakers,
            entries,
        })
    }

    pub fn from_rows(entries: Vec<Vec<Game>>) -> Result<Self> {
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

    pub fn rows(&self) -> &[Vec<Game>] {
        &self.entries
    }

    /// `G(a, b)`
    pub fn entry(&self, a: usize, b: usize) -> Game {
        self.entries[b][a]
    }

    pub fn with_entry(&self, a: usize, b: usize, g: Game) -> Self {
        let mut m = self.clone();
        m.entries[b][a] = g;
        m
    }

    /// Entries in the game notation, one row per bookmaker.
    pub fn formatted_rows(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&g| format_game(g)).collect())
            .collect()
    }
}

/// Entrywise thermographic mean.
pub fn mean_matrix(gm: &GameMatrix) -> PayoffMatrix<Rational> {
    let entries = gm
        .entries
        .iter()
        .map(|row| row.iter().map(|&g| mean(g)).collect())
        .collect();
    PayoffMatrix::new(gm.outcomes.clone(), gm.bookmakers.clone(), entries).expect("shape already validated")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TrichotomyCertificate {
    /// Bookmaker coefficients with the status of the combined bet for each outcome.
    DutchBook {
        #[serde(with = "decimal_vec")]
        coefficients: Vec<u64>,
        statuses: Vec<Status>,
    },
    /// Alice plays `counts[a]` copies of outcome `a` (summing to `n`); status per bookmaker.
    PositiveMean {
        #[serde(with = "decimal")]
        n: u64,
        #[serde(with = "decimal_vec")]
        counts: Vec<u64>,
        statuses: Vec<Status>,
    },
    /// Optimal mix for the mean matrix, whose guaranteed mean is exactly zero.
    ZeroMeanUndecided {
        #[serde(with = "rational_str::vec")]
        probabilities: Vec<Rational>,
        note: String,
    },
}

impl TrichotomyCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            TrichotomyCertificate::DutchBook { .. } => "DutchBook",
            TrichotomyCertificate::PositiveMean { .. } => "PositiveMean",
            TrichotomyCertificate::ZeroMeanUndecided { .. } => "ZeroMeanUndecided",
        }
    }
}

pub fn classify(gm: &GameMatrix) -> Result<TrichotomyCertificate> {
    classify_with_budget(gm, DEFAULT_MULTIPLIER_BUDGET)
}

/// Branches on the sign of the mean matrix's value, searching multipliers up to `budget`.
pub fn classify_with_budget(gm: &GameMatrix, budget: u64) -> Result<TrichotomyCertificate> {
    let means = mean_matrix(gm);
    let solution = solve_zero_sum(&means)?;
    let cert = if solution.value.is_negative() {
        let coefficients = find_dutch_coefficients_with_budget(gm, &solution.column_strategy.weights, budget)?;
        let statuses = dutch_statuses(gm, &coefficients);
        TrichotomyCertificate::DutchBook { coefficients, statuses }
    } else if solution.value.is_positive() {
        let (n, counts) = find_positive_multiplier_with_budget(gm, &solution.row_strategy.weights, budget)?;
        let statuses = positive_statuses(gm, &counts);
        TrichotomyCertificate::PositiveMean { n, counts, statuses }
    } else {
        TrichotomyCertificate::ZeroMeanUndecided {
            probabilities: solution.row_strategy.weights,
            note: "the optimal mix has mean payoff exactly 0 against some bookmaker; \
                   mean values cannot decide this case"
                .to_string(),
        }
    };
    if !verify_certificate(gm, &cert) {
        return Err(Error::Verification(format!("{} certificate failed replay", cert.kind())));
    }
    Ok(cert)
}

/// Status of `Σ_b n_b·G(a, b)` for each outcome `a`.
fn dutch_statuses(gm: &GameMatrix, n: &[u64]) -> Vec<Status> {
    (0..gm.outcomes.len())
        .map(|a| status(weighted_sum(n, (0..gm.bookmakers.len()).map(|b| gm.entry(a, b)))))
        .collect()
}

/// Status of `Σ_a counts_a·G(a, b)` for each bookmaker `b`.
fn positive_statuses(gm: &GameMatrix, counts: &[u64]) -> Vec<Status> {
    (0..gm.bookmakers.len())
        .map(|b| status(weighted_sum(counts, (0..gm.outcomes.len()).map(|a| gm.entry(a, b)))))
        .collect()
}

fn weighted_sum(weights: &[u64], games: impl Iterator<Item = Game>) -> Game {
    sum_canonical(
        weights
            .iter()
            .zip(games)
            .filter(|(&w, _)| w > 0)
            .map(|(&w, g)| scaled_canonical(w as i64, g)),
    )
}

pub fn find_dutch_coefficients(gm: &GameMatrix, q: &[Rational]) -> Result<Vec<u64>> {
    find_dutch_coefficients_with_budget(gm, q, DEFAULT_MULTIPLIER_BUDGET)
}

/// Natural coefficients `k·m_b`, where `m` clears the denominators of `q`
/// and `k` doubles until every outcome's combined bet is Negative.
pub fn find_dutch_coefficients_with_budget(gm: &GameMatrix, q: &[Rational], budget: u64) -> Result<Vec<u64>> {
    check_len(q.len(), gm.bookmakers.len(), "bookmaker weights")?;
    let m = clear_denominators(q)?;
    // slack: least margin by which the integer-weighted means fall below zero
    let slack = (0..gm.outcomes.len())
        .map(|a| -weighted_mean(&m, (0..gm.bookmakers.len()).map(|b| gm.entry(a, b))))
        .min()
        .expect("nonempty");
    if !slack.is_positive() {
        return Err(Error::Verification("bookmaker weights do not give every outcome a negative mean".into()));
    }
    search(gm, &m, &slack, budget, |k_m| dutch_statuses(gm, k_m).iter().all(|s| *s == Status::Negative))
}

pub fn find_positive_multiplier(gm: &GameMatrix, p: &[Rational]) -> Result<(u64, Vec<u64>)> {
    find_positive_multiplier_with_budget(gm, p, DEFAULT_MULTIPLIER_BUDGET)
}

/// Total `n = k·m` and counts `n·p_a`, where `m` clears the denominators of
/// `p` and `k` doubles until every bookmaker's combined bet is Positive.
pub fn find_positive_multiplier_with_budget(gm: &GameMatrix, p: &[Rational], budget: u64) -> Result<(u64, Vec<u64>)> {
    check_len(p.len(), gm.outcomes.len(), "outcome weights")?;
    let lcm = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let m = clear_denominators(p)?;
    let slack = (0..gm.bookmakers.len())
        .map(|b| weighted_mean(&m, (0..gm.outcomes.len()).map(|a| gm.entry(a, b))))
        .min()
        .expect("nonempty");
    if !slack.is_positive() {
        return Err(Error::Verification("outcome weights do not give every bookmaker a positive mean".into()));
    }
    let counts = search(gm, &m, &slack, budget, |k_m| {
        positive_statuses(gm, k_m).iter().all(|s| *s == Status::Positive)
    })?;
    // counts = k·lcm·p, so n = k·lcm
    let k = counts
        .iter()
        .zip(&m)
        .find(|(_, &mi)| mi > 0)
        .map(|(c, mi)| c / mi)
        .expect("weights sum to a positive number");
    let n = lcm
        .to_u64()
        .and_then(|l| l.checked_mul(k))
        .ok_or(Error::MultiplierBudgetExceeded { budget })?;
    Ok((n, counts))
}

fn check_len(got: usize, want: usize, what: &str) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Shape(format!("{got} {what} for {want} columns")))
    }
}

/// Integer vector `lcm(denominators)·x`.
fn clear_denominators(x: &[Rational]) -> Result<Vec<u64>> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    x.iter()
        .map(|v| {
            if v.is_negative() {
                return Err(Error::Shape(format!("negative weight {v}")));
            }
            (v * Rational::from_integer(lcm.clone()))
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::Shape(format!("weight {v} too large after clearing denominators")))
        })
        .collect()
}

fn weighted_mean(weights: &[u64], games: impl Iterator<Item = Game>) -> Rational {
    weights
        .iter()
        .zip(games)
        .map(|(&w, g)| Rational::from_integer(w.into()) * mean(g))
        .sum()
}

/// Doubling search from `max(1, ceil(t_max / slack))`, returning `k·m`.
fn search(
    gm: &GameMatrix,
    m: &[u64],
    slack: &Rational,
    budget: u64,
    wins: impl Fn(&[u64]) -> bool,
) -> Result<Vec<u64>> {
    let t_max = gm
        .entries
        .iter()
        .flatten()
        .map(|&g| temperature(g))
        .max()
        .unwrap_or_else(Rational::zero);
    let start = (t_max / slack).ceil().to_integer().to_u64().unwrap_or(u64::MAX).max(1);
    let mut k = start;
    while k <= budget {
        let scaled: Option<Vec<u64>> = m.iter().map(|&mi| mi.checked_mul(k)).collect();
        let Some(scaled) = scaled.filter(|s| s.iter().all(|&v| v <= i64::MAX as u64)) else {
            break;
        };
        if wins(&scaled) {
            return Ok(scaled);
        }
        k *= 2;
    }
    Err(Error::MultiplierBudgetExceeded { budget })
}

/// Replays a certificate: the combined-bet statuses for the two winning
/// variants, and the zero guaranteed mean for the undecided one.
pub fn verify_certificate(gm: &GameMatrix, cert: &TrichotomyCertificate) -> bool {
    match cert {
        TrichotomyCertificate::DutchBook { coefficients, statuses } => {
            coefficients.len() == gm.bookmakers.len()
                && coefficients.iter().any(|&c| c > 0)
                && coefficients.iter().all(|&c| c <= i64::MAX as u64)
                && {
                    let replay = dutch_statuses(gm, coefficients);
                    replay.iter().all(|s| *s == Status::Negative) && &replay == statuses
                }
        }
        TrichotomyCertificate::PositiveMean { n, counts, statuses } => {
            counts.len() == gm.outcomes.len()
                && counts.iter().try_fold(0u64, |acc, &c| acc.checked_add(c)) == Some(*n)
                && *n > 0
                && counts.iter().all(|&c| c <= i64::MAX as u64)
                && {
                    let replay = positive_statuses(gm, counts);
                    replay.iter().all(|s| *s == Status::Positive) && &replay == statuses
                }
        }
        TrichotomyCertificate::ZeroMeanUndecided { probabilities, .. } => {
            let means = mean_matrix(gm);
            probabilities.len() == gm.outcomes.len()
                && probabilities.iter().all(|p| !p.is_negative())
                && probabilities.iter().sum::<Rational>() == Rational::one()
                && (0..gm.bookmakers.len())
                    .map(|b| means.row_payoff(probabilities, b))
                    .min()
                    == Some(Rational::zero())
        }
    }
}

/// Convenience: `[[g]]` as a one-outcome, one-bookmaker matrix.
pub fn single(g: Game) -> GameMatrix {
    GameMatrix::from_rows(vec![vec![g]]).expect("1x1 is well-formed")
}

mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.trim().parse().map_err(serde::de::Error::custom)
    }
}

mod decimal_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[u64], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(u64::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u64>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.trim().parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{minus_one, one, parse_game, star};

    fn g(s: &str) -> Game {
        parse_game(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn means() {
        assert_eq!(mean_matrix(&single(g("{1|{0|-2}}"))).rows(), &[vec![q(0, 1)]]);
        assert_eq!(mean_matrix(&single(g("{0|-2}"))).rows(), &[vec![q(-1, 1)]]);
        let m = GameMatrix::from_rows(vec![vec![g("3/4"), g("-2")]]).unwrap();
        assert_eq!(mean_matrix(&m).rows(), &[vec![q(3, 4), q(-2, 1)]]);
    }

    #[test]
    fn zero_mean_positive_game_is_undecided() {
        let m = single(g("{1|{0|-2}}"));
        assert_eq!(status(m.entry(0, 0)), Status::Positive);
        let cert = classify(&m).unwrap();
        assert_eq!(cert.kind(), "ZeroMeanUndecided");
    }

    #[test]
    fn dutch_books() {
        assert_eq!(
            classify(&single(minus_one())).unwrap(),
            TrichotomyCertificate::DutchBook {
                coefficients: vec![1],
                statuses: vec![Status::Negative]
            }
        );
        let switch = single(g("{0|-2}"));
        let TrichotomyCertificate::DutchBook { coefficients, .. } = classify(&switch).unwrap() else {
            panic!()
        };
        assert_eq!(coefficients, vec![2]);
        assert_eq!(find_dutch_coefficients(&switch, &[q(1, 1)]).unwrap(), vec![2]);
        let two = GameMatrix::from_rows(vec![vec![minus_one()], vec![minus_one()]]).unwrap();
        assert_eq!(find_dutch_coefficients(&two, &[q(1, 2), q(1, 2)]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn positive_multipliers() {
        assert_eq!(find_positive_multiplier(&single(one()), &[q(1, 1)]).unwrap(), (1, vec![1]));
        let m = GameMatrix::from_rows(vec![vec![one(), star()], vec![star(), one()]]).unwrap();
        assert_eq!(find_positive_multiplier(&m, &[q(1, 2), q(1, 2)]).unwrap(), (2, vec![1, 1]));
        assert_eq!(find_positive_multiplier(&single(crate::game::add(one(), star())), &[q(1, 1)]).unwrap(), (1, vec![1]));
        assert_eq!(classify(&single(one())).unwrap().kind(), "PositiveMean");
    }

    #[test]
    fn certificate_replay() {
        let dutch = |c: Vec<u64>| TrichotomyCertificate::DutchBook {
            coefficients: c,
            statuses: vec![Status::Negative],
        };
        assert!(verify_certificate(&single(minus_one()), &dutch(vec![1])));
        assert!(!verify_certificate(&single(one()), &dutch(vec![1])));
        assert!(verify_certificate(&single(g("{0|-2}")), &dutch(vec![2])));
        assert!(!verify_certificate(&single(g("{0|-2}")), &dutch(vec![1])));
    }

    #[test]
    fn budget_exhaustion() {
        assert_eq!(
            find_dutch_coefficients_with_budget(&single(g("{0|-2}")), &[q(1, 1)], 1),
            Err(Error::MultiplierBudgetExceeded { budget: 1 })
        );
    }

    #[test]
    fn json_shape() {
        let cert = classify(&single(g("{0|-2}"))).unwrap();
        let v = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["kind"], "DutchBook");
        assert_eq!(v["coefficients"][0], "2");
        let back: TrichotomyCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, cert);
    }
}
