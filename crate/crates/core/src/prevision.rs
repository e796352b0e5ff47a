//! Lower previsions induced by accepted two-valued bets.
//!
//! Accepting a bet that pays `g1 >= 0` when its event happens and `g2 < 0`
//! otherwise is consistent with a probability `P` exactly when
//! `P(event) >= -g2 / (g1 - g2)`. The lower prevision of a target event is
//! the least `P(target)` over all probabilities honouring every accepted bet.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{OrderedField, SurrealRF};
use crate::lp::{LinearProgram, LpOutcome, Sense};

/// Label of the implicit outcome covering everything no bet or target names.
pub const RESIDUAL_OUTCOME: &str = "(other)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bet {
    pub event: Vec<String>,
    pub g1: SurrealRF,
    pub g2: SurrealRF,
}

impl Bet {
    pub fn new(event: Vec<String>, g1: SurrealRF, g2: SurrealRF) -> Result<Self> {
        let bet = Bet { event, g1, g2 };
        bet.validate()?;
        Ok(bet)
    }

    pub fn validate(&self) -> Result<()> {
        if self.g1.is_negative() {
            return Err(Error::InvalidBet(format!("win payoff {} is negative", self.g1)));
        }
        if !self.g2.is_negative() {
            return Err(Error::InvalidBet(format!("lose payoff {} is not negative", self.g2)));
        }
        Ok(())
    }

    /// `-g2 / (g1 - g2)`, the least probability of the event at which the bet is fair.
    pub fn threshold(&self) -> SurrealRF {
        let spread = &self.g1 - &self.g2;
        -&self.g2 / &spread
    }
}

/// Lower prevision over the labels named by the bets and the target, plus
/// one residual outcome standing for everything unnamed.
pub fn lower_prevision(bets: &[Bet], target: &[String]) -> Result<SurrealRF> {
    lower_prevision_over(&implicit_outcomes(bets, target), bets, target)
}

/// Sorted labels named anywhere, followed by [`RESIDUAL_OUTCOME`].
pub fn implicit_outcomes(bets: &[Bet], target: &[String]) -> Vec<String> {
    let mut named: BTreeSet<&String> = target.iter().collect();
    named.extend(bets.iter().flat_map(|b| &b.event));
    let mut outcomes: Vec<String> = named.into_iter().cloned().collect();
    outcomes.push(RESIDUAL_OUTCOME.to_string());
    outcomes
}

/// Lower prevision over an explicit outcome list.
pub fn lower_prevision_over(outcomes: &[String], bets: &[Bet], target: &[String]) -> Result<SurrealRF> {
    if outcomes.is_empty() {
        return Err(Error::schema("outcomes", "must be nonempty"));
    }
    let indicator = |event: &[String], field: &str| -> Result<Vec<SurrealRF>> {
        let mut v = vec![SurrealRF::zero(); outcomes.len()];
        for label in event {
            let i = outcomes
                .iter()
                .position(|o| o == label)
                .ok_or_else(|| Error::schema(field, format!("unknown outcome `{label}`")))?;
            v[i] = SurrealRF::one();
        }
        Ok(v)
    };
    let mut lp = LinearProgram::new(indicator(target, "target")?);
    lp.constrain(vec![SurrealRF::one(); outcomes.len()], Sense::Eq, SurrealRF::one());
    for (i, bet) in bets.iter().enumerate() {
        bet.validate()?;
        lp.constrain(indicator(&bet.event, &format!("bets[{i}].event"))?, Sense::Ge, bet.threshold());
    }
    match lp.minimize()? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        LpOutcome::Infeasible => Err(Error::IncoherentBets),
        LpOutcome::Unbounded => unreachable!("probabilities are bounded"),
    }
}
