use std::path::Path;

use dutchbook_core::bets::{classify_with_budget, mean_matrix, verify_certificate, CLASSIFICATION_POLICY};
use dutchbook_core::game::{
    canonical, format_game, game_to_number, is_infinitesimal, parse_game, status, stops, Relation,
};
use dutchbook_core::matrix::{
    analyze_coherence, minimax_gap, solve_zero_sum, verify_coherence, verify_solution, CoherenceResult,
    MixedStrategy,
};
use dutchbook_core::prevision::{implicit_outcomes, lower_prevision_over};
use dutchbook_core::schema::{parse_bets, parse_game_matrix, parse_payoff_matrix};
use dutchbook_core::thermo::thermograph;
use dutchbook_core::{Error, Sign, SurrealRF};
use sha2::{Digest, Sha256};

use crate::report::{Num, Outcome, Provenance, Report, Strategy, ThermoRow};

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable file, malformed JSON or expression.
    Input(String),
    /// The analysis itself could not complete.
    Analysis(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Analysis(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Analysis(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::NonDyadicNumber { .. } | Error::Schema { .. } | Error::DivisionByZero => {
                Failure::Input(e.to_string())
            }
            other => Failure::Analysis(other.to_string()),
        }
    }
}

pub struct Ctx {
    pub standard_parts: bool,
}

impl Ctx {
    fn num(&self, x: &SurrealRF) -> Num {
        let standard_part = self.standard_parts.then(|| match x.standard_part() {
            Ok(q) => q.to_string(),
            Err(_) if x.sign() == Sign::Negative => "-infinity".to_string(),
            Err(_) => "+infinity".to_string(),
        });
        Num {
            exact: x.to_string(),
            standard_part,
        }
    }

    fn strategy(&self, s: &MixedStrategy) -> Strategy {
        Strategy {
            labels: s.labels.clone(),
            weights: s.weights.iter().map(|w| self.num(w)).collect(),
        }
    }
}

fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn report(result: Outcome, input: &[u8], policy: Option<&str>) -> Report {
    Report {
        result,
        provenance: Provenance {
            input_sha256: digest(input),
            version: env!("CARGO_PKG_VERSION").to_string(),
            policy: policy.map(str::to_string),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn eval(expr: &str) -> Result<Report, Failure> {
    let g = parse_game(expr)?;
    let c = canonical(g);
    let (ls, rs) = stops(c);
    let t = thermograph(c);
    let thermo = t
        .breakpoints()
        .into_iter()
        .map(|(t, l, r)| ThermoRow {
            t: t.to_string(),
            left: l.to_string(),
            right: r.to_string(),
        })
        .collect();
    let result = Outcome::Eval {
        expression: expr.to_string(),
        canonical: format_game(c),
        status: status(c).to_string(),
        number: game_to_number(c).ok().map(|d| d.to_rational().to_string()),
        left_stop: ls.to_rational().to_string(),
        right_stop: rs.to_rational().to_string(),
        mean: t.mast.to_string(),
        temperature: t.temperature.to_string(),
        infinitesimal: is_infinitesimal(c),
        thermograph: thermo,
    };
    Ok(report(result, expr.as_bytes(), None))
}

pub fn cmp(left: &str, right: &str) -> Result<Report, Failure> {
    let (g, h) = (parse_game(left)?, parse_game(right)?);
    let result = Outcome::Cmp {
        left: left.to_string(),
        right: right.to_string(),
        relation: Relation::between(g, h).symbol().to_string(),
    };
    Ok(report(result, format!("{left}\n{right}").as_bytes(), None))
}

pub fn solve(ctx: &Ctx, path: &Path) -> Result<Report, Failure> {
    let text = read(path)?;
    let m = parse_payoff_matrix(&text)?;
    let s = solve_zero_sum(&m)?;
    let (lo, hi) = minimax_gap(&m);
    let result = Outcome::Solve {
        value: ctx.num(&s.value),
        row_strategy: ctx.strategy(&s.row_strategy),
        column_strategy: ctx.strategy(&s.column_strategy),
        pure_maximin: ctx.num(&lo),
        pure_minimax: ctx.num(&hi),
        verified: verify_solution(&m, &s),
    };
    Ok(report(result, text.as_bytes(), None))
}

/// Also returns whether a Dutch book was found.
pub fn coherence(ctx: &Ctx, path: &Path, bank: bool) -> Result<(Report, bool), Failure> {
    let text = read(path)?;
    let mut m = parse_payoff_matrix(&text)?;
    if bank {
        m = m.with_bank();
    }
    let value = solve_zero_sum(&m)?.value;
    let r = analyze_coherence(&m)?;
    let verified = verify_coherence(&m, &r);
    let (verdict, cert) = match &r {
        CoherenceResult::Coherent { witness } => ("Coherent", witness),
        CoherenceResult::DutchBook { portfolio } => ("DutchBook", portfolio),
    };
    let result = Outcome::Coherence {
        bank,
        value: ctx.num(&value),
        verdict: verdict.to_string(),
        certificate: ctx.strategy(cert),
        verified,
    };
    Ok((report(result, text.as_bytes(), None), r.is_dutch_book()))
}

pub fn classify(path: &Path, budget: u64) -> Result<(Report, bool), Failure> {
    let text = read(path)?;
    let gm = parse_game_matrix(&text)?;
    let means = mean_matrix(&gm);
    let value = solve_zero_sum(&means)?.value;
    let cert = classify_with_budget(&gm, budget)?;
    let verified = verify_certificate(&gm, &cert);
    let dutch = cert.kind() == "DutchBook";
    let result = Outcome::Classify {
        mean_matrix: means
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        mean_value: value.to_string(),
        certificate: serde_json::to_value(&cert).expect("certificate serializes"),
        verified,
    };
    Ok((report(result, text.as_bytes(), Some(CLASSIFICATION_POLICY)), dutch))
}

pub fn lower_prevision(ctx: &Ctx, path: &Path) -> Result<Report, Failure> {
    let text = read(path)?;
    let doc = parse_bets(&text)?;
    let outcomes = doc
        .outcomes
        .clone()
        .unwrap_or_else(|| implicit_outcomes(&doc.bets, &doc.target));
    let value = lower_prevision_over(&outcomes, &doc.bets, &doc.target)?;
    let result = Outcome::LowerPrevision {
        outcomes,
        target: doc.target,
        lower_prevision: ctx.num(&value),
    };
    Ok(report(result, text.as_bytes(), None))
}
