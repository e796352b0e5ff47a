//! Structured command results; the human-readable text is rendered from the same value.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Exact field value with an optional standard part for readability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Num {
    pub exact: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub standard_part: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strategy {
    pub labels: Vec<String>,
    pub weights: Vec<Num>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThermoRow {
    pub t: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Outcome {
    Eval {
        expression: String,
        canonical: String,
        status: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        number: Option<String>,
        left_stop: String,
        right_stop: String,
        mean: String,
        temperature: String,
        infinitesimal: bool,
        thermograph: Vec<ThermoRow>,
    },
    Cmp {
        left: String,
        right: String,
        relation: String,
    },
    Solve {
        value: Num,
        row_strategy: Strategy,
        column_strategy: Strategy,
        pure_maximin: Num,
        pure_minimax: Num,
        verified: bool,
    },
    Coherence {
        bank: bool,
        value: Num,
        verdict: String,
        certificate: Strategy,
        verified: bool,
    },
    Classify {
        mean_matrix: Vec<Vec<String>>,
        mean_value: String,
        certificate: serde_json::Value,
        verified: bool,
    },
    LowerPrevision {
        outcomes: Vec<String>,
        target: Vec<String>,
        lower_prevision: Num,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input_sha256: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub result: Outcome,
    pub provenance: Provenance,
}

impl Num {
    fn render(&self) -> String {
        match &self.standard_part {
            Some(s) => format!("{}  (standard part {s})", self.exact),
            None => self.exact.clone(),
        }
    }
}

fn render_strategy(out: &mut String, title: &str, s: &Strategy) {
    let _ = writeln!(out, "{title}:");
    for (l, w) in s.labels.iter().zip(&s.weights) {
        let _ = writeln!(out, "  {l}: {}", w.render());
    }
}

impl Report {
    pub fn human(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Outcome::Eval {
                expression,
                canonical,
                status,
                number,
                left_stop,
                right_stop,
                mean,
                temperature,
                infinitesimal,
                thermograph,
            } => {
                let _ = writeln!(out, "game:          {expression}");
                let _ = writeln!(out, "canonical:     {canonical}");
                let _ = writeln!(out, "status:        {status}");
                if let Some(n) = number {
                    let _ = writeln!(out, "number:        {n}");
                }
                let _ = writeln!(out, "stops:         left {left_stop}, right {right_stop}");
                let _ = writeln!(out, "mean:          {mean}");
                let _ = writeln!(out, "temperature:   {temperature}");
                let _ = writeln!(out, "infinitesimal: {infinitesimal}");
                let _ = writeln!(out, "thermograph:");
                let _ = writeln!(out, "  {:>10} {:>10} {:>10}", "t", "left", "right");
                for r in thermograph {
                    let _ = writeln!(out, "  {:>10} {:>10} {:>10}", r.t, r.left, r.right);
                }
            }
            Outcome::Cmp { left, right, relation } => {
                let _ = writeln!(out, "{left} {relation} {right}");
            }
            Outcome::Solve {
                value,
                row_strategy,
                column_strategy,
                pure_maximin,
                pure_minimax,
                verified,
            } => {
                let _ = writeln!(out, "value: {}", value.render());
                render_strategy(&mut out, "row strategy (outcomes)", row_strategy);
                render_strategy(&mut out, "column strategy (bookmakers)", column_strategy);
                let _ = writeln!(
                    out,
                    "pure maximin {} <= value <= pure minimax {}",
                    pure_maximin.render(),
                    pure_minimax.render()
                );
                let _ = writeln!(out, "verified: {verified}");
            }
            Outcome::Coherence {
                bank,
                value,
                verdict,
                certificate,
                verified,
            } => {
                let _ = writeln!(out, "verdict: {verdict}{}", if *bank { " (bank row added)" } else { "" });
                let _ = writeln!(out, "game value: {}", value.render());
                let title = if verdict == "DutchBook" { "portfolio" } else { "witness" };
                render_strategy(&mut out, title, certificate);
                let _ = writeln!(out, "verified: {verified}");
            }
            Outcome::Classify {
                mean_matrix,
                mean_value,
                certificate,
                verified,
            } => {
                let _ = writeln!(out, "mean matrix (rows = bookmakers):");
                for row in mean_matrix {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
                let _ = writeln!(out, "mean game value: {mean_value}");
                let kind = certificate["kind"].as_str().unwrap_or("?");
                let _ = writeln!(out, "verdict: {kind}");
                if let Some(obj) = certificate.as_object() {
                    for (k, v) in obj.iter().filter(|(k, _)| *k != "kind") {
                        let _ = writeln!(out, "  {k}: {}", plain(v));
                    }
                }
                let _ = writeln!(out, "verified: {verified}");
            }
            Outcome::LowerPrevision {
                outcomes,
                target,
                lower_prevision,
            } => {
                let _ = writeln!(out, "outcomes: {}", outcomes.join(", "));
                let _ = writeln!(out, "target:   {}", target.join(", "));
                let _ = writeln!(out, "lower prevision: {}", lower_prevision.render());
            }
        }
        let p = &self.provenance;
        let _ = writeln!(out, "--");
        let _ = writeln!(out, "input sha256: {}", p.input_sha256);
        let _ = writeln!(out, "version: {}", p.version);
        if let Some(policy) = &p.policy {
            let _ = writeln!(out, "{policy}");
        }
        out
    }
}

fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(xs) => format!("[{}]", xs.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
