//! JSON documents for payoff matrices, game matrices and bet lists.
//!
//! Fields are checked by hand from a parsed `serde_json::Value` so each
//! failure names the exact offending field, e.g. `entries[1][0]`.

use serde_json::{json, Map, Value};

use crate::bets::GameMatrix;
use crate::error::{Error, Result};
use crate::field::SurrealRF;
use crate::game::{parse_game, Game};
use crate::matrix::PayoffMatrix;
use crate::prevision::Bet;

/// Bets document: accepted bets, target event and an optional explicit outcome list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetsDocument {
    pub bets: Vec<Bet>,
    pub target: Vec<String>,
    pub outcomes: Option<Vec<String>>,
}

pub fn parse_payoff_matrix(text: &str) -> Result<PayoffMatrix> {
    let (outcomes, bookmakers, cells) = matrix_cells(text)?;
    let entries = map_cells(cells, |field, s| {
        s.parse::<SurrealRF>()
            .map_err(|e| Error::schema(field, format!("invalid field literal `{s}`: {e}")))
    })?;
    PayoffMatrix::new(outcomes, bookmakers, entries)
}

pub fn parse_game_matrix(text: &str) -> Result<GameMatrix> {
    let (outcomes, bookmakers, cells) = matrix_cells(text)?;
    let entries = map_cells(cells, |field, s| -> Result<Game> {
        parse_game(s).map_err(|e| match e {
            Error::NonDyadicNumber { .. } => e,
            other => Error::schema(field, format!("invalid game `{s}`: {other}")),
        })
    })?;
    GameMatrix::new(outcomes, bookmakers, entries)
}

pub fn parse_bets(text: &str) -> Result<BetsDocument> {
    let doc = object(text)?;
    let target = labels(&doc, "target")?;
    let outcomes = match doc.get("outcomes") {
        None | Some(Value::Null) => None,
        Some(_) => Some(labels(&doc, "outcomes")?),
    };
    let raw = doc
        .get("bets")
        .ok_or_else(|| Error::schema("bets", "missing"))?
        .as_array()
        .ok_or_else(|| Error::schema("bets", "must be an array"))?;
    let bets = raw
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let field = format!("bets[{i}]");
            let obj = v
                .as_object()
                .ok_or_else(|| Error::schema(&field, "must be an object"))?;
            let event = labels(obj, "event").map_err(|e| prefix(&field, e))?;
            let payoff = |key: &str| -> Result<SurrealRF> {
                let f = format!("{field}.{key}");
                let s = obj
                    .get(key)
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::schema(&f, "missing or not a string"))?;
                s.parse()
                    .map_err(|e| Error::schema(&f, format!("invalid field literal `{s}`: {e}")))
            };
            Bet::new(event, payoff("g1")?, payoff("g2")?).map_err(|e| match e {
                Error::InvalidBet(msg) => Error::schema(&field, msg),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BetsDocument {
        bets,
        target,
        outcomes,
    })
}

/// Payoff matrix as a JSON document of the same shape it was loaded from.
pub fn payoff_matrix_json(m: &PayoffMatrix) -> Value {
    json!({
        "outcomes": m.outcomes(),
        "bookmakers": m.bookmakers(),
        "entries": m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn prefix(outer: &str, e: Error) -> Error {
    match e {
        Error::Schema { field, message } => Error::Schema {
            field: format!("{outer}.{field}"),
            message,
        },
        other => other,
    }
}

fn object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(m)) => Ok(m),
        Ok(_) => Err(Error::schema("<document>", "top level must be a JSON object")),
        Err(e) => Err(Error::schema("<document>", format!("invalid JSON: {e}"))),
    }
}

fn labels(doc: &Map<String, Value>, key: &str) -> Result<Vec<String>> {
    let arr = doc
        .get(key)
        .ok_or_else(|| Error::schema(key, "missing"))?
        .as_array()
        .ok_or_else(|| Error::schema(key, "must be an array of strings"))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::schema(format!("{key}[{i}]"), "must be a string"))
        })
        .collect()
}

type Cells = Vec<Vec<(String, String)>>;

fn matrix_cells(text: &str) -> Result<(Vec<String>, Vec<String>, Cells)> {
    let doc = object(text)?;
    let outcomes = labels(&doc, "outcomes")?;
    let bookmakers = labels(&doc, "bookmakers")?;
    let rows = doc
        .get("entries")
        .ok_or_else(|| Error::schema("entries", "missing"))?
        .as_array()
        .ok_or_else(|| Error::schema("entries", "must be an array of rows"))?;
    let cells = rows
        .iter()
        .enumerate()
        .map(|(b, row)| {
            row.as_array()
                .ok_or_else(|| Error::schema(format!("entries[{b}]"), "must be an array"))?
                .iter()
                .enumerate()
                .map(|(a, v)| {
                    let field = format!("entries[{b}][{a}]");
                    v.as_str()
                        .map(|s| (field.clone(), s.to_string()))
                        .ok_or_else(|| Error::schema(field, "must be a string"))
                })
                .collect()
        })
        .collect::<Result<Cells>>()?;
    Ok((outcomes, bookmakers, cells))
}

fn map_cells<T>(cells: Cells, f: impl Fn(&str, &str) -> Result<T>) -> Result<Vec<Vec<T>>> {
    cells
        .into_iter()
        .map(|row| row.into_iter().map(|(field, s)| f(&field, &s)).collect())
        .collect()
}
