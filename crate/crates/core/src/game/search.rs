//! Exhaustive alternating-play search, independent of the comparison recursion.

use std::collections::HashMap;

use super::{Game, Status};
use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_BUDGET: usize = 2_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Mover {
    Left,
    Right,
}

struct Search {
    memo: HashMap<(Game, Mover), bool>,
    budget: usize,
}

impl Search {
    /// Does `mover`, about to move in `g`, win? A player with no move loses.
    fn wins(&mut self, g: Game, mover: Mover) -> Result<bool> {
        if let Some(&w) = self.memo.get(&(g, mover)) {
            return Ok(w);
        }
        if self.memo.len() >= self.budget {
            return Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            });
        }
        let (options, next) = match mover {
            Mover::Left => (g.left(), Mover::Right),
            Mover::Right => (g.right(), Mover::Left),
        };
        let mut w = false;
        for &o in options.iter() {
            if !self.wins(o, next)? {
                w = true;
                break;
            }
        }
        self.memo.insert((g, mover), w);
        Ok(w)
    }
}

/// Status by playing the game out both ways.
pub fn status_bruteforce(g: Game) -> Result<Status> {
    status_bruteforce_with_budget(g, DEFAULT_SEARCH_BUDGET)
}

pub fn status_bruteforce_with_budget(g: Game, budget: usize) -> Result<Status> {
    let mut search = Search {
        memo: HashMap::new(),
        budget,
    };
    let left_first = search.wins(g, Mover::Left)?;
    let right_first = search.wins(g, Mover::Right)?;
    Ok(match (left_first, right_first) {
        (false, false) => Status::Zero,
        (true, false) => Status::Positive,
        (false, true) => Status::Negative,
        (true, true) => Status::Fuzzy,
    })
}
