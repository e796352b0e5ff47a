//! Short Conway games as interned, immutable DAG nodes.
//!
//! A [`Game`] is a copyable handle to a node `{L | R}` in a global arena.
//! Structurally identical nodes share one handle, so handle equality is
//! structural identity; value equality (`G - H` is a second-player win) is
//! [`eq`].

mod canonical;
mod dsl;
mod number;
mod ops;
mod order;
mod search;
mod stops;
mod store;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use canonical::canonical;
pub use dsl::{format_game, parse_game};
pub use number::{game_to_number, is_number, number_to_game};
pub use ops::{add, neg, nmul, scaled_canonical, sub, sum_canonical};
pub use order::{confused, eq, ge, gt, le, lt, status, Relation};
pub use search::{status_bruteforce, status_bruteforce_with_budget, DEFAULT_SEARCH_BUDGET};
pub use stops::{is_infinitesimal, left_stop, right_stop, stops};
pub use store::arena_size;

pub(crate) use number::number_form;

/// Handle to an interned short game.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Game(u32);

impl Game {
    /// Left options, sorted by handle.
    pub fn left(self) -> Arc<[Game]> {
        store::with_node(self, |n| n.left.clone())
    }

    /// Right options, sorted by handle.
    pub fn right(self) -> Arc<[Game]> {
        store::with_node(self, |n| n.right.clone())
    }

    pub fn id(self) -> u32 {
        self.0
    }

    /// Number of distinct positions reachable from this node, itself included.
    pub fn position_count(self) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self];
        while let Some(g) = stack.pop() {
            if seen.insert(g) {
                stack.extend(g.left().iter().copied());
                stack.extend(g.right().iter().copied());
            }
        }
        seen.len()
    }

    /// Longest chain of moves from this position.
    pub fn depth(self) -> usize {
        fn go(g: Game, memo: &mut std::collections::HashMap<Game, usize>) -> usize {
            if let Some(&d) = memo.get(&g) {
                return d;
            }
            let d = g
                .left()
                .iter()
                .chain(g.right().iter())
                .map(|&o| go(o, memo) + 1)
                .max()
                .unwrap_or(0);
            memo.insert(g, d);
            d
        }
        go(self, &mut Default::default())
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game#{}", self.0)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_game(*self))
    }
}

/// Outcome class under optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    /// Second player wins.
    Zero,
    /// Left wins whoever starts.
    Positive,
    /// Right wins whoever starts.
    Negative,
    /// First player wins.
    Fuzzy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `{left | right}`; option lists may contain duplicates and come in any order.
pub fn make_game(
    left: impl IntoIterator<Item = Game>,
    right: impl IntoIterator<Item = Game>,
) -> Game {
    let mut left: Vec<Game> = left.into_iter().collect();
    let mut right: Vec<Game> = right.into_iter().collect();
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    store::intern(left, right)
}

/// `{ | }`
pub fn zero() -> Game {
    make_game([], [])
}

/// `{0 | }`
pub fn one() -> Game {
    make_game([zero()], [])
}

/// `{ | 0}`
pub fn minus_one() -> Game {
    make_game([], [zero()])
}

/// `{0 | 0}`
pub fn star() -> Game {
    make_game([zero()], [zero()])
}

/// `{0 | *}`
pub fn up() -> Game {
    make_game([zero()], [star()])
}

/// `{* | 0}`
pub fn down() -> Game {
    make_game([star()], [zero()])
}

/// The integer game `n`.
pub fn integer(n: i64) -> Game {
    number_to_game(&crate::field::Dyadic::integer(n))
}
