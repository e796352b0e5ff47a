//! Exact engine for surreal-valued gambling: an ordered field of rational
//! functions in w, short combinatorial games, thermography, exact zero-sum
//! matrix games and game-valued bets.

pub mod bets;
pub mod error;
pub mod field;
pub mod game;
pub mod lp;
pub mod matrix;
pub mod prevision;
pub mod random;
pub mod schema;
pub mod thermo;

pub use error::{Error, Result};
pub use field::{Dyadic, OrderedField, Rational, Sign, SurrealRF};
pub use game::{Game, Status};
