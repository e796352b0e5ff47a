//! Fixed inputs shared by the benchmarks.

use dutchbook_core::bets::GameMatrix;
use dutchbook_core::game::{parse_game, Game};
use dutchbook_core::matrix::PayoffMatrix;
use dutchbook_core::random::GameGenerator;

pub fn table1() -> PayoffMatrix {
    let rf = |s: &str| s.parse().expect("valid literal");
    PayoffMatrix::from_rows(vec![vec![rf("1+1/w"), rf("-1-2/w")], vec![rf("-1"), rf("1+1/w")]])
        .expect("2x2 is well-formed")
}

/// Seeded games of depth at most 3.
pub fn random_games(n: usize) -> Vec<Game> {
    GameGenerator::new(99, 3, 3).games(n)
}

/// 2x2 matrix of hot games with negative mean value.
pub fn hot_matrix() -> GameMatrix {
    let g = |s: &str| parse_game(s).expect("valid game");
    GameMatrix::from_rows(vec![
        vec![g("{0|-2}"), g("{1|-3}")],
        vec![g("{-1|-3}"), g("{0|-4}")],
    ])
    .expect("2x2 is well-formed")
}
