#![allow(dead_code)]

use dutchbook_core::field::{Dyadic, IntPoly, Rational, SurrealRF};
use dutchbook_core::game::Game;
use dutchbook_core::matrix::PayoffMatrix;
use dutchbook_core::random::{GameGenerator, MatrixGenerator};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rf(s: &str) -> SurrealRF {
    s.parse().unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1)
        .prop_map(|cs| IntPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

/// Ratios of small integer polynomials of degree at most 2.
pub fn surreal() -> impl Strategy<Value = SurrealRF> {
    (poly(2), poly(2).prop_filter("nonzero denominator", |p| !p.is_zero()))
        .prop_map(|(n, d)| SurrealRF::new(n, d).unwrap())
}

pub fn dyadic() -> impl Strategy<Value = Dyadic> {
    (-(1i64 << 10)..=(1 << 10), 0u32..=6).prop_map(|(n, e)| Dyadic::new(n, e))
}

/// `n` games from a seeded generator; depth at most 3.
pub fn seeded_games(seed: u64, n: usize) -> Vec<Game> {
    GameGenerator::new(seed, 3, 3).games(n)
}

pub fn game() -> impl Strategy<Value = Game> {
    (any::<u64>(), 0usize..8).prop_map(|(seed, skip)| seeded_games(seed, skip + 1)[skip])
}

/// The fixed random matrix corpus: 100 rational 3x3 and 20 Q(w) 2x2 matrices.
pub fn rational_corpus() -> Vec<PayoffMatrix<Rational>> {
    let mut gen = MatrixGenerator::new(2024);
    (0..100)
        .map(|_| PayoffMatrix::from_rows(gen.rational_matrix(3, 3)).unwrap())
        .collect()
}

pub fn surreal_corpus() -> Vec<PayoffMatrix> {
    let mut gen = MatrixGenerator::new(4048);
    (0..20)
        .map(|_| PayoffMatrix::from_rows(gen.surreal_matrix(2, 2)).unwrap())
        .collect()
}

pub fn table1() -> PayoffMatrix {
    PayoffMatrix::from_rows(vec![vec![rf("1+1/w"), rf("-1-2/w")], vec![rf("-1"), rf("1+1/w")]]).unwrap()
}
