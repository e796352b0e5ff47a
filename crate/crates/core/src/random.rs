//! Seeded generators for random games and matrices, used by property tests and benchmarks.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::field::{IntPoly, Rational, SurrealRF};
use crate::game::{self, make_game, Game};

/// Random short games built from a growing pool of previously generated games.
///
/// A game of depth `d` draws each of its options from pool entries of depth
/// below `d`. The pool starts with the day-1 games `0, 1, -1, *`.
pub struct GameGenerator {
    rng: StdRng,
    pool: Vec<(Game, usize)>,
    max_depth: usize,
    max_branching: usize,
}

impl GameGenerator {
    pub fn new(seed: u64, max_depth: usize, max_branching: usize) -> Self {
        let zero = game::zero();
        GameGenerator {
            rng: StdRng::seed_from_u64(seed),
            pool: vec![
                (zero, 0),
                (game::one(), 1),
                (game::minus_one(), 1),
                (game::star(), 1),
            ],
            max_depth,
            max_branching,
        }
    }

    pub fn next_game(&mut self) -> Game {
        let depth = self.rng.gen_range(0..=self.max_depth);
        if depth == 0 {
            return game::zero();
        }
        let candidates: Vec<Game> = self
            .pool
            .iter()
            .filter(|(_, d)| *d < depth)
            .map(|(g, _)| *g)
            .collect();
        let pick_side = |rng: &mut StdRng| -> Vec<Game> {
            let n = rng.gen_range(0..=self.max_branching);
            (0..n)
                .map(|_| candidates[rng.gen_range(0..candidates.len())])
                .collect()
        };
        let left = pick_side(&mut self.rng);
        let right = pick_side(&mut self.rng);
        let g = make_game(left, right);
        let actual = g.depth();
        if !self.pool.iter().any(|(h, _)| *h == g) {
            self.pool.push((g, actual));
        }
        g
    }

    pub fn games(&mut self, n: usize) -> Vec<Game> {
        (0..n).map(|_| self.next_game()).collect()
    }
}

/// Random matrices over the rationals and over Q(w).
pub struct MatrixGenerator {
    rng: StdRng,
}

impl MatrixGenerator {
    pub fn new(seed: u64) -> Self {
        MatrixGenerator {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    /// Entry `p/q` with `|p| <= 9`, `1 <= q <= 4`.
    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-9..=9);
        let q: i64 = self.rng.gen_range(1..=4);
        Rational::new(p.into(), q.into())
    }

    /// Entry `(a + b·w) / (c + d·w)` with small integer coefficients, degrees at most 1.
    pub fn surreal(&mut self) -> SurrealRF {
        loop {
            let small = |rng: &mut StdRng| BigInt::from(rng.gen_range(-4i64..=4));
            let num = IntPoly::from_coeffs(vec![small(&mut self.rng), small(&mut self.rng)]);
            let den = IntPoly::from_coeffs(vec![small(&mut self.rng), small(&mut self.rng)]);
            if let Ok(x) = SurrealRF::new(num, den) {
                return x;
            }
        }
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Vec<Vec<Rational>> {
        (0..rows)
            .map(|_| (0..cols).map(|_| self.rational()).collect())
            .collect()
    }

    pub fn surreal_matrix(&mut self, rows: usize, cols: usize) -> Vec<Vec<SurrealRF>> {
        (0..rows)
            .map(|_| (0..cols).map(|_| self.surreal()).collect())
            .collect()
    }
}
