//! Thermographs, mean values and temperatures of short games.
//!
//! Walls are computed on canonical forms. A number `x` has both walls equal
//! to `x` and temperature 0. Otherwise the left scaffold is the maximum over
//! left options of their right wall tilted by `-t`, the right scaffold the
//! minimum over right options of their left wall tilted by `+t`, and both
//! freeze into a vertical mast where they first meet.

mod pwl;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use pwl::Pwl;

use crate::error::{Error, Result};
use crate::field::{Dyadic, Rational};
use crate::game::{canonical, le, number_form, number_to_game, scaled_canonical, Game};

/// Left and right walls of a game, with its mast value and freezing temperature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thermograph {
    pub left: Pwl,
    pub right: Pwl,
    pub mast: Rational,
    pub temperature: Rational,
}

impl Thermograph {
    fn number(x: &Dyadic) -> Self {
        let v = x.to_rational();
        Thermograph {
            left: Pwl::constant(v.clone()),
            right: Pwl::constant(v.clone()),
            mast: v,
            temperature: Rational::zero(),
        }
    }

    /// Breakpoint table `(t, left(t), right(t))` over the union of both walls' breakpoints.
    pub fn breakpoints(&self) -> Vec<(Rational, Rational, Rational)> {
        let mut ts: Vec<Rational> = self
            .left
            .points()
            .iter()
            .chain(self.right.points())
            .map(|(t, _)| t.clone())
            .collect();
        ts.push(self.temperature.clone());
        ts.sort();
        ts.dedup();
        ts.into_iter()
            .map(|t| {
                let (l, r) = (self.left.eval(&t), self.right.eval(&t));
                (t, l, r)
            })
            .collect()
    }
}

static THERMOGRAPHS: std::sync::LazyLock<std::sync::Mutex<std::collections::HashMap<Game, Arc<Thermograph>>>> =
    std::sync::LazyLock::new(Default::default);

/// Thermograph of `G`, computed on its canonical form and cached.
pub fn thermograph(g: Game) -> Arc<Thermograph> {
    canonical_thermograph(canonical(g))
}

fn canonical_thermograph(c: Game) -> Arc<Thermograph> {
    if let Some(t) = THERMOGRAPHS.lock().unwrap().get(&c) {
        return t.clone();
    }
    let t = Arc::new(compute(c));
    THERMOGRAPHS.lock().unwrap().insert(c, t.clone());
    t
}

fn compute(c: Game) -> Thermograph {
    if let Some(x) = number_form(c) {
        return Thermograph::number(&x);
    }
    let minus_one = -Rational::one();
    let one = Rational::one();
    // canonical non-numbers have options on both sides
    let left_scaffold = c
        .left()
        .iter()
        .map(|&gl| canonical_thermograph(gl).right.tilt(&minus_one))
        .reduce(|a, b| a.max(&b))
        .expect("canonical non-number has a left option");
    let right_scaffold = c
        .right()
        .iter()
        .map(|&gr| canonical_thermograph(gr).left.tilt(&one))
        .reduce(|a, b| a.min(&b))
        .expect("canonical non-number has a right option");
    let gap = left_scaffold.minus(&right_scaffold);
    let temperature = gap
        .first_nonpositive()
        .expect("scaffolds of a short game always meet");
    let mast = left_scaffold.eval(&temperature);
    debug_assert_eq!(mast, right_scaffold.eval(&temperature));
    Thermograph {
        left: left_scaffold.freeze_at(&temperature),
        right: right_scaffold.freeze_at(&temperature),
        mast,
        temperature,
    }
}

/// Mean value: the thermograph's mast.
pub fn mean(g: Game) -> Rational {
    thermograph(g).mast.clone()
}

/// Freezing temperature; numbers have temperature 0.
pub fn temperature(g: Game) -> Rational {
    thermograph(g).temperature.clone()
}

/// Rounds up to a dyadic: the value itself if dyadic, otherwise its ceiling.
pub fn ceil_dyadic(q: &Rational) -> Dyadic {
    Dyadic::from_rational(q).unwrap_or_else(|| Dyadic::integer(q.ceil().to_integer()))
}

/// The slack `m` used for mean-value bounds: `ceil_dyadic(temperature) + 1`.
pub fn mean_bound(g: Game) -> Dyadic {
    &ceil_dyadic(&temperature(g)) + &Dyadic::integer(1)
}

/// Checks `n·μ(G) - m <= n·G <= n·μ(G) + m` by exact game comparison.
pub fn mean_bound_check(g: Game, n: u64, m: &Rational) -> Result<bool> {
    let center = mean(g) * Rational::from_integer(BigInt::from(n));
    let lo = &center - m;
    let hi = &center + m;
    let to_dyadic = |q: &Rational| Dyadic::from_rational(q).ok_or_else(|| Error::NonDyadicBound(q.to_string()));
    let (lo, hi) = (to_dyadic(&lo)?, to_dyadic(&hi)?);
    let n = i64::try_from(n).map_err(|_| Error::Shape("multiplier too large".into()))?;
    let multiple = scaled_canonical(n, g);
    Ok(le(number_to_game(&lo), multiple) && le(multiple, number_to_game(&hi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn switch_thermograph() {
        let t = thermograph(parse_game("{0 | -2}").unwrap());
        assert_eq!(t.mast, q(-1));
        assert_eq!(t.temperature, q(1));
    }

    #[test]
    fn star_thermograph() {
        let t = thermograph(star());
        assert_eq!((t.mast.clone(), t.temperature.clone()), (q(0), q(0)));
    }

    #[test]
    fn zero_mean_positive_game() {
        let g = parse_game("{1 | {0 | -2}}").unwrap();
        let t = thermograph(g);
        assert_eq!(t.mast, q(0));
        assert_eq!(t.temperature, q(1));
        assert_eq!(mean(g), q(0));
    }

    #[test]
    fn hot_switch_mean() {
        let g = parse_game("{10 | 2}").unwrap();
        assert_eq!(mean(g), q(6));
        assert_eq!(temperature(g), q(4));
        assert_eq!(temperature(integer(5)), q(0));
        assert_eq!(mean(parse_game("3/4").unwrap()), Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn bound_checks() {
        let g = parse_game("{1 | {0 | -2}}").unwrap();
        assert!(mean_bound_check(g, 3, &q(2)).unwrap());
        assert!(mean_bound_check(one(), 4, &q(0)).unwrap());
        assert!(mean_bound_check(parse_game("{10|2}").unwrap(), 2, &q(5)).unwrap());
        assert!(matches!(
            mean_bound_check(one(), 1, &Rational::new(1.into(), 3.into())),
            Err(Error::NonDyadicBound(_))
        ));
        // too tight a window fails honestly
        assert!(!mean_bound_check(parse_game("{10|2}").unwrap(), 1, &q(1)).unwrap());
    }

    #[test]
    fn breakpoint_table() {
        let t = thermograph(parse_game("{10 | 2}").unwrap());
        let rows = t.breakpoints();
        assert_eq!(rows.first().unwrap(), &(q(0), q(10), q(2)));
        assert_eq!(rows.last().unwrap(), &(q(4), q(6), q(6)));
    }
}
