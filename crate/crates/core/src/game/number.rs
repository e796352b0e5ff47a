use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::store::Memo;
use super::{canonical, make_game, zero, Game};
use crate::error::{Error, Result};
use crate::field::Dyadic;

static NUMBER_FORM: Memo<Game, Option<Dyadic>> = Memo::new();
static FROM_DYADIC: Memo<Dyadic, Game> = Memo::new();

/// The value of `G` if it is in number form: every option is in number form
/// and every left option is below every right option. Such a game equals the
/// simplest dyadic strictly between its best options.
pub(crate) fn number_form(g: Game) -> Option<Dyadic> {
    if let Some(r) = NUMBER_FORM.get(&g) {
        return r;
    }
    let r = compute_number_form(g);
    NUMBER_FORM.insert(g, r.clone());
    r
}

fn compute_number_form(g: Game) -> Option<Dyadic> {
    let lefts: Option<Vec<Dyadic>> = g.left().iter().map(|&x| number_form(x)).collect();
    let rights: Option<Vec<Dyadic>> = g.right().iter().map(|&x| number_form(x)).collect();
    let (lefts, rights) = (lefts?, rights?);
    let lo = lefts.into_iter().max();
    let hi = rights.into_iter().min();
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l >= h {
            return None;
        }
    }
    Some(Dyadic::simplest_between(lo.as_ref(), hi.as_ref()))
}

/// Whether `G` equals a number (tested on its canonical form).
pub fn is_number(g: Game) -> bool {
    number_form(canonical(g)).is_some()
}

/// The dyadic value of a number-valued game.
pub fn game_to_number(g: Game) -> Result<Dyadic> {
    number_form(canonical(g)).ok_or(Error::NotANumber)
}

/// Canonical game for a dyadic: `n = {n-1 | }`, `-n = { | -n+1}`,
/// `p/2^q = {(p-1)/2^q | (p+1)/2^q}` for odd `p`.
pub fn number_to_game(x: &Dyadic) -> Game {
    if let Some(g) = FROM_DYADIC.get(x) {
        return g;
    }
    let g = if x.is_integer() {
        integer_game(x.numerator())
    } else {
        let e = x.exponent();
        let below = Dyadic::new(x.numerator() - BigInt::one(), e);
        let above = Dyadic::new(x.numerator() + BigInt::one(), e);
        make_game([number_to_game(&below)], [number_to_game(&above)])
    };
    FROM_DYADIC.insert(x.clone(), g);
    g
}

fn integer_game(n: &BigInt) -> Game {
    // Built bottom-up so large integers never recurse deeply.
    let mut g = zero();
    let mut k = BigInt::zero();
    let target = n.abs();
    let positive = n.is_positive();
    while k < target {
        k += 1;
        let value = Dyadic::integer(if positive { k.clone() } else { -k.clone() });
        g = match FROM_DYADIC.get(&value) {
            Some(cached) => cached,
            None => {
                let next = if positive { make_game([g], []) } else { make_game([], [g]) };
                FROM_DYADIC.insert(value, next);
                next
            }
        };
    }
    g
}
