use super::store::Memo;
use super::{canonical, number_form, Game};
use crate::field::Dyadic;

static STOPS: Memo<Game, (Dyadic, Dyadic)> = Memo::new();

/// `(left_stop, right_stop)` of `G`, computed on its canonical form.
pub fn stops(g: Game) -> (Dyadic, Dyadic) {
    canonical_stops(canonical(g))
}

fn canonical_stops(c: Game) -> (Dyadic, Dyadic) {
    if let Some(x) = number_form(c) {
        return (x.clone(), x);
    }
    if let Some(r) = STOPS.get(&c) {
        return r;
    }
    // A canonical non-number has options on both sides.
    let ls = c
        .left()
        .iter()
        .map(|&gl| canonical_stops(gl).1)
        .max()
        .expect("canonical non-number has a left option");
    let rs = c
        .right()
        .iter()
        .map(|&gr| canonical_stops(gr).0)
        .min()
        .expect("canonical non-number has a right option");
    STOPS.insert(c, (ls.clone(), rs.clone()));
    (ls, rs)
}

pub fn left_stop(g: Game) -> Dyadic {
    stops(g).0
}

pub fn right_stop(g: Game) -> Dyadic {
    stops(g).1
}

/// True iff both stops are zero, i.e. `-2^-m <= G <= 2^-m` for every `m`.
///
/// For short games this also decides strong infinitesimality.
pub fn is_infinitesimal(g: Game) -> bool {
    let (l, r) = stops(g);
    l.is_zero() && r.is_zero()
}
