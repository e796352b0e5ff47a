use super::store::Memo;
use super::{canonical, make_game, number_form, number_to_game, zero, Game};

static NEG: Memo<Game, Game> = Memo::new();
static ADD: Memo<(Game, Game), Game> = Memo::new();

/// `-G = {-G^R | -G^L}`
pub fn neg(g: Game) -> Game {
    if let Some(r) = NEG.get(&g) {
        return r;
    }
    let left: Vec<Game> = g.right().iter().map(|&x| neg(x)).collect();
    let right: Vec<Game> = g.left().iter().map(|&x| neg(x)).collect();
    let r = make_game(left, right);
    NEG.insert(g, r);
    NEG.insert(r, g);
    r
}

/// Disjunctive sum `G + H = {G^L + H, G + H^L | G^R + H, G + H^R}`.
pub fn add(g: Game, h: Game) -> Game {
    let z = zero();
    if g == z {
        return h;
    }
    if h == z {
        return g;
    }
    let key = if g <= h { (g, h) } else { (h, g) };
    if let Some(r) = ADD.get(&key) {
        return r;
    }
    let (gl, gr, hl, hr) = (g.left(), g.right(), h.left(), h.right());
    let left: Vec<Game> = gl
        .iter()
        .map(|&x| add(x, h))
        .chain(hl.iter().map(|&y| add(g, y)))
        .collect();
    let right: Vec<Game> = gr
        .iter()
        .map(|&x| add(x, h))
        .chain(hr.iter().map(|&y| add(g, y)))
        .collect();
    let r = make_game(left, right);
    ADD.insert(key, r);
    r
}

/// `G - H = G + (-H)`
pub fn sub(g: Game, h: Game) -> Game {
    add(g, neg(h))
}

/// `n·G`: the sum of `n` copies of `G`, or of `|n|` copies of `-G` when `n < 0`.
///
/// This is the literal iterated sum; see [`scaled_canonical`] for large `n`.
pub fn nmul(n: i64, g: Game) -> Game {
    let (count, base) = if n < 0 { (n.unsigned_abs(), neg(g)) } else { (n as u64, g) };
    (0..count).fold(zero(), |acc, _| add(acc, base))
}

/// Canonical form of `G + H`, with a shortcut when both are number-valued.
pub(crate) fn add_canonical(g: Game, h: Game) -> Game {
    if let (Some(x), Some(y)) = (number_form(g), number_form(h)) {
        return number_to_game(&(&x + &y));
    }
    canonical(add(canonical(g), canonical(h)))
}

/// Canonical form of a sum, canonicalizing after each addition so
/// intermediate sums stay small.
pub fn sum_canonical(games: impl IntoIterator<Item = Game>) -> Game {
    games
        .into_iter()
        .fold(zero(), add_canonical)
}

/// Canonical form of `n·G` by binary doubling.
pub fn scaled_canonical(n: i64, g: Game) -> Game {
    let mut base = canonical(if n < 0 { neg(g) } else { g });
    let mut k = n.unsigned_abs();
    let mut acc = zero();
    while k > 0 {
        if k & 1 == 1 {
            acc = add_canonical(acc, base);
        }
        k >>= 1;
        if k > 0 {
            base = add_canonical(base, base);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn negation() {
        assert_eq!(neg(one()), minus_one());
        assert_eq!(neg(star()), star());
        assert_eq!(neg(zero()), zero());
        assert_eq!(neg(neg(up())), up());
        assert_eq!(neg(up()), down());
    }

    #[test]
    fn star_plus_star_is_zero() {
        assert!(eq(add(star(), star()), zero()));
        assert_eq!(canonical(add(star(), star())), zero());
    }

    #[test]
    fn adding_zero_is_identity() {
        let g = make_game([one()], [star()]);
        assert_eq!(add(g, zero()), g);
        assert!(eq(add(one(), minus_one()), zero()));
    }

    #[test]
    fn multiples() {
        let half = make_game([zero()], [one()]);
        assert!(eq(nmul(2, half), one()));
        assert_eq!(nmul(1, up()), up());
        assert_eq!(nmul(-1, up()), neg(up()));
        assert_eq!(nmul(0, up()), zero());
        assert_eq!(scaled_canonical(2, half), one());
        assert_eq!(scaled_canonical(-3, one()), integer(-3));
        assert_eq!(scaled_canonical(5, star()), star());
    }
}
