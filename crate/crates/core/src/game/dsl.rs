//! Text notation for games.
//!
//! ```text
//! gexpr := gterm (('+'|'-') gterm)*
//! gterm := '-' gterm | gatom
//! gatom := dyadic | '*' | '^' | 'v' | 'mul' '(' integer ',' gexpr ')'
//!        | '{' glist '|' glist '}' | '(' gexpr ')'
//! glist := (gexpr (',' gexpr)*)?
//! dyadic := integer | integer '/' power-of-two
//! ```
//!
//! `^` is up `{0|*}`, `v` is down, `mul(n, G)` is `n·G`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{add, canonical, down, make_game, neg, nmul, number_form, number_to_game, star, sub, up, Game};
use crate::error::{Error, Result};
use crate::field::parse::Cursor;
use crate::field::Dyadic;

/// Parses game notation. The result is the game as written, not simplified.
pub fn parse_game(text: &str) -> Result<Game> {
    let mut cur = Cursor::new(text);
    let g = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("expected '+', '-' or end of input"));
    }
    Ok(g)
}

fn expr(cur: &mut Cursor) -> Result<Game> {
    let mut acc = term(cur)?;
    loop {
        if cur.eat(b'+') {
            acc = add(acc, term(cur)?);
        } else if cur.eat(b'-') {
            acc = sub(acc, term(cur)?);
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<Game> {
    if cur.eat(b'-') {
        return Ok(neg(term(cur)?));
    }
    atom(cur)
}

fn atom(cur: &mut Cursor) -> Result<Game> {
    if cur.eat(b'*') {
        return Ok(star());
    }
    if cur.eat(b'^') {
        return Ok(up());
    }
    if cur.eat_word("mul") {
        cur.expect(b'(')?;
        let pos = cur.pos();
        let negative = cur.eat(b'-');
        let n = cur
            .integer()
            .ok_or_else(|| cur.unexpected("expected integer multiplier"))?;
        let n = if negative { -n } else { n };
        let n = n
            .to_i64()
            .ok_or_else(|| Error::parse(pos, "multiplier out of range"))?;
        cur.expect(b',')?;
        let g = expr(cur)?;
        cur.expect(b')')?;
        return Ok(nmul(n, g));
    }
    if cur.eat(b'v') {
        return Ok(down());
    }
    if cur.eat(b'(') {
        let g = expr(cur)?;
        cur.expect(b')')?;
        return Ok(g);
    }
    if cur.eat(b'{') {
        let left = list(cur, b'|')?;
        cur.expect(b'|')?;
        let right = list(cur, b'}')?;
        cur.expect(b'}')?;
        return Ok(make_game(left, right));
    }
    let pos = cur.pos();
    match cur.integer() {
        Some(n) => dyadic_literal(cur, pos, n),
        None => Err(cur.unexpected("expected a game")),
    }
}

fn list(cur: &mut Cursor, close: u8) -> Result<Vec<Game>> {
    let mut out = Vec::new();
    if cur.peek() == Some(close) {
        return Ok(out);
    }
    out.push(expr(cur)?);
    while cur.eat(b',') {
        out.push(expr(cur)?);
    }
    Ok(out)
}

fn dyadic_literal(cur: &mut Cursor, pos: usize, n: BigInt) -> Result<Game> {
    if !cur.eat(b'/') {
        return Ok(number_to_game(&Dyadic::integer(n)));
    }
    let d = cur
        .integer()
        .ok_or_else(|| cur.unexpected("expected denominator"))?;
    if d.is_zero() {
        return Err(Error::parse(pos, "zero denominator"));
    }
    let exponent = d.trailing_zeros().unwrap_or(0);
    if d != BigInt::one() << exponent {
        return Err(Error::NonDyadicNumber {
            position: pos,
            literal: format!("{n}/{d}"),
        });
    }
    Ok(number_to_game(&Dyadic::new(n, exponent as u32)))
}

/// Canonical form in brace notation, with numbers, `*`, `^` and `v` abbreviated.
pub fn format_game(g: Game) -> String {
    let mut out = String::new();
    write_canonical(canonical(g), &mut out);
    out
}

fn write_canonical(c: Game, out: &mut String) {
    if let Some(x) = number_form(c) {
        out.push_str(&x.to_string());
        return;
    }
    if c == star() {
        out.push('*');
        return;
    }
    if c == up() {
        out.push('^');
        return;
    }
    if c == down() {
        out.push('v');
        return;
    }
    out.push('{');
    write_list(&c.left(), out);
    out.push_str(" | ");
    write_list(&c.right(), out);
    out.push('}');
}

fn write_list(options: &[Game], out: &mut String) {
    for (i, &o) in options.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_canonical(o, out);
    }
}
