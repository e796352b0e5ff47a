//! Recursive-descent parser for field literals such as `1 + 1/w` or `(2*w+3)/(4*(w+1))`.
//!
//! ```text
//! fexpr := fterm (('+'|'-') fterm)*
//! fterm := ffac (('*'|'/') ffac)*
//! ffac  := '-' ffac | integer | integer '/' integer | 'w' | '(' fexpr ')'
//! ```

use num_bigint::BigInt;

use super::rf::SurrealRF;
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{}'", c as char)))
        }
    }

    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .unwrap()
        })
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn unexpected(&mut self, what: &str) -> Error {
        let pos = self.pos();
        match self.src.get(pos) {
            Some(&c) => Error::parse(pos, format!("{what}, found '{}'", c as char)),
            None => Error::parse(pos, format!("{what}, found end of input")),
        }
    }
}

pub fn parse_field(text: &str) -> Result<SurrealRF> {
    let mut cur = Cursor::new(text);
    let value = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("expected operator"));
    }
    Ok(value)
}

fn expr(cur: &mut Cursor) -> Result<SurrealRF> {
    let mut acc = term(cur)?;
    loop {
        if cur.eat(b'+') {
            acc = &acc + &term(cur)?;
        } else if cur.eat(b'-') {
            acc = &acc - &term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<SurrealRF> {
    let mut acc = factor(cur)?;
    loop {
        if cur.eat(b'*') {
            acc = &acc * &factor(cur)?;
        } else if cur.peek() == Some(b'/') {
            let pos = cur.pos();
            cur.eat(b'/');
            let rhs = factor(cur)?;
            acc = acc
                .checked_div(&rhs)
                .map_err(|_| Error::parse(pos, "division by zero"))?;
        } else {
            return Ok(acc);
        }
    }
}

fn factor(cur: &mut Cursor) -> Result<SurrealRF> {
    if cur.eat(b'-') {
        return Ok(-factor(cur)?);
    }
    if cur.eat(b'w') {
        return Ok(SurrealRF::omega());
    }
    if cur.eat(b'(') {
        let inner = expr(cur)?;
        cur.expect(b')')?;
        return Ok(inner);
    }
    match cur.integer() {
        Some(n) => Ok(SurrealRF::integer(n)),
        None => Err(cur.unexpected("expected integer, 'w', '-' or '('")),
    }
}
