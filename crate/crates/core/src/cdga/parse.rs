use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::cdga::space::is_name_char;
use crate::cdga::{GeneratorSpace, Polynomial};
use crate::{Error, Result, Q};

pub(crate) fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

pub(crate) fn parse_polynomial(space: &Arc<GeneratorSpace>, src: &str) -> Result<Polynomial> {
    let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
    let p = parse_sum(space, &mut lx)?;
    match lx.peek() {
        None => Ok(p),
        Some(_) => Err(lx.err("unexpected input")),
    }
}

fn parse_sum(space: &Arc<GeneratorSpace>, lx: &mut Lexer<'_>) -> Result<Polynomial> {
    let mut total = Polynomial::zero(space);
    let mut first = true;
    loop {
        let mut sign = Q::one();
        match lx.peek() {
            None | Some(b')') if !first => break,
            None => return Err(lx.err("empty expression")),
            Some(b'+') => {
                lx.pos += 1;
            }
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected `+` or `-`")),
        }
        first = false;
        let term = parse_term(space, lx)?;
        total = &total + &term.scale(&sign);
    }
    Ok(total)
}

fn parse_exponent(lx: &mut Lexer<'_>) -> Result<Option<u32>> {
    if lx.peek() != Some(b'^') {
        return Ok(None);
    }
    lx.pos += 1;
    let e = lx.take_while(|c| c.is_ascii_digit()).parse().map_err(|_| lx.err("bad exponent"))?;
    Ok(Some(e))
}

fn parse_term(space: &Arc<GeneratorSpace>, lx: &mut Lexer<'_>) -> Result<Polynomial> {
    let mut acc = Polynomial::one(space);
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = lx.take_while(|c| c.is_ascii_digit()).to_string();
                let q = if lx.peek() == Some(b'/') {
                    lx.pos += 1;
                    let den = lx.take_while(|c| c.is_ascii_digit()).to_string();
                    parse_rational(&format!("{num}/{den}"))?
                } else {
                    parse_rational(&num)?
                };
                acc = acc.scale(&q);
            }
            Some(b'(') => {
                lx.pos += 1;
                let mut inner = parse_sum(space, lx)?;
                if lx.peek() != Some(b')') {
                    return Err(lx.err("expected `)`"));
                }
                lx.pos += 1;
                if let Some(e) = parse_exponent(lx)? {
                    inner = inner.pow(e);
                }
                acc = &acc * &inner;
            }
            Some(c) if is_name_char(c as char) => {
                let name = lx.take_while(|c| is_name_char(c as char)).to_string();
                let mut g = Polynomial::named(space, &name)?;
                if let Some(e) = parse_exponent(lx)? {
                    g = g.pow(e);
                }
                acc = &acc * &g;
            }
            _ => return Err(lx.err("expected factor")),
        }
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            return Ok(acc);
        }
    }
}
