// Text syntax: `a_n*x^n + ... + a_0`, coefficients `p` or `p/q`, the `*`
// optional, variable `x` or `t`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PolyError, Polynomial};
use crate::numeric::Rational;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().parse().unwrap()
        })
    }
}

pub(super) fn parse_polynomial(text: &str) -> Result<Polynomial, PolyError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;

        let mut coeff: Option<Rational> = None;
        if let Some(n) = cur.integer() {
            let mut r = Rational::from_integer(n);
            if cur.eat(b'/') {
                let d = cur.integer().ok_or_else(|| cur.error("expected denominator"))?;
                if d.is_zero() {
                    return Err(cur.error("zero denominator"));
                }
                r /= Rational::from_integer(d);
            }
            coeff = Some(r);
        }
        let had_star = cur.eat(b'*');
        let mut power = 0usize;
        if matches!(cur.peek(), Some(b'x') | Some(b't')) {
            cur.pos += 1;
            power = 1;
            if cur.eat(b'^') {
                let n = cur.integer().ok_or_else(|| cur.error("expected exponent"))?;
                power = n.try_into().map_err(|_| cur.error("exponent too large"))?;
            }
        } else if had_star || coeff.is_none() {
            return Err(cur.error("expected a term"));
        }
        let mut c = coeff.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += c;
    }
    if cur.peek().is_some() {
        return Err(cur.error("unexpected character"));
    }
    if first {
        return Err(cur.error("empty polynomial"));
    }
    Ok(Polynomial::new(coeffs))
}
