// Recursive descent over
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' INT)?
//   atom  := RATIONAL | '(' expr ')' | 'sqrt' '(' expr ')' | 'hyp' '(' expr ')'
// `^` is sugar for repeated multiplication.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{ExprError, Expression};
use crate::numeric::Rational;

const MAX_POWER: u32 = 64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(char),
    Ident(String),
    End,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Num(digits.parse().expect("digits")), at));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Ident(word), at));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), at));
            i += 1;
        } else {
            return Err(syntax(at, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

fn syntax(position: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax { position, message: message.into() }
}

pub fn parse(text: &str) -> Result<Expression, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        other => Err(syntax(p.at(), format!("unexpected {}", describe(other)))),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Ident(w) => format!("'{w}'"),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.at(), format!("expected '{c}', found {}", describe(self.peek()))))
        }
    }

    fn expr(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expression::add(lhs, self.term()?);
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expression::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expression::mul(lhs, self.unary()?);
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expression::div(lhs, self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expression, ExprError> {
        if self.peek() == &Tok::Sym('-') {
            self.bump();
            return Ok(match self.unary()? {
                Expression::Const(r) => Expression::Const(-r),
                other => Expression::neg(other),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression, ExprError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let at = self.at();
        let n = match self.bump() {
            Tok::Num(n) => n.to_u32().filter(|&k| k <= MAX_POWER),
            _ => None,
        };
        let n = n.ok_or_else(|| syntax(at, format!("expected an exponent between 0 and {MAX_POWER}")))?;
        if n == 0 {
            return Ok(Expression::int(1));
        }
        let mut acc = base.clone();
        for _ in 1..n {
            acc = Expression::mul(acc, base.clone());
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expression, ExprError> {
        let at = self.at();
        let after_product = self.pos > 0 && matches!(self.toks[self.pos - 1].0, Tok::Sym('*') | Tok::Sym('/'));
        match self.bump() {
            Tok::Num(n) => {
                // "p/q" is a single literal unless it would swallow the right
                // operand of an enclosing product.
                if !after_product && self.peek() == &Tok::Sym('/') {
                    if let Tok::Num(d) = self.peek_at(1) {
                        if !d.is_zero() {
                            let d = d.clone();
                            self.bump();
                            self.bump();
                            return Ok(Expression::Const(Rational::new(n, d)));
                        }
                    }
                }
                Ok(Expression::Const(Rational::from_integer(n)))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) if name == "sqrt" || name == "hyp" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(if name == "sqrt" { Expression::sqrt(e) } else { Expression::hyp(e) })
            }
            Tok::Ident(name) => Err(syntax(at, format!("unknown function '{name}'"))),
            other => Err(syntax(at, format!("expected expression, found {}", describe(&other)))),
        }
    }
}
