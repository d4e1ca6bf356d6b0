//! Radical expressions over the rationals: parsing, exact evaluation, the
//! origami decision procedure, and rewriting into `hyp`-only form.
//!
//! `hyp(a)` denotes `sqrt(1 + a^2)`. An expression built from rationals
//! with field operations and `sqrt` is an origami number exactly when its
//! value is totally real; the `hyp`-only fragment is the constructive side
//! of that statement.

mod parse;
mod synth;
mod tower;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebraic::{AlgebraicError, AlgebraicNumber, ConjugateProfile, Limits};
use crate::numeric::Rational;
use crate::poly::PolyError;

pub use parse::parse;
pub use synth::{sos_decompose, sos_decompose_rational, synthesize, SosDecomposition, SynthesisOptions, DEFAULT_SEARCH_HEIGHT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative subexpression")]
    NonRealSubexpression,
    #[error("radicand {0} is not totally positive")]
    RequiresTotallyPositiveRadicand(String),
    #[error("sum-of-squares search exhausted for {0}")]
    SearchExhausted(String),
    #[error("value is not an origami number")]
    NotOrigami,
    #[error("synthesized {0} does not equal the input")]
    VerificationFailed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Algebraic(AlgebraicError),
}

impl From<AlgebraicError> for ExprError {
    fn from(e: AlgebraicError) -> Self {
        match e {
            AlgebraicError::DivisionByZero => ExprError::DivisionByZero,
            AlgebraicError::NegativeRadicand => ExprError::NonRealSubexpression,
            AlgebraicError::Poly(p) => ExprError::Poly(p),
            other => ExprError::Algebraic(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expression {
    Const(Rational),
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Div(Box<Expression>, Box<Expression>),
    Sqrt(Box<Expression>),
    Hyp(Box<Expression>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldClass {
    /// Field operations and `hyp` only.
    HypClass,
    /// Uses `sqrt` somewhere.
    SqrtClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    TotallyRealAndSqrtClass,
    NotTotallyReal,
    NonRealSubexpression,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::TotallyRealAndSqrtClass => "totally real",
            Reason::NotTotallyReal => "not totally real",
            Reason::NonRealSubexpression => "non-real subexpression",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub is_origami: bool,
    pub value: Option<AlgebraicNumber>,
    pub witness: Option<ConjugateProfile>,
    pub reason: Reason,
}

// Named constructors, not operator overloads.
#[allow(clippy::should_implement_trait)]
impl Expression {
    pub fn constant(r: Rational) -> Self {
        Expression::Const(r)
    }

    pub fn int(n: i64) -> Self {
        Expression::Const(Rational::from_integer(n.into()))
    }

    pub fn neg(e: Expression) -> Self {
        Expression::Neg(Box::new(e))
    }

    pub fn add(a: Expression, b: Expression) -> Self {
        Expression::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expression, b: Expression) -> Self {
        Expression::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expression, b: Expression) -> Self {
        Expression::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expression, b: Expression) -> Self {
        Expression::Div(Box::new(a), Box::new(b))
    }

    pub fn sqrt(e: Expression) -> Self {
        Expression::Sqrt(Box::new(e))
    }

    pub fn hyp(e: Expression) -> Self {
        Expression::Hyp(Box::new(e))
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match self {
            Expression::Const(r) => Some(r),
            _ => None,
        }
    }

    pub fn children(&self) -> Vec<&Expression> {
        use Expression::*;
        match self {
            Const(_) => vec![],
            Neg(a) | Sqrt(a) | Hyp(a) => vec![a],
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => vec![a, b],
        }
    }

    pub fn contains_sqrt(&self) -> bool {
        matches!(self, Expression::Sqrt(_)) || self.children().into_iter().any(Expression::contains_sqrt)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().into_iter().map(Expression::node_count).sum::<usize>()
    }

    pub fn evaluate(&self) -> Result<AlgebraicNumber, ExprError> {
        evaluate(self, &Limits::default())
    }

    pub fn classify(&self) -> FieldClass {
        classify(self)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expression::Add(..) | Expression::Sub(..) => 1,
            Expression::Mul(..) | Expression::Div(..) => 2,
            Expression::Neg(_) => 3,
            Expression::Const(r) if r < &Rational::zero() => 3,
            // p/q lexes as one literal but reads like a quotient
            Expression::Const(r) if !r.is_integer() => 2,
            _ => 4,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Expression::*;
        match self {
            Const(r) => write!(f, "{r}"),
            Neg(a) => {
                f.write_str("-")?;
                a.write_child(f, 3)
            }
            Add(a, b) | Sub(a, b) => {
                a.write_child(f, 1)?;
                f.write_str(if matches!(self, Add(..)) { "+" } else { "-" })?;
                b.write_child(f, 2)
            }
            Mul(a, b) | Div(a, b) => {
                a.write_child(f, 2)?;
                f.write_str(if matches!(self, Mul(..)) { "*" } else { "/" })?;
                // "3/4" would lex as one literal
                let glued = matches!(self, Div(..))
                    && matches!(&**a, Const(r) if r.is_integer())
                    && matches!(&**b, Const(_));
                if glued {
                    write!(f, "({b})")
                } else {
                    b.write_child(f, 3)
                }
            }
            Sqrt(a) => write!(f, "sqrt({a})"),
            Hyp(a) => write!(f, "hyp({a})"),
        }
    }
}

impl FromStr for Expression {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Exact bottom-up evaluation.
pub fn evaluate(e: &Expression, limits: &Limits) -> Result<AlgebraicNumber, ExprError> {
    use Expression::*;
    Ok(match e {
        Const(r) => AlgebraicNumber::from_rational(r.clone()),
        Neg(a) => evaluate(a, limits)?.neg(),
        Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => {
            let op = match e {
                Add(..) => crate::algebraic::AlgebraicOp::Add,
                Sub(..) => crate::algebraic::AlgebraicOp::Sub,
                Mul(..) => crate::algebraic::AlgebraicOp::Mul,
                _ => crate::algebraic::AlgebraicOp::Div,
            };
            let x = evaluate(a, limits)?;
            let y = evaluate(b, limits)?;
            x.arith(&y, op, limits)?
        }
        Sqrt(a) => evaluate(a, limits)?.sqrt(limits)?,
        Hyp(a) => evaluate(a, limits)?.hyp(limits)?,
    })
}

pub fn classify(e: &Expression) -> FieldClass {
    if e.contains_sqrt() {
        FieldClass::SqrtClass
    } else {
        FieldClass::HypClass
    }
}

/// Every grammar expression lies in the real square-root closure of the
/// rationals, so origami-ness reduces to total reality of the value.
pub fn decide_origami(e: &Expression, limits: &Limits) -> Result<Verdict, ExprError> {
    let value = match evaluate(e, limits) {
        Ok(v) => v,
        Err(ExprError::NonRealSubexpression) => {
            return Ok(Verdict { is_origami: false, value: None, witness: None, reason: Reason::NonRealSubexpression })
        }
        Err(other) => return Err(other),
    };
    let witness = value.conjugate_profile();
    let is_origami = witness.real_count == value.degree();
    let reason = if is_origami { Reason::TotallyRealAndSqrtClass } else { Reason::NotTotallyReal };
    Ok(Verdict { is_origami, value: Some(value), witness: Some(witness), reason })
}

// Constructors that fold the trivial cases synthesis produces constantly.

pub(crate) fn smart_neg(e: Expression) -> Expression {
    match e {
        Expression::Const(r) => Expression::Const(-r),
        Expression::Neg(inner) => *inner,
        other => Expression::neg(other),
    }
}

pub(crate) fn smart_add(a: Expression, b: Expression) -> Expression {
    match (a, b) {
        (Expression::Const(x), Expression::Const(y)) => Expression::Const(x + y),
        (Expression::Const(x), b) if x.is_zero() => b,
        (a, Expression::Const(y)) if y.is_zero() => a,
        (a, Expression::Const(y)) if y < Rational::zero() => Expression::sub(a, Expression::Const(-y)),
        (a, Expression::Neg(y)) => Expression::sub(a, *y),
        (a, b) => Expression::add(a, b),
    }
}

pub(crate) fn smart_mul(a: Expression, b: Expression) -> Expression {
    match (a, b) {
        (Expression::Const(x), Expression::Const(y)) => Expression::Const(x * y),
        (Expression::Const(x), _) | (_, Expression::Const(x)) if x.is_zero() => Expression::Const(x),
        (Expression::Const(x), b) if x.is_one() => b,
        (a, Expression::Const(y)) if y.is_one() => a,
        (Expression::Const(x), b) if x == -Rational::one() => smart_neg(b),
        (Expression::Const(x), b) if x < Rational::zero() => smart_neg(smart_mul(Expression::Const(-x), b)),
        (a, Expression::Const(y)) => smart_mul(Expression::Const(y), a),
        (a, b) => Expression::mul(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::poly::Polynomial;
    use proptest::prelude::*;

    fn e(s: &str) -> Expression {
        parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        use Expression as E;
        assert_eq!(e("sqrt(2+sqrt(2))"), E::sqrt(E::add(E::int(2), E::sqrt(E::int(2)))));
        assert_eq!(e("hyp(1+hyp(1))"), E::hyp(E::add(E::int(1), E::hyp(E::int(1)))));
        assert!(matches!(parse("1/("), Err(ExprError::Syntax { position: 3, .. })));
        assert_eq!(e("1/5 + hyp(0)"), E::add(E::Const(rat(1, 5)), E::hyp(E::int(0))));
        assert_eq!(e("2*3"), E::mul(E::int(2), E::int(3)));
        assert_eq!(e("-2^2"), E::neg(E::mul(E::int(2), E::int(2))));
        assert_eq!(e("-(1/5)"), E::Const(rat(-1, 5)));
    }

    #[test]
    fn render_minimal_parentheses() {
        for s in [
            "sqrt(2+sqrt(2))",
            "hyp(1+hyp(1))",
            "(1+2)*3",
            "1-(2-3)",
            "1-2-3",
            "2*(3/4)",
            "1/5*hyp(2)",
            "-sqrt(2)*3",
            "-(1+2)",
        ] {
            if let Ok(x) = parse(s) {
                assert_eq!(x.to_string(), s);
            }
        }
        assert_eq!(e("((1)+(2))").to_string(), "1+2");
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(e("hyp(1)").evaluate().unwrap(), e("sqrt(2)").evaluate().unwrap());
        assert_eq!(e("sqrt(-1)").evaluate().unwrap_err(), ExprError::NonRealSubexpression);
        let v = e("sqrt(4+2*sqrt(2))/sqrt(2)").evaluate().unwrap();
        assert_eq!(v, e("sqrt(2+sqrt(2))").evaluate().unwrap());
        assert_eq!(e("1/0").evaluate().unwrap_err(), ExprError::DivisionByZero);
        assert_eq!(e("1/(1-1)").evaluate().unwrap_err(), ExprError::DivisionByZero);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&e("hyp(hyp(1))")), FieldClass::HypClass);
        assert_eq!(classify(&e("sqrt(2)")), FieldClass::SqrtClass);
        assert_eq!(classify(&e("1/5 + hyp(0)")), FieldClass::HypClass);
    }

    #[test]
    fn decide_examples() {
        let l = Limits::default();
        let v = decide_origami(&e("sqrt(1+sqrt(2))"), &l).unwrap();
        assert!(!v.is_origami);
        assert_eq!(v.reason, Reason::NotTotallyReal);
        assert_eq!(v.value.unwrap().minpoly(), &Polynomial::from_ints(&[-1, 0, -2, 0, 1]));
        assert!(decide_origami(&e("sqrt(2+sqrt(2))"), &l).unwrap().is_origami);
        assert!(decide_origami(&e("sqrt(4+2*sqrt(2))"), &l).unwrap().is_origami);
        let v = decide_origami(&e("sqrt(-2)"), &l).unwrap();
        assert_eq!((v.is_origami, v.reason), (false, Reason::NonRealSubexpression));
        assert_eq!(decide_origami(&e("1/0"), &l).unwrap_err(), ExprError::DivisionByZero);
    }

    fn arb_expr() -> impl Strategy<Value = Expression> {
        let leaf = (-9i64..10, 1i64..5).prop_map(|(p, q)| Expression::Const(rat(p, q)));
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Expression::neg),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expression::add(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expression::sub(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expression::mul(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expression::div(a, b)),
                inner.clone().prop_map(Expression::sqrt),
                inner.prop_map(Expression::hyp),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(x in arb_expr()) {
            let normalized = parse(&x.to_string()).unwrap();
            prop_assert_eq!(parse(&normalized.to_string()).unwrap(), normalized.clone());
            prop_assert_eq!(classify(&normalized), classify(&x));
        }
    }
}
