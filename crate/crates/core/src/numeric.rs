//! Exact rational scalars and closed rational intervals.
//!
//! Everything downstream (root isolation, sign decisions, plane dedup) is
//! built on these two types, so nothing here ever rounds.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Canonical arbitrary-precision fraction (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse of an interval containing zero")]
    InverseContainsZero,
    #[error("invalid rational literal {0:?}")]
    BadLiteral(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, panics on `d == 0`. Meant for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (optional leading minus on `p`).
pub fn parse_rational(text: &str) -> Result<Rational, NumericError> {
    let bad = || NumericError::BadLiteral(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(NumericError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Parses `p/q` or a decimal such as `0.001`, `-2.5` or `1e-12`.
pub fn parse_decimal(text: &str) -> Result<Rational, NumericError> {
    let t = text.trim();
    if t.contains('/') {
        return parse_rational(t);
    }
    let bad = || NumericError::BadLiteral(text.to_string());
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let shift = exp - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    let n = Rational::from_integer(n);
    Ok(if shift >= 0 { n * scale } else { n / scale })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rational_arith(a: &Rational, b: &Rational, op: RationalOp) -> Result<Rational, NumericError> {
    Ok(match op {
        RationalOp::Add => a + b,
        RationalOp::Sub => a - b,
        RationalOp::Mul => a * b,
        RationalOp::Div => {
            if b.is_zero() {
                return Err(NumericError::DivisionByZero);
            }
            a / b
        }
    })
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    match r.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Largest integer `s` with `s*s <= n` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

/// Splits `n > 0` as `s^2 * d`. Square factors of primes below 10^4 are
/// removed, and a square cofactor is absorbed, so `d` is squarefree for
/// all but very large inputs.
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square_part needs a positive integer");
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2u32);
    while p < BigInt::from(10_000u32) && &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            d *= &p;
        }
        p += 1;
    }
    let r = isqrt(&rest);
    if &r * &r == rest {
        s *= r;
    } else {
        d *= rest;
    }
    (s, d)
}

/// Exact square root of a rational if it has one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = isqrt(n);
    let sd = isqrt(d);
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Rational enclosure of `sqrt(x)` for `x >= 0`, of width at most `2^-bits`.
pub fn sqrt_bounds(x: &Rational, bits: u32) -> Interval {
    assert!(!x.is_negative(), "sqrt_bounds of a negative rational");
    if let Some(s) = rational_sqrt(x) {
        return Interval::point(s);
    }
    // floor(sqrt(x * 4^bits)) / 2^bits <= sqrt(x) < (that + 1) / 2^bits
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (x * Rational::from_integer(scale)).floor().to_integer();
    let s = isqrt(&scaled);
    let den = BigInt::one() << bits as usize;
    Interval::new(
        Rational::new(s.clone(), den.clone()),
        Rational::new(s + 1, den),
    )
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Builds the hull of two endpoints given in either order.
    pub fn hull(a: Rational, b: Rational) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn point(r: Rational) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign shared by every point of the interval, if any.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, r: &Rational) -> Interval {
        Interval::hull(&self.lo * r, &self.hi * r)
    }

    pub fn shift(&self, r: &Rational) -> Interval {
        Interval::new(&self.lo + r, &self.hi + r)
    }

    pub fn inv(&self) -> Result<Interval, NumericError> {
        if self.contains_zero() {
            return Err(NumericError::InverseContainsZero);
        }
        Ok(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Interval::new(Rational::zero(), a.max(b))
        } else {
            Interval::hull(a, b)
        }
    }

    /// Enclosure of the nonnegative square root, for intervals with `lo >= 0`
    /// (a negative `lo` is clamped to zero).
    pub fn sqrt(&self, bits: u32) -> Interval {
        let lo = if self.lo.is_negative() { Rational::zero() } else { self.lo.clone() };
        let a = sqrt_bounds(&lo, bits);
        let b = sqrt_bounds(&self.hi, bits);
        Interval::new(a.lo, b.hi)
    }

    /// Smallest interval containing both.
    pub fn union(&self, other: &Interval) -> Interval {
        Interval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.midpoint();
        (
            Interval::new(self.lo.clone(), m.clone()),
            Interval::new(m, self.hi.clone()),
        )
    }
}

/// Binary interval operation; `Neg` and `Inv` act on `j` only and ignore `i`.
pub fn interval_arith(
    i: &Interval,
    j: &Interval,
    op: IntervalOp,
) -> Result<Interval, NumericError> {
    Ok(match op {
        IntervalOp::Add => i.add(j),
        IntervalOp::Sub => i.sub(j),
        IntervalOp::Mul => i.mul(j),
        IntervalOp::Neg => j.neg(),
        IntervalOp::Inv => j.inv()?,
    })
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Decimal rendering with `digits` fractional digits, rounded toward
/// `-inf` (`round_up == false`) or `+inf`.
pub fn to_decimal_string(r: &Rational, digits: usize, round_up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let n = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let negative = n.is_negative();
    let (q, rem) = n.abs().div_rem(&scale);
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    s.push_str(&q.to_string());
    if digits > 0 {
        let frac = rem.to_string();
        s.push('.');
        s.push_str(&"0".repeat(digits - frac.len()));
        s.push_str(&frac);
    }
    s
}

/// Number of fractional decimal digits needed to resolve a width.
pub fn digits_for_width(width: &Rational) -> usize {
    let mut digits = 0usize;
    let mut w = width.clone();
    let ten = int(10);
    while w < Rational::one() && digits < 200 {
        w *= &ten;
        digits += 1;
    }
    digits
}

/// Rough `f64` view, only for rendering.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_parts() {
        let split = |n: i64| {
            let (s, d) = square_part(&BigInt::from(n));
            (s.to_string(), d.to_string())
        };
        assert_eq!(split(1), ("1".into(), "1".into()));
        assert_eq!(split(8), ("2".into(), "2".into()));
        assert_eq!(split(180), ("6".into(), "5".into()));
        assert_eq!(split(10007 * 10007 * 3), ("10007".into(), "3".into()));
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(parse_decimal("1e-12").unwrap(), Rational::new(1.into(), num_traits::pow(BigInt::from(10), 12)));
        assert_eq!(parse_decimal("0.001").unwrap(), rat(1, 1000));
        assert_eq!(parse_decimal("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_decimal("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_decimal("2.5e1").unwrap(), int(25));
        assert!(parse_decimal("x").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational_arith(&rat(1, 2), &rat(1, 3), RationalOp::Add).unwrap(), rat(5, 6));
        let half = rational_arith(&rat(2, 4), &int(1), RationalOp::Mul).unwrap();
        assert_eq!(half, rat(1, 2));
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(
            rational_arith(&int(1), &int(0), RationalOp::Div),
            Err(NumericError::DivisionByZero)
        );
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rat(5, 6).to_string(), "5/6");
        assert_eq!(int(-3).to_string(), "-3");
        assert_eq!(parse_rational("-10/4").unwrap(), rat(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn interval_examples() {
        let i = Interval::new(int(1), int(2));
        let j = Interval::new(int(3), int(4));
        assert_eq!(interval_arith(&i, &j, IntervalOp::Add).unwrap(), Interval::new(int(4), int(6)));
        // endpoint products of [-1,1]x[2,3]: -2,-3,2,3
        let k = Interval::new(int(-1), int(1));
        let l = Interval::new(int(2), int(3));
        assert_eq!(interval_arith(&k, &l, IntervalOp::Mul).unwrap(), Interval::new(int(-3), int(3)));
        assert_eq!(
            interval_arith(&i, &k, IntervalOp::Inv),
            Err(NumericError::InverseContainsZero)
        );
        assert_eq!(j.inv().unwrap(), Interval::new(rat(1, 4), rat(1, 3)));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let b = sqrt_bounds(&int(2), 20);
        assert!(b.lo() * b.lo() <= int(2) && int(2) <= b.hi() * b.hi());
        assert!(b.width() <= rat(1, 1 << 20));
        assert_eq!(sqrt_bounds(&rat(9, 4), 5), Interval::point(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
    }

    #[test]
    fn decimal_strings() {
        assert_eq!(to_decimal_string(&rat(1, 3), 4, false), "0.3333");
        assert_eq!(to_decimal_string(&rat(1, 3), 4, true), "0.3334");
        assert_eq!(to_decimal_string(&rat(-1, 8), 2, false), "-0.13");
        assert_eq!(to_decimal_string(&int(7), 0, false), "7");
        assert_eq!(digits_for_width(&rat(1, 1000)), 3);
    }
}
