//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest power first and trimmed so that the last
//! entry is nonzero; the zero polynomial has no coefficients at all.

mod factor;
mod modp;
mod parse;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numeric::{int, Interval, Rational};

pub use factor::{factor_rational, Factorization, DEFAULT_MAX_DEGREE};
pub use sturm::{isolate_real_roots, refine_root, sturm_count, sturm_sequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeLimitExceeded { degree: usize, limit: usize },
    #[error("polynomial syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Polynomial::new(vec![-r, Rational::one()])
    }

    /// Monic polynomial with exactly the given roots (with repetition).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Polynomial {
        match self.coeffs.last() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval Horner evaluation; encloses the range over `x`.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).shift(c);
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        crate::numeric::sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivideByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Rescales to keep coefficient sizes down during remainder sequences.
    fn primitive_rational(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (_, ints) = self.to_primitive_integer();
        Polynomial::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Writes `self = content * (primitive integer polynomial)` with the
    /// integer polynomial having positive leading coefficient.
    pub fn to_primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if scaled.last().unwrap().is_negative() {
            g = -g;
        }
        let ints: Vec<BigInt> = scaled.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), ints)
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Polynomial {
        Polynomial::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// `p(q(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// `p(c * x)`.
    pub fn scale_var(&self, c: &Rational) -> Polynomial {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Polynomial::new(out)
    }

    /// `p(x + c)`.
    pub fn shift_var(&self, c: &Rational) -> Polynomial {
        self.compose(&Polynomial::new(vec![c.clone(), Rational::one()]))
    }

    /// `x^n p(1/x)` for `n = deg p`.
    pub fn reversed(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Polynomial::new(c)
    }

    /// `p(x^2)`.
    pub fn substitute_square(&self) -> Polynomial {
        let mut out = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        Polynomial::new(out)
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree `a_i` with `self = lc * prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            if !a.is_constant() {
                out.push((a, i));
            }
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Max |coefficient| ratio bound: every complex root has modulus
    /// below `1 + max |a_i / a_n|`.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().abs();
        let m = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Power of two strictly above the modulus of every complex root.
    /// Fujiwara's bound `2 max |a_(n-k)/a_n|^(1/k)` can be attained (x+2),
    /// so it is rounded up and doubled.
    pub fn root_bound(&self) -> Rational {
        let n = self.deg();
        let lc = self.leading().abs();
        let mut bound = BigInt::one();
        for k in 1..=n {
            let mut r = self.coeffs[n - k].abs() / &lc;
            if k == n {
                r /= int(2);
            }
            while Rational::from_integer(num_traits::pow(bound.clone(), k)) < r {
                bound <<= 1;
            }
        }
        Rational::from_integer(bound << 2)
    }

    /// Renders with the given variable name, e.g. `x^4-2x^2-1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if s.is_empty() {
                if negative {
                    s.push('-');
                }
            } else {
                s.push(if negative { '-' } else { '+' });
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                s.push_str(&a.to_string());
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    s.push_str(var);
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Polynomial, PolyError> {
        parse::parse_polynomial(text)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render("x"))
    }
}

impl std::str::FromStr for Polynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polynomial::parse(s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: PolyOp) -> Polynomial {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

/// `(sigma_0, ..., sigma_n)`: the coefficients of `prod (t + x_k)` from the
/// top power down.
pub fn elementary_symmetric(values: &[Rational]) -> Vec<Rational> {
    let mut sigma = vec![Rational::one()];
    for x in values {
        let mut next = sigma.clone();
        next.push(Rational::zero());
        for l in 1..next.len() {
            next[l] += &sigma[l - 1] * x;
        }
        sigma = next;
    }
    sigma
}
