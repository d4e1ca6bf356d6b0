//! Real algebraic numbers as (minimal polynomial, isolating window).
//!
//! A value is the unique root of its monic irreducible minimal polynomial
//! inside its window. Windows are either a single rational point (degree
//! one) or have non-root endpoints across which the minimal polynomial
//! changes sign, so refinement is plain bisection on signs.
//!
//! Operations that are rational changes of variable (negation, reciprocal,
//! adding or scaling by a rational) map irreducible polynomials to
//! irreducible polynomials and are done directly. Everything else builds an
//! annihilator, factors it, and keeps refining operand windows until exactly
//! one (factor, root) candidate is consistent with the interval enclosure of
//! the result.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::annihilator::{self, AnnihilatorError};
use crate::numeric::{self, int, rat, rational_sqrt, Interval, Rational};
use crate::poly::{self, factor_rational, isolate_real_roots, refine_root, sturm_count, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraicError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeRadicand,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Annihilator(#[from] AnnihilatorError),
}

/// Resource limits for operations that factor annihilators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: poly::DEFAULT_MAX_DEGREE }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraicOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone)]
pub struct AlgebraicNumber {
    minpoly: Polynomial,
    window: Interval,
}

/// Real/complex split of the conjugates of a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateProfile {
    pub real_count: usize,
    pub complex_pair_count: usize,
    pub real_windows: Vec<Interval>,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber { minpoly: Polynomial::linear_root(&r), window: Interval::point(r) }
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicNumber::from_rational(int(n))
    }

    pub fn zero() -> Self {
        AlgebraicNumber::from_int(0)
    }

    pub fn one() -> Self {
        AlgebraicNumber::from_int(1)
    }

    /// Caller guarantees `minpoly` is monic irreducible and `window` isolates
    /// one of its roots in the sense of [`isolate_real_roots`].
    fn from_parts(minpoly: Polynomial, window: Interval) -> Self {
        if minpoly.deg() == 1 {
            let r = -minpoly.coeff(0);
            return AlgebraicNumber::from_rational(r);
        }
        AlgebraicNumber { minpoly, window }
    }

    /// All real roots of `p`, ascending, each with its own minimal polynomial.
    pub fn real_roots(p: &Polynomial, limits: &Limits) -> Result<Vec<AlgebraicNumber>, AlgebraicError> {
        let fac = factor_rational(p, limits.max_degree)?;
        let mut out = Vec::new();
        for (f, _) in &fac.factors {
            for w in isolate_real_roots(f)? {
                out.push(AlgebraicNumber::from_parts(f.clone(), w));
            }
        }
        out.sort_by(|a, b| a.compare(b));
        Ok(out)
    }

    pub fn minpoly(&self) -> &Polynomial {
        &self.minpoly
    }

    pub fn window(&self) -> &Interval {
        &self.window
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.window.is_point().then(|| self.window.lo())
    }

    /// Zero iff the minimal polynomial is `x`.
    pub fn is_zero(&self) -> bool {
        self.minpoly == Polynomial::x()
    }

    /// Window refined to width at most `width`.
    pub fn enclosure(&self, width: &Rational) -> Interval {
        refine_root(&self.minpoly, &self.window, width)
    }

    /// Same value with a window of width at most `width`.
    pub fn refined(&self, width: &Rational) -> AlgebraicNumber {
        AlgebraicNumber { minpoly: self.minpoly.clone(), window: self.enclosure(width) }
    }

    /// Enclosure for decimal output. Refines well past `width` so that
    /// the printed digits are tight, not just the dyadic window.
    pub fn to_decimal(&self, width: &Rational) -> Interval {
        self.enclosure(&(width / int(16)))
    }

    /// Sign as -1, 0 or 1.
    pub fn sign(&self) -> i8 {
        if let Some(r) = self.as_rational() {
            return numeric::sign(r);
        }
        let mut w = self.window.clone();
        loop {
            if let Some(s) = w.sign() {
                return s;
            }
            w = refine_root(&self.minpoly, &w, &(w.width() / int(2)));
        }
    }

    fn window_excluding_zero(&self) -> Interval {
        let mut w = self.window.clone();
        while w.contains_zero() && !w.is_point() {
            w = refine_root(&self.minpoly, &w, &(w.width() / int(2)));
        }
        w
    }

    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(r) = self.as_rational() {
            return AlgebraicNumber::from_rational(-r);
        }
        let p = annihilator::annihilator_neg(&self.minpoly).expect("minpoly is monic");
        AlgebraicNumber { minpoly: p, window: self.window.neg() }
    }

    pub fn inv(&self) -> Result<AlgebraicNumber, AlgebraicError> {
        if self.is_zero() {
            return Err(AlgebraicError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(AlgebraicNumber::from_rational(r.recip()));
        }
        let p = annihilator::annihilator_inv(&self.minpoly)?;
        let w = self.window_excluding_zero().inv().expect("window excludes zero");
        Ok(AlgebraicNumber { minpoly: p, window: w })
    }

    fn add_rational(&self, r: &Rational) -> AlgebraicNumber {
        if let Some(s) = self.as_rational() {
            return AlgebraicNumber::from_rational(s + r);
        }
        AlgebraicNumber { minpoly: self.minpoly.shift_var(&-r), window: self.window.shift(r) }
    }

    fn mul_rational(&self, r: &Rational) -> AlgebraicNumber {
        if r.is_zero() {
            return AlgebraicNumber::zero();
        }
        if let Some(s) = self.as_rational() {
            return AlgebraicNumber::from_rational(s * r);
        }
        // roots r*a_i: p(t/r), made monic
        AlgebraicNumber { minpoly: self.minpoly.scale_var(&r.recip()).monic(), window: self.window.scale(r) }
    }

    pub fn arith(&self, other: &AlgebraicNumber, op: AlgebraicOp, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        match op {
            AlgebraicOp::Add => self.add_with(other, limits),
            AlgebraicOp::Sub => self.add_with(&other.neg(), limits),
            AlgebraicOp::Mul => self.mul_with(other, limits),
            AlgebraicOp::Div => self.mul_with(&other.inv()?, limits),
        }
    }

    pub fn add(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgebraicError> {
        self.arith(other, AlgebraicOp::Add, &Limits::default())
    }

    pub fn sub(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgebraicError> {
        self.arith(other, AlgebraicOp::Sub, &Limits::default())
    }

    pub fn mul(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgebraicError> {
        self.arith(other, AlgebraicOp::Mul, &Limits::default())
    }

    pub fn div(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgebraicError> {
        self.arith(other, AlgebraicOp::Div, &Limits::default())
    }

    fn add_with(&self, other: &AlgebraicNumber, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        if let Some(r) = other.as_rational() {
            return Ok(self.add_rational(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.add_rational(r));
        }
        let q = annihilator::annihilator_sum(&self.minpoly, &other.minpoly)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        select_root(&q, limits, |width| {
            a = a.refined(width);
            b = b.refined(width);
            a.window.add(&b.window)
        })
    }

    fn mul_with(&self, other: &AlgebraicNumber, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        if let Some(r) = other.as_rational() {
            return Ok(self.mul_rational(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.mul_rational(r));
        }
        let q = annihilator::annihilator_product(&self.minpoly, &other.minpoly)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        select_root(&q, limits, |width| {
            a = a.refined(width);
            b = b.refined(width);
            a.window.mul(&b.window)
        })
    }

    /// Nonnegative square root.
    pub fn sqrt(&self, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        match self.sign() {
            -1 => return Err(AlgebraicError::NegativeRadicand),
            0 => return Ok(AlgebraicNumber::zero()),
            _ => {}
        }
        if let Some(r) = self.as_rational() {
            if let Some(s) = rational_sqrt(r) {
                return Ok(AlgebraicNumber::from_rational(s));
            }
        }
        let q = self.minpoly.substitute_square();
        let mut a = self.clone();
        select_root(&q, limits, |width| {
            a = a.refined(width);
            a.window.sqrt(bits_for(width))
        })
    }

    /// `sqrt(1 + a^2)`, always positive.
    pub fn hyp(&self, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        if let Some(r) = self.as_rational() {
            let s = Rational::one() + r * r;
            if let Some(root) = rational_sqrt(&s) {
                return Ok(AlgebraicNumber::from_rational(root));
            }
        }
        let q = annihilator::annihilator_hyp(&self.minpoly)?;
        let mut a = self.clone();
        select_root(&q, limits, |width| {
            a = a.refined(width);
            a.window.square().shift(&Rational::one()).sqrt(bits_for(width))
        })
    }

    pub fn pow(&self, n: u32, limits: &Limits) -> Result<AlgebraicNumber, AlgebraicError> {
        let mut acc = AlgebraicNumber::one();
        for _ in 0..n {
            acc = acc.mul_with(self, limits)?;
        }
        Ok(acc)
    }

    /// Exact order decision.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(b);
        }
        let same_poly = self.minpoly == other.minpoly;
        let (mut wa, mut wb) = (self.window.clone(), other.window.clone());
        loop {
            if wa.hi() < wb.lo() {
                return Ordering::Less;
            }
            if wb.hi() < wa.lo() {
                return Ordering::Greater;
            }
            // Same minimal polynomial: equal iff the windows share their root.
            if same_poly && sturm_count(&self.minpoly, Some(&wa.union(&wb))).unwrap_or(0) == 1 {
                return Ordering::Equal;
            }
            wa = refine_root(&self.minpoly, &wa, &(wa.width() / int(2)));
            wb = refine_root(&other.minpoly, &wb, &(wb.width() / int(2)));
        }
    }

    pub fn conjugate_profile(&self) -> ConjugateProfile {
        let real_windows = isolate_real_roots(&self.minpoly).expect("minpoly is nonzero");
        let real_count = real_windows.len();
        ConjugateProfile {
            real_count,
            complex_pair_count: (self.degree() - real_count) / 2,
            real_windows,
        }
    }

    pub fn is_totally_real(&self) -> bool {
        sturm_count(&self.minpoly, None).expect("minpoly is nonzero") == self.degree()
    }

    /// Every real conjugate strictly positive.
    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let all = sturm_count(&self.minpoly, None).expect("minpoly is nonzero");
        let positive = sturm_count(
            &self.minpoly,
            Some(&Interval::new(Rational::zero(), self.minpoly.root_bound())),
        )
        .expect("minpoly is nonzero");
        all == positive
    }

    /// Minimal polynomial plus a decimal enclosure of at most `width`.
    pub fn render(&self, width: &Rational) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        let w = self.to_decimal(width);
        let digits = numeric::digits_for_width(width).max(1);
        format!(
            "root of {} in [{}, {}]",
            self.minpoly,
            numeric::to_decimal_string(w.lo(), digits, false),
            numeric::to_decimal_string(w.hi(), digits, true)
        )
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for AlgebraicNumber {
    fn from(r: Rational) -> Self {
        AlgebraicNumber::from_rational(r)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&rat(1, 10_000)))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber({}, {})", self.minpoly, self.window)
    }
}

fn bits_for(width: &Rational) -> u32 {
    let mut bits = 0;
    let mut w = width.clone();
    while w < Rational::one() && bits < 4096 {
        w *= int(2);
        bits += 1;
    }
    bits + 1
}

/// Picks the real root of `annihilator` that the shrinking `enclosure`
/// converges to. `enclosure(width)` must contain the target and shrink to it
/// as `width` goes to zero.
fn select_root(
    annihilator: &Polynomial,
    limits: &Limits,
    mut enclosure: impl FnMut(&Rational) -> Interval,
) -> Result<AlgebraicNumber, AlgebraicError> {
    let fac = factor_rational(annihilator, limits.max_degree)?;
    let mut candidates: Vec<(Polynomial, Interval)> = Vec::new();
    for (f, _) in &fac.factors {
        for w in isolate_real_roots(f)? {
            candidates.push((f.clone(), w));
        }
    }
    let mut width = rat(1, 16);
    loop {
        let target = enclosure(&width);
        candidates.retain(|(_, w)| w.overlaps(&target));
        match candidates.len() {
            0 => panic!("no root of {annihilator} is consistent with {target}"),
            1 => {
                let (f, w) = candidates.pop().unwrap();
                return Ok(AlgebraicNumber::from_parts(f, w));
            }
            _ => {}
        }
        for (f, w) in candidates.iter_mut() {
            *w = refine_root(f, w, &width);
        }
        width /= int(4);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn n(k: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_int(k)
    }

    fn sqrt_of(k: i64) -> AlgebraicNumber {
        n(k).sqrt(&Limits::default()).unwrap()
    }

    #[test]
    fn from_rational_examples() {
        assert_eq!(n(0).minpoly(), &p(&[0, 1]));
        assert_eq!(n(0).window(), &Interval::point(int(0)));
        let fifth = AlgebraicNumber::from_rational(rat(1, 5));
        assert_eq!(fifth.minpoly(), &Polynomial::new(vec![rat(-1, 5), int(1)]));
        assert_eq!(fifth.window(), &Interval::point(rat(1, 5)));
        assert_eq!(n(-3).minpoly(), &p(&[3, 1]));
    }

    #[test]
    fn arithmetic_examples() {
        let s = sqrt_of(2).add(&sqrt_of(3)).unwrap();
        assert_eq!(s.minpoly(), &p(&[1, 0, -10, 0, 1]));
        assert!(s.enclosure(&rat(1, 1000)).contains(&rat(3146, 1000)));
        let two = sqrt_of(2).mul(&sqrt_of(2)).unwrap();
        assert_eq!(two.minpoly(), &p(&[-2, 1]));
        assert_eq!(two.as_rational(), Some(&int(2)));
        let big = AlgebraicNumber::one().add(&sqrt_of(2)).unwrap().hyp(&Limits::default()).unwrap();
        let v = sqrt_of(2).inv().unwrap().mul(&big).unwrap();
        assert_eq!(v.minpoly(), &p(&[2, 0, -4, 0, 1]));
        assert_eq!(n(1).div(&n(0)).unwrap_err(), AlgebraicError::DivisionByZero);
    }

    #[test]
    fn sqrt_examples() {
        let r = sqrt_of(2);
        assert_eq!(r.minpoly(), &p(&[-2, 0, 1]));
        assert_eq!(r.sign(), 1);
        let s = AlgebraicNumber::one().add(&sqrt_of(2)).unwrap().sqrt(&Limits::default()).unwrap();
        assert_eq!(s.minpoly(), &p(&[-1, 0, -2, 0, 1]));
        assert_eq!(n(-1).sqrt(&Limits::default()).unwrap_err(), AlgebraicError::NegativeRadicand);
        assert_eq!(n(0).sqrt(&Limits::default()).unwrap(), n(0));
        assert_eq!(AlgebraicNumber::from_rational(rat(9, 4)).sqrt(&Limits::default()).unwrap(), AlgebraicNumber::from_rational(rat(3, 2)));
    }

    #[test]
    fn hyp_examples() {
        let l = Limits::default();
        assert_eq!(n(1).hyp(&l).unwrap(), sqrt_of(2));
        assert_eq!(sqrt_of(2).hyp(&l).unwrap(), sqrt_of(3));
        let v = n(1).add(&sqrt_of(2)).unwrap().hyp(&l).unwrap();
        assert_eq!(v.minpoly(), &p(&[8, 0, -8, 0, 1]));
        assert_eq!(n(0).hyp(&l).unwrap(), n(1));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(sqrt_of(2).compare(&AlgebraicNumber::from_rational(rat(3, 2))), Ordering::Less);
        assert_eq!(sqrt_of(2).mul(&sqrt_of(2)).unwrap().compare(&n(2)), Ordering::Equal);
        assert_eq!(sqrt_of(3).compare(&sqrt_of(2)), Ordering::Greater);
        assert_eq!(sqrt_of(2).compare(&sqrt_of(2).neg()), Ordering::Greater);
        let a = sqrt_of(2);
        let b = sqrt_of(8).mul_rational(&rat(1, 2));
        assert_eq!(a.compare(&b), Ordering::Equal);
    }

    #[test]
    fn conjugate_profiles() {
        let l = Limits::default();
        let big = n(1).add(&sqrt_of(2)).unwrap().hyp(&l).unwrap();
        let prof = big.conjugate_profile();
        assert_eq!((prof.real_count, prof.complex_pair_count), (4, 0));
        let s = n(1).add(&sqrt_of(2)).unwrap().sqrt(&l).unwrap();
        let prof = s.conjugate_profile();
        assert_eq!((prof.real_count, prof.complex_pair_count), (2, 1));
        let cube = AlgebraicNumber::real_roots(&p(&[-2, 0, 0, 1]), &l).unwrap();
        assert_eq!(cube.len(), 1);
        let prof = cube[0].conjugate_profile();
        assert_eq!((prof.real_count, prof.complex_pair_count), (1, 1));
        assert!(!cube[0].is_totally_real());
    }

    #[test]
    fn totally_real_and_positive() {
        let l = Limits::default();
        let a = n(2).add(&sqrt_of(2)).unwrap().sqrt(&l).unwrap();
        assert!(a.is_totally_real());
        assert!(!n(1).add(&sqrt_of(2)).unwrap().sqrt(&l).unwrap().is_totally_real());
        assert!(AlgebraicNumber::from_rational(rat(-7, 3)).is_totally_real());
        assert!(n(2).add(&sqrt_of(2)).unwrap().is_totally_positive());
        assert!(!n(1).add(&sqrt_of(2)).unwrap().is_totally_positive());
        assert!(!n(0).is_totally_positive());
    }

    #[test]
    fn decimal_enclosures() {
        let w = sqrt_of(2).to_decimal(&rat(1, 1000));
        assert!(w.width() <= rat(1, 1000));
        assert!(w.lo() >= &rat(1414, 1000) && w.hi() <= &rat(14143, 10000));
        let fifth = AlgebraicNumber::from_rational(rat(1, 5));
        assert_eq!(fifth.to_decimal(&rat(1, 10)), Interval::point(rat(1, 5)));
        let l = Limits::default();
        let v = n(2).add(&sqrt_of(2)).unwrap().sqrt(&l).unwrap().to_decimal(&rat(1, 100));
        assert!(v.contains(&rat(18477, 10000)));
    }

    #[test]
    fn rendering() {
        let l = Limits::default();
        let v = n(2).add(&sqrt_of(2)).unwrap().sqrt(&l).unwrap();
        assert_eq!(v.render(&rat(1, 10_000)), "root of x^4-4x^2+2 in [1.8477, 1.8478]");
        assert_eq!(AlgebraicNumber::from_rational(rat(-1, 5)).to_string(), "-1/5");
    }
}
