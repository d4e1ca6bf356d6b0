//! The origami plane: exact points and lines, the five fold axioms,
//! replayable construction traces, and a bounded closure search.
//!
//! Coordinates are [`Scalar`]s, an exact value paired with an expression
//! that denotes it, so every object can be written back out as text.

mod closure;
mod svg;
mod trace;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebraic::{AlgebraicError, AlgebraicNumber, Limits};
use crate::expression::{evaluate, smart_add, smart_mul, smart_neg, ExprError, Expression};
use crate::numeric::{square_part, to_f64, Rational};

pub use closure::{bfs_closure, Closure, DEFAULT_BUDGET, DEFAULT_DEPTH};
pub use svg::{render_svg, Viewport};
pub use trace::{Axiom, Configuration, Construction, Object, Step, Trace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines are identical")]
    IdenticalLines,
    #[error("point lies on the line")]
    PointOnLine,
    #[error("anchor points must be two distinct points on the line")]
    BadAnchors,
    #[error("degenerate configuration")]
    DegenerateConfiguration,
    #[error("malformed trace at line {line}: {message}")]
    MalformedTrace { line: usize, message: String },
    #[error("step {id} failed verification: {message}")]
    StepVerificationFailed { id: usize, message: String },
    #[error("object budget of {budget} exhausted")]
    BudgetExhausted { budget: usize },
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// An exact real coordinate together with an expression for it.
#[derive(Clone)]
pub struct Scalar {
    value: AlgebraicNumber,
    expr: Expression,
}

impl Scalar {
    fn wrap(value: AlgebraicNumber, expr: Expression) -> Scalar {
        if let Some(r) = value.as_rational() {
            return Scalar { expr: Expression::Const(r.clone()), value };
        }
        let expr = match quadratic_form(&value) {
            Some(q) if q.node_count() < expr.node_count() => q,
            _ => expr,
        };
        Scalar { value, expr }
    }

    pub fn rational(r: Rational) -> Scalar {
        Scalar { value: AlgebraicNumber::from_rational(r.clone()), expr: Expression::Const(r) }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Scalar {
        Scalar::int(0)
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    pub fn from_expression(e: Expression) -> Result<Scalar, PlaneError> {
        let value = evaluate(&e, &Limits::default())?;
        Ok(Scalar::wrap(value, e))
    }

    pub fn value(&self) -> &AlgebraicNumber {
        &self.value
    }

    pub fn expr(&self) -> &Expression {
        &self.expr
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn sign(&self) -> i8 {
        self.value.sign()
    }

    pub fn approx(&self) -> f64 {
        let w = self.value.enclosure(&Rational::new(1.into(), (1u64 << 40).into()));
        to_f64(&w.midpoint())
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        let v = self.value.add(&o.value).expect("sum of plane scalars");
        Scalar::wrap(v, smart_add(self.expr.clone(), o.expr.clone()))
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        let v = self.value.sub(&o.value).expect("difference of plane scalars");
        let e = match o.expr.as_const() {
            Some(r) if r.is_zero() => self.expr.clone(),
            _ => Expression::sub(self.expr.clone(), o.expr.clone()),
        };
        Scalar::wrap(v, e)
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        let v = self.value.mul(&o.value).expect("product of plane scalars");
        Scalar::wrap(v, smart_mul(self.expr.clone(), o.expr.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, PlaneError> {
        let v = self.value.div(&o.value)?;
        let e = match o.expr.as_const() {
            Some(r) if r.is_one() => self.expr.clone(),
            _ => Expression::div(self.expr.clone(), o.expr.clone()),
        };
        Ok(Scalar::wrap(v, e))
    }

    pub fn neg(&self) -> Scalar {
        Scalar::wrap(self.value.neg(), smart_neg(self.expr.clone()))
    }

    pub fn sqrt(&self) -> Result<Scalar, PlaneError> {
        let v = self.value.sqrt(&Limits::default())?;
        Ok(Scalar::wrap(v, Expression::sqrt(self.expr.clone())))
    }

    pub fn hyp(&self) -> Result<Scalar, PlaneError> {
        let v = self.value.hyp(&Limits::default())?;
        Ok(Scalar::wrap(v, Expression::hyp(self.expr.clone())))
    }

    fn square(&self) -> Scalar {
        self.mul(self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

/// `p + q*sqrt(d)` for a quadratic irrational, `d` a positive integer.
fn quadratic_form(v: &AlgebraicNumber) -> Option<Expression> {
    if v.degree() != 2 {
        return None;
    }
    let (b, c) = (v.minpoly().coeff(1), v.minpoly().coeff(0));
    let two = Rational::from_integer(2.into());
    let disc = &b * &b - c * Rational::from_integer(4.into());
    let (n, m) = (disc.numer(), disc.denom());
    let (s, d) = square_part(&(n * m));
    let centre = -b / &two;
    let mut q = Rational::new(s, m * 2);
    if v.compare(&AlgebraicNumber::from_rational(centre.clone())) == Ordering::Less {
        q = -q;
    }
    let root = Expression::sqrt(Expression::Const(Rational::from_integer(d)));
    Some(smart_add(Expression::Const(centre), smart_mul(Expression::Const(q), root)))
}

impl std::str::FromStr for Scalar {
    type Err = PlaneError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::from_expression(crate::expression::parse(s)?)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Point {
        Point { x, y }
    }

    pub fn rational(x: Rational, y: Rational) -> Point {
        Point::new(x.into(), y.into())
    }

    pub fn ints(x: i64, y: i64) -> Point {
        Point::new(Scalar::int(x), Scalar::int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `a*x + b*y + c = 0`, scaled so the first nonzero of `a, b` is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Line, PlaneError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(PlaneError::DegenerateConfiguration);
        };
        Ok(Line { a: a.div(&lead)?, b: b.div(&lead)?, c: c.div(&lead)? })
    }

    pub fn rational(a: Rational, b: Rational, c: Rational) -> Result<Line, PlaneError> {
        Line::new(a.into(), b.into(), c.into())
    }

    pub fn ints(a: i64, b: i64, c: i64) -> Result<Line, PlaneError> {
        Line::new(Scalar::int(a), Scalar::int(b), Scalar::int(c))
    }

    /// Value of `a*x + b*y + c` at `p`.
    pub fn eval(&self, p: &Point) -> Scalar {
        self.a.mul(&p.x).add(&self.b.mul(&p.y)).add(&self.c)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.a.mul(&other.b).sub(&other.a.mul(&self.b)).is_zero()
    }

    fn norm_squared(&self) -> Scalar {
        self.a.square().add(&self.b.square())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line, PlaneError> {
    if p == q {
        return Err(PlaneError::CoincidentPoints);
    }
    let a = q.y.sub(&p.y);
    let b = p.x.sub(&q.x);
    let c = a.mul(&p.x).add(&b.mul(&p.y)).neg();
    Line::new(a, b, c)
}

pub fn perp_bisector(p: &Point, q: &Point) -> Result<Line, PlaneError> {
    if p == q {
        return Err(PlaneError::CoincidentPoints);
    }
    let a = q.x.sub(&p.x);
    let b = q.y.sub(&p.y);
    let q2 = q.x.square().add(&q.y.square());
    let p2 = p.x.square().add(&p.y.square());
    let c = q2.sub(&p2).div(&Scalar::int(-2))?;
    Line::new(a, b, c)
}

/// The midline of parallel lines, or both angle bisectors of crossing ones.
pub fn equidistant_lines(l1: &Line, l2: &Line) -> Result<Vec<Line>, PlaneError> {
    if l1 == l2 {
        return Err(PlaneError::IdenticalLines);
    }
    if l1.is_parallel(l2) {
        // canonical forms of parallel lines share a and b
        let c = l1.c.add(&l2.c).div(&Scalar::int(2))?;
        return Ok(vec![Line::new(l1.a.clone(), l1.b.clone(), c)?]);
    }
    // L1/|n1| ± L2/|n2|, scaled by |n1|
    let k = l1.norm_squared().div(&l2.norm_squared())?.sqrt()?;
    let mut out = Vec::with_capacity(2);
    for s in [k.clone(), k.neg()] {
        out.push(Line::new(l1.a.add(&s.mul(&l2.a)), l1.b.add(&s.mul(&l2.b)), l1.c.add(&s.mul(&l2.c)))?);
    }
    Ok(out)
}

/// Mirror image of `l2` about `l1`.
pub fn reflect_line(l2: &Line, l1: &Line) -> Result<Line, PlaneError> {
    let dot = l1.a.mul(&l2.a).add(&l1.b.mul(&l2.b));
    let k = dot.mul(&Scalar::int(2)).div(&l1.norm_squared())?;
    Line::new(l2.a.sub(&k.mul(&l1.a)), l2.b.sub(&k.mul(&l1.b)), l2.c.sub(&k.mul(&l1.c)))
}

/// Common point, or `None` for parallel or identical lines.
pub fn intersect(l1: &Line, l2: &Line) -> Option<Point> {
    let det = l1.a.mul(&l2.b).sub(&l2.a.mul(&l1.b));
    if det.is_zero() {
        return None;
    }
    let x = l1.b.mul(&l2.c).sub(&l2.b.mul(&l1.c)).div(&det).ok()?;
    let y = l1.c.mul(&l2.a).sub(&l2.c.mul(&l1.a)).div(&det).ok()?;
    Some(Point::new(x, y))
}

/// Parallel to `l` through `p`, folded with the two-reflection recipe from
/// anchors `p1`, `p2` on `l`. The construction starts from objects
/// 0 = `l`, 1 = `p`, 2 = `p1`, 3 = `p2`; the returned steps continue at id 4.
pub fn construct_parallel(l: &Line, p: &Point, p1: &Point, p2: &Point) -> Result<(Line, Vec<Step>), PlaneError> {
    let mut c = Construction::from_objects(vec![
        Object::Line(l.clone()),
        Object::Point(p.clone()),
        Object::Point(p1.clone()),
        Object::Point(p2.clone()),
    ]);
    let id = c.parallel(0, 1, 2, 3)?;
    let line = c.line(id).expect("parallel yields a line").clone();
    Ok((line, c.into_trace().steps))
}

/// Where the bisector of the angle at `a` (between rays to `b` and `c`)
/// meets line `bc`. Works in coordinates where `a = 0` and `b = 1`.
pub fn angle_fold_point(a: &Point, b: &Point, c: &Point) -> Result<Point, PlaneError> {
    if a == b || a == c || b == c {
        return Err(PlaneError::DegenerateConfiguration);
    }
    // c' = (c - a) / (b - a) as complex numbers
    let (ux, uy) = (b.x.sub(&a.x), b.y.sub(&a.y));
    let (vx, vy) = (c.x.sub(&a.x), c.y.sub(&a.y));
    let n = ux.square().add(&uy.square());
    let c1 = vx.mul(&ux).add(&vy.mul(&uy)).div(&n)?;
    let c2 = vy.mul(&ux).sub(&vx.mul(&uy)).div(&n)?;
    if c2.is_zero() {
        return Err(PlaneError::DegenerateConfiguration);
    }
    let cot = c1.div(&c2)?;
    let mut csc = cot.hyp()?;
    if c2.sign() < 0 {
        csc = csc.neg();
    }
    let m = csc.sub(&cot);
    let denom = c2.sub(&m.mul(&c1.sub(&Scalar::one())));
    if denom.is_zero() {
        return Err(PlaneError::DegenerateConfiguration);
    }
    let x = c2.div(&denom)?;
    let y = m.mul(&x);
    // back to the original frame: a + (b - a)(x + iy)
    Ok(Point::new(a.x.add(&ux.mul(&x).sub(&uy.mul(&y))), a.y.add(&uy.mul(&x).add(&ux.mul(&y)))))
}
