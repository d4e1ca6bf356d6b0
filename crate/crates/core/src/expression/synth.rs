// Rewriting sqrt-class expressions into hyp-only form.
//
// The input's own radicals are adjoined one at a time to a quadratic tower.
// A radicand u that is totally positive is a sum of squares r_1² + ... + r_m²
// of elements of the current level, and then
//   sqrt(u) = r_1 * hyp(r_2/r_1 * hyp(r_3/r_2 * ... hyp(r_m/r_{m-1})))
// where every r_j already has a hyp-only expression.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::tower::{self, embed, is_zero, lift, rational, trimmed_level, Elem, Generator, Tower};
use super::{decide_origami, evaluate, smart_mul, ExprError, Expression};
use crate::algebraic::{AlgebraicNumber, AlgebraicOp, Limits};
use crate::numeric::{isqrt, Rational};

pub const DEFAULT_SEARCH_HEIGHT: i64 = 20;

// Guards that keep a failing search from running away.
const MAX_BOX: f64 = 4.0e6;
const MAX_POOL: usize = 3000;
const MAX_NODES: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthesisOptions {
    pub limits: Limits,
    /// Largest absolute coordinate tried for a part in the search.
    pub search_height: i64,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        SynthesisOptions { limits: Limits::default(), search_height: DEFAULT_SEARCH_HEIGHT }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosDecomposition {
    pub parts: Vec<Expression>,
    pub target: Expression,
}

/// Rewrites an origami-valued expression into an equal one without `sqrt`.
pub fn synthesize(e: &Expression, opts: &SynthesisOptions) -> Result<Expression, ExprError> {
    if !decide_origami(e, &opts.limits)?.is_origami {
        return Err(ExprError::NotOrigami);
    }
    let mut b = Builder { tower: Tower::default(), opts };
    let (elem, value) = b.walk(e)?;
    let out = b.tower.to_expr(&elem);
    if evaluate(&out, &opts.limits)? != value {
        return Err(ExprError::VerificationFailed(out.to_string()));
    }
    Ok(out)
}

/// Writes the value of `e` as a sum of squares of elements of the field
/// generated by the radicals occurring in `e`.
pub fn sos_decompose(e: &Expression, opts: &SynthesisOptions) -> Result<SosDecomposition, ExprError> {
    let mut b = Builder { tower: Tower::default(), opts };
    let (u, value) = b.walk(e)?;
    let target = b.tower.to_expr(&u);
    if !value.is_totally_positive() {
        return Err(ExprError::RequiresTotallyPositiveRadicand(target.to_string()));
    }
    let parts = b.sos(&u)?.iter().map(|p| b.tower.to_expr(p)).collect();
    Ok(SosDecomposition { parts, target })
}

/// Fewest squares, lexicographically largest, summing to `u > 0`.
pub fn sos_decompose_rational(u: &Rational) -> Result<Vec<Rational>, ExprError> {
    if !u.is_positive() {
        return Err(ExprError::RequiresTotallyPositiveRadicand(u.to_string()));
    }
    let n = u.numer() * u.denom();
    let roots = (1..=4)
        .find_map(|m| integer_squares(&n, m, &isqrt(&n)))
        .expect("every positive integer is a sum of four squares");
    Ok(roots.into_iter().map(|a| Rational::new(a, u.denom().clone())).collect())
}

// Not a sum of three squares iff of the form 4^a (8b + 7).
fn needs_four(n: &BigInt) -> bool {
    let mut n = n.clone();
    let four = BigInt::from(4);
    while !n.is_zero() && (&n % &four).is_zero() {
        n /= &four;
    }
    (&n % BigInt::from(8)) == BigInt::from(7)
}

/// `n` as exactly `m` positive squares, each root at most `max`, roots
/// nonincreasing and lexicographically largest.
fn integer_squares(n: &BigInt, m: usize, max: &BigInt) -> Option<Vec<BigInt>> {
    if m == 1 {
        let r = isqrt(n);
        return (n.is_positive() && &r * &r == *n && &r <= max).then(|| vec![r]);
    }
    if m == 3 && needs_four(n) {
        return None;
    }
    let mut a = isqrt(n).min(max.clone());
    let mm = BigInt::from(m);
    while a.is_positive() && &a * &a * &mm >= *n {
        let rest = n - &a * &a;
        if rest.is_positive() {
            if let Some(mut tail) = integer_squares(&rest, m - 1, &a) {
                tail.insert(0, a);
                return Some(tail);
            }
        }
        a -= 1;
    }
    None
}

struct Builder<'a> {
    tower: Tower,
    opts: &'a SynthesisOptions,
}

impl Builder<'_> {
    fn walk(&mut self, e: &Expression) -> Result<(Elem, AlgebraicNumber), ExprError> {
        use Expression::*;
        let limits = &self.opts.limits;
        Ok(match e {
            Const(r) => (rational(r.clone()), AlgebraicNumber::from_rational(r.clone())),
            Neg(a) => {
                let (x, v) = self.walk(a)?;
                (self.tower.neg(&x), v.neg())
            }
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => {
                let (x, xv) = self.walk(a)?;
                let (y, yv) = self.walk(b)?;
                let (elem, op) = match e {
                    Add(..) => (self.tower.add(&x, &y), AlgebraicOp::Add),
                    Sub(..) => (self.tower.sub(&x, &y), AlgebraicOp::Sub),
                    Mul(..) => (self.tower.mul(&x, &y), AlgebraicOp::Mul),
                    _ => (self.tower.div(&x, &y).ok_or(ExprError::DivisionByZero)?, AlgebraicOp::Div),
                };
                (elem, xv.arith(&yv, op, limits)?)
            }
            Sqrt(a) => {
                let (u, uv) = self.walk(a)?;
                let v = uv.sqrt(limits)?;
                let u = lift(&u, self.tower.height());
                if let Some(s) = self.tower.sqrt_nonneg(&u) {
                    return Ok((s, v));
                }
                if !uv.is_totally_positive() {
                    return Err(ExprError::RequiresTotallyPositiveRadicand(self.tower.to_expr(&u).to_string()));
                }
                let parts = self.sos(&u)?;
                let expr = self.nest(parts);
                (self.adjoin(u, v.clone(), expr), v)
            }
            Hyp(a) => {
                let (u, uv) = self.walk(a)?;
                let v = uv.hyp(limits)?;
                let w = self.tower.add(&rational(Rational::one()), &self.tower.mul(&u, &u));
                let w = lift(&w, self.tower.height());
                if let Some(s) = self.tower.sqrt_nonneg(&w) {
                    return Ok((s, v));
                }
                let expr = Expression::hyp(self.tower.to_expr(&u));
                (self.adjoin(w, v.clone(), expr), v)
            }
        })
    }

    fn adjoin(&mut self, square: Elem, value: AlgebraicNumber, expr: Expression) -> Elem {
        self.tower.gens.push(Generator { square, value, expr });
        self.tower.generator(self.tower.height())
    }

    /// `r_1 * hyp(r_2/r_1 * hyp(...))` with the parts in ascending order.
    fn nest(&self, parts: Vec<Elem>) -> Expression {
        let mut parts: Vec<(f64, Elem)> = parts
            .into_iter()
            .map(|p| {
                let p = self.tower.abs(&p);
                (self.tower.approx(&p), p)
            })
            .collect();
        parts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let parts: Vec<Elem> = parts.into_iter().map(|(_, p)| p).collect();
        let ratio = |j: usize| {
            let q = self.tower.div(&parts[j], &parts[j - 1]).expect("parts are nonzero");
            self.tower.to_expr(&q)
        };
        let m = parts.len();
        let mut inner = Expression::hyp(ratio(m - 1));
        for j in (1..m - 1).rev() {
            inner = Expression::hyp(smart_mul(ratio(j), inner));
        }
        smart_mul(self.tower.to_expr(&parts[0]), inner)
    }

    fn sos(&self, u: &Elem) -> Result<Vec<Elem>, ExprError> {
        let k = trimmed_level(u);
        if k == 0 {
            return Ok(sos_decompose_rational(&u[0])?.into_iter().map(rational).collect());
        }
        let u = u[..1 << k].to_vec();
        let d = u.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        for mult in 1..=3 {
            let s = Rational::from_integer(&d * BigInt::from(mult));
            let scaled = self.tower.scale(&u, &(&s * &s));
            if let Some(parts) = self.search(&scaled, k) {
                return Ok(parts.iter().map(|p| self.tower.scale(p, &s.recip())).collect());
            }
        }
        Err(ExprError::SearchExhausted(self.tower.to_expr(&u).to_string()))
    }

    /// Bounded search for `u = c_1² + ... + c_{m-1}² + s²` with integral
    /// `c_j` of height at most H and `s` any square root in the tower.
    fn search(&self, u: &Elem, k: usize) -> Option<Vec<Elem>> {
        let emb = self.tower.embeddings(k)?;
        let n = 1usize << k;
        let eu: Vec<f64> = emb.iter().map(|g| embed(u, g)).collect();
        if eu.iter().any(|&x| x <= 0.0) {
            return None;
        }
        let bound: Vec<f64> = eu.iter().map(|x| x.sqrt() * (1.0 + 1e-9) + 1e-9).collect();
        let basis: Vec<Vec<f64>> = emb
            .iter()
            .map(|g| (0..n).map(|s| (0..k).filter(|i| s >> i & 1 == 1).map(|i| g[i]).product()).collect())
            .collect();
        let inv = invert(&basis)?;
        let h = self.opts.search_height as f64;
        let box_bounds: Vec<i64> = (0..n)
            .map(|s| {
                let b: f64 = (0..n).map(|sig| inv[s][sig].abs() * bound[sig]).sum();
                (b + 1e-6).floor().min(h) as i64
            })
            .collect();
        if box_bounds.iter().map(|&b| (2 * b + 1) as f64).product::<f64>() > MAX_BOX {
            return None;
        }

        // Candidate parts up to sign, with every embedding inside the bound.
        let mut pool: Vec<(Vec<i64>, Vec<f64>)> = Vec::new();
        let mut c: Vec<i64> = box_bounds.iter().map(|b| -b).collect();
        loop {
            let first = c.iter().find(|&&x| x != 0);
            if first.is_some_and(|&x| x > 0) {
                let vals: Vec<f64> = basis.iter().map(|row| row.iter().zip(&c).map(|(m, &x)| m * x as f64).sum()).collect();
                if vals.iter().zip(&bound).all(|(v, b)| v.abs() <= *b) {
                    pool.push((c.clone(), vals.iter().map(|v| v * v).collect()));
                }
            }
            // odometer
            let mut i = 0;
            while i < n {
                if c[i] < box_bounds[i] {
                    c[i] += 1;
                    break;
                }
                c[i] = -box_bounds[i];
                i += 1;
            }
            if i == n {
                break;
            }
        }
        pool.sort_by_key(|(c, _)| {
            let irrational = c[1..].iter().any(|&x| x != 0);
            let height = c.iter().map(|x| x.abs()).max().unwrap_or(0);
            let weight: i64 = c.iter().map(|x| x.abs()).sum();
            (irrational, height, weight, c.clone())
        });
        pool.truncate(MAX_POOL);

        let mut nodes = 0usize;
        for m in 2..=4 {
            let mut chosen = Vec::new();
            if let Some(found) = self.dfs(u, &eu, &pool, 0, m - 1, &mut chosen, &mut nodes) {
                return Some(found);
            }
            if nodes > MAX_NODES {
                break;
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        u: &Elem,
        rest: &[f64],
        pool: &[(Vec<i64>, Vec<f64>)],
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        nodes: &mut usize,
    ) -> Option<Vec<Elem>> {
        *nodes += 1;
        if *nodes > MAX_NODES {
            return None;
        }
        let tol = 1e-9 * rest.iter().fold(1.0f64, |a, b| a.max(b.abs()));
        if left == 0 {
            if rest.iter().any(|&r| r <= tol) {
                return None;
            }
            let parts: Vec<Elem> = chosen.iter().map(|&i| to_elem(&pool[i].0)).collect();
            let remainder = parts.iter().fold(u.clone(), |acc, p| self.tower.sub(&acc, &self.tower.mul(p, p)));
            let s = self.tower.sqrt_exact(&remainder)?;
            if is_zero(&s) {
                return None;
            }
            let mut parts = parts;
            parts.push(s);
            return Some(parts);
        }
        for i in start..pool.len() {
            let next: Vec<f64> = rest.iter().zip(&pool[i].1).map(|(r, s)| r - s).collect();
            if next.iter().any(|&r| r < -tol) {
                continue;
            }
            chosen.push(i);
            let found = self.dfs(u, &next, pool, i, left - 1, chosen, nodes);
            chosen.pop();
            if found.is_some() || *nodes > MAX_NODES {
                return found;
            }
        }
        None
    }
}

fn to_elem(c: &[i64]) -> Elem {
    let v: Vec<Rational> = c.iter().map(|&x| Rational::from_integer(x.into())).collect();
    lift(&v, tower::level(&v))
}

/// Gauss-Jordan inverse with partial pivoting.
fn invert(m: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, piv);
        let p = a[col][col];
        a[col].iter_mut().for_each(|x| *x /= p);
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != 0.0 {
                    let pivot_row = a[col].clone();
                    a[r].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= f * y);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expression::parse;
    use crate::numeric::{int, rat};

    fn synth(s: &str) -> String {
        synthesize(&parse(s).unwrap(), &SynthesisOptions::default()).unwrap().to_string()
    }

    #[test]
    fn rational_sums_of_squares() {
        assert_eq!(sos_decompose_rational(&int(2)).unwrap(), vec![int(1), int(1)]);
        assert_eq!(sos_decompose_rational(&int(7)).unwrap(), vec![int(2), int(1), int(1), int(1)]);
        assert_eq!(sos_decompose_rational(&int(3)).unwrap(), vec![int(1), int(1), int(1)]);
        assert_eq!(sos_decompose_rational(&int(25)).unwrap(), vec![int(5)]);
        let parts = sos_decompose_rational(&rat(7, 3)).unwrap();
        let total: Rational = parts.iter().map(|p| p * p).sum();
        assert_eq!(total, rat(7, 3));
        assert!(sos_decompose_rational(&int(0)).is_err());
    }

    #[test]
    fn sum_of_squares_over_a_quadratic_field() {
        let d = sos_decompose(&parse("4+2*sqrt(2)").unwrap(), &SynthesisOptions::default()).unwrap();
        let parts: Vec<String> = d.parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(parts, ["1", "1+hyp(1)"]);
        assert_eq!(d.target.to_string(), "4+2*hyp(1)");
        let d = sos_decompose(&parse("7").unwrap(), &SynthesisOptions::default()).unwrap();
        assert_eq!(d.parts.len(), 4);
    }

    #[test]
    fn golden_syntheses() {
        assert_eq!(synth("sqrt(2)"), "hyp(1)");
        assert_eq!(synth("sqrt(3)"), "hyp(hyp(1))");
        assert_eq!(synth("sqrt(4+2*sqrt(2))"), "hyp(1+hyp(1))");
        assert_eq!(synth("sqrt(5)"), "hyp(2)");
        assert_eq!(synth("sqrt(8)"), "2*hyp(1)");
        assert_eq!(synth("sqrt(2)*sqrt(2)"), "2");
    }

    #[test]
    fn nested_radicals() {
        for s in ["sqrt(2+sqrt(2))", "sqrt(4+2*sqrt(2))/sqrt(2)", "sqrt(3)+sqrt(2)", "sqrt(7/3)", "1/sqrt(6)"] {
            let out = synthesize(&parse(s).unwrap(), &SynthesisOptions::default()).unwrap();
            assert!(!out.contains_sqrt(), "{s} -> {out}");
            assert_eq!(out.evaluate().unwrap(), parse(s).unwrap().evaluate().unwrap());
        }
    }

    #[test]
    fn refusals() {
        let o = SynthesisOptions::default();
        assert_eq!(synthesize(&parse("sqrt(1+sqrt(2))").unwrap(), &o).unwrap_err(), ExprError::NotOrigami);
        // the value is 1, but sqrt(2)-1 has the negative conjugate -sqrt(2)-1
        let e = parse("sqrt(sqrt(2)-1)*sqrt(sqrt(2)+1)").unwrap();
        assert!(matches!(synthesize(&e, &o), Err(ExprError::RequiresTotallyPositiveRadicand(_))));
    }
}
