// A tower Q = K_0 ⊂ K_1 ⊂ ... ⊂ K_n of real quadratic extensions,
// K_i = K_{i-1}(γ_i) with γ_i² = w_i. An element of K_k is a vector of
// 2^k rationals: the first half is x ∈ K_{k-1}, the second half y, and the
// element is x + y·γ_k. Lower-level elements embed by zero padding.
//
// Generators are only adjoined when w_i is not already a square, so every
// K_k is a field and the representation is unique.

use num_traits::{One, Zero};

use super::{smart_add, smart_mul, Expression};
use crate::algebraic::AlgebraicNumber;
use crate::numeric::{int, rational_sqrt, to_f64, Interval, Rational};

pub(crate) type Elem = Vec<Rational>;

pub(crate) struct Generator {
    /// `w_i`, an element of the level below.
    pub square: Elem,
    pub value: AlgebraicNumber,
    /// A `hyp`-only expression for `γ_i`.
    pub expr: Expression,
}

#[derive(Default)]
pub(crate) struct Tower {
    pub gens: Vec<Generator>,
}

pub(crate) fn level(a: &Elem) -> usize {
    a.len().trailing_zeros() as usize
}

/// Smallest level containing `a`.
pub(crate) fn trimmed_level(a: &Elem) -> usize {
    let mut k = level(a);
    while k > 0 && a[1 << (k - 1)..].iter().all(Zero::is_zero) {
        k -= 1;
    }
    k
}

pub(crate) fn lift(a: &[Rational], k: usize) -> Elem {
    let mut v = a.to_vec();
    v.resize(1 << k, Rational::zero());
    v
}

pub(crate) fn rational(r: Rational) -> Elem {
    vec![r]
}

pub(crate) fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

fn join(x: Elem, y: Elem) -> Elem {
    let mut v = x;
    v.extend(y);
    v
}

impl Tower {
    pub fn height(&self) -> usize {
        self.gens.len()
    }

    /// `γ_k` as an element of `K_k`.
    pub fn generator(&self, k: usize) -> Elem {
        let mut v = vec![Rational::zero(); 1 << k];
        v[1 << (k - 1)] = Rational::one();
        v
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let k = level(a).max(level(b));
        lift(a, k).into_iter().zip(lift(b, k)).map(|(x, y)| x + y).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|x| -x).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Elem, r: &Rational) -> Elem {
        a.iter().map(|x| x * r).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let k = level(a).max(level(b));
        self.mul_at(&lift(a, k), &lift(b, k), k)
    }

    fn square_of(&self, k: usize) -> Elem {
        lift(&self.gens[k - 1].square, k - 1)
    }

    fn mul_at(&self, a: &[Rational], b: &[Rational], k: usize) -> Elem {
        if k == 0 {
            return vec![&a[0] * &b[0]];
        }
        let h = 1 << (k - 1);
        let (x, y) = a.split_at(h);
        let (u, v) = b.split_at(h);
        let yv = self.mul_at(y, v, k - 1);
        let first = self.add(&self.mul_at(x, u, k - 1), &self.mul_at(&yv, &self.square_of(k), k - 1));
        let second = self.add(&self.mul_at(x, v, k - 1), &self.mul_at(y, u, k - 1));
        join(first, second)
    }

    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        self.inv_at(a, level(a))
    }

    fn inv_at(&self, a: &[Rational], k: usize) -> Option<Elem> {
        if k == 0 {
            return (!a[0].is_zero()).then(|| vec![a[0].recip()]);
        }
        let h = 1 << (k - 1);
        let (x, y) = a.split_at(h);
        if is_zero(y) {
            return self.inv_at(x, k - 1).map(|v| lift(&v, k));
        }
        // (x + yγ)^-1 = (x - yγ) / (x² - w y²)
        let norm = self.sub(&self.mul_at(x, x, k - 1), &self.mul_at(&self.mul_at(y, y, k - 1), &self.square_of(k), k - 1));
        let ninv = self.inv_at(&norm, k - 1)?;
        Some(join(self.mul_at(x, &ninv, k - 1), self.neg(&self.mul_at(y, &ninv, k - 1))))
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Some square root of `a` inside the tower, if one exists.
    pub fn sqrt_exact(&self, a: &Elem) -> Option<Elem> {
        self.sqrt_at(a, level(a))
    }

    fn sqrt_at(&self, a: &[Rational], k: usize) -> Option<Elem> {
        if k == 0 {
            return rational_sqrt(&a[0]).map(rational);
        }
        let h = 1 << (k - 1);
        let (x, y) = a.split_at(h);
        let w = self.square_of(k);
        if is_zero(y) {
            if let Some(s) = self.sqrt_at(x, k - 1) {
                return Some(lift(&s, k));
            }
            // x = w t²  ->  sqrt = t γ
            let q = self.mul_at(x, &self.inv_at(&w, k - 1)?, k - 1);
            let t = self.sqrt_at(&q, k - 1)?;
            return Some(join(vec![Rational::zero(); h], t));
        }
        // (b + cγ)² = x + yγ forces (b² - c²w)² = x² - w y² and b² = (x ± n)/2
        let n2 = self.sub(&self.mul_at(x, x, k - 1), &self.mul_at(&self.mul_at(y, y, k - 1), &w, k - 1));
        let n = self.sqrt_at(&n2, k - 1)?;
        let half = Rational::new(1.into(), 2.into());
        for cand in [n.clone(), self.neg(&n)] {
            let b2 = self.scale(&self.add(&x.to_vec(), &cand), &half);
            let Some(b) = self.sqrt_at(&b2, k - 1) else { continue };
            let Some(binv) = self.inv_at(&self.scale(&b, &int(2)), k - 1) else { continue };
            let c = self.mul_at(y, &binv, k - 1);
            let root = join(b, c);
            if self.mul_at(&root, &root, k) == a {
                return Some(root);
            }
        }
        None
    }

    /// Rational interval around the real value of `a`; shrinks with `width`.
    pub fn enclose(&self, a: &Elem, width: &Rational) -> Interval {
        self.enclose_at(a, level(a), width)
    }

    fn enclose_at(&self, a: &[Rational], k: usize, width: &Rational) -> Interval {
        if k == 0 {
            return Interval::point(a[0].clone());
        }
        let h = 1 << (k - 1);
        let (x, y) = a.split_at(h);
        let gx = self.enclose_at(x, k - 1, width);
        if is_zero(y) {
            return gx;
        }
        let g = self.gens[k - 1].value.enclosure(width);
        gx.add(&self.enclose_at(y, k - 1, width).mul(&g))
    }

    pub fn sign(&self, a: &Elem) -> i8 {
        if is_zero(a) {
            return 0;
        }
        let mut width = Rational::new(1.into(), 16.into());
        loop {
            if let Some(s) = self.enclose(a, &width).sign() {
                return s;
            }
            width /= int(16);
        }
    }

    pub fn approx(&self, a: &Elem) -> f64 {
        to_f64(&self.enclose(a, &Rational::new(1.into(), (1u64 << 40).into())).midpoint())
    }

    pub fn abs(&self, a: &Elem) -> Elem {
        if self.sign(a) < 0 {
            self.neg(a)
        } else {
            a.clone()
        }
    }

    /// Nonnegative square root, if `a` is a square in the tower.
    pub fn sqrt_nonneg(&self, a: &Elem) -> Option<Elem> {
        self.sqrt_exact(a).map(|s| self.abs(&s))
    }

    /// `hyp`-only expression for `a`, written as `x + y*γ_k` recursively.
    pub fn to_expr(&self, a: &Elem) -> Expression {
        self.to_expr_at(a, trimmed_level(a))
    }

    fn to_expr_at(&self, a: &[Rational], k: usize) -> Expression {
        if k == 0 {
            return Expression::Const(a[0].clone());
        }
        let h = 1 << (k - 1);
        let (x, y) = a.split_at(h);
        let term = smart_mul(self.to_expr_at(y, trimmed_level(&y.to_vec())), self.gens[k - 1].expr.clone());
        if is_zero(x) {
            term
        } else {
            smart_add(self.to_expr_at(x, trimmed_level(&x.to_vec())), term)
        }
    }

    /// Floating-point values of `γ_1..γ_k` under every real embedding of
    /// `K_k`, or `None` if some `w_i` is negative under some embedding.
    pub fn embeddings(&self, k: usize) -> Option<Vec<Vec<f64>>> {
        let mut out: Vec<Vec<f64>> = vec![Vec::new()];
        for i in 1..=k {
            let mut next = Vec::with_capacity(out.len() * 2);
            for e in &out {
                let w = embed(&self.gens[i - 1].square, e);
                if w <= 0.0 {
                    return None;
                }
                for s in [w.sqrt(), -w.sqrt()] {
                    let mut g = e.clone();
                    g.push(s);
                    next.push(g);
                }
            }
            out = next;
        }
        Some(out)
    }
}

/// Value of `a` under the embedding sending `γ_i` to `gammas[i-1]`.
pub(crate) fn embed(a: &[Rational], gammas: &[f64]) -> f64 {
    let k = level(&a.to_vec());
    if k == 0 {
        return to_f64(&a[0]);
    }
    let h = 1 << (k - 1);
    embed(&a[..h], gammas) + embed(&a[h..], gammas) * gammas[k - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::Limits;
    use crate::numeric::rat;

    fn sqrt2_tower() -> Tower {
        let value = AlgebraicNumber::from_int(2).sqrt(&Limits::default()).unwrap();
        let mut t = Tower::default();
        t.gens.push(Generator { square: rational(int(2)), value, expr: Expression::hyp(Expression::int(1)) });
        t
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let t = sqrt2_tower();
        let g = t.generator(1);
        assert_eq!(t.mul(&g, &g), vec![int(2), int(0)]);
        let a = vec![int(1), int(1)];
        let inv = t.inv(&a).unwrap();
        assert_eq!(inv, vec![int(-1), int(1)]);
        assert_eq!(t.mul(&a, &inv), vec![int(1), int(0)]);
    }

    #[test]
    fn exact_square_roots() {
        let t = sqrt2_tower();
        // 3 + 2√2 = (1 + √2)²
        let s = t.sqrt_nonneg(&vec![int(3), int(2)]).unwrap();
        assert_eq!(s, vec![int(1), int(1)]);
        // 8 = (2√2)² and 1/2 = (√2/2)²
        assert_eq!(t.sqrt_nonneg(&vec![int(8), int(0)]).unwrap(), vec![int(0), int(2)]);
        assert_eq!(t.sqrt_nonneg(&vec![rat(1, 2), int(0)]).unwrap(), vec![int(0), rat(1, 2)]);
        assert!(t.sqrt_exact(&vec![int(4), int(2)]).is_none());
        assert!(t.sqrt_exact(&vec![int(3), int(0)]).is_none());
        // 3 - 2√2 = (√2 - 1)², nonnegative branch
        assert_eq!(t.sqrt_nonneg(&vec![int(3), int(-2)]).unwrap(), vec![int(-1), int(1)]);
    }

    #[test]
    fn signs_and_expressions() {
        let t = sqrt2_tower();
        assert_eq!(t.sign(&vec![rat(-7, 5), int(1)]), 1);
        assert_eq!(t.sign(&vec![rat(-3, 2), int(1)]), -1);
        assert_eq!(t.to_expr(&vec![int(1), int(1)]).to_string(), "1+hyp(1)");
        assert_eq!(t.to_expr(&vec![int(0), int(-1)]).to_string(), "-hyp(1)");
        assert_eq!(t.to_expr(&vec![int(3), int(0)]).to_string(), "3");
        let emb = t.embeddings(1).unwrap();
        assert_eq!(emb.len(), 2);
        assert!((embed(&[int(1), int(1)], &emb[1]) - (1.0 - 2f64.sqrt())).abs() < 1e-12);
    }
}
