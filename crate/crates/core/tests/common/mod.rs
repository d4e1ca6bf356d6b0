// Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use origami::expression::Expression;
use origami::numeric::{int, rat, Rational};
use origami::plane::{Line, Point};
use origami::poly::Polynomial;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monic polynomial from its roots by repeated multiplication with `x - r`.
pub fn expand(roots: &[Rational]) -> Polynomial {
    let mut acc = vec![int(1)];
    for r in roots {
        let mut next = vec![int(0); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        acc = next;
    }
    Polynomial::new(acc)
}

/// `prod (x^2 - s)` over the given values of `s`.
pub fn expand_even(squares: &[Rational]) -> Polynomial {
    let mut acc = Polynomial::from_ints(&[1]);
    for s in squares {
        acc = &acc * &Polynomial::new(vec![-s.clone(), int(0), int(1)]);
    }
    acc
}

pub fn int_roots(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let n = rng.gen_range(1..=3);
    (0..n).map(|_| int(rng.gen_range(-5..=5))).collect()
}

pub fn small_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    rat(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

/// Random expression without `sqrt`: constants of height at most `height`
/// combined by field operations and `hyp`, nested at most `depth` deep.
pub fn hyp_expression(rng: &mut ChaCha8Rng, depth: usize, height: i64) -> Expression {
    if depth == 0 || rng.gen_bool(0.15) {
        return Expression::Const(small_rational(rng, height));
    }
    let sub = |rng: &mut ChaCha8Rng| hyp_expression(rng, depth - 1, height);
    match rng.gen_range(0..12) {
        0..=4 => Expression::hyp(sub(rng)),
        5 => Expression::neg(sub(rng)),
        6 | 7 => Expression::add(sub(rng), sub(rng)),
        8 => Expression::sub(sub(rng), sub(rng)),
        9 | 10 => Expression::mul(sub(rng), sub(rng)),
        _ => Expression::div(sub(rng), sub(rng)),
    }
}

pub fn random_line(rng: &mut ChaCha8Rng) -> Line {
    loop {
        let (a, b) = (small_rational(rng, 6), small_rational(rng, 6));
        if let Ok(l) = Line::rational(a, b, small_rational(rng, 6)) {
            return l;
        }
    }
}

pub fn random_point(rng: &mut ChaCha8Rng) -> Point {
    Point::rational(small_rational(rng, 8), small_rational(rng, 8))
}

/// A point on `l` with a free coordinate drawn at random.
pub fn point_on(rng: &mut ChaCha8Rng, l: &Line) -> Point {
    let a = l.a.value().as_rational().expect("rational line").clone();
    let b = l.b.value().as_rational().expect("rational line").clone();
    let c = l.c.value().as_rational().expect("rational line").clone();
    let t = small_rational(rng, 8);
    if b != int(0) {
        let y = -(&a * &t + &c) / &b;
        Point::rational(t, y)
    } else {
        Point::rational(-c / a, t)
    }
}
