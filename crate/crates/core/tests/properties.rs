// Property suites for the invariants each module promises.

mod common;

use origami::algebraic::{AlgebraicNumber, Limits};
use origami::annihilator::{annihilator_hyp, annihilator_product, annihilator_sum, char_poly, companion};
use origami::cli::{FactorReport, ObjectReport, Payload, Status};
use origami::expression::{decide_origami, parse, sos_decompose, synthesize, Expression, FieldClass, SynthesisOptions};
use origami::numeric::{int, rat, Interval, Rational};
use origami::plane::{bfs_closure, equidistant_lines, Line, Object, Trace, DEFAULT_BUDGET};
use origami::poly::{factor_rational, Polynomial, DEFAULT_MAX_DEGREE};
use proptest::prelude::*;

use common::expand;

fn small_q() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_q() -> impl Strategy<Value = Rational> {
    small_q().prop_filter("nonzero", |r| *r != int(0))
}

/// `p + q*sqrt(n)` for small rationals and a small radicand.
fn quadratic() -> impl Strategy<Value = AlgebraicNumber> {
    (small_q(), small_q(), 2i64..=7).prop_map(|(p, q, n)| {
        let root = AlgebraicNumber::from_int(n).sqrt(&Limits::default()).unwrap();
        AlgebraicNumber::from_rational(p).add(&root.mul(&AlgebraicNumber::from_rational(q)).unwrap()).unwrap()
    })
}

fn monic(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_degree).prop_map(|mut c| {
        c.push(1);
        Polynomial::from_ints(&c)
    })
}

fn rational_line() -> impl Strategy<Value = Line> {
    (small_q(), small_q(), small_q())
        .prop_filter("a line", |(a, b, _)| *a != int(0) || *b != int(0))
        .prop_map(|(a, b, c)| Line::rational(a, b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn interval_ops_contain_pointwise_results(
        (x, y) in (small_q(), small_q()),
        (dx, dy, ex, ey) in (0i64..5, 0i64..5, 0i64..5, 0i64..5),
    ) {
        let i = Interval::new(&x - rat(dx, 3), &x + rat(ex, 3));
        let j = Interval::new(&y - rat(dy, 3), &y + rat(ey, 3));
        prop_assert!(i.add(&j).contains(&(&x + &y)));
        prop_assert!(i.sub(&j).contains(&(&x - &y)));
        prop_assert!(i.mul(&j).contains(&(&x * &y)));
        prop_assert!(i.square().contains(&(&x * &x)));
        if !j.contains_zero() {
            prop_assert!(j.inv().unwrap().contains(&(int(1) / &y)));
        }
    }

    #[test]
    fn canonical_rationals(n in -50i64..50, d in 1i64..20, k in 1i64..9) {
        prop_assert_eq!(rat(n * k, d * k), rat(n, d));
        prop_assert_eq!(rat(n * k, d * k).to_string(), rat(n, d).to_string());
    }

    #[test]
    fn annihilator_shapes(p in monic(3), q in monic(3)) {
        let (n, m) = (p.deg(), q.deg());
        let s = annihilator_sum(&p, &q).unwrap();
        let t = annihilator_product(&p, &q).unwrap();
        let h = annihilator_hyp(&p).unwrap();
        prop_assert!(s.is_monic() && t.is_monic() && h.is_monic());
        prop_assert_eq!((s.deg(), t.deg(), h.deg()), (n * m, n * m, 2 * n));
        prop_assert_eq!(char_poly(&companion(&p).unwrap()), p);
    }

    #[test]
    fn field_laws(a in quadratic(), b in quadratic(), c in quadratic()) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.compare(&rhs).is_eq());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).unwrap().compare(&AlgebraicNumber::one()).is_eq());
        }
        prop_assert!(a.add(&b).unwrap().sub(&b).unwrap().compare(&a).is_eq());
    }

    #[test]
    fn hyp_identity_and_minimality(a in quadratic()) {
        let limits = Limits::default();
        let h = a.hyp(&limits).unwrap();
        let diff = h.mul(&h).unwrap().sub(&a.mul(&a).unwrap()).unwrap();
        prop_assert!(diff.compare(&AlgebraicNumber::one()).is_eq());
        for v in [&a, &h] {
            let f = factor_rational(v.minpoly(), DEFAULT_MAX_DEGREE).unwrap();
            prop_assert_eq!(f.factors.len(), 1);
            prop_assert_eq!(f.factors[0].1, 1);
        }
        prop_assert!(h.sign() > 0);
    }

    #[test]
    fn totally_real_values_are_closed(a in quadratic(), b in quadratic()) {
        let limits = Limits::default();
        prop_assert!(a.add(&b).unwrap().is_totally_real());
        prop_assert!(a.sub(&b).unwrap().is_totally_real());
        prop_assert!(a.mul(&b).unwrap().is_totally_real());
        prop_assert!(a.hyp(&limits).unwrap().is_totally_real());
        if !b.is_zero() {
            prop_assert!(a.div(&b).unwrap().is_totally_real());
        }
        if !a.is_zero() {
            prop_assert!(a.mul(&a).unwrap().is_totally_positive());
        }
    }

    #[test]
    fn nested_hyp_is_a_sum_of_three_squares(r1 in nonzero_q(), r2 in nonzero_q(), r3 in small_q()) {
        let c = |r: &Rational| Expression::Const(r.clone());
        let inner = Expression::mul(Expression::div(c(&r2), c(&r1)), Expression::hyp(Expression::div(c(&r3), c(&r2))));
        let e = Expression::mul(c(&r1), Expression::hyp(inner));
        let v = e.evaluate().unwrap();
        let sq = v.mul(&v).unwrap();
        let want = AlgebraicNumber::from_rational(&r1 * &r1 + &r2 * &r2 + &r3 * &r3);
        prop_assert!(sq.compare(&want).is_eq());
    }

    #[test]
    fn synthesis_removes_sqrt(n in 2i64..=30, m in 0i64..=3, k in 1i64..=3) {
        // sqrt(n + m*sqrt(k^2 + 1)) is origami whenever the radicand is
        // totally positive; skip the rest
        let text = format!("sqrt({n}+{m}*sqrt({}))", k * k + 1);
        let e = parse(&text).unwrap();
        let verdict = decide_origami(&e, &Limits::default()).unwrap();
        prop_assume!(verdict.is_origami);
        let out = synthesize(&e, &SynthesisOptions::default()).unwrap();
        prop_assert_eq!(out.classify(), FieldClass::HypClass);
        prop_assert!(out.evaluate().unwrap().compare(&e.evaluate().unwrap()).is_eq());
    }

    #[test]
    fn equidistant_lines_are_symmetric_and_perpendicular(l1 in rational_line(), l2 in rational_line()) {
        prop_assume!(!l1.is_parallel(&l2));
        let mut ab = equidistant_lines(&l1, &l2).unwrap();
        let mut ba = equidistant_lines(&l2, &l1).unwrap();
        prop_assert_eq!(ab.len(), 2);
        let dot = ab[0].a.mul(&ab[1].a).add(&ab[0].b.mul(&ab[1].b));
        prop_assert!(dot.is_zero());
        ab.sort_by(|x, y| x.b.cmp(&y.b));
        ba.sort_by(|x, y| x.b.cmp(&y.b));
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn payload_json_round_trips(
        verdict in proptest::option::of(any::<bool>()),
        roots in proptest::option::of(0usize..9),
        text in "[a-z0-9^+*/() -]{0,24}",
        status in prop_oneof![Just(Status::Ok), Just(Status::VerdictFalse), Just(Status::Error)],
    ) {
        let p = Payload {
            command: "decide".into(),
            status,
            verdict,
            real_roots: roots,
            minpoly: Some(text.clone()),
            factors: Some(vec![FactorReport {
                minpoly: text.clone(),
                multiplicity: 1,
                degree: 2,
                real_roots: 2,
                complex_pairs: 0,
                totally_real: true,
                root_enclosures: vec![[text.clone(), text.clone()]],
            }]),
            objects: Some(vec![ObjectReport { id: 3, kind: "line".into(), value: text.clone(), generation: roots }]),
            trace: Some(vec![text]),
            ..Default::default()
        };
        let back: Payload = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn sos_parts_square_to_the_target() {
    let opts = SynthesisOptions::default();
    for text in ["4+2*sqrt(2)", "7", "3+sqrt(5)", "5/3", "2+sqrt(3)"] {
        let sos = sos_decompose(&parse(text).unwrap(), &opts).unwrap();
        let mut total = AlgebraicNumber::zero();
        for part in &sos.parts {
            let v = part.evaluate().unwrap();
            total = total.add(&v.mul(&v).unwrap()).unwrap();
        }
        assert!(total.compare(&parse(text).unwrap().evaluate().unwrap()).is_eq(), "{text}");
        assert!(sos.parts.len() <= 4);
    }
}

#[test]
fn every_closure_coordinate_is_totally_real() {
    let c = bfs_closure(2, None, DEFAULT_BUDGET).unwrap();
    let fixture = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/one-fifth.trace")).unwrap();
    let replayed = Trace::parse(&fixture).unwrap().replay().unwrap();
    let objects = c.objects().iter().chain(replayed.objects.iter());
    for o in objects {
        let coords = match o {
            Object::Point(p) => vec![&p.x, &p.y],
            Object::Line(l) => vec![&l.a, &l.b, &l.c],
        };
        for s in coords {
            assert!(s.value().is_totally_real(), "{o}");
        }
    }
}

#[test]
fn brute_force_oracle_matches_expand_helper() {
    // guards the oracle itself: (x-1)(x+2) = x^2+x-2
    assert_eq!(expand(&[int(1), int(-2)]), Polynomial::from_ints(&[-2, 1, 1]));
}
