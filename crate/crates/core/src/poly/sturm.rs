//! Sturm sequences, real-root counting and bisection-based isolation.

use num_traits::{Signed, Zero};

use super::{PolyError, Polynomial};
use crate::numeric::{sign, Interval, Rational};

/// Canonical Sturm chain `p, p', -rem(p, p'), ...` of the squarefree part.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let p = p.squarefree_part();
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        // Only signs matter, so positive rescaling keeps sizes small.
        let (content, _) = r.to_primitive_integer();
        seq.push(-&r.scale(&content.abs().recip()));
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[Polynomial], x: &Rational) -> usize {
    variations(seq.iter().map(|q| q.sign_at(x)))
}

fn variations_at_infinity(seq: &[Polynomial], positive: bool) -> usize {
    variations(seq.iter().map(|q| {
        let s = sign(&q.leading());
        if positive || q.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct roots in the half-open interval `(lo, hi]`.
fn count_half_open(seq: &[Polynomial], lo: &Rational, hi: &Rational) -> usize {
    variations_at(seq, lo).saturating_sub(variations_at(seq, hi))
}

/// Distinct real roots of `p` in the closed window, or on the whole line.
pub fn sturm_count(p: &Polynomial, window: Option<&Interval>) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    Ok(match window {
        None => variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true),
        Some(w) => {
            let at_lo = usize::from(seq[0].eval(w.lo()).is_zero());
            if w.is_point() {
                at_lo
            } else {
                count_half_open(&seq, w.lo(), w.hi()) + at_lo
            }
        }
    })
}

/// Disjoint closed isolating intervals, ascending. Each either is a single
/// rational root `[r, r]` or has non-root endpoints with a sign change of the
/// squarefree part across it.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<Interval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(p);
    let sf = seq[0].clone();
    let bound = sf.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    // Depth-first with the right half pushed first, so output is ascending.
    while let Some((lo, hi)) = stack.pop() {
        let n = count_half_open(&seq, &lo, &hi);
        match n {
            0 => {}
            1 => out.push(shrink_to_isolating(&seq, &sf, lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    // Neighbours may share a (non-root) bisection point; pull them apart.
    for i in 1..out.len() {
        while out[i - 1].hi() >= out[i].lo() {
            let a = refine_root(&sf, &out[i - 1], &(out[i - 1].width() / Rational::from_integer(2.into())));
            let b = refine_root(&sf, &out[i], &(out[i].width() / Rational::from_integer(2.into())));
            out[i - 1] = a;
            out[i] = b;
        }
    }
    Ok(out)
}

// (lo, hi] holds exactly one root; make the closed interval hold only it.
fn shrink_to_isolating(seq: &[Polynomial], sf: &Polynomial, mut lo: Rational, mut hi: Rational) -> Interval {
    loop {
        if sf.eval(&hi).is_zero() {
            return Interval::point(hi);
        }
        if !sf.eval(&lo).is_zero() {
            return Interval::new(lo, hi);
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if count_half_open(seq, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Bisects an isolating interval of a simple root of `p` down to `width`.
/// `window` must come from [`isolate_real_roots`] (or be a refinement of it).
pub fn refine_root(p: &Polynomial, window: &Interval, width: &Rational) -> Interval {
    let mut w = window.clone();
    if w.is_point() {
        return w;
    }
    let mut s_lo = p.sign_at(w.lo());
    debug_assert!(s_lo != 0 && s_lo != p.sign_at(w.hi()));
    while &w.width() > width {
        let mid = w.midpoint();
        let s = p.sign_at(&mid);
        if s == 0 {
            return Interval::point(mid);
        }
        if s == s_lo {
            w = Interval::new(mid, w.hi().clone());
            s_lo = s;
        } else {
            w = Interval::new(w.lo().clone(), mid);
        }
    }
    w
}
