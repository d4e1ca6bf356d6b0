//! Factorization over the rationals: squarefree decomposition, then
//! Berlekamp-Zassenhaus (Cantor-Zassenhaus mod p, Hensel lifting, and
//! factor recombination with trial division).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Field, Fp};
use super::{PolyError, Polynomial};
use crate::numeric::Rational;

pub const DEFAULT_MAX_DEGREE: usize = 64;

/// `leading * prod factor^multiplicity`, each factor monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Rational,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.leading.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }
}

pub fn factor_rational(p: &Polynomial, max_degree: usize) -> Result<Factorization, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree > max_degree {
        return Err(PolyError::DegreeLimitExceeded { degree, limit: max_degree });
    }
    let mut factors = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(Factorization { leading: p.leading(), factors })
}

/// Monic irreducible factors of a squarefree rational polynomial.
fn factor_squarefree(p: &Polynomial) -> Vec<Polynomial> {
    let (_, mut f) = p.to_primitive_integer();
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    if f[0].is_zero() {
        out.push(Polynomial::x());
        f.remove(0);
    }
    if f.len() == 2 {
        out.push(Polynomial::from_integers(&f).monic());
    } else if f.len() > 2 {
        out.extend(
            zassenhaus(&f)
                .into_iter()
                .map(|g| Polynomial::from_integers(&g).monic()),
        );
    }
    out
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

fn mod_pos(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mod_sym(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    trim(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_fp(v: &[BigInt], field: &Field) -> Fp {
    let p = BigInt::from(field.p);
    field.trim(v.iter().map(|c| c.mod_floor(&p).to_u64().unwrap()).collect())
}

fn from_fp(v: &Fp) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Exact quotient in Z[x] when `g` divides `f`.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let lc = g.last()?;
    if f.len() < g.len() {
        return None;
    }
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let mut quot = vec![BigInt::zero(); f.len() - dg];
    for i in (0..quot.len()).rev() {
        let (q, r) = rem[i + dg].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for (j, y) in g.iter().enumerate() {
            rem[i + j] -= &q * y;
        }
        quot[i] = q;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of degree >= 2 with `f(0) != 0`.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // Pick, among a few admissible primes, the one with fewest modular factors.
    let mut best: Option<(Field, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if tried >= 6 {
            break;
        }
        let field = Field { p };
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(f, &field);
        let g = field.gcd(&fp, &field.derivative(&fp));
        if g.len() != 1 {
            continue;
        }
        tried += 1;
        let factors = field.factor_squarefree(&field.monic(&fp), &mut rng);
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((field, factors));
        }
    }
    let (field, modular) = best.expect("an admissible prime exists");

    // Factor coefficients are bounded by |lc| * 2^n * ||f||_2.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm2.sqrt() + 1);
    let p = BigInt::from(field.p);
    let mut pk = p.clone();
    let mut k = 1u32;
    while pk <= &bound * 2 {
        pk *= &p;
        k += 1;
    }
    let lifted = hensel_multi(f, &modular, &field, k);
    recombine(f.to_vec(), lifted, &pk)
}

/// Lifts `f = lc * prod g_i (mod p)` to monic factors mod `p^k`.
fn hensel_multi(f: &[BigInt], modular: &[Fp], field: &Field, k: u32) -> Vec<Vec<BigInt>> {
    let p = BigInt::from(field.p);
    let pk = num_traits::pow(p, k as usize);
    let lc = f.last().unwrap().clone();
    let lc_p = to_fp(std::slice::from_ref(&lc), field)[0];
    let mut out = Vec::with_capacity(modular.len());
    let mut cur = f.to_vec();
    for i in 0..modular.len() - 1 {
        let rest = modular[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, g| field.mul_poly(&acc, g));
        let (g, h) = hensel_pair(&cur, &modular[i], &rest, field, k);
        out.push(g);
        cur = h;
    }
    // What remains is lc * g_last; divide out lc modulo p^k.
    let lc_inv = lc
        .modinv(&pk)
        .expect("leading coefficient is a unit mod p");
    out.push(mod_pos(&cur.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &pk));
    out
}

fn hensel_pair(f: &[BigInt], g: &Fp, h: &Fp, field: &Field, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = field.ext_gcd(g, h);
    let p = BigInt::from(field.p);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut m = p.clone();
    for _ in 1..k {
        let diff = zsub(f, &zmul(&big_g, &big_h));
        let e: Vec<BigInt> = diff.iter().map(|c| c / &m).collect();
        let e = to_fp(&e, field);
        let (q, dg) = field.divrem(&field.mul_poly(&t, &e), g);
        let dh = field.add_poly(&field.mul_poly(&s, &e), &field.mul_poly(&q, h));
        let scaled = |d: &Fp| -> Vec<BigInt> { d.iter().map(|&c| BigInt::from(c) * &m).collect() };
        big_g = zadd(&big_g, &scaled(&dg));
        big_h = zadd(&big_h, &scaled(&dh));
        m *= &p;
    }
    (mod_pos(&big_g, &m), mod_pos(&big_h, &m))
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn recombine(mut f: Vec<BigInt>, mut lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            // Constant-term screen before the full product.
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(pk));
            let c0 = mod_sym(&[c0], pk).pop().unwrap_or_else(BigInt::zero);
            if c0.is_zero() || !(&lc * &f[0]).is_multiple_of(&c0) {
                continue;
            }
            let g = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| mod_sym(&zmul(&acc, &lifted[i]), pk));
            let g = primitive(g);
            if let Some(q) = zdiv_exact(&f, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = primitive(q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}
