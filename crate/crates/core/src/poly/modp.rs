// Dense polynomials over a small prime field, just enough for
// Cantor-Zassenhaus factorization ahead of Hensel lifting.

use num_bigint::BigUint;
use rand::Rng;

pub(super) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(super) struct Field {
    pub p: u64,
}

impl Field {
    #[cfg(test)]
    pub fn reduce_i(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn trim(&self, mut a: Fp) -> Fp {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &Fp) -> usize {
        a.len().saturating_sub(1)
    }

    pub fn add_poly(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn sub_poly(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn mul_poly(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn scale(&self, a: &Fp, c: u64) -> Fp {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let db = b.len() - 1;
        let mut rem = a.clone();
        let mut quot = vec![0u64; a.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.mul(rem[i + db], inv);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &y) in b.iter().enumerate() {
                rem[i + j] = self.sub(rem[i + j], self.mul(c, y));
            }
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("gcd of zero polynomials");
        let inv = self.inv(lc);
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        self.trim(v)
    }

    pub fn powmod(&self, base: &Fp, exp: &BigUint, modulus: &Fp) -> Fp {
        let mut result: Fp = vec![1];
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            result = self.rem(&self.mul_poly(&result, &result), modulus);
            if exp.bit(i) {
                result = self.rem(&self.mul_poly(&result, &base), modulus);
            }
        }
        result
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &Fp, rng: &mut R) -> Vec<Fp> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            self.equal_degree(&g, d, rng, &mut out);
        }
        out
    }

    fn distinct_degree(&self, f: &Fp) -> Vec<(Fp, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x: Fp = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut h = x.clone();
        let mut d = 0;
        while Field::deg(&rest) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&self.sub_poly(&h, &x), &rest);
            if g.len() > 1 {
                out.push((g.clone(), d));
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
        }
        if rest.len() > 1 {
            let d = Field::deg(&rest);
            out.push((self.monic(&rest), d));
        }
        out
    }

    fn equal_degree<R: Rng>(&self, g: &Fp, d: usize, rng: &mut R, out: &mut Vec<Fp>) {
        let n = Field::deg(g);
        if n == d {
            out.push(self.monic(g));
            return;
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) >> 1;
        loop {
            let a: Fp = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() <= 1 {
                continue;
            }
            let b = self.sub_poly(&self.powmod(&a, &exp, g), &vec![1]);
            let c = self.gcd(&b, g);
            if c.len() > 1 && c.len() < g.len() {
                let other = self.divrem(g, &c).0;
                self.equal_degree(&c, d, rng, out);
                self.equal_degree(&other, d, rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factor_mod_small_prime() {
        let f = Field { p: 7 };
        // x^4 - 10x^2 + 1 splits mod every prime
        let poly = f.trim(vec![1, 0, f.reduce_i(-10), 0, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let factors = f.factor_squarefree(&poly, &mut rng);
        assert!(factors.len() >= 2);
        let prod = factors.iter().fold(vec![1u64], |acc, g| f.mul_poly(&acc, g));
        assert_eq!(prod, poly);
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Field { p: 13 };
        let a = vec![1, 0, 1];
        let b = vec![2, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = f.add_poly(&f.mul_poly(&s, &a), &f.mul_poly(&t, &b));
        assert_eq!(lhs, vec![1]);
    }
}
