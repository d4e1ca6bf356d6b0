//! Rational annihilating polynomials for `-a`, `1/a`, `sqrt(1 + a^2)`,
//! `a + b` and `a * b`, built from the minimal polynomials of `a` and `b`
//! through companion matrices.
//!
//! If `A` and `B` are companion matrices of `p` and `q` then the
//! eigenvalues of `A (x) I + I (x) B` are all sums `x_i + y_j` and those of
//! `A (x) B` are all products `x_i y_j`. Their characteristic polynomials
//! have rational entries because the companion entries are (signed)
//! elementary symmetric functions of the roots. The results annihilate the
//! target value but need not be irreducible; callers factor them.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::{int, Rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnihilatorError {
    #[error("input polynomial {0} is not monic")]
    NonMonic(Polynomial),
    #[error("input polynomial is constant")]
    Constant,
    #[error("zero is a root of {0}, so the reciprocal is undefined")]
    ZeroIsRoot(Polynomial),
}

/// Square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    order: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(order: usize) -> Self {
        Matrix { order, entries: vec![Rational::zero(); order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Matrix::zero(order);
        for i in 0..order {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "matrix must be square");
        Matrix { order, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.order, other.order);
        let n = self.order;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.order, other.order);
        Matrix {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.order, other.order);
        let mut out = Matrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.order + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.order + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.order)
            .map(|i| (0..self.order).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

fn require_monic(p: &Polynomial) -> Result<(), AnnihilatorError> {
    if !p.is_monic() {
        return Err(AnnihilatorError::NonMonic(p.clone()));
    }
    Ok(())
}

/// Companion matrix: ones on the superdiagonal, bottom row `-a_0 .. -a_(n-1)`.
pub fn companion(p: &Polynomial) -> Result<Matrix, AnnihilatorError> {
    require_monic(p)?;
    let n = p.deg();
    if n == 0 {
        return Err(AnnihilatorError::Constant);
    }
    let mut m = Matrix::zero(n);
    for i in 0..n - 1 {
        m[(i, i + 1)] = Rational::one();
    }
    for j in 0..n {
        m[(n - 1, j)] = -p.coeff(j);
    }
    Ok(m)
}

/// `det(tI - M)` via reduction to upper Hessenberg form, O(n^3) exact
/// rational operations.
pub fn char_poly(m: &Matrix) -> Polynomial {
    let n = m.order;
    let mut h = m.clone();
    // Similarity transforms that zero everything below the subdiagonal.
    for col in 0..n.saturating_sub(2) {
        let pivot_row = col + 1;
        let Some(i) = (pivot_row..n).find(|&i| !h[(i, col)].is_zero()) else {
            continue;
        };
        if i != pivot_row {
            for j in 0..n {
                h.entries.swap(i * n + j, pivot_row * n + j);
            }
            for r in 0..n {
                h.entries.swap(r * n + i, r * n + pivot_row);
            }
        }
        let pivot = h[(pivot_row, col)].clone();
        for j in pivot_row + 1..n {
            if h[(j, col)].is_zero() {
                continue;
            }
            let u = &h[(j, col)] / &pivot;
            for c in 0..n {
                let v = &u * &h[(pivot_row, c)];
                if !v.is_zero() {
                    h[(j, c)] -= v;
                }
            }
            for r in 0..n {
                let v = &u * &h[(r, j)];
                if !v.is_zero() {
                    h[(r, pivot_row)] += v;
                }
            }
        }
    }
    // Characteristic polynomials of the leading principal submatrices.
    let t = Polynomial::x();
    let mut polys: Vec<Polynomial> = vec![Polynomial::one()];
    for k in 0..n {
        let mut pk = &(&t - &Polynomial::constant(h[(k, k)].clone())) * &polys[k];
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[(i + 1, i)];
            if prod.is_zero() {
                break;
            }
            let coef = &prod * &h[(i, k)];
            if !coef.is_zero() {
                pk = &pk - &polys[i].scale(&coef);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

/// Roots `-a_i`: `(-1)^n p(-t)`.
pub fn annihilator_neg(p: &Polynomial) -> Result<Polynomial, AnnihilatorError> {
    require_monic(p)?;
    Ok(p.scale_var(&int(-1)).monic())
}

/// Roots `1/a_i`: reversed coefficients, made monic.
pub fn annihilator_inv(p: &Polynomial) -> Result<Polynomial, AnnihilatorError> {
    require_monic(p)?;
    if p.coeff(0).is_zero() {
        return Err(AnnihilatorError::ZeroIsRoot(p.clone()));
    }
    Ok(p.reversed().monic())
}

/// Roots `+-sqrt(1 + a_i^2)`: `r(t^2 - 1)` where `r = charpoly(C_p^2)`
/// annihilates the squares `a_i^2`.
pub fn annihilator_hyp(p: &Polynomial) -> Result<Polynomial, AnnihilatorError> {
    let c = companion(p)?;
    let squares = char_poly(&c.mul(&c));
    Ok(squares.compose(&Polynomial::from_ints(&[-1, 0, 1])))
}

/// Roots `a_i + b_j`: `charpoly(A (x) I + I (x) B)`.
pub fn annihilator_sum(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AnnihilatorError> {
    let a = companion(p)?;
    let b = companion(q)?;
    let m = a.kron(&Matrix::identity(b.order())).add(&Matrix::identity(a.order()).kron(&b));
    Ok(char_poly(&m))
}

/// Roots `a_i * b_j`: `charpoly(A (x) B)`.
pub fn annihilator_product(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AnnihilatorError> {
    let a = companion(p)?;
    let b = companion(q)?;
    Ok(char_poly(&a.kron(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn companion_examples() {
        assert_eq!(companion(&p(&[-2, 0, 1])).unwrap(), Matrix::from_int_rows(&[&[0, 1], &[2, 0]]));
        assert_eq!(companion(&p(&[-3, 1])).unwrap(), Matrix::from_int_rows(&[&[3]]));
        let c = companion(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(c, Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[2, 0, 0]]));
        assert_eq!(char_poly(&c), p(&[-2, 0, 0, 1]));
        assert!(matches!(companion(&p(&[1, 2])), Err(AnnihilatorError::NonMonic(_))));
        assert_eq!(companion(&p(&[1])), Err(AnnihilatorError::Constant));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::identity(2)), p(&[1, -2, 1]));
        assert_eq!(char_poly(&Matrix::from_int_rows(&[&[0, 1], &[2, 0]])), p(&[-2, 0, 1]));
        assert_eq!(char_poly(&Matrix::zero(3)), p(&[0, 0, 0, 1]));
    }

    // Cofactor expansion; fine for the small orders used here.
    fn det_cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero();
        for j in 0..n {
            let minor: Vec<Vec<Polynomial>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * &det_cofactor(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        let rows: &[&[i64]] = &[&[0, 2, 0, 1], &[0, 0, 3, 0], &[1, 0, 0, -1], &[5, 0, 2, 0]];
        let m = Matrix::from_int_rows(rows);
        let n = m.order();
        let tm: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Polynomial::constant(-m[(i, j)].clone());
                        if i == j { &c + &Polynomial::x() } else { c }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(char_poly(&m), det_cofactor(&tm));
    }

    #[test]
    fn unary_annihilators() {
        assert_eq!(annihilator_neg(&p(&[-2, 0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(annihilator_neg(&p(&[-3, 1])).unwrap(), p(&[3, 1]));
        assert_eq!(annihilator_neg(&p(&[-2, 0, 0, 1])).unwrap(), p(&[2, 0, 0, 1]));
        assert_eq!(annihilator_inv(&p(&[-3, 1])).unwrap(), Polynomial::new(vec![rat(-1, 3), int(1)]));
        assert_eq!(annihilator_inv(&p(&[-2, 0, 1])).unwrap(), Polynomial::new(vec![rat(-1, 2), int(0), int(1)]));
        assert!(matches!(annihilator_inv(&p(&[0, -1, 1])), Err(AnnihilatorError::ZeroIsRoot(_))));
    }

    #[test]
    fn hyp_annihilator() {
        assert_eq!(annihilator_hyp(&p(&[-1, 1])).unwrap(), p(&[-2, 0, 1]));
        // alpha = 1 +- sqrt 2: (t^2 - 1 - a^2) over both gives t^4 - 8t^2 + 8
        assert_eq!(annihilator_hyp(&p(&[-1, -2, 1])).unwrap(), p(&[8, 0, -8, 0, 1]));
        assert_eq!(annihilator_hyp(&p(&[0, 1])).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn binary_annihilators() {
        assert_eq!(annihilator_sum(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), p(&[1, 0, -10, 0, 1]));
        assert_eq!(annihilator_sum(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), p(&[-3, 1]));
        assert_eq!(annihilator_sum(&p(&[-2, 0, 1]), &p(&[0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(annihilator_product(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap(), p(&[16, 0, -8, 0, 1]));
        assert_eq!(annihilator_product(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), p(&[-6, 1]));
        // +-sqrt 6, each twice
        let six = p(&[-6, 0, 1]);
        assert_eq!(annihilator_product(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), &six * &six);
    }
}
