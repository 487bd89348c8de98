//! Exact dense linear algebra over ℚ and over the rational-function field.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalars::{Poly, Scalar};

/// Field operations needed by Gaussian elimination.
pub trait FieldElement: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on zero; elimination only divides by pivots.
    fn inv(&self) -> Self;
    /// Smaller is preferred as a pivot.
    fn complexity(&self) -> usize;
}

impl FieldElement for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl FieldElement for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        Scalar::inv(self).expect("pivot is nonzero")
    }
    fn complexity(&self) -> usize {
        self.numer().len() + self.denom().len()
    }
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<F: FieldElement>(mut m: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].complexity())
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for k in c..ncols {
            m[r][k] = m[r][k].mul(&inv);
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in c..ncols {
                if !m[r][k].is_zero() {
                    let t = f.mul(&m[r][k]);
                    m[i][k] = m[i][k].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<F: FieldElement>(m: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Basis of the right null space `{v : m·v = 0}`.
pub fn kernel<F: FieldElement>(m: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = F::zero().sub(&row[f]);
            }
            v
        })
        .collect()
}

/// Determinant over ℚ[x₁,…] by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a = m.to_vec();
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank over the fraction field of ℚ[x₁,…] by fraction-free elimination;
/// never forms quotients, so no gcds are needed.
pub fn rank_fraction_free(mut m: Vec<Vec<Poly>>, ncols: usize) -> usize {
    let rows = m.len();
    let mut prev = Poly::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].len())
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..ncols {
                let num = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = Poly::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// All maximal (ncols × ncols) minors of a tall polynomial matrix, by Bareiss.
pub fn maximal_minors(m: &[Vec<Poly>], ncols: usize) -> Vec<(Vec<usize>, Poly)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..ncols).collect();
    if m.len() < ncols {
        return out;
    }
    loop {
        let sub: Vec<Vec<Poly>> = idx.iter().map(|&i| m[i].clone()).collect();
        out.push((idx.clone(), bareiss_determinant(&sub)));
        // Next combination in lexicographic order.
        let rows = m.len();
        let Some(i) = (0..ncols).rev().find(|&i| idx[i] < rows - ncols + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..ncols {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
