//! Multivariate polynomial GCD over ℚ by recursive primitive remainder sequences.
//!
//! A polynomial is viewed as univariate in one of its variables with
//! coefficients in the remaining ones; contents are computed recursively, so
//! the recursion terminates on the number of variables.

use super::poly::{Monomial, Poly, Var};
use num_rational::BigRational;
use num_traits::One;

/// Greatest common divisor, normalized to leading coefficient 1 (zero if both are zero).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    gcd_nonzero(a, b).monic()
}

fn gcd_nonzero(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let va = a.variables();
    let vb = b.variables();
    // A variable missing from one side can only divide through the content.
    let Some(&v) = va.iter().find(|v| vb.contains(v)) else {
        let v = va[0];
        let ca = content(a, v);
        return gcd_nonzero(&ca, b);
    };

    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd_nonzero(&ca, &cb);

    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.degree_in(v) == 0 {
            return c;
        }
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            let g = primitive_part(&q, v);
            return &c * &g;
        }
        p = q;
        q = primitive_part(&r, v);
    }
}

/// GCD of the coefficients of `p` viewed as a polynomial in `v`.
fn content(p: &Poly, v: Var) -> Poly {
    let mut coeffs: Vec<Poly> = p
        .coefficients_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(Poly::len);
    let mut g = coeffs[0].clone();
    for c in &coeffs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd_nonzero(&g, c).monic();
    }
    if g.is_constant() {
        Poly::one()
    } else {
        g
    }
}

fn primitive_part(p: &Poly, v: Var) -> Poly {
    let c = content(p, v);
    p.div_exact(&c).expect("content divides").primitive_integral()
}

/// `lc(q)^k · p mod q` in the variable `v`, with intermediate results kept integral.
fn pseudo_remainder(p: &Poly, q: &Poly, v: Var) -> Poly {
    let dq = q.degree_in(v);
    let q_coeffs = q.coefficients_in(v);
    let lc_q = q_coeffs[dq as usize].clone();
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(v) >= dq {
        let dr = r.degree_in(v);
        let lc_r = r.coefficients_in(v).pop().expect("nonzero");
        let shift = Monomial::from_pairs(vec![(v, dr - dq)]);
        let lhs = &r * &lc_q;
        let rhs = (q * &lc_r).mul_monomial(&shift, &BigRational::one());
        r = &lhs - &rhs;
    }
    r.primitive_integral()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }
    fn z() -> Poly {
        Poly::var(2)
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert!(gcd(&x(), &y()).is_one());
        assert!(gcd(&(&x() + &Poly::one()), &x()).is_one());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = &(&x() * &y()) + &z();
        let a = &f * &(&x() - &y());
        let b = &f * &(&(&x() * &x()) + &z());
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_with_content_in_other_variable() {
        // (y+1)·x and (y+1)·(y−1)
        let yp = &y() + &Poly::one();
        let a = &yp * &x();
        let b = &yp * &(&y() - &Poly::one());
        assert_eq!(gcd(&a, &b), yp);
    }

    #[test]
    fn gcd_of_powers() {
        let f = &x() - &y();
        let a = f.pow(3);
        let b = &f.pow(2) * &(&x() + &y());
        assert_eq!(gcd(&a, &b), f.pow(2).monic());
    }
}
