use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{Poly, Var};
use super::{Registry, ScalarError};

/// Element of ℚ(x₁, …, x_k): a reduced fraction of polynomials.
///
/// The denominator is coprime to the numerator and has leading coefficient 1
/// in graded lexicographic order, so equal fractions have identical
/// representations and `==` is equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::from_poly(Poly::constant(q))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(v: Var) -> Self {
        Scalar::from_poly(Poly::var(v))
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            return Scalar {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value when no indeterminate occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Substitutes rational values for indeterminates and renormalizes.
    pub fn specialize(&self, bindings: &BTreeMap<Var, BigRational>) -> Result<Scalar, ScalarError> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(Scalar::normalized(self.num.substitute(bindings), den))
    }

    /// Renders with the registry's symbol names.
    pub fn display<'a>(&'a self, reg: &'a Registry) -> impl fmt::Display + 'a {
        DisplayScalar { s: self, reg }
    }

    pub fn render(&self, reg: &Registry) -> String {
        self.display(reg).to_string()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reg = Registry::anonymous(self.variables().last().map_or(0, |v| v + 1));
        let text = self.render(&reg);
        f.write_str(&text)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &rhs.num);
            }
            return Scalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        Scalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_scalar {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}
forward_scalar!(Add, add);
forward_scalar!(Sub, sub);
forward_scalar!(Mul, mul);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

struct DisplayScalar<'a> {
    s: &'a Scalar,
    reg: &'a Registry,
}

impl fmt::Display for DisplayScalar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.den.is_one() {
            write_poly(f, &self.s.num, self.reg)
        } else {
            f.write_str("(")?;
            write_poly(f, &self.s.num, self.reg)?;
            f.write_str(")/(")?;
            write_poly(f, &self.s.den, self.reg)?;
            f.write_str(")")
        }
    }
}

/// Terms in ascending graded-lex order, `coeff*x^e*y` with explicit exponents above 1.
pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly, reg: &Registry) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c < &BigRational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if negative {
            f.write_str("-")?;
        } else if i > 0 {
            f.write_str("+")?;
        }
        let mut first = true;
        if !abs.is_one() || m.is_one() {
            write!(f, "{abs}")?;
            first = false;
        }
        for &(v, e) in m.pairs() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(reg.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::standard(&["g1", "g2"]).unwrap()
    }

    #[test]
    fn monomial_product() {
        let g1 = Scalar::var(0);
        assert_eq!((&g1 * &g1).render(&reg()), "g1^2");
    }

    #[test]
    fn factor_cancels() {
        let g1 = Scalar::var(0);
        let g2 = Scalar::var(1);
        let num = &(&g1 * &g1) - &(&g2 * &g2);
        let q = num.checked_div(&(&g1 - &g2)).unwrap();
        assert_eq!(q, &g1 + &g2);
        assert!(q.is_polynomial());
    }

    #[test]
    fn commutativity_gives_zero() {
        let r = reg();
        let a = Scalar::var(r.alpha());
        let b = Scalar::var(r.beta());
        assert!((&(&a + &b) - &(&b + &a)).is_zero());
    }

    #[test]
    fn zero_tests_and_specialization() {
        let g1 = Scalar::var(0);
        let f = (&g1.pow(3) - &g1) * Scalar::ratio(1, 12);
        assert!(Scalar::zero().is_zero());
        assert!(!f.is_zero());
        let mut b = BTreeMap::new();
        b.insert(0, BigRational::one());
        assert!(f.specialize(&b).unwrap().is_zero());
        b.insert(0, BigRational::from_integer(2.into()));
        assert_eq!((&g1.pow(3) - &g1).specialize(&b).unwrap(), Scalar::from_int(6));
    }

    #[test]
    fn pole_is_an_error() {
        let r = reg();
        let a = Scalar::var(r.alpha());
        let y = Scalar::var(r.beta());
        let f = (&a + &y).checked_div(&a).unwrap();
        let mut b = BTreeMap::new();
        b.insert(r.alpha(), BigRational::zero());
        assert_eq!(f.specialize(&b), Err(ScalarError::Pole));
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn denominators_are_monic() {
        let g1 = Scalar::var(0);
        let s = Scalar::one().checked_div(&(&g1 * Scalar::from_int(2))).unwrap();
        assert!(s.denom().leading_coefficient().is_one());
        assert_eq!(s.render(&reg()), "(1/2)/(g1)");
    }

    #[test]
    fn rendering_is_ascending() {
        let r = reg();
        let s = &Scalar::var(1) - &Scalar::var(0);
        assert_eq!(s.render(&r), "g2-g1");
        let t = (&Scalar::var(0).pow(3) - &Scalar::var(0)) * Scalar::ratio(1, 12);
        assert_eq!(t.render(&r), "-1/12*g1+1/12*g1^3");
    }
}
