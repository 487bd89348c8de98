//! Exact coefficient field: sparse polynomials over ℚ and their fractions.

mod gcd;
mod parse;
mod poly;
mod ratfun;

pub use gcd::gcd;
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly, Var};
pub use ratfun::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization makes a denominator vanish")]
    Pole,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// Names of the indeterminates, in monomial-order priority.
///
/// The standard layout is the group generators followed by `alpha`, `beta`,
/// `c` and `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Registry {
    names: Vec<String>,
    generators: usize,
}

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";
pub const CENTRAL_CHARGE: &str = "c";
pub const HIGHEST_WEIGHT: &str = "h";

impl Registry {
    pub fn standard<S: AsRef<str>>(generators: &[S]) -> Result<Self, ScalarError> {
        let mut names: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend([ALPHA, BETA, CENTRAL_CHARGE, HIGHEST_WEIGHT].map(String::from));
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) || names[..i].contains(n) {
                return Err(ScalarError::UnknownSymbol(n.clone()));
            }
        }
        Ok(Registry {
            names,
            generators: generators.len(),
        })
    }

    /// `x0, x1, …`; used for debug output only.
    pub fn anonymous(n: usize) -> Self {
        Registry {
            names: (0..n).map(|i| format!("x{i}")).collect(),
            generators: n,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn generator(&self, i: usize) -> Var {
        assert!(i < self.generators, "generator index out of range");
        i
    }

    pub fn alpha(&self) -> Var {
        self.generators
    }

    pub fn beta(&self) -> Var {
        self.generators + 1
    }

    pub fn central_charge(&self) -> Var {
        self.generators + 2
    }

    pub fn highest_weight(&self) -> Var {
        self.generators + 3
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_layout() {
        let r = Registry::standard(&["g1", "g2"]).unwrap();
        assert_eq!(r.names(), &["g1", "g2", "alpha", "beta", "c", "h"]);
        assert_eq!(r.alpha(), 2);
        assert_eq!(r.highest_weight(), 5);
    }

    #[test]
    fn rejects_duplicate_or_bad_names() {
        assert!(Registry::standard(&["g1", "g1"]).is_err());
        assert!(Registry::standard(&["alpha"]).is_err());
        assert!(Registry::standard(&["1x"]).is_err());
    }
}
