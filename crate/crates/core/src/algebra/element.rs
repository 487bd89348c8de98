use std::collections::BTreeMap;
use std::fmt;

use crate::groups::{Group, GroupElement};
use crate::scalars::{parse_scalar, Registry, Scalar, ScalarError};

/// Finite linear combination of the basis d_x (x ∈ G) and the central element C.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    d_terms: BTreeMap<GroupElement, Scalar>,
    c_coeff: Scalar,
}

/// A basis symbol of Vir[G].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    D(GroupElement),
    C,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::D(x) => write!(f, "d{x}"),
            Generator::C => f.write_str("C"),
        }
    }
}

/// Result of [`AlgebraElement::weight_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(GroupElement),
    Mixed,
    /// The zero element has every weight.
    Zero,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn d(x: GroupElement) -> Self {
        AlgebraElement::term(x, Scalar::one())
    }

    pub fn term(x: GroupElement, coeff: Scalar) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_d(x, coeff);
        e
    }

    pub fn central(coeff: Scalar) -> Self {
        AlgebraElement {
            d_terms: BTreeMap::new(),
            c_coeff: coeff,
        }
    }

    pub fn from_generator(g: &Generator) -> Self {
        match g {
            Generator::D(x) => AlgebraElement::d(x.clone()),
            Generator::C => AlgebraElement::central(Scalar::one()),
        }
    }

    pub fn d_terms(&self) -> &BTreeMap<GroupElement, Scalar> {
        &self.d_terms
    }

    pub fn c_coeff(&self) -> &Scalar {
        &self.c_coeff
    }

    pub fn coefficient(&self, x: &GroupElement) -> Scalar {
        self.d_terms.get(x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.d_terms.is_empty() && self.c_coeff.is_zero()
    }

    pub fn add_d(&mut self, x: GroupElement, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.d_terms.entry(x).or_default();
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.d_terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_central(&mut self, coeff: &Scalar) {
        self.c_coeff = &self.c_coeff + coeff;
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (x, c) in &other.d_terms {
            out.add_d(x.clone(), c.clone());
        }
        out.add_central(&other.c_coeff);
        out
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            d_terms: self
                .d_terms
                .iter()
                .map(|(x, c)| (x.clone(), c * s))
                .collect(),
            c_coeff: &self.c_coeff * s,
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    /// d₀-eigenvalue index: `x` when only d_x (and possibly C, at x = 0) occur.
    pub fn weight_of(&self, group: &Group) -> Weight {
        match self.d_terms.len() {
            0 if self.c_coeff.is_zero() => Weight::Zero,
            0 => Weight::Homogeneous(group.zero()),
            1 => {
                let x = self.d_terms.keys().next().expect("one term");
                if self.c_coeff.is_zero() || x.is_zero() {
                    Weight::Homogeneous(x.clone())
                } else {
                    Weight::Mixed
                }
            }
            _ => Weight::Mixed,
        }
    }

    pub fn display<'a>(&'a self, reg: &'a Registry) -> impl fmt::Display + 'a {
        DisplayElement { e: self, reg }
    }

    pub fn render(&self, reg: &Registry) -> String {
        self.display(reg).to_string()
    }

    /// Parses `coeff*d[x1,...,xn] + ... + coeff*C`; a coefficient is a number,
    /// a symbol or a parenthesized scalar expression.
    pub fn parse(text: &str, group: &Group) -> Result<AlgebraElement, ScalarError> {
        let reg = group.registry();
        let mut out = AlgebraElement::zero();
        for (sign, term) in split_terms(text)? {
            let term = term.trim();
            let (coeff, symbol) = match term.rfind('*') {
                Some(i) => (parse_scalar(&term[..i], reg)?, term[i + 1..].trim()),
                None => match term.strip_prefix('-') {
                    Some(rest) => (Scalar::from_int(-1), rest.trim()),
                    None => (Scalar::one(), term.trim_start_matches('+').trim()),
                },
            };
            let coeff = if sign < 0 { -coeff } else { coeff };
            match parse_generator(symbol, group.rank())? {
                Generator::D(x) => out.add_d(x, coeff),
                Generator::C => out.add_central(&coeff),
            }
        }
        Ok(out)
    }
}

/// `d[1,-2]` or `C`.
pub fn parse_generator(symbol: &str, rank: usize) -> Result<Generator, ScalarError> {
    let bad = |msg: &str| ScalarError::Parse {
        pos: 0,
        msg: format!("{msg}: `{symbol}`"),
    };
    let symbol = symbol.trim();
    if symbol == "C" {
        return Ok(Generator::C);
    }
    let inner = symbol
        .strip_prefix("d[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("expected d[..] or C"))?;
    let coords: Result<Vec<i64>, _> = inner.split(',').map(|s| s.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| bad("bad coordinates"))?;
    if coords.len() != rank {
        return Err(bad("wrong number of coordinates"));
    }
    Ok(Generator::D(GroupElement(coords)))
}

fn split_terms(text: &str) -> Result<Vec<(i32, &str)>, ScalarError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1;
    let bytes = text.as_bytes();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = text[..i].trim_end();
                // A sign directly after `*` or at the start belongs to the coefficient.
                if prev.is_empty() || prev.ends_with(['*', '+', '-', '(']) {
                    continue;
                }
                out.push((sign, &text[start..i]));
                sign = if ch == b'-' { -1 } else { 1 };
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((sign, &text[start..]));
    if out.iter().any(|(_, t)| t.trim().is_empty()) {
        return Err(ScalarError::Parse {
            pos: 0,
            msg: format!("empty term in `{text}`"),
        });
    }
    Ok(out)
}

struct DisplayElement<'a> {
    e: &'a AlgebraElement,
    reg: &'a Registry,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .e
            .d_terms
            .iter()
            .map(|(x, c)| render_term(c, &format!("d{x}"), self.reg))
            .collect();
        if !self.e.c_coeff.is_zero() {
            parts.push(render_term(&self.e.c_coeff, "C", self.reg));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

pub(crate) fn render_term(coeff: &Scalar, symbol: &str, reg: &Registry) -> String {
    if coeff.is_one() {
        return symbol.to_string();
    }
    let text = coeff.render(reg);
    let simple = coeff.as_rational().is_some() || (coeff.is_polynomial() && coeff.numer().len() == 1);
    if simple {
        format!("{text}*{symbol}")
    } else {
        format!("({text})*{symbol}")
    }
}
