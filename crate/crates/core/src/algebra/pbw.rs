//! Normal ordering in U(Vir[G]) with respect to a total order on G.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{bracket_basis, element::render_term, Generator};
use crate::groups::{Group, GroupElement, GroupOrder};
use crate::scalars::{Registry, Scalar};

/// `d_{x₁}⋯d_{x_r}·C^p` with `x₁ ⪯ ⋯ ⪯ x_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnvelopingMonomial {
    pub factors: Vec<GroupElement>,
    pub c_power: u32,
}

impl EnvelopingMonomial {
    pub fn one() -> Self {
        EnvelopingMonomial {
            factors: Vec::new(),
            c_power: 0,
        }
    }

    pub fn degree(&self) -> usize {
        self.factors.len() + self.c_power as usize
    }

    /// Sum of the factor indices: the weight of the monomial under ad d₀.
    pub fn grade(&self, group: &Group) -> GroupElement {
        self.factors.iter().fold(group.zero(), |acc, x| &acc + x)
    }

    pub fn is_sorted(&self, order: &GroupOrder) -> bool {
        self.factors
            .windows(2)
            .all(|w| order.compare(&w[0], &w[1]) != Ordering::Greater)
    }
}

impl fmt::Display for EnvelopingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.c_power == 0 {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|x| format!("d{x}")).collect();
        match self.c_power {
            0 => {}
            1 => parts.push("C".into()),
            p => parts.push(format!("C^{p}")),
        }
        f.write_str(&parts.join("*"))
    }
}

/// Linear combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EnvelopingElement {
    terms: BTreeMap<EnvelopingMonomial, Scalar>,
}

impl EnvelopingElement {
    pub fn terms(&self) -> &BTreeMap<EnvelopingMonomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &EnvelopingMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: EnvelopingMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &EnvelopingElement) -> EnvelopingElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn render(&self, reg: &Registry) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| render_term(c, &m.to_string(), reg))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Which out-of-order adjacent pair is swapped first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RewriteStrategy {
    #[default]
    LeftmostDescent,
    RightmostDescent,
}

/// Rewrites a word in the generators into the sorted PBW basis.
pub fn pbw_normalize(group: &Group, order: &GroupOrder, word: &[Generator]) -> EnvelopingElement {
    pbw_normalize_with(group, order, word, RewriteStrategy::default())
}

pub fn pbw_normalize_with(
    group: &Group,
    order: &GroupOrder,
    word: &[Generator],
    strategy: RewriteStrategy,
) -> EnvelopingElement {
    let mut c_power = 0u32;
    let mut factors = Vec::with_capacity(word.len());
    for g in word {
        match g {
            Generator::C => c_power += 1,
            Generator::D(x) => factors.push(x.clone()),
        }
    }
    normalize_linear(group, order, vec![(Scalar::one(), factors, c_power)], strategy)
}

/// Product of two elements, normal ordered.
pub fn multiply(
    group: &Group,
    order: &GroupOrder,
    a: &EnvelopingElement,
    b: &EnvelopingElement,
) -> EnvelopingElement {
    let mut pending = Vec::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let mut f = ma.factors.clone();
            f.extend(mb.factors.iter().cloned());
            pending.push((ca * cb, f, ma.c_power + mb.c_power));
        }
    }
    normalize_linear(group, order, pending, RewriteStrategy::default())
}

type Word = (Scalar, Vec<GroupElement>, u32);

fn normalize_linear(
    group: &Group,
    order: &GroupOrder,
    mut pending: Vec<Word>,
    strategy: RewriteStrategy,
) -> EnvelopingElement {
    let mut out = EnvelopingElement::default();
    while let Some((coeff, factors, c_power)) = pending.pop() {
        if coeff.is_zero() {
            continue;
        }
        let descent = |i: &usize| order.compare(&factors[*i], &factors[*i + 1]) == Ordering::Greater;
        let pos = match strategy {
            RewriteStrategy::LeftmostDescent => (0..factors.len().saturating_sub(1)).find(descent),
            RewriteStrategy::RightmostDescent => {
                (0..factors.len().saturating_sub(1)).rev().find(descent)
            }
        };
        let Some(i) = pos else {
            out.add_term(EnvelopingMonomial { factors, c_power }, coeff);
            continue;
        };
        // d_x d_y = d_y d_x + [d_x, d_y]
        let (x, y) = (&factors[i], &factors[i + 1]);
        let (lin, central) = bracket_basis(group, x, y);
        if !lin.is_zero() {
            let mut w = factors[..i].to_vec();
            w.push(x + y);
            w.extend_from_slice(&factors[i + 2..]);
            pending.push((&coeff * &lin, w, c_power));
        }
        if !central.is_zero() {
            let mut w = factors[..i].to_vec();
            w.extend_from_slice(&factors[i + 2..]);
            pending.push((&coeff * &central, w, c_power + 1));
        }
        let mut swapped = factors.clone();
        swapped.swap(i, i + 1);
        pending.push((coeff, swapped, c_power));
    }
    out
}
