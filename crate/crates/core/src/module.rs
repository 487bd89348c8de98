//! Modules induced from a "top" space: U(Vir[G]) ⊗ top, with a basis of
//! sorted lowering monomials applied to top vectors.
//!
//! The same straightening routine serves generalized Verma modules
//! (top = intermediate series over G₀) and classical Verma modules
//! (top = a highest weight vector).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::algebra::{bracket_basis, AlgebraElement};
use crate::groups::{Group, GroupElement};
use crate::scalars::Scalar;

/// The data that determines an induced module.
pub trait InducedAction {
    type Top: Clone + Ord + Debug;

    fn group(&self) -> &Group;
    /// Whether d_x belongs to the lowering part (kept to the left in the basis).
    fn is_lowering(&self, x: &GroupElement) -> bool;
    /// Order of lowering factors inside a basis monomial.
    fn lowering_cmp(&self, x: &GroupElement, y: &GroupElement) -> Ordering;
    /// Scalar by which C acts.
    fn central_charge(&self) -> Scalar;
    /// `d_x · (1 ⊗ t)` for non-lowering `x`; `None` means zero.
    fn act_on_top(&self, x: &GroupElement, top: &Self::Top) -> Option<(Scalar, Self::Top)>;
}

/// `d_{y₁}⋯d_{y_r} ⊗ t` with lowering factors in basis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMonomial<T> {
    pub factors: Vec<GroupElement>,
    pub top: T,
}

impl<T> ModuleMonomial<T> {
    pub fn top(top: T) -> Self {
        ModuleMonomial {
            factors: Vec::new(),
            top,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector<T: Ord> {
    terms: BTreeMap<ModuleMonomial<T>, Scalar>,
}

impl<T: Ord + Clone> Default for ModuleVector<T> {
    fn default() -> Self {
        ModuleVector {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> ModuleVector<T> {
    pub fn basis(m: ModuleMonomial<T>) -> Self {
        let mut v = ModuleVector::default();
        v.add_term(m, Scalar::one());
        v
    }

    pub fn terms(&self) -> &BTreeMap<ModuleMonomial<T>, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &ModuleMonomial<T>) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: ModuleMonomial<T>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = ModuleVector::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }
}

/// Rewrites `coeff · d_{w₁}⋯d_{w_r} ⊗ top` into the monomial basis.
pub fn straighten<A: InducedAction>(
    module: &A,
    coeff: Scalar,
    word: Vec<GroupElement>,
    top: A::Top,
) -> ModuleVector<A::Top> {
    let group = module.group();
    let mut out = ModuleVector::default();
    let mut pending = vec![(coeff, word, top)];
    while let Some((coeff, word, top)) = pending.pop() {
        if coeff.is_zero() {
            continue;
        }
        let swap_at = match word.iter().rposition(|x| !module.is_lowering(x)) {
            Some(p) if p + 1 == word.len() => {
                if let Some((s, t)) = module.act_on_top(&word[p], &top) {
                    pending.push((&coeff * &s, word[..p].to_vec(), t));
                }
                continue;
            }
            Some(p) => p,
            None => {
                let descent = (0..word.len().saturating_sub(1))
                    .find(|&i| module.lowering_cmp(&word[i], &word[i + 1]) == Ordering::Greater);
                match descent {
                    Some(i) => i,
                    None => {
                        out.add_term(ModuleMonomial { factors: word, top }, coeff);
                        continue;
                    }
                }
            }
        };
        // d_x d_y = d_y d_x + [d_x, d_y]
        let i = swap_at;
        let (x, y) = (&word[i], &word[i + 1]);
        let (lin, central) = bracket_basis(group, x, y);
        if !lin.is_zero() {
            let mut w = word[..i].to_vec();
            w.push(x + y);
            w.extend_from_slice(&word[i + 2..]);
            pending.push((&coeff * &lin, w, top.clone()));
        }
        if !central.is_zero() {
            let c = module.central_charge();
            if !c.is_zero() {
                let mut w = word[..i].to_vec();
                w.extend_from_slice(&word[i + 2..]);
                pending.push((&(&coeff * &central) * &c, w, top.clone()));
            }
        }
        let mut swapped = word;
        swapped.swap(i, i + 1);
        pending.push((coeff, swapped, top));
    }
    out
}

/// `d_x · v`.
pub fn act_generator<A: InducedAction>(
    module: &A,
    x: &GroupElement,
    v: &ModuleVector<A::Top>,
) -> ModuleVector<A::Top> {
    let mut out = ModuleVector::default();
    for (m, c) in v.terms() {
        let mut word = Vec::with_capacity(m.factors.len() + 1);
        word.push(x.clone());
        word.extend(m.factors.iter().cloned());
        let r = straighten(module, c.clone(), word, m.top.clone());
        for (rm, rc) in r.terms {
            out.add_term(rm, rc);
        }
    }
    out
}

/// `a · v` for a general element; C acts by the central charge.
pub fn act_element<A: InducedAction>(
    module: &A,
    a: &AlgebraElement,
    v: &ModuleVector<A::Top>,
) -> ModuleVector<A::Top> {
    let mut out = v.scale(&(a.c_coeff() * &module.central_charge()));
    for (x, c) in a.d_terms() {
        out = out.add(&act_generator(module, x, v).scale(c));
    }
    out
}
