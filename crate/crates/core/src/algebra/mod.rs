//! The generalized Virasoro algebra Vir[G].
//!
//! Brackets follow `[d_x, d_y] = (y − x)·d_{x+y} + δ_{x,−y}·(x³ − x)/12·C`
//! with `x` read through the embedding ι: G → scalars, and C central. Note
//! the sign: this is the opposite of the common `(m − n)` convention.

mod element;
mod pbw;
mod triangular;

pub use element::{parse_generator, AlgebraElement, Generator, Weight};
pub use pbw::{
    multiply, pbw_normalize, pbw_normalize_with, EnvelopingElement, EnvelopingMonomial,
    RewriteStrategy,
};
pub use triangular::{part_membership, TriangularPart};

use crate::groups::{Group, GroupElement};
use crate::scalars::Scalar;

/// `(ι(x)³ − ι(x))/12`.
pub fn central_term(group: &Group, x: &GroupElement) -> Scalar {
    let v = group.embed(x);
    (&v.pow(3) - &v) * Scalar::ratio(1, 12)
}

/// `[d_x, d_y]` as `(coefficient of d_{x+y}, coefficient of C)`.
pub fn bracket_basis(group: &Group, x: &GroupElement, y: &GroupElement) -> (Scalar, Scalar) {
    let lin = &group.embed(y) - &group.embed(x);
    let sum = x + y;
    let central = if sum.is_zero() {
        central_term(group, x)
    } else {
        Scalar::zero()
    };
    (lin, central)
}

/// Bilinear extension of the basis bracket; C is central.
pub fn bracket(group: &Group, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (x, cx) in a.d_terms() {
        for (y, cy) in b.d_terms() {
            let (lin, central) = bracket_basis(group, x, y);
            let c = cx * cy;
            out.add_d(x + y, &c * &lin);
            out.add_central(&(&c * &central));
        }
    }
    out
}
