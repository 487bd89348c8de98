//! Intermediate-series modules V(α,β,G): basis {v_y : y ∈ G},
//! `d_x v_y = (α + y + xβ) v_{x+y}`, `C v_y = 0`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::groups::{GeneratorValue, Group, GroupElement, Splitting};
use crate::scalars::Scalar;

/// How α is fixed for a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaBinding {
    Free,
    Rational(BigRational),
    /// α = ι(x₀).
    GroupValue(GroupElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaBinding {
    Free,
    Rational(BigRational),
}

impl AlphaBinding {
    pub fn value(&self, group: &Group) -> Scalar {
        match self {
            AlphaBinding::Free => Scalar::var(group.registry().alpha()),
            AlphaBinding::Rational(q) => Scalar::from_rational(q.clone()),
            AlphaBinding::GroupValue(x) => group.embed(x),
        }
    }

    /// Some x₀ with α = ι(x₀), decided structurally.
    pub fn group_preimage(&self, group: &Group) -> Option<GroupElement> {
        match self {
            AlphaBinding::Free => None,
            AlphaBinding::GroupValue(x) => Some(x.clone()),
            AlphaBinding::Rational(q) => rational_preimage(group, q),
        }
    }
}

impl BetaBinding {
    pub fn value(&self, group: &Group) -> Scalar {
        match self {
            BetaBinding::Free => Scalar::var(group.registry().beta()),
            BetaBinding::Rational(q) => Scalar::from_rational(q.clone()),
        }
    }

    fn special(&self) -> Option<SpecialBeta> {
        match self {
            BetaBinding::Rational(q) if q.is_zero() => Some(SpecialBeta::Zero),
            BetaBinding::Rational(q) if q.is_one() => Some(SpecialBeta::One),
            _ => None,
        }
    }
}

enum SpecialBeta {
    Zero,
    One,
}

/// x with ι(x) = q. Formal generators contribute indeterminates, so only
/// fixed-value generators can produce a rational.
fn rational_preimage(group: &Group, q: &BigRational) -> Option<GroupElement> {
    if q.is_zero() {
        return Some(group.zero());
    }
    let fixed: Vec<(usize, &BigRational)> = (0..group.rank())
        .filter_map(|i| match group.generator_value(i) {
            GeneratorValue::Fixed(v) => Some((i, v)),
            GeneratorValue::Formal => None,
        })
        .collect();
    // Several fixed generators would be ℚ-dependent; only the single case is decided.
    if let [(i, v)] = fixed.as_slice() {
        let k = q / *v;
        if k.is_integer() {
            let k: i64 = k.to_integer().try_into().ok()?;
            return Some(group.generator(*i).scale(k));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubquotientKind {
    Whole,
    /// β = 0, α ∈ G: v_{−x₀} spans a trivial submodule; V′ is the quotient.
    QuotientByTrivial,
    /// β = 1, α ∈ G: the span of v_y, y ≠ −x₀, is a submodule of codimension 1.
    SubmoduleOffZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportKind {
    /// α + G.
    AlphaPlusG,
    /// G ∖ {0}.
    GroupMinusZero,
}

/// The nontrivial irreducible sub-quotient V′(α,β,G).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubquotientDescriptor {
    pub kind: SubquotientKind,
    pub support: SupportKind,
    /// Index y of the basis vector absent from V′ (its weight α + ι(y) is 0).
    pub excluded: Option<GroupElement>,
    /// One-dimensional trivial pieces split off, reported for completeness.
    pub trivial_pieces: Vec<String>,
}

impl SubquotientDescriptor {
    /// Reducibility data from the structural facts `α = ι(x₀)` and β ∈ {0, 1}.
    fn from_parts(alpha_preimage: Option<GroupElement>, beta: &BetaBinding) -> Self {
        match (alpha_preimage, beta.special()) {
            (Some(x0), Some(special)) => {
                let excluded = -&x0;
                let (kind, piece) = match special {
                    SpecialBeta::Zero => (
                        SubquotientKind::QuotientByTrivial,
                        format!("trivial submodule spanned by v{excluded}"),
                    ),
                    SpecialBeta::One => (
                        SubquotientKind::SubmoduleOffZero,
                        format!("trivial quotient spanned by the image of v{excluded}"),
                    ),
                };
                SubquotientDescriptor {
                    kind,
                    support: SupportKind::GroupMinusZero,
                    excluded: Some(excluded),
                    trivial_pieces: vec![piece],
                }
            }
            _ => SubquotientDescriptor {
                kind: SubquotientKind::Whole,
                support: SupportKind::AlphaPlusG,
                excluded: None,
                trivial_pieces: Vec::new(),
            },
        }
    }

    pub fn contains(&self, y: &GroupElement) -> bool {
        self.excluded.as_ref() != Some(y)
    }
}

#[derive(Clone, Debug)]
pub struct IntermediateSeriesModule {
    group: Group,
    alpha: AlphaBinding,
    beta: BetaBinding,
    alpha_value: Scalar,
    beta_value: Scalar,
}

impl IntermediateSeriesModule {
    pub fn new(group: Group, alpha: AlphaBinding, beta: BetaBinding) -> Self {
        let alpha_value = alpha.value(&group);
        let beta_value = beta.value(&group);
        IntermediateSeriesModule {
            group,
            alpha,
            beta,
            alpha_value,
            beta_value,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn alpha(&self) -> &AlphaBinding {
        &self.alpha
    }

    pub fn beta(&self) -> &BetaBinding {
        &self.beta
    }

    pub fn alpha_value(&self) -> &Scalar {
        &self.alpha_value
    }

    pub fn beta_value(&self) -> &Scalar {
        &self.beta_value
    }

    /// `d_x v_y = coefficient · v_target`.
    pub fn act(&self, x: &GroupElement, y: &GroupElement) -> (Scalar, GroupElement) {
        let coeff = &(&self.alpha_value + &self.group.embed(y))
            + &(&self.group.embed(x) * &self.beta_value);
        (coeff, x + y)
    }

    /// d₀-eigenvalue of v_y: α + ι(y).
    pub fn weight(&self, y: &GroupElement) -> Scalar {
        &self.alpha_value + &self.group.embed(y)
    }

    /// Reducible iff α ∈ ι(G) and β ∈ {0, 1}.
    pub fn is_reducible(&self) -> bool {
        self.irreducible_subquotient().kind != SubquotientKind::Whole
    }

    pub fn irreducible_subquotient(&self) -> SubquotientDescriptor {
        SubquotientDescriptor::from_parts(self.alpha.group_preimage(&self.group), &self.beta)
    }

    /// Action on V′: `None` when v_y is not a basis vector of V′; the
    /// coefficient is zero when the target is the excluded vector.
    pub fn act_on_subquotient(
        &self,
        sub: &SubquotientDescriptor,
        x: &GroupElement,
        y: &GroupElement,
    ) -> Option<(Scalar, GroupElement)> {
        if !sub.contains(y) {
            return None;
        }
        let (c, t) = self.act(x, y);
        if sub.contains(&t) {
            Some((c, t))
        } else {
            Some((Scalar::zero(), t))
        }
    }
}

/// Top space of a generalized Verma module: V′(α,β,G₀) for G = G₀ ⊕ ℤb,
/// indexed by elements μ ∈ G₀ written in G-coordinates.
#[derive(Clone, Debug)]
pub struct SubgroupSeries {
    pub module: IntermediateSeriesModule,
    pub subquotient: SubquotientDescriptor,
}

impl SubgroupSeries {
    pub fn new(group: Group, split: &Splitting, alpha: AlphaBinding, beta: BetaBinding) -> Self {
        // α ∈ G₀ exactly when its preimage has b-level 0.
        let preimage = alpha
            .group_preimage(&group)
            .filter(|x0| split.level(x0) == 0);
        let subquotient = SubquotientDescriptor::from_parts(preimage, &beta);
        SubgroupSeries {
            module: IntermediateSeriesModule::new(group, alpha, beta),
            subquotient,
        }
    }
}

/// Reducibility criterion as a free function.
pub fn is_reducible(group: &Group, alpha: &AlphaBinding, beta: &BetaBinding) -> bool {
    IntermediateSeriesModule::new(group.clone(), alpha.clone(), beta.clone()).is_reducible()
}

pub fn irreducible_subquotient(
    group: &Group,
    alpha: &AlphaBinding,
    beta: &BetaBinding,
) -> SubquotientDescriptor {
    IntermediateSeriesModule::new(group.clone(), alpha.clone(), beta.clone())
        .irreducible_subquotient()
}

/// Rows `(x, y, coefficient, target)` of the action on V′ over a coordinate box.
pub fn action_table(
    module: &IntermediateSeriesModule,
    xs: &[GroupElement],
    ys: &[GroupElement],
) -> Vec<(GroupElement, GroupElement, Scalar, GroupElement)> {
    let sub = module.irreducible_subquotient();
    let mut rows = Vec::new();
    for x in xs {
        for y in ys {
            if let Some((c, t)) = module.act_on_subquotient(&sub, x, y) {
                rows.push((x.clone(), y.clone(), c, t));
            }
        }
    }
    rows
}

/// All elements with every coordinate in `[-radius, radius]`, lexicographic.
pub fn coordinate_box(rank: usize, radius: i64) -> Vec<GroupElement> {
    let mut out = vec![Vec::with_capacity(rank)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-radius..=radius).map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(GroupElement).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Group {
        Group::with_rank(2).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn e(c: &[i64]) -> GroupElement {
        GroupElement(c.to_vec())
    }

    #[test]
    fn symbolic_action() {
        let g = g2();
        let m = IntermediateSeriesModule::new(g.clone(), AlphaBinding::Free, BetaBinding::Free);
        let (c, t) = m.act(&e(&[1, 0]), &e(&[0, 1]));
        assert_eq!(t, e(&[1, 1]));
        assert_eq!(c.render(g.registry()), "alpha+g2+g1*beta");
    }

    #[test]
    fn trivial_vector_at_zero() {
        let g = g2();
        let m = IntermediateSeriesModule::new(
            g,
            AlphaBinding::Rational(q(0)),
            BetaBinding::Rational(q(0)),
        );
        for x in coordinate_box(2, 2) {
            let (c, t) = m.act(&x, &e(&[0, 0]));
            assert!(c.is_zero());
            assert_eq!(t, x);
        }
    }

    #[test]
    fn nothing_maps_onto_v0_when_beta_is_one() {
        let g = g2();
        let m = IntermediateSeriesModule::new(
            g,
            AlphaBinding::Rational(q(0)),
            BetaBinding::Rational(q(1)),
        );
        let (c, t) = m.act(&e(&[1, 0]), &e(&[-1, 0]));
        assert!(c.is_zero());
        assert!(t.is_zero());
    }

    #[test]
    fn reducibility_grid() {
        let g = g2();
        let alphas = [
            AlphaBinding::Free,
            AlphaBinding::GroupValue(e(&[1, 0])),
            AlphaBinding::Rational(q(0)),
        ];
        let betas = [BetaBinding::Free, BetaBinding::Rational(q(0)), BetaBinding::Rational(q(1))];
        for (i, a) in alphas.iter().enumerate() {
            for (j, b) in betas.iter().enumerate() {
                assert_eq!(is_reducible(&g, a, b), i > 0 && j > 0, "alpha {i} beta {j}");
            }
        }
        let half = BetaBinding::Rational(BigRational::new(1.into(), 2.into()));
        assert!(!is_reducible(&g, &AlphaBinding::GroupValue(e(&[1, 0])), &half));
        assert!(!is_reducible(&g, &AlphaBinding::Rational(q(3)), &BetaBinding::Rational(q(0))));
    }

    #[test]
    fn subquotient_descriptors() {
        let g = g2();
        let d = irreducible_subquotient(&g, &AlphaBinding::Free, &BetaBinding::Free);
        assert_eq!((d.kind, d.support), (SubquotientKind::Whole, SupportKind::AlphaPlusG));
        let d = irreducible_subquotient(&g, &AlphaBinding::Rational(q(0)), &BetaBinding::Rational(q(0)));
        assert_eq!(d.kind, SubquotientKind::QuotientByTrivial);
        assert_eq!(d.support, SupportKind::GroupMinusZero);
        assert_eq!(d.excluded, Some(e(&[0, 0])));
        let d = irreducible_subquotient(
            &g,
            &AlphaBinding::GroupValue(e(&[2, -1])),
            &BetaBinding::Rational(q(1)),
        );
        assert_eq!(d.kind, SubquotientKind::SubmoduleOffZero);
        assert_eq!(d.excluded, Some(e(&[-2, 1])));
    }

    #[test]
    fn integer_alpha_is_in_z() {
        let z = Group::integers();
        assert!(is_reducible(&z, &AlphaBinding::Rational(q(3)), &BetaBinding::Rational(q(1))));
        let frac = AlphaBinding::Rational(BigRational::new(1.into(), 2.into()));
        assert!(!is_reducible(&z, &frac, &BetaBinding::Rational(q(1))));
    }

    #[test]
    fn subgroup_series_uses_level_zero_membership() {
        let g = g2();
        let s = g.split(&e(&[0, 1])).unwrap();
        let in_g0 = SubgroupSeries::new(g.clone(), &s, AlphaBinding::GroupValue(e(&[1, 0])), BetaBinding::Rational(q(1)));
        assert_eq!(in_g0.subquotient.kind, SubquotientKind::SubmoduleOffZero);
        let off = SubgroupSeries::new(g, &s, AlphaBinding::GroupValue(e(&[0, 1])), BetaBinding::Rational(q(1)));
        assert_eq!(off.subquotient.kind, SubquotientKind::Whole);
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(coordinate_box(2, 1).len(), 9);
        assert_eq!(coordinate_box(1, 2).first(), Some(&e(&[-2])));
        assert_eq!(coordinate_box(0, 3), vec![e(&[])]);
    }
}
