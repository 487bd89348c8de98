//! Generalized Verma modules M(b, G₀, V′) = U(Vir[G]) ⊗ V′(α,β,G₀) with
//! Vir[G]₊₊ acting by zero, and windowed dimensions of the irreducible
//! quotient V(α,β,b,G₀) = M/J.
//!
//! A weight α + ι(x) − i·ι(b) (x ∈ G₀) is addressed by its level `i ≥ 0`
//! and the G₀-coordinates of x. The maximal submodule J is the set of
//! vectors that no product of raising generators carries to a nonzero top
//! vector, so the quotient dimension at a weight is the rank of the matrix
//! (raising words to level 0) × (basis monomials).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::groups::{GeneratorValue, Group, GroupElement, GroupError, Splitting};
use crate::interseries::{coordinate_box, AlphaBinding, BetaBinding, SubgroupSeries};
use crate::linalg;
use crate::module::{act_element, act_generator, InducedAction, ModuleMonomial, ModuleVector};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("every table entry is unstable; increase N")]
    Inconclusive,
    #[error("{0} is not primitive")]
    NotPrimitive(GroupElement),
}

/// Finite truncation of the induced module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    /// Deepest level L.
    pub level_cap: usize,
    /// Radius N of the G₀-coordinate box for lowering and raising indices.
    pub box_radius: i64,
    /// Radius of the G₀-coordinates of the reported weights.
    pub top_support_radius: i64,
}

impl Window {
    pub fn new(level_cap: usize, box_radius: i64) -> Self {
        Window {
            level_cap,
            box_radius,
            top_support_radius: box_radius,
        }
    }

    fn widened(&self) -> Self {
        Window {
            box_radius: self.box_radius + 1,
            ..*self
        }
    }
}

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum RankMode {
    /// Over ℚ(g, α, β) exactly. Slow beyond level 1.
    Symbolic,
    /// Exactly over ℚ at seeded random values of the free symbols; the
    /// maximum over `trials` points. A specialization can only lower a rank,
    /// so the result is a certified lower bound that equals the generic rank
    /// unless every point hits a proper subvariety.
    Specialized { seed: u64, trials: usize },
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Specialized {
            seed: 0x5eed,
            trials: 2,
        }
    }
}

/// Action of the lowering-ordered PBW basis on 1 ⊗ V′.
#[derive(Clone, Debug)]
pub struct TopAction {
    group: Group,
    split: Splitting,
    alpha: Scalar,
    beta: Scalar,
    excluded: Option<GroupElement>,
}

impl TopAction {
    fn key(&self, x: &GroupElement) -> (i64, Vec<i64>) {
        let (u, k) = self.split.decompose(x);
        (-k, u)
    }
}

impl InducedAction for TopAction {
    type Top = GroupElement;

    fn group(&self) -> &Group {
        &self.group
    }

    fn is_lowering(&self, x: &GroupElement) -> bool {
        self.split.level(x) < 0
    }

    fn lowering_cmp(&self, x: &GroupElement, y: &GroupElement) -> Ordering {
        self.key(x).cmp(&self.key(y))
    }

    fn central_charge(&self) -> Scalar {
        Scalar::zero()
    }

    fn act_on_top(&self, x: &GroupElement, mu: &GroupElement) -> Option<(Scalar, GroupElement)> {
        if self.split.level(x) != 0 {
            return None;
        }
        let target = x + mu;
        if self.excluded.as_ref() == Some(&target) {
            return None;
        }
        let coeff = &(&self.alpha + &self.group.embed(mu)) + &(&self.group.embed(x) * &self.beta);
        Some((coeff, target))
    }
}

/// Splitting and top module of a generalized Verma module.
#[derive(Clone, Debug)]
pub struct InductionData {
    pub split: Splitting,
    pub top: SubgroupSeries,
    alpha_binding: AlphaBinding,
    beta_binding: BetaBinding,
    action: TopAction,
}

impl InductionData {
    pub fn new(
        group: Group,
        b: &GroupElement,
        alpha: AlphaBinding,
        beta: BetaBinding,
    ) -> Result<Self, InducedError> {
        let split = group.split(b)?;
        Ok(Self::with_splitting(group, split, alpha, beta))
    }

    pub fn with_splitting(
        group: Group,
        split: Splitting,
        alpha: AlphaBinding,
        beta: BetaBinding,
    ) -> Self {
        let top = SubgroupSeries::new(group.clone(), &split, alpha.clone(), beta.clone());
        let action = TopAction {
            alpha: top.module.alpha_value().clone(),
            beta: top.module.beta_value().clone(),
            excluded: top.subquotient.excluded.clone(),
            group,
            split: split.clone(),
        };
        InductionData {
            split,
            top,
            alpha_binding: alpha,
            beta_binding: beta,
            action,
        }
    }

    pub fn group(&self) -> &Group {
        &self.action.group
    }

    pub fn action(&self) -> &TopAction {
        &self.action
    }

    pub fn alpha(&self) -> &Scalar {
        &self.action.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.action.beta
    }

    pub fn alpha_binding(&self) -> &AlphaBinding {
        &self.alpha_binding
    }

    pub fn beta_binding(&self) -> &BetaBinding {
        &self.beta_binding
    }

    /// G₀-coordinates of x with α + ι(x) = 0, when α ∈ G₀.
    pub fn zero_weight(&self) -> Option<Vec<i64>> {
        let x0 = self.alpha_binding.group_preimage(self.group())?;
        let (u, k) = self.split.decompose(&-&x0);
        (k == 0).then_some(u)
    }

    /// The same module with every free symbol replaced by a rational.
    fn specialize(&self, rng: &mut StdRng) -> TopAction {
        let values: Vec<BigRational> = (0..self.group().rank())
            .map(|i| match self.group().generator_value(i) {
                GeneratorValue::Fixed(q) => q.clone(),
                GeneratorValue::Formal => random_rational(rng),
            })
            .collect();
        let group = self.group().specialized(&values);
        let alpha = match &self.alpha_binding {
            AlphaBinding::Free => Scalar::from_rational(random_rational(rng)),
            other => other.value(&group),
        };
        let beta = match &self.beta_binding {
            BetaBinding::Free => Scalar::from_rational(random_rational(rng)),
            other => other.value(&group),
        };
        TopAction {
            group,
            split: self.split.clone(),
            alpha,
            beta,
            excluded: self.action.excluded.clone(),
        }
    }
}

fn random_rational(rng: &mut StdRng) -> BigRational {
    let n: i64 = rng.gen_range(-1_000_000..=1_000_000);
    let d: i64 = rng.gen_range(1..=997);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Windowed PBW basis: `levels[i][u]` lists the monomials of weight
/// α + ι(u) − i·ι(b), each factor sorted by (depth, G₀-coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelBasis {
    pub levels: Vec<BTreeMap<Vec<i64>, Vec<ModuleMonomial<GroupElement>>>>,
}

impl LevelBasis {
    pub fn monomials(&self, level: usize, u: &[i64]) -> &[ModuleMonomial<GroupElement>] {
        self.levels
            .get(level)
            .and_then(|m| m.get(u))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

fn g0_box(split: &Splitting, radius: i64) -> Vec<Vec<i64>> {
    coordinate_box(split.rank() - 1, radius)
        .into_iter()
        .map(|g| g.0)
        .collect()
}

/// Monomials of weight (level, u) whose factors come from the radius-N box.
fn monomials_at(
    data: &InductionData,
    level: usize,
    u: &[i64],
    box_radius: i64,
) -> Vec<ModuleMonomial<GroupElement>> {
    let split = &data.split;
    if level == 0 {
        let mu = split.compose(u, 0);
        return if data.top.subquotient.contains(&mu) {
            vec![ModuleMonomial::top(mu)]
        } else {
            Vec::new()
        };
    }
    let cells = g0_box(split, box_radius);
    // Lowering alphabet, already in basis order.
    let alphabet: Vec<(usize, &Vec<i64>)> = (1..=level)
        .flat_map(|k| cells.iter().map(move |x| (k, x)))
        .collect();
    let target = split.compose(u, -(level as i64));
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        alphabet: &[(usize, &Vec<i64>)],
        start: usize,
        remaining: usize,
        stack: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            emit(stack);
            return;
        }
        for j in start..alphabet.len() {
            let k = alphabet[j].0;
            if k > remaining {
                continue;
            }
            stack.push(j);
            rec(alphabet, j, remaining - k, stack, emit);
            stack.pop();
        }
    }
    rec(&alphabet, 0, level, &mut stack, &mut |idx| {
        let factors: Vec<GroupElement> = idx
            .iter()
            .map(|&j| split.compose(alphabet[j].1, -(alphabet[j].0 as i64)))
            .collect();
        let mut mu = target.clone();
        for f in &factors {
            mu = &mu - f;
        }
        if data.top.subquotient.contains(&mu) {
            out.push(ModuleMonomial { factors, top: mu });
        }
    });
    out
}

/// Enumerates the windowed basis for levels 0..=L; `L = 0` is the top alone.
pub fn build_level_basis(data: &InductionData, w: &Window) -> LevelBasis {
    let weights = g0_box(&data.split, w.top_support_radius);
    let levels = (0..=w.level_cap)
        .map(|i| {
            weights
                .iter()
                .map(|u| (u.clone(), monomials_at(data, i, u, w.box_radius)))
                .collect()
        })
        .collect();
    LevelBasis { levels }
}

/// Result of acting on a windowed basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedImage {
    pub vector: ModuleVector<GroupElement>,
    /// Some factor left the box or the level range; widen the window.
    pub window_escape: bool,
}

pub fn act_on_induced(
    data: &InductionData,
    a: &AlgebraElement,
    m: &ModuleMonomial<GroupElement>,
    w: &Window,
) -> InducedImage {
    let vector = act_element(&data.action, a, &ModuleVector::basis(m.clone()));
    let window_escape = vector.terms().keys().any(|mono| {
        let depth: i64 = mono.factors.iter().map(|f| -data.split.level(f)).sum();
        depth > w.level_cap as i64
            || mono.factors.iter().any(|f| {
                let (u, _) = data.split.decompose(f);
                u.iter().any(|c| c.abs() > w.box_radius)
            })
    });
    InducedImage {
        vector,
        window_escape,
    }
}

/// Number of raising words of total depth `level` over `cells` indices.
fn word_count(level: usize, cells: usize) -> usize {
    let mut counts = vec![1usize; level + 1];
    for m in 1..=level {
        counts[m] = (1..=m).map(|k| cells * counts[m - k]).sum();
    }
    counts[level]
}

/// Values of every raising word (in a fixed depth-first order) on `v`.
fn raising_values(
    action: &TopAction,
    cells: &[Vec<i64>],
    v: &ModuleVector<GroupElement>,
    remaining: usize,
    out: &mut Vec<Scalar>,
) {
    for k in 1..=remaining {
        for y in cells {
            if v.is_zero() {
                out.extend(std::iter::repeat_n(Scalar::zero(), word_count(remaining - k, cells.len())));
                continue;
            }
            let r = action.split.compose(y, k as i64);
            let image = act_generator(action, &r, v);
            if k == remaining {
                out.push(
                    image
                        .terms()
                        .iter()
                        .filter(|(m, _)| m.factors.is_empty())
                        .map(|(_, c)| c.clone())
                        .sum(),
                );
            } else {
                raising_values(action, cells, &image, remaining - k, out);
            }
        }
    }
}

/// Rows: raising words; columns: basis monomials.
fn raising_matrix(
    action: &TopAction,
    level: usize,
    columns: &[ModuleMonomial<GroupElement>],
    box_radius: i64,
) -> Vec<Vec<Scalar>> {
    let cells = g0_box(&action.split, box_radius);
    let by_column: Vec<Vec<Scalar>> = columns
        .iter()
        .map(|m| {
            let mut vals = Vec::new();
            raising_values(action, &cells, &ModuleVector::basis(m.clone()), level, &mut vals);
            vals
        })
        .collect();
    let rows = word_count(level, cells.len());
    (0..rows)
        .map(|r| by_column.iter().map(|col| col[r].clone()).collect())
        .collect()
}

fn quotient_rank(action: &TopAction, level: usize, columns: &[ModuleMonomial<GroupElement>], n: i64, exact_q: bool) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let m = raising_matrix(action, level, columns, n);
    if exact_q {
        let q: Vec<Vec<BigRational>> = m
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| s.as_rational().expect("specialized entries are rational"))
                    .collect()
            })
            .collect();
        linalg::rank(q, columns.len())
    } else if m.iter().flatten().all(Scalar::is_polynomial) {
        let p = m
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.numer().clone()).collect())
            .collect();
        linalg::rank_fraction_free(p, columns.len())
    } else {
        linalg::rank(m, columns.len())
    }
}

/// Windowed J at one weight: a basis of the vectors that every windowed
/// raising word sends to zero at level 0. Exact over ℚ(g, α, β), so keep
/// symbols few or bound.
pub fn submodule_basis(
    data: &InductionData,
    w: &Window,
    level: usize,
    u: &[i64],
) -> Vec<ModuleVector<GroupElement>> {
    let columns = monomials_at(data, level, u, w.box_radius);
    if level == 0 || columns.is_empty() {
        return Vec::new();
    }
    let m = raising_matrix(&data.action, level, &columns, w.box_radius);
    linalg::kernel(m, columns.len())
        .into_iter()
        .map(|k| {
            let mut v = ModuleVector::default();
            for (mono, c) in columns.iter().zip(k) {
                v.add_term(mono.clone(), c);
            }
            v
        })
        .collect()
}

/// Whether every windowed raising word of total depth `level` kills `v`.
pub fn killed_by_raising(data: &InductionData, w: &Window, level: usize, v: &ModuleVector<GroupElement>) -> bool {
    let cells = g0_box(&data.split, w.box_radius);
    let mut vals = Vec::new();
    raising_values(&data.action, &cells, v, level, &mut vals);
    vals.iter().all(Scalar::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    /// Depth i of the weight α + ι(x) − i·ι(b); negative depths lie above the top.
    pub level: i64,
    /// G₀-coordinates of x.
    pub coords: Vec<i64>,
    pub dim: usize,
    /// Windowed PBW monomials at this weight.
    pub basis_size: usize,
    /// Same value at box radius N and N+1.
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDims {
    pub window: Window,
    pub rank_mode: RankMode,
    pub entries: Vec<DimEntry>,
    /// G₀-coordinates of the weight 0 when α ∈ G₀.
    pub zero_weight: Option<Vec<i64>>,
}

impl QuotientDims {
    pub fn get(&self, level: i64, coords: &[i64]) -> Option<&DimEntry> {
        self.entries
            .iter()
            .find(|e| e.level == level && e.coords == coords)
    }

    pub fn level_row(&self, level: i64) -> Vec<&DimEntry> {
        self.entries.iter().filter(|e| e.level == level).collect()
    }
}

/// `(dim, basis_size)` for every reported weight at one box radius.
fn raw_dims(
    data: &InductionData,
    w: &Window,
    mode: RankMode,
) -> BTreeMap<(usize, Vec<i64>), (usize, usize)> {
    let weights = g0_box(&data.split, w.top_support_radius);
    let keys: Vec<(usize, Vec<i64>)> = (0..=w.level_cap)
        .flat_map(|i| weights.iter().map(move |u| (i, u.clone())))
        .collect();
    let actions: Vec<(TopAction, bool)> = match mode {
        RankMode::Symbolic => vec![(data.action.clone(), false)],
        RankMode::Specialized { seed, trials } => (0..trials.max(1))
            .map(|t| {
                let mut rng = StdRng::seed_from_u64(seed.wrapping_add(t as u64));
                (data.specialize(&mut rng), true)
            })
            .collect(),
    };
    keys.into_par_iter()
        .map(|(i, u)| {
            let columns = monomials_at(data, i, &u, w.box_radius);
            let dim = if i == 0 {
                columns.len()
            } else {
                actions
                    .iter()
                    .map(|(a, exact_q)| quotient_rank(a, i, &columns, w.box_radius, *exact_q))
                    .max()
                    .unwrap_or(0)
            };
            ((i, u), (dim, columns.len()))
        })
        .collect()
}

/// Windowed dimensions of V(α,β,b,G₀), with stability against N+1.
pub fn maximal_quotient_dims(data: &InductionData, w: &Window, mode: RankMode) -> QuotientDims {
    let here = raw_dims(data, w, mode);
    let wider = raw_dims(data, &w.widened(), mode);
    let entries = here
        .into_iter()
        .map(|((i, coords), (dim, basis_size))| {
            let stable = wider.get(&(i, coords.clone())).map(|p| p.0) == Some(dim);
            DimEntry {
                level: i as i64,
                coords,
                dim,
                basis_size,
                stable,
            }
        })
        .collect();
    QuotientDims {
        window: *w,
        rank_mode: mode,
        entries,
        zero_weight: data.zero_weight(),
    }
}

/// (2i+1)!!
pub fn double_factorial_bound(level: usize) -> u128 {
    (0..=level as u128).map(|j| 2 * j + 1).product()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum SupportVerdict {
    /// α − ℤ⁺b + G₀.
    PatternA,
    /// (−ℤ⁺b + G₀) ∖ {0}.
    PatternB,
    Violation { level: i64, coords: Vec<i64> },
}

/// Checks the stable support against the two admissible shapes.
pub fn support_check(q: &QuotientDims) -> SupportVerdict {
    let stable = || q.entries.iter().filter(|e| e.stable);
    if let Some(e) = stable().find(|e| e.dim > 0 && e.level < 0) {
        return SupportVerdict::Violation {
            level: e.level,
            coords: e.coords.clone(),
        };
    }
    if let Some(z) = &q.zero_weight {
        if let Some(e) = stable().find(|e| e.level == 0 && &e.coords == z) {
            if e.dim == 0 {
                return SupportVerdict::PatternB;
            }
        }
    }
    SupportVerdict::PatternA
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StringVerdict {
    Bounded,
    TruncatedAbove,
    TruncatedBelow,
    Mixed,
}

/// Shape of the support along λ + ℤg.
pub fn string_boundedness(
    q: &QuotientDims,
    split: &Splitting,
    g: &GroupElement,
) -> Result<StringVerdict, InducedError> {
    if !g.is_primitive() {
        return Err(InducedError::NotPrimitive(g.clone()));
    }
    let stable: Vec<&DimEntry> = q.entries.iter().filter(|e| e.stable).collect();
    if stable.is_empty() {
        return Err(InducedError::Inconclusive);
    }
    if stable.iter().any(|e| e.level < 0 && e.dim > 0) {
        return Ok(StringVerdict::Mixed);
    }
    let k = split.level(g);
    Ok(match k.cmp(&0) {
        Ordering::Equal => {
            let within = stable
                .iter()
                .all(|e| e.dim as u128 <= double_factorial_bound(e.level as usize));
            if within {
                StringVerdict::Bounded
            } else {
                StringVerdict::Mixed
            }
        }
        // Adding g lowers the depth by k, and depths below 0 are empty.
        Ordering::Greater => StringVerdict::TruncatedAbove,
        Ordering::Less => StringVerdict::TruncatedBelow,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bracket_basis;
    use crate::groups::GroupElement;

    fn e(c: &[i64]) -> GroupElement {
        GroupElement(c.to_vec())
    }

    fn generic() -> InductionData {
        let g = Group::with_rank(2).unwrap();
        InductionData::new(g, &e(&[0, 1]), AlphaBinding::Free, BetaBinding::Free).unwrap()
    }

    #[test]
    fn basis_shapes() {
        let data = generic();
        let b0 = build_level_basis(&data, &Window::new(0, 1));
        assert_eq!(b0.levels.len(), 1);
        assert!(b0.levels[0].values().all(|v| v.len() == 1 && v[0].factors.is_empty()));

        let b2 = build_level_basis(&data, &Window::new(2, 1));
        // One weight at level 1: three single factors d_{x−b}.
        assert_eq!(b2.monomials(1, &[0]).len(), 3);
        // Level 2: three d_{x−2b} and six sorted pairs d_{x₁−b}d_{x₂−b}.
        let l2 = b2.monomials(2, &[0]);
        assert_eq!(l2.len(), 9);
        assert_eq!(l2.iter().filter(|m| m.factors.len() == 2).count(), 6);
        for m in l2 {
            let total = m.factors.iter().fold(m.top.clone(), |acc, f| &acc + f);
            assert_eq!(total, e(&[0, -2]));
        }
    }

    #[test]
    fn raising_kills_top_and_level_zero_acts_by_top_module() {
        let data = generic();
        let w = Window::new(1, 1);
        let top = ModuleMonomial::top(e(&[2, 0]));
        let img = act_on_induced(&data, &AlgebraElement::d(e(&[1, 1])), &top, &w);
        assert!(img.vector.is_zero());

        let z = e(&[1, 0]);
        let img = act_on_induced(&data, &AlgebraElement::d(z.clone()), &top, &w);
        let g = data.group();
        let expected = &(data.alpha() + &g.embed(&e(&[2, 0]))) + &(&g.embed(&z) * data.beta());
        assert_eq!(img.vector.coefficient(&ModuleMonomial::top(e(&[3, 0]))), expected);
    }

    #[test]
    fn single_raising_on_level_one_matches_bracket() {
        let data = generic();
        let g = data.group().clone();
        let x1 = e(&[1, -1]);
        let mu = e(&[2, 0]);
        let y = e(&[-1, 1]);
        let m = ModuleMonomial {
            factors: vec![x1.clone()],
            top: mu.clone(),
        };
        let img = act_on_induced(&data, &AlgebraElement::d(y.clone()), &m, &Window::new(1, 2));
        let (lin, _) = bracket_basis(&g, &y, &x1);
        let top = &(data.alpha() + &g.embed(&mu)) + &(&g.embed(&(&x1 + &y)) * data.beta());
        assert_eq!(
            img.vector.coefficient(&ModuleMonomial::top(&(&x1 + &y) + &mu)),
            &lin * &top
        );
    }

    #[test]
    fn escape_is_flagged() {
        let data = generic();
        let w = Window::new(1, 1);
        let m = ModuleMonomial {
            factors: vec![e(&[1, -1])],
            top: e(&[0, 0]),
        };
        let img = act_on_induced(&data, &AlgebraElement::d(e(&[1, 0])), &m, &w);
        assert!(img.window_escape);
    }

    #[test]
    fn symbolic_and_specialized_agree_at_level_one() {
        let data = generic();
        let w = Window::new(1, 1);
        let sym = maximal_quotient_dims(&data, &w, RankMode::Symbolic);
        let spe = maximal_quotient_dims(&data, &w, RankMode::default());
        assert_eq!(sym.entries, spe.entries);
        for e in sym.level_row(1) {
            assert_eq!(e.dim, 3);
        }
        assert!(sym.level_row(0).iter().all(|e| e.dim == 1));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(
            (0..4).map(double_factorial_bound).collect::<Vec<_>>(),
            vec![1, 3, 15, 105]
        );
    }

    #[test]
    fn support_of_generic_module() {
        let data = generic();
        let q = maximal_quotient_dims(&data, &Window::new(1, 1), RankMode::default());
        assert_eq!(support_check(&q), SupportVerdict::PatternA);
        assert_eq!(string_boundedness(&q, &data.split, &e(&[1, 0])), Ok(StringVerdict::Bounded));
        assert_eq!(string_boundedness(&q, &data.split, &e(&[0, 1])), Ok(StringVerdict::TruncatedAbove));
        assert_eq!(string_boundedness(&q, &data.split, &e(&[1, 1])), Ok(StringVerdict::TruncatedAbove));
        assert_eq!(string_boundedness(&q, &data.split, &e(&[0, -1])), Ok(StringVerdict::TruncatedBelow));
    }

    #[test]
    fn zero_weight_removed_for_special_top() {
        let g = Group::with_rank(2).unwrap();
        let data = InductionData::new(
            g,
            &e(&[0, 1]),
            AlphaBinding::GroupValue(e(&[0, 0])),
            BetaBinding::Rational(BigRational::from_integer(1.into())),
        )
        .unwrap();
        let q = maximal_quotient_dims(&data, &Window::new(1, 1), RankMode::default());
        assert_eq!(q.get(0, &[0]).unwrap().dim, 0);
        assert_eq!(support_check(&q), SupportVerdict::PatternB);
    }

    #[test]
    fn positive_level_entry_is_a_violation() {
        let q = QuotientDims {
            window: Window::new(1, 1),
            rank_mode: RankMode::default(),
            entries: vec![DimEntry {
                level: -1,
                coords: vec![0],
                dim: 1,
                basis_size: 1,
                stable: true,
            }],
            zero_weight: None,
        };
        assert!(matches!(support_check(&q), SupportVerdict::Violation { level: -1, .. }));
    }
}
