//! Decision procedures on windowed weight-dimension tables: uniform
//! boundedness, string profiles, and the case split of the classification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::TruncatedVermaModule;
use crate::groups::{covector_kernel, hermite_normal_form, Group, GroupElement, GroupError, Splitting};
use crate::induced::{double_factorial_bound, InductionData, QuotientDims};
use crate::interseries::{coordinate_box, IntermediateSeriesModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("contradictory flags: {0}")]
    ContradictoryFlags(String),
    #[error("malformed descriptor: {0}")]
    Malformed(String),
    #[error("the dimension table is empty")]
    EmptyWindow,
    #[error("the string meets the window in {0} points; at least 3 are needed")]
    ShortString(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub generators: Vec<String>,
    /// ℤ ⊂ ℂ with its generator equal to 1.
    #[serde(default)]
    pub integers: bool,
}

impl GroupSpec {
    pub fn of(group: &Group, integers: bool) -> Self {
        GroupSpec {
            generators: group.generator_names().to_vec(),
            integers,
        }
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        if self.integers && self.generators.len() == 1 {
            Ok(Group::integers())
        } else {
            Group::new(&self.generators)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub is_z: bool,
    #[serde(default)]
    pub rank1_not_z: bool,
    #[serde(default)]
    pub infinitely_generated_rank1: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Interseries,
    Induced,
    Verma,
    External,
}

/// `[offset, coords, dim]`: the weight offset + ι(coords) has dimension dim.
/// The offset is "0" or a rendered scalar such as "alpha" or "h".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow(pub String, pub Vec<i64>, pub usize);

impl TableRow {
    pub fn offset(&self) -> &str {
        &self.0
    }

    pub fn coords(&self) -> &[i64] {
        &self.1
    }

    pub fn dim(&self) -> usize {
        self.2
    }

    fn is_zero_weight(&self) -> bool {
        self.0 == "0" && self.1.iter().all(|&c| c == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingSpec {
    pub b: Vec<i64>,
    pub g0_basis: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    pub group: GroupSpec,
    #[serde(default)]
    pub flags: Flags,
    pub table: Vec<TableRow>,
    pub provenance: Provenance,
    /// Splitting used by the builder, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

impl ModuleDescriptor {
    fn rank(&self) -> usize {
        self.group.generators.len()
    }

    fn validate(&self) -> Result<(), ClassifyError> {
        if self.flags.is_z && self.rank() > 1 {
            return Err(ClassifyError::ContradictoryFlags(format!(
                "is_z with a rank-{} group",
                self.rank()
            )));
        }
        if self.flags.is_z && (self.flags.rank1_not_z || self.flags.infinitely_generated_rank1) {
            return Err(ClassifyError::ContradictoryFlags(
                "is_z together with a non-cyclic rank-one flag".into(),
            ));
        }
        if let Some(r) = self.table.iter().find(|r| r.coords().len() != self.rank()) {
            return Err(ClassifyError::Malformed(format!(
                "row {:?} has {} coordinates, the group has rank {}",
                r.coords(),
                r.coords().len(),
                self.rank()
            )));
        }
        Ok(())
    }
}

/// Table over a coordinate box for V′(α,β,G).
pub fn descriptor_from_interseries(module: &IntermediateSeriesModule, radius: i64) -> ModuleDescriptor {
    let group = module.group();
    let reg = group.registry();
    let sub = module.irreducible_subquotient();
    let preimage = module.alpha().group_preimage(group);
    let offset = match &preimage {
        Some(_) => "0".to_string(),
        None => module.alpha_value().render(reg),
    };
    let table = coordinate_box(group.rank(), radius)
        .into_iter()
        .map(|y| {
            let dim = usize::from(sub.contains(&y));
            let coords = match &preimage {
                Some(x0) => (&y + x0).0,
                None => y.0,
            };
            TableRow(offset.clone(), coords, dim)
        })
        .collect();
    ModuleDescriptor {
        group: GroupSpec::of(group, false),
        flags: Flags {
            is_z: group.rank() == 1,
            ..Flags::default()
        },
        table,
        provenance: Provenance::Interseries,
        splitting: None,
        alpha: Some(module.alpha_value().render(reg)),
        beta: Some(module.beta_value().render(reg)),
    }
}

/// Table of V(α,β,b,G₀), with explicit zeros one level above the top.
pub fn descriptor_from_induced(data: &InductionData, q: &QuotientDims) -> ModuleDescriptor {
    let group = data.group();
    let reg = group.registry();
    let split = &data.split;
    let preimage = data
        .alpha_binding()
        .group_preimage(group);
    let offset = match &preimage {
        Some(_) => "0".to_string(),
        None => data.alpha().render(reg),
    };
    let place = |u: &[i64], level: i64| {
        let x = split.compose(u, -level);
        match &preimage {
            Some(x0) => (&x + x0).0,
            None => x.0,
        }
    };
    let mut table: Vec<TableRow> = coordinate_box(group.rank() - 1, q.window.top_support_radius)
        .into_iter()
        .map(|u| TableRow(offset.clone(), place(&u.0, -1), 0))
        .collect();
    table.extend(
        q.entries
            .iter()
            .map(|e| TableRow(offset.clone(), place(&e.coords, e.level), e.dim)),
    );
    ModuleDescriptor {
        group: GroupSpec::of(group, false),
        flags: Flags::default(),
        table,
        provenance: Provenance::Induced,
        splitting: Some(SplittingSpec {
            b: split.b().0.clone(),
            g0_basis: split.g0_basis().iter().map(|g| g.0.clone()).collect(),
        }),
        alpha: Some(data.alpha().render(reg)),
        beta: Some(data.beta().render(reg)),
    }
}

/// Table of a highest weight module over Vir[ℤ] from its level dimensions,
/// with two explicit zeros above the highest weight.
pub fn descriptor_from_verma(module: &TruncatedVermaModule, dims: &[usize]) -> ModuleDescriptor {
    let reg = module.group_ref().registry();
    let offset = module.h().render(reg);
    let mut table = vec![
        TableRow(offset.clone(), vec![2], 0),
        TableRow(offset.clone(), vec![1], 0),
    ];
    table.extend(
        dims.iter()
            .enumerate()
            .map(|(n, &d)| TableRow(offset.clone(), vec![-(n as i64)], d)),
    );
    ModuleDescriptor {
        group: GroupSpec::of(module.group_ref(), true),
        flags: Flags {
            is_z: true,
            ..Flags::default()
        },
        table,
        provenance: Provenance::Verma,
        splitting: None,
        alpha: None,
        beta: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundedness {
    Yes,
    /// Equal dimensions inside a window that does not by itself prove the claim.
    YesWindowCertified,
    No,
    Inconclusive,
}

fn nonzero_weight_dims(d: &ModuleDescriptor) -> Vec<usize> {
    d.table
        .iter()
        .filter(|r| !r.is_zero_weight())
        .map(TableRow::dim)
        .collect()
}

pub fn is_uniformly_bounded(d: &ModuleDescriptor) -> Boundedness {
    let dims = nonzero_weight_dims(d);
    let Some(&first) = dims.first() else {
        return Boundedness::Inconclusive;
    };
    if dims.iter().any(|&x| x != first) {
        Boundedness::No
    } else if d.provenance == Provenance::Interseries {
        Boundedness::Yes
    } else {
        Boundedness::YesWindowCertified
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StringProfile {
    PositivelyTruncated,
    NegativelyTruncated,
    Bounded,
    Mixed,
}

struct StringShape {
    profile: StringProfile,
    open_both_ends: bool,
}

/// Dimensions at base + t·g inside the window, ordered by t. A vanishing
/// zero weight is the hole V′ may have, not an end of the string, so it is skipped.
fn string_points(d: &ModuleDescriptor, offset: &str, base: &[i64], g: &[i64]) -> Vec<(i64, usize)> {
    let Some(j) = g.iter().position(|&c| c != 0) else {
        return Vec::new();
    };
    let mut pts: Vec<(i64, usize)> = d
        .table
        .iter()
        .filter(|r| r.offset() == offset && !(r.is_zero_weight() && r.dim() == 0))
        .filter_map(|r| {
            let delta = r.coords()[j] - base[j];
            if delta % g[j] != 0 {
                return None;
            }
            let t = delta / g[j];
            let on_line = r
                .coords()
                .iter()
                .zip(base)
                .zip(g)
                .all(|((c, b), gi)| c - b == t * gi);
            on_line.then_some((t, r.dim()))
        })
        .collect();
    pts.sort();
    pts.dedup_by_key(|p| p.0);
    pts
}

fn shape(points: &[(i64, usize)]) -> StringShape {
    let support: Vec<usize> = points.iter().map(|p| p.1).filter(|&x| x > 0).collect();
    let bottom_open = points.first().is_some_and(|p| p.1 > 0);
    let top_open = points.last().is_some_and(|p| p.1 > 0);
    let profile = match (bottom_open, top_open) {
        // Finite support is bounded.
        (false, false) => StringProfile::Bounded,
        (true, false) => StringProfile::PositivelyTruncated,
        (false, true) => StringProfile::NegativelyTruncated,
        (true, true) if support.iter().all(|&x| x == support[0]) => StringProfile::Bounded,
        (true, true) => StringProfile::Mixed,
    };
    StringShape {
        profile,
        open_both_ends: bottom_open && top_open,
    }
}

/// Support pattern along base + ℤg.
pub fn string_profile(
    d: &ModuleDescriptor,
    g: &GroupElement,
    offset: &str,
    base: &[i64],
) -> Result<StringProfile, ClassifyError> {
    let pts = string_points(d, offset, base, &g.0);
    if pts.len() < 3 {
        return Err(ClassifyError::ShortString(pts.len()));
    }
    Ok(shape(&pts).profile)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum Case {
    Trivial,
    IntermediateSeries,
    HighestWeight,
    LowestWeight,
    InducedType {
        alpha: String,
        beta: String,
        g0_basis: Vec<Vec<i64>>,
        b: Vec<i64>,
    },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    #[serde(flatten)]
    pub case: Case,
    pub detected_b: Option<Vec<i64>>,
    pub detected_g0_basis: Vec<Vec<i64>>,
    pub uniformly_bounded: Boundedness,
    pub certificates: Vec<String>,
}

impl ClassificationReport {
    fn new(case: Case, ub: Boundedness, certificates: Vec<String>) -> Self {
        ClassificationReport {
            case,
            detected_b: None,
            detected_g0_basis: Vec::new(),
            uniformly_bounded: ub,
            certificates,
        }
    }
}

/// Coordinate bound for the direction search.
pub const DEFAULT_DIRECTION_BOUND: i64 = 2;

pub fn classify(d: &ModuleDescriptor) -> Result<ClassificationReport, ClassifyError> {
    classify_with_bound(d, DEFAULT_DIRECTION_BOUND)
}

pub fn classify_with_bound(d: &ModuleDescriptor, bound: i64) -> Result<ClassificationReport, ClassifyError> {
    d.validate()?;
    if d.table.is_empty() {
        return Err(ClassifyError::EmptyWindow);
    }
    let ub = is_uniformly_bounded(d);
    let dims = nonzero_weight_dims(d);
    if d.provenance == Provenance::Interseries && ub == Boundedness::Yes && dims[0] >= 2 {
        return Err(ClassifyError::Malformed(format!(
            "an intermediate-series table with all dimensions {} (such modules have dimensions at most 1)",
            dims[0]
        )));
    }
    let mut certs = vec![format!("uniformly bounded: {ub:?}")];
    if d.table.iter().all(|r| r.dim() == 0 || r.is_zero_weight()) {
        certs.push("support contained in {0}".into());
        return Ok(ClassificationReport::new(Case::Trivial, ub, certs));
    }
    if d.flags.rank1_not_z || d.flags.infinitely_generated_rank1 {
        certs.push("rank-one group not isomorphic to ℤ".into());
        return Ok(ClassificationReport::new(Case::IntermediateSeries, ub, certs));
    }
    if d.rank() == 1 {
        return Ok(classify_cyclic(d, ub, certs));
    }
    let max_dim = dims.iter().copied().max().unwrap_or(0);
    if matches!(ub, Boundedness::Yes | Boundedness::YesWindowCertified) && max_dim <= 1 {
        certs.push("all nonzero-weight dimensions equal 1".into());
        return Ok(ClassificationReport::new(Case::IntermediateSeries, ub, certs));
    }
    Ok(search_direction(d, ub, certs, bound))
}

fn classify_cyclic(d: &ModuleDescriptor, ub: Boundedness, mut certs: Vec<String>) -> ClassificationReport {
    let base = d.table.iter().find(|r| r.dim() > 0).expect("nontrivial table");
    let g = GroupElement(vec![1]);
    let case = match string_profile(d, &g, base.offset(), base.coords()) {
        Ok(p) => {
            certs.push(format!("string profile along the generator: {p:?}"));
            match p {
                StringProfile::PositivelyTruncated => Case::HighestWeight,
                StringProfile::NegativelyTruncated => Case::LowestWeight,
                StringProfile::Bounded
                    if matches!(ub, Boundedness::Yes | Boundedness::YesWindowCertified) =>
                {
                    Case::IntermediateSeries
                }
                _ => Case::Inconclusive,
            }
        }
        Err(e) => {
            certs.push(e.to_string());
            Case::Inconclusive
        }
    };
    ClassificationReport::new(case, ub, certs)
}

/// Primitive covectors with coordinates in [−bound, bound], by L1 norm then lexicographically.
fn covectors(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = coordinate_box(rank, bound)
        .into_iter()
        .filter(|v| v.is_primitive())
        .map(|v| v.0)
        .collect();
    out.sort_by_key(|v| (v.iter().map(|c| c.abs()).sum::<i64>(), v.clone()));
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Checks that φ grades the table like V(α,β,b,G₀) with G₀ = ker φ.
fn direction_fits(d: &ModuleDescriptor, phi: &[i64], kernel: &[GroupElement]) -> Result<(), String> {
    let support: Vec<&TableRow> = d.table.iter().filter(|r| r.dim() > 0).collect();
    let offset = support[0].offset();
    if support.iter().any(|r| r.offset() != offset) {
        return Err("support spans several offsets".into());
    }
    let top = support.iter().map(|r| dot(phi, r.coords())).max().expect("nonempty");
    if !d
        .table
        .iter()
        .any(|r| r.dim() == 0 && r.offset() == offset && dot(phi, r.coords()) > top)
    {
        return Err("no explicit zeros above the top level".into());
    }
    for r in &support {
        let level = (top - dot(phi, r.coords())) as usize;
        if r.dim() as u128 > double_factorial_bound(level) {
            return Err(format!("dimension {} at level {level} exceeds (2i+1)!!", r.dim()));
        }
    }
    // The top level must look like V′ over ker φ: open in every kernel direction.
    let mut witnessed = false;
    for r in support.iter().filter(|r| dot(phi, r.coords()) == top) {
        for k in kernel {
            let pts = string_points(d, offset, r.coords(), &k.0);
            if pts.len() < 3 {
                continue;
            }
            let s = shape(&pts);
            if s.profile != StringProfile::Bounded || !s.open_both_ends {
                return Err(format!("top-level string through {:?} is not two-sided", r.coords()));
            }
            witnessed = true;
        }
    }
    if witnessed {
        Ok(())
    } else {
        Err("no top-level string long enough to certify".into())
    }
}

fn search_direction(d: &ModuleDescriptor, ub: Boundedness, mut certs: Vec<String>, bound: i64) -> ClassificationReport {
    let rank = d.rank();
    for phi in covectors(rank, bound) {
        let Some((_, kernel)) = covector_kernel(&phi) else {
            continue;
        };
        if direction_fits(d, &phi, &kernel).is_err() {
            continue;
        }
        let g0: Vec<Vec<i64>> = hermite_normal_form(&kernel.iter().map(|k| k.0.clone()).collect::<Vec<_>>());
        // Shortest b with φ(b) = 1, ties broken lexicographically.
        let mut candidates: Vec<Vec<i64>> = coordinate_box(rank, bound.max(1))
            .into_iter()
            .map(|v| v.0)
            .filter(|v| dot(&phi, v) == 1)
            .collect();
        candidates.sort_by_key(|v| (v.iter().map(|c| c.abs()).sum::<i64>(), v.clone()));
        let b = candidates
            .into_iter()
            .next()
            .unwrap_or_else(|| covector_kernel(&phi).expect("primitive").0 .0);
        let unimodular = Splitting::new(
            GroupElement(b.clone()),
            g0.iter().cloned().map(GroupElement).collect(),
        );
        if unimodular.is_err() {
            certs.push(format!("covector {phi:?}: detected basis is not unimodular"));
            continue;
        }
        certs.push(format!("grading covector {phi:?}: zeros above the top level, (2i+1)!! bounds, two-sided top strings"));
        certs.push("G = G₀ ⊕ ℤb verified unimodular".into());
        if let Some(spec) = &d.splitting {
            let builder = Splitting::new(
                GroupElement(spec.b.clone()),
                spec.g0_basis.iter().cloned().map(GroupElement).collect(),
            );
            match builder {
                Ok(s) if s.level_functional() == phi.as_slice() => {
                    certs.push("matches the builder's splitting modulo G₀".into())
                }
                _ => certs.push("differs from the builder's splitting".into()),
            }
        }
        let case = Case::InducedType {
            alpha: d.alpha.clone().unwrap_or_else(|| d.table[0].offset().to_string()),
            beta: d.beta.clone().unwrap_or_else(|| "unknown".into()),
            g0_basis: g0.clone(),
            b: b.clone(),
        };
        return ClassificationReport {
            case,
            detected_b: Some(b),
            detected_g0_basis: g0,
            uniformly_bounded: ub,
            certificates: certs,
        };
    }
    certs.push(format!("no grading covector with coordinates within {bound}"));
    ClassificationReport::new(Case::Inconclusive, ub, certs)
}
