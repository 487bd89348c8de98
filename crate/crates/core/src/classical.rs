//! Highest weight modules over the classical Virasoro algebra Vir[ℤ]
//! (ι(1) = 1): truncated Verma modules, singular vectors and quotients.
//!
//! Brackets follow [d_m, d_n] = (n − m)·d_{m+n} + δ_{m,−n}(m³ − m)/12·C,
//! the opposite sign of the more common (m − n) convention. Under it
//! d_1·d_{−1}v = −2h·v.

use std::cmp::Ordering;

use serde::Serialize;

use crate::groups::{Group, GroupElement};
use crate::linalg::{self, maximal_minors};
use crate::module::{act_generator, InducedAction, ModuleMonomial, ModuleVector};
use crate::scalars::{gcd, Poly, Scalar};

/// Verma module M(c, h) with levels 0..=L.
#[derive(Clone, Debug)]
pub struct TruncatedVermaModule {
    group: Group,
    c: Scalar,
    h: Scalar,
    level_cap: usize,
}

/// Basis vector `d_{−k₁}⋯d_{−k_r}·v` with k₁ ≥ … ≥ k_r.
pub type VermaMonomial = ModuleMonomial<()>;
pub type VermaVector = ModuleVector<()>;

impl TruncatedVermaModule {
    pub fn new(c: Scalar, h: Scalar, level_cap: usize) -> Self {
        TruncatedVermaModule {
            group: Group::integers(),
            c,
            h,
            level_cap,
        }
    }

    /// c and h left as indeterminates.
    pub fn symbolic(level_cap: usize) -> Self {
        let group = Group::integers();
        let c = Scalar::var(group.registry().central_charge());
        let h = Scalar::var(group.registry().highest_weight());
        TruncatedVermaModule {
            group,
            c,
            h,
            level_cap,
        }
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    pub fn level_cap(&self) -> usize {
        self.level_cap
    }

    pub fn group_ref(&self) -> &Group {
        &self.group
    }

    /// Sorted lowering words of total depth n.
    pub fn basis(&self, n: usize) -> Vec<VermaMonomial> {
        partitions(n)
            .into_iter()
            .map(|parts| ModuleMonomial {
                factors: parts.into_iter().map(|k| GroupElement(vec![-(k as i64)])).collect(),
                top: (),
            })
            .collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.level_cap).map(|n| self.basis(n).len()).collect()
    }

    /// d_k applied to a vector.
    pub fn act(&self, k: i64, v: &VermaVector) -> VermaVector {
        act_generator(self, &GroupElement(vec![k]), v)
    }

    fn coordinates(basis: &[VermaMonomial], v: &VermaVector) -> Vec<Scalar> {
        basis.iter().map(|m| v.coefficient(m)).collect()
    }

    fn vector(basis: &[VermaMonomial], coeffs: &[Scalar]) -> VermaVector {
        let mut v = VermaVector::default();
        for (m, c) in basis.iter().zip(coeffs) {
            v.add_term(m.clone(), c.clone());
        }
        v
    }

    /// Rows indexed by (k, basis at level n − k), columns by the level-n basis.
    fn raising_matrix(&self, n: usize) -> Vec<Vec<Scalar>> {
        let cols = self.basis(n);
        let images: Vec<Vec<VermaVector>> = cols
            .iter()
            .map(|m| {
                let v = VermaVector::basis(m.clone());
                (1..=n as i64).map(|k| self.act(k, &v)).collect()
            })
            .collect();
        let mut rows = Vec::new();
        for k in 1..=n {
            let target = self.basis(n - k);
            for t in &target {
                rows.push(images.iter().map(|img| img[k - 1].coefficient(t)).collect());
            }
        }
        rows
    }
}

impl InducedAction for TruncatedVermaModule {
    type Top = ();

    fn group(&self) -> &Group {
        &self.group
    }

    fn is_lowering(&self, x: &GroupElement) -> bool {
        x.0[0] < 0
    }

    /// Ascending coordinates, i.e. the deepest factor on the left.
    fn lowering_cmp(&self, x: &GroupElement, y: &GroupElement) -> Ordering {
        x.0[0].cmp(&y.0[0])
    }

    fn central_charge(&self) -> Scalar {
        self.c.clone()
    }

    fn act_on_top(&self, x: &GroupElement, _: &()) -> Option<(Scalar, ())> {
        match x.0[0].cmp(&0) {
            Ordering::Greater => None,
            Ordering::Equal => Some((self.h.clone(), ())),
            Ordering::Less => unreachable!("lowering factors never reach the top"),
        }
    }
}

/// Partitions of n as non-increasing part lists, in lexicographic order of
/// the negated parts (so the matching words are sorted).
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dimensions of the Verma module at levels 0..=L.
pub fn verma_dims(level_cap: usize) -> Vec<usize> {
    TruncatedVermaModule::new(Scalar::zero(), Scalar::zero(), level_cap).dims()
}

#[derive(Clone, Debug)]
pub struct SingularVectorReport {
    pub level: usize,
    /// Kernel vectors as coefficient lists over the level basis.
    pub kernel: Vec<Vec<Scalar>>,
    pub basis: Vec<VermaMonomial>,
    /// Maximal minors of the raising matrix: a nonzero kernel needs all to vanish.
    pub minors: Vec<Poly>,
    /// Monic gcd of the minors; 1 when no common factor exists.
    pub condition: Poly,
}

impl SingularVectorReport {
    pub fn kernel_vectors(&self) -> Vec<VermaVector> {
        self.kernel
            .iter()
            .map(|k| TruncatedVermaModule::vector(&self.basis, k))
            .collect()
    }
}

/// Joint kernel of d_1, …, d_n on level n, with the conditions on (c, h)
/// under which it becomes nonzero.
pub fn find_singular(module: &TruncatedVermaModule, n: usize) -> SingularVectorReport {
    assert!(n >= 1 && n <= module.level_cap, "level out of range");
    let basis = module.basis(n);
    let m = module.raising_matrix(n);
    let kernel = linalg::kernel(m.clone(), basis.len());
    let (minors, condition) = if kernel.is_empty() && m.iter().flatten().all(Scalar::is_polynomial) {
        let polys: Vec<Vec<Poly>> = m
            .iter()
            .map(|r| r.iter().map(|s| s.numer().clone()).collect())
            .collect();
        let minors: Vec<Poly> = maximal_minors(&polys, basis.len())
            .into_iter()
            .map(|(_, d)| d)
            .filter(|d| !d.is_zero())
            .collect();
        let condition = minors.iter().fold(Poly::zero(), |g, d| gcd(&g, d));
        (minors, condition)
    } else {
        (Vec::new(), Poly::zero())
    };
    SingularVectorReport {
        level: n,
        kernel,
        basis,
        minors,
        condition,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub dims: Vec<usize>,
    /// Levels carrying singular vectors of the Verma module.
    pub singular_levels: Vec<usize>,
    /// (c, h) = (0, 0): the irreducible quotient is the trivial module.
    pub trivial: bool,
}

/// Dimensions of M(c, h) modulo the submodule generated by its singular
/// vectors at levels 1..=L.
pub fn quotient_dims_after_singular(module: &TruncatedVermaModule) -> QuotientReport {
    let l = module.level_cap;
    if module.c.is_zero() && module.h.is_zero() {
        let mut dims = vec![0; l + 1];
        dims[0] = 1;
        return QuotientReport {
            dims,
            singular_levels: Vec::new(),
            trivial: true,
        };
    }
    let mut generators: Vec<(usize, VermaVector)> = Vec::new();
    let mut singular_levels = Vec::new();
    for n in 1..=l {
        let report = find_singular(module, n);
        if !report.kernel.is_empty() {
            singular_levels.push(n);
            generators.extend(report.kernel_vectors().into_iter().map(|v| (n, v)));
        }
    }
    let mut dims = Vec::with_capacity(l + 1);
    for n in 0..=l {
        let basis = module.basis(n);
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for (m, s) in &generators {
            if *m > n {
                continue;
            }
            for word in module.basis(n - m) {
                // Apply the lowering word right to left.
                let mut v = s.clone();
                for f in word.factors.iter().rev() {
                    v = act_generator(module, f, &v);
                }
                span.push(TruncatedVermaModule::coordinates(&basis, &v));
            }
        }
        let r = if span.is_empty() {
            0
        } else {
            linalg::rank(span, basis.len())
        };
        dims.push(basis.len() - r);
    }
    QuotientReport {
        dims,
        singular_levels,
        trivial: false,
    }
}
