//! Finitely generated free subgroups G ≅ ℤⁿ of ℂ and their splittings
//! G = G₀ ⊕ ℤb.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{Registry, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one generator")]
    EmptyGroup,
    #[error("invalid generator names: {0}")]
    Names(#[from] ScalarError),
    #[error("element has {found} coordinates but the group has rank {rank}")]
    RankMismatch { rank: usize, found: usize },
    #[error("{0} is not primitive, so ℤ·b is not a direct summand")]
    NotPrimitive(GroupElement),
    #[error("the given vectors do not form a ℤ-basis (determinant {0})")]
    NotUnimodular(i128),
}

/// How a generator enters the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorValue {
    /// The generator is its own indeterminate.
    Formal,
    /// The generator is a fixed rational number (e.g. ℤ ⊂ ℂ with ι(1) = 1).
    Fixed(BigRational),
}

/// G ≅ ℤⁿ embedded in the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    registry: Registry,
    values: Vec<GeneratorValue>,
}

impl Group {
    /// Rank-n group with formal generators, which are ℚ-linearly independent.
    pub fn new<S: AsRef<str>>(generator_names: &[S]) -> Result<Self, GroupError> {
        if generator_names.is_empty() {
            return Err(GroupError::EmptyGroup);
        }
        Ok(Group {
            registry: Registry::standard(generator_names)?,
            values: vec![GeneratorValue::Formal; generator_names.len()],
        })
    }

    /// `g1, …, gn`.
    pub fn with_rank(n: usize) -> Result<Self, GroupError> {
        let names: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
        Group::new(&names)
    }

    /// ℤ ⊂ ℂ with its generator equal to the number 1: Vir[G] is the classical
    /// Virasoro algebra.
    pub fn integers() -> Self {
        Group {
            registry: Registry::standard(&["g1"]).expect("valid name"),
            values: vec![GeneratorValue::Fixed(BigRational::from_integer(1.into()))],
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// Same registry, generators replaced by fixed rational values.
    pub fn specialized(&self, values: &[BigRational]) -> Group {
        assert_eq!(values.len(), self.rank(), "one value per generator");
        Group {
            registry: self.registry.clone(),
            values: values.iter().cloned().map(GeneratorValue::Fixed).collect(),
        }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn generator_names(&self) -> &[String] {
        &self.registry.names()[..self.rank()]
    }

    pub fn generator_value(&self, i: usize) -> &GeneratorValue {
        &self.values[i]
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// The i-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        GroupElement(c)
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, GroupError> {
        if coords.len() != self.rank() {
            return Err(GroupError::RankMismatch {
                rank: self.rank(),
                found: coords.len(),
            });
        }
        Ok(GroupElement(coords))
    }

    /// ι(x) = Σ coordsᵢ · gᵢ.
    pub fn embed(&self, x: &GroupElement) -> Scalar {
        debug_assert_eq!(x.0.len(), self.rank());
        let mut acc = Scalar::zero();
        for (i, &k) in x.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let g = match &self.values[i] {
                GeneratorValue::Formal => Scalar::var(self.registry.generator(i)),
                GeneratorValue::Fixed(q) => Scalar::from_rational(q.clone()),
            };
            acc = &acc + &(&g * &Scalar::from_int(k));
        }
        acc
    }

    /// Completes a primitive `b` to a ℤ-basis; the other basis vectors span G₀.
    pub fn split(&self, b: &GroupElement) -> Result<Splitting, GroupError> {
        self.check(b)?;
        if !b.is_primitive() {
            return Err(GroupError::NotPrimitive(b.clone()));
        }
        let (u, u_inv) = reduce_to_first_unit(&b.0);
        let n = self.rank();
        let g0_basis = (1..n)
            .map(|j| GroupElement((0..n).map(|i| u_inv[i][j]).collect()))
            .collect();
        Ok(Splitting {
            b: b.clone(),
            g0_basis,
            inverse: u,
        })
    }

    fn check(&self, x: &GroupElement) -> Result<(), GroupError> {
        if x.0.len() != self.rank() {
            return Err(GroupError::RankMismatch {
                rank: self.rank(),
                found: x.0.len(),
            });
        }
        Ok(())
    }
}

/// Integer coordinates in the generator basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// gcd of the coordinates is 1.
    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        GroupElement(self.0.iter().map(|c| c * k).collect())
    }

    /// Largest absolute coordinate.
    pub fn max_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn dot(&self, covector: &[i64]) -> i64 {
        self.0.iter().zip(covector).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        GroupElement(self.0.iter().map(|a| -a).collect())
    }
}

/// Total order on G compatible with addition, used for Vir[G]⁺ / Vir[G]⁻.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum GroupOrder {
    /// Lexicographic on generator coordinates.
    #[default]
    Lexicographic,
    /// Compare `⟨w, x⟩` first, then lexicographically.
    Weighted(Vec<i64>),
}

impl GroupOrder {
    pub fn compare(&self, x: &GroupElement, y: &GroupElement) -> Ordering {
        match self {
            GroupOrder::Lexicographic => x.0.cmp(&y.0),
            GroupOrder::Weighted(w) => x.dot(w).cmp(&y.dot(w)).then_with(|| x.0.cmp(&y.0)),
        }
    }

    pub fn is_positive(&self, x: &GroupElement) -> bool {
        self.compare(x, &GroupElement(vec![0; x.0.len()])) == Ordering::Greater
    }
}

/// G = G₀ ⊕ ℤb with a chosen ℤ-basis of G₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    b: GroupElement,
    g0_basis: Vec<GroupElement>,
    /// Rows: the dual basis; row 0 reads off the b-coordinate.
    inverse: Vec<Vec<i64>>,
}

impl Splitting {
    /// Uses a caller-chosen basis of G₀; `{g0_basis, b}` must be unimodular.
    pub fn new(b: GroupElement, g0_basis: Vec<GroupElement>) -> Result<Self, GroupError> {
        let n = b.0.len();
        if g0_basis.len() + 1 != n {
            return Err(GroupError::RankMismatch {
                rank: n,
                found: g0_basis.len() + 1,
            });
        }
        for g in &g0_basis {
            if g.0.len() != n {
                return Err(GroupError::RankMismatch {
                    rank: n,
                    found: g.0.len(),
                });
            }
        }
        // Columns: b, then the G₀ basis.
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][0] = b.0[i];
            for (j, g) in g0_basis.iter().enumerate() {
                m[i][j + 1] = g.0[i];
            }
        }
        let det = determinant(&m);
        if det.abs() != 1 {
            return Err(GroupError::NotUnimodular(det));
        }
        let inverse = unimodular_inverse(&m);
        Ok(Splitting {
            b,
            g0_basis,
            inverse,
        })
    }

    pub fn b(&self) -> &GroupElement {
        &self.b
    }

    pub fn g0_basis(&self) -> &[GroupElement] {
        &self.g0_basis
    }

    pub fn rank(&self) -> usize {
        self.b.0.len()
    }

    /// `x = Σ uⱼ·g0_basisⱼ + k·b`; returns `(u, k)`.
    pub fn decompose(&self, x: &GroupElement) -> (Vec<i64>, i64) {
        let n = self.rank();
        let coeff = |row: usize| (0..n).map(|j| self.inverse[row][j] * x.0[j]).sum::<i64>();
        let k = coeff(0);
        let u = (1..n).map(coeff).collect();
        (u, k)
    }

    /// The b-coordinate k of x.
    pub fn level(&self, x: &GroupElement) -> i64 {
        (0..self.rank()).map(|j| self.inverse[0][j] * x.0[j]).sum()
    }

    /// Σ uⱼ·g0_basisⱼ + k·b.
    pub fn compose(&self, u: &[i64], k: i64) -> GroupElement {
        let mut out = self.b.scale(k);
        for (g, &c) in self.g0_basis.iter().zip(u) {
            out = &out + &g.scale(c);
        }
        out
    }

    /// The covector whose kernel is G₀ and which takes the value 1 on b.
    pub fn level_functional(&self) -> &[i64] {
        &self.inverse[0]
    }
}

/// For a primitive covector φ: some b with φ(b) = 1 and a ℤ-basis of ker φ.
pub fn covector_kernel(phi: &[i64]) -> Option<(GroupElement, Vec<GroupElement>)> {
    if !GroupElement(phi.to_vec()).is_primitive() {
        return None;
    }
    // Rows of U satisfy rowᵢ·φ = δᵢ₀.
    let (u, _) = reduce_to_first_unit(phi);
    let b = GroupElement(u[0].clone());
    let kernel = u[1..].iter().cloned().map(GroupElement).collect();
    Some((b, kernel))
}

/// Row operations taking `v` to `e₀`; returns `(U, U⁻¹)` with `U·v = e₀`.
fn reduce_to_first_unit(v: &[i64]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = v.len();
    let mut v = v.to_vec();
    let mut u = identity(n);
    let mut u_inv = identity(n);
    loop {
        let pivot = (0..n)
            .filter(|&i| v[i] != 0)
            .min_by_key(|&i| (v[i].abs(), i))
            .expect("nonzero vector");
        let mut done = true;
        for j in 0..n {
            if j == pivot || v[j] == 0 {
                continue;
            }
            let q = v[j].div_euclid(v[pivot]);
            if q != 0 {
                // R_j -= q R_pivot; inverse: C_pivot += q C_j.
                v[j] -= q * v[pivot];
                for c in 0..n {
                    u[j][c] -= q * u[pivot][c];
                }
                for r in 0..n {
                    u_inv[r][pivot] += q * u_inv[r][j];
                }
            }
            if v[j] != 0 {
                done = false;
            }
        }
        if done {
            if pivot != 0 {
                v.swap(0, pivot);
                u.swap(0, pivot);
                for row in u_inv.iter_mut() {
                    row.swap(0, pivot);
                }
            }
            if v[0] < 0 {
                v[0] = -v[0];
                for c in 0..n {
                    u[0][c] = -u[0][c];
                }
                for row in u_inv.iter_mut() {
                    row[0] = -row[0];
                }
            }
            debug_assert_eq!(v[0], 1);
            return (u, u_inv);
        }
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Exact integer determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Inverse of a matrix with determinant ±1, via the adjugate.
fn unimodular_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let det = determinant(m);
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = (sign * determinant(&minor) * det) as i64;
        }
    }
    inv
}

/// Row-style Hermite normal form of the lattice spanned by `rows`
/// (upper triangular, positive pivots, entries above each pivot reduced).
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let Some(ncols) = a.first().map(Vec::len) else {
        return a;
    };
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        while let Some(p) = (r..a.len())
            .filter(|&i| a[i][c] != 0)
            .min_by_key(|&i| a[i][c].abs())
        {
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    for k in 0..ncols {
                        a[i][k] -= q * a[r][k];
                    }
                    if a[i][c] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if r < a.len() && a[r][c] != 0 {
            if a[r][c] < 0 {
                for k in 0..ncols {
                    a[r][k] = -a[r][k];
                }
            }
            for i in 0..r {
                let q = a[i][c].div_euclid(a[r][c]);
                if q != 0 {
                    for k in 0..ncols {
                        a[i][k] -= q * a[r][k];
                    }
                }
            }
            r += 1;
        }
    }
    a.retain(|row| row.iter().any(|&x| x != 0));
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covector_kernel_splits() {
        let phi = [2, -3, 5];
        let (b, ker) = covector_kernel(&phi).unwrap();
        assert_eq!(b.dot(&phi), 1);
        assert!(ker.iter().all(|k| k.dot(&phi) == 0));
        assert!(Splitting::new(b, ker).is_ok());
        assert!(covector_kernel(&[2, 4]).is_none());
    }

    fn el(c: &[i64]) -> GroupElement {
        GroupElement(c.to_vec())
    }

    #[test]
    fn embedding_examples() {
        let g = Group::with_rank(2).unwrap();
        let reg = g.registry();
        assert_eq!(g.embed(&el(&[1, 0])).render(reg), "g1");
        assert_eq!(g.embed(&el(&[2, -3])).render(reg), "-3*g2+2*g1");
        assert!(g.embed(&el(&[0, 0])).is_zero());
        assert_eq!(Group::integers().embed(&el(&[5])), Scalar::from_int(5));
    }

    #[test]
    fn rank_is_generator_count() {
        for n in 1..=3 {
            assert_eq!(Group::with_rank(n).unwrap().rank(), n);
        }
        assert_eq!(Group::with_rank(0), Err(GroupError::EmptyGroup));
    }

    #[test]
    fn split_examples() {
        let g = Group::with_rank(2).unwrap();
        let s = g.split(&el(&[0, 1])).unwrap();
        assert_eq!(s.g0_basis(), &[el(&[1, 0])]);

        let s = g.split(&el(&[1, 1])).unwrap();
        let m = vec![vec![1, s.g0_basis()[0].0[0]], vec![1, s.g0_basis()[0].0[1]]];
        assert_eq!(determinant(&m).abs(), 1);

        let z = Group::with_rank(1).unwrap();
        assert!(matches!(z.split(&el(&[2])), Err(GroupError::NotPrimitive(_))));
        assert!(matches!(g.split(&el(&[2, 0])), Err(GroupError::NotPrimitive(_))));
    }

    #[test]
    fn decompose_roundtrip() {
        let g = Group::with_rank(3).unwrap();
        let s = g.split(&el(&[2, 3, -1])).unwrap();
        for x in [el(&[1, 0, 0]), el(&[4, -7, 2]), el(&[2, 3, -1])] {
            let (u, k) = s.decompose(&x);
            assert_eq!(s.compose(&u, k), x);
        }
        assert_eq!(s.level(s.b()), 1);
        for g0 in s.g0_basis() {
            assert_eq!(s.level(g0), 0);
        }
    }

    #[test]
    fn explicit_splitting_must_be_unimodular() {
        assert!(Splitting::new(el(&[0, 1]), vec![el(&[1, 0])]).is_ok());
        assert_eq!(
            Splitting::new(el(&[0, 1]), vec![el(&[2, 0])]),
            Err(GroupError::NotUnimodular(-2))
        );
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_normal_form(&[vec![1, 1, 0], vec![0, 1, 0]]);
        let b = hermite_normal_form(&[vec![1, 0, 0], vec![3, 1, 0]]);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 0, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn lexicographic_order() {
        let o = GroupOrder::Lexicographic;
        assert!(o.is_positive(&el(&[0, 1])));
        assert!(!o.is_positive(&el(&[-1, 5])));
        assert_eq!(o.compare(&el(&[1, -1]), &el(&[0, 9])), Ordering::Greater);
    }
}
