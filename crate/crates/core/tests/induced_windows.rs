//! Windowed generalized Verma modules checked against hand-derived formulas.

use genvir::algebra::AlgebraElement;
use genvir::groups::{Group, GroupElement};
use genvir::induced::*;
use genvir::interseries::{AlphaBinding, BetaBinding};
use genvir::module::ModuleVector;
use genvir::scalars::{BigRational, Scalar};

fn e(c: &[i64]) -> GroupElement {
    GroupElement(c.to_vec())
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn generic() -> InductionData {
    InductionData::new(Group::with_rank(2).unwrap(), &e(&[0, 1]), AlphaBinding::Free, BetaBinding::Free).unwrap()
}

/// Plain Gaussian elimination, kept separate from the library's.
fn oracle_rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].checked_div(&pivot).unwrap();
                for k in c..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] = &m[r][k] - &t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn specialized(alpha: AlphaBinding, beta: BigRational) -> InductionData {
    let g = Group::with_rank(2).unwrap().specialized(&[q(3, 2), q(-7, 5)]);
    let split = g.split(&e(&[0, 1])).unwrap();
    InductionData::with_splitting(g, split, alpha, BetaBinding::Rational(beta))
}

/// d_{y+b}·d_{x₁−b}v_μ = (ι(x₁) − ι(y) − 2ι(b))(α + ι(μ) + ι(x₁ + y)β)·v_{μ+x₁+y},
/// with G₀ = ℤg₁ and b = g₂, evaluated at ι(g₁) = 3/2, ι(g₂) = −7/5.
#[test]
fn level_one_matches_closed_form_rank() {
    let (g1, g2) = (Scalar::from_rational(q(3, 2)), Scalar::from_rational(q(-7, 5)));
    let cases = [
        (AlphaBinding::Rational(q(2, 9)), q(5, 11), q(2, 9)),
        (AlphaBinding::Rational(q(2, 9)), q(0, 1), q(2, 9)),
        (AlphaBinding::Rational(q(-4, 7)), q(1, 1), q(-4, 7)),
        (AlphaBinding::GroupValue(e(&[0, 0])), q(0, 1), q(0, 1)),
        (AlphaBinding::GroupValue(e(&[0, 0])), q(1, 1), q(0, 1)),
    ];
    for (binding, b, a) in cases {
        let data = specialized(binding, b.clone());
        let (alpha, beta) = (Scalar::from_rational(a), Scalar::from_rational(b));
        let n = 2i64;
        let dims = maximal_quotient_dims(&data, &Window::new(1, n), RankMode::Symbolic);
        for u in -n..=n {
            let entry = dims.get(1, &[u]).unwrap();
            // An excluded index drops a column (source) or a row (target).
            let kept = |c: i64| data.top.subquotient.contains(&data.split.compose(&[c], 0));
            let rows: Vec<Vec<Scalar>> = (-n..=n)
                .filter(|y| kept(u + y))
                .map(|y| {
                    (-n..=n)
                        .filter(|x1| kept(u - x1))
                        .map(|x1| {
                            let mu = u - x1;
                            let left = &(&(&g1 * &Scalar::from_int(x1 - y)) - &g2) - &g2;
                            let right = &(&alpha + &(&g1 * &Scalar::from_int(mu)))
                                + &(&(&g1 * &Scalar::from_int(x1 + y)) * &beta);
                            &left * &right
                        })
                        .collect()
                })
                .collect();
            assert_eq!(entry.dim, oracle_rank(rows), "u={u}, data={:?}", data.beta_binding());
        }
    }
}

#[test]
fn generic_level_one_is_three_dimensional() {
    let dims = maximal_quotient_dims(&generic(), &Window::new(1, 2), RankMode::default());
    assert!(dims.level_row(1).iter().all(|e| e.dim == 3 && e.stable));
}

#[test]
fn level_zero_row_is_the_top_module() {
    for (alpha, beta) in [
        (AlphaBinding::Free, BetaBinding::Free),
        (AlphaBinding::GroupValue(e(&[-1, 0])), BetaBinding::Rational(q(0, 1))),
        (AlphaBinding::GroupValue(e(&[2, 0])), BetaBinding::Rational(q(1, 1))),
    ] {
        let data = InductionData::new(Group::with_rank(2).unwrap(), &e(&[0, 1]), alpha, beta).unwrap();
        let dims = maximal_quotient_dims(&data, &Window::new(1, 2), RankMode::default());
        for entry in dims.level_row(0) {
            let mu = data.split.compose(&entry.coords, 0);
            assert_eq!(entry.dim, usize::from(data.top.subquotient.contains(&mu)));
            assert!(entry.stable);
        }
    }
}

#[test]
fn specialized_ranks_match_symbolic_ranks_at_level_one() {
    let data = generic();
    let w = Window::new(1, 2);
    assert_eq!(
        maximal_quotient_dims(&data, &w, RankMode::Symbolic).entries,
        maximal_quotient_dims(&data, &w, RankMode::default()).entries
    );
}

#[test]
fn double_factorial_bound_holds_on_a_skew_splitting() {
    let g = Group::with_rank(2).unwrap();
    let data = InductionData::new(g, &e(&[1, 2]), AlphaBinding::Free, BetaBinding::Rational(q(1, 3))).unwrap();
    let dims = maximal_quotient_dims(&data, &Window::new(2, 1), RankMode::default());
    for entry in dims.entries.iter().filter(|e| e.stable) {
        assert!(entry.dim as u128 <= double_factorial_bound(entry.level as usize));
    }
}

/// β = 0 makes the raising matrix degenerate, so J is nonzero at every weight.
fn rational_data() -> InductionData {
    specialized(AlphaBinding::Rational(q(2, 9)), q(0, 1))
}

#[test]
fn raising_maps_the_windowed_submodule_into_itself() {
    let data = rational_data();
    let w = Window::new(2, 1);
    for level in 1..=2usize {
        let j = submodule_basis(&data, &w, level, &[0]);
        assert!(!j.is_empty());
        for m in &j {
            assert!(killed_by_raising(&data, &w, level, m));
            for y in -1..=1 {
                let raised = act_on_induced_vector(&data, &e(&[y, 1]), m, &w);
                assert!(killed_by_raising(&data, &w, level - 1, &raised));
                let level_preserving = act_on_induced_vector(&data, &e(&[y, 0]), m, &w);
                assert!(killed_by_raising(&data, &w, level, &level_preserving));
            }
        }
    }
}

fn act_on_induced_vector(
    data: &InductionData,
    x: &GroupElement,
    v: &ModuleVector<GroupElement>,
    w: &Window,
) -> ModuleVector<GroupElement> {
    let a = AlgebraElement::d(x.clone());
    let mut out = ModuleVector::default();
    for (m, c) in v.terms() {
        out = out.add(&act_on_induced(data, &a, m, w).vector.scale(c));
    }
    out
}

#[test]
fn quotient_dimension_is_basis_minus_kernel() {
    let data = rational_data();
    let w = Window::new(2, 1);
    let basis = build_level_basis(&data, &w);
    let dims = maximal_quotient_dims(&data, &w, RankMode::Symbolic);
    for level in 1..=2usize {
        let size = basis.monomials(level, &[0]).len();
        let kernel = submodule_basis(&data, &w, level, &[0]).len();
        assert_eq!(dims.get(level as i64, &[0]).unwrap().dim, size - kernel);
    }
}

#[test]
fn unstable_entries_are_not_used_by_support_check() {
    let mut dims = maximal_quotient_dims(&generic(), &Window::new(1, 1), RankMode::default());
    dims.entries.push(DimEntry {
        level: -1,
        coords: vec![0],
        dim: 5,
        basis_size: 5,
        stable: false,
    });
    assert_eq!(support_check(&dims), SupportVerdict::PatternA);
}

#[test]
fn rank_three_group_level_one() {
    let g = Group::with_rank(3).unwrap();
    let data = InductionData::new(g, &e(&[0, 0, 1]), AlphaBinding::Free, BetaBinding::Free).unwrap();
    let dims = maximal_quotient_dims(&data, &Window::new(1, 1), RankMode::default());
    for entry in dims.level_row(1) {
        assert!(entry.dim <= 3);
    }
    assert_eq!(support_check(&dims), SupportVerdict::PatternA);
}
