//! Modules built by the library are recognized as what they were built as.

use genvir::classical::{quotient_dims_after_singular, verma_dims, TruncatedVermaModule};
use genvir::classify::*;
use genvir::groups::{Group, GroupElement, Splitting};
use genvir::induced::{maximal_quotient_dims, InductionData, RankMode, Window};
use genvir::interseries::{AlphaBinding, BetaBinding, IntermediateSeriesModule};
use genvir::scalars::{BigRational, Scalar};

fn e(c: &[i64]) -> GroupElement {
    GroupElement(c.to_vec())
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn induced(b: &[i64], alpha: AlphaBinding, beta: BetaBinding, w: Window) -> (InductionData, ModuleDescriptor) {
    let data = InductionData::new(Group::with_rank(2).unwrap(), &e(b), alpha, beta).unwrap();
    let dims = maximal_quotient_dims(&data, &w, RankMode::default());
    let d = descriptor_from_induced(&data, &dims);
    (data, d)
}

/// The detected splitting and the builder's have the same level functional.
fn same_splitting(report: &ClassificationReport, built: &Splitting) -> bool {
    let Case::InducedType { b, g0_basis, .. } = &report.case else {
        return false;
    };
    let detected = Splitting::new(
        GroupElement(b.clone()),
        g0_basis.iter().cloned().map(GroupElement).collect(),
    )
    .unwrap();
    detected.level_functional() == built.level_functional()
}

#[test]
fn intermediate_series_rank_two() {
    for (alpha, beta) in [
        (AlphaBinding::Free, BetaBinding::Free),
        (AlphaBinding::Rational(q(1, 3)), BetaBinding::Rational(q(2, 5))),
        (AlphaBinding::GroupValue(e(&[1, -1])), BetaBinding::Rational(q(0, 1))),
        (AlphaBinding::GroupValue(e(&[0, 0])), BetaBinding::Rational(q(1, 1))),
    ] {
        let m = IntermediateSeriesModule::new(Group::with_rank(2).unwrap(), alpha, beta);
        let report = classify(&descriptor_from_interseries(&m, 3)).unwrap();
        assert_eq!(report.case, Case::IntermediateSeries);
        assert_eq!(report.uniformly_bounded, Boundedness::Yes);
    }
}

#[test]
fn intermediate_series_over_the_integers() {
    let m = IntermediateSeriesModule::new(Group::integers(), AlphaBinding::Free, BetaBinding::Free);
    assert_eq!(classify(&descriptor_from_interseries(&m, 5)).unwrap().case, Case::IntermediateSeries);
}

#[test]
fn verma_modules_are_highest_weight() {
    let symbolic = TruncatedVermaModule::symbolic(6);
    let report = classify(&descriptor_from_verma(&symbolic, &verma_dims(6))).unwrap();
    assert_eq!(report.case, Case::HighestWeight);
    assert_eq!(report.uniformly_bounded, Boundedness::No);

    // A reducible point still has a highest weight quotient.
    let special = TruncatedVermaModule::new(Scalar::ratio(7, 3), Scalar::zero(), 4);
    let dims = quotient_dims_after_singular(&special).dims;
    assert_eq!(classify(&descriptor_from_verma(&special, &dims)).unwrap().case, Case::HighestWeight);

    let trivial = TruncatedVermaModule::new(Scalar::zero(), Scalar::zero(), 4);
    let dims = quotient_dims_after_singular(&trivial).dims;
    assert_eq!(classify(&descriptor_from_verma(&trivial, &dims)).unwrap().case, Case::Trivial);
}

#[test]
fn induced_module_recovers_its_splitting() {
    let (data, d) = induced(&[0, 1], AlphaBinding::Free, BetaBinding::Free, Window::new(1, 2));
    let report = classify(&d).unwrap();
    assert!(same_splitting(&report, &data.split), "{report:?}");
    assert_eq!(report.uniformly_bounded, Boundedness::No);
    let Case::InducedType { b, g0_basis, .. } = &report.case else {
        unreachable!()
    };
    assert_eq!(b, &vec![0, 1]);
    assert_eq!(g0_basis, &vec![vec![1, 0]]);
}

#[test]
fn induced_module_on_a_skew_splitting() {
    let (data, d) = induced(
        &[1, 2],
        AlphaBinding::Free,
        BetaBinding::Rational(q(1, 3)),
        Window::new(1, 2),
    );
    let report = classify(&d).unwrap();
    assert!(same_splitting(&report, &data.split), "{report:?}");
}

#[test]
fn induced_from_a_reducible_top() {
    let (data, d) = induced(
        &[0, 1],
        AlphaBinding::GroupValue(e(&[0, 0])),
        BetaBinding::Rational(q(1, 1)),
        Window::new(1, 2),
    );
    let report = classify(&d).unwrap();
    assert!(same_splitting(&report, &data.split), "{report:?}");
}

#[test]
fn descriptors_survive_json() {
    let (_, d) = induced(&[0, 1], AlphaBinding::Free, BetaBinding::Free, Window::new(1, 2));
    let text = serde_json::to_string(&d).unwrap();
    let back: ModuleDescriptor = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
    assert_eq!(classify(&back).unwrap(), classify(&d).unwrap());
}

#[test]
fn flags_override_the_table() {
    let m = IntermediateSeriesModule::new(Group::with_rank(1).unwrap(), AlphaBinding::Free, BetaBinding::Free);
    let mut d = descriptor_from_interseries(&m, 3);
    assert!(d.flags.is_z);
    d.flags.is_z = false;
    d.flags.infinitely_generated_rank1 = true;
    assert_eq!(classify(&d).unwrap().case, Case::IntermediateSeries);
    d.flags.is_z = true;
    assert!(matches!(classify(&d), Err(ClassifyError::ContradictoryFlags(_))));
}

#[test]
fn vanishing_zero_weight_at_the_window_edge() {
    // α = ι(2g₁) shifts the excluded weight onto the edge of the top row.
    let (data, d) = induced(
        &[0, 1],
        AlphaBinding::GroupValue(e(&[2, 0])),
        BetaBinding::Rational(q(0, 1)),
        Window::new(1, 2),
    );
    assert!(d.table.iter().any(|r| r.coords() == [0, 0] && r.dim() == 0));
    let report = classify(&d).unwrap();
    assert!(same_splitting(&report, &data.split), "{report:?}");
}
