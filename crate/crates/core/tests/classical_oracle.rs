//! The classical Virasoro algebra against hand computations.

use std::collections::BTreeMap;

use genvir::classical::*;
use genvir::groups::Group;
use genvir::scalars::{BigRational, Poly, Scalar};

/// p(n) by Euler's pentagonal recurrence.
fn partitions(n: usize) -> Vec<usize> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut k = 1i64;
        loop {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut any = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if g <= m {
                    p[m as usize] += sign * p[(m - g) as usize];
                    any = true;
                }
            }
            if !any {
                break;
            }
            k += 1;
        }
    }
    p.into_iter().map(|x| x as usize).collect()
}

fn ch() -> (Scalar, Scalar) {
    let g = Group::integers();
    (
        Scalar::var(g.registry().central_charge()),
        Scalar::var(g.registry().highest_weight()),
    )
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// `a = k·b` for some nonzero rational k.
fn proportional(a: &Poly, b: &Poly) -> bool {
    match a.div_exact(b).and_then(|k| k.as_constant()) {
        Some(k) => k != BigRational::from_integer(0.into()),
        None => false,
    }
}

#[test]
fn dims_are_partition_numbers() {
    assert_eq!(verma_dims(14), partitions(14));
    assert_eq!(verma_dims(8), vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
}

#[test]
fn level_one_needs_zero_highest_weight() {
    let (_, h) = ch();
    let report = find_singular(&TruncatedVermaModule::symbolic(1), 1);
    assert!(report.kernel.is_empty());
    assert!(proportional(&report.condition, h.numer()));

    let at_zero = find_singular(&TruncatedVermaModule::new(q(7, 3), Scalar::zero(), 1), 1);
    assert_eq!(at_zero.kernel.len(), 1);
}

/// With the bracket [d_m, d_n] = (n − m)d_{m+n} + δ_{m,−n}(m³ − m)C/12 and
/// d_0 v = hv, on the basis (d_{−2}v, d_{−1}²v):
///   d_1 d_{−2}v = −3·d_{−1}v          d_1 d_{−1}²v = (2 − 4h)·d_{−1}v
///   d_2 d_{−2}v = (c/2 − 4h)·v         d_2 d_{−1}²v = 6h·v
#[test]
fn level_two_condition_is_the_hand_determinant() {
    let (c, h) = ch();
    let m11 = Scalar::from_int(-3);
    let m12 = &Scalar::from_int(2) - &(&Scalar::from_int(4) * &h);
    let m21 = &(&c * &q(1, 2)) - &(&Scalar::from_int(4) * &h);
    let m22 = &Scalar::from_int(6) * &h;
    let det = &(&m11 * &m22) - &(&m12 * &m21);

    let report = find_singular(&TruncatedVermaModule::symbolic(2), 2);
    assert_eq!(report.minors.len(), 1);
    assert!(proportional(&report.minors[0], det.numer()));
    assert!(proportional(&report.condition, det.numer()));
}

#[test]
fn level_two_singular_vector_is_killed_by_raising() {
    // −16h² + 2ch − 10h − c vanishes at c = 1/2, h = −1/2.
    let module = TruncatedVermaModule::new(q(1, 2), q(-1, 2), 2);
    let report = find_singular(&module, 2);
    assert_eq!(report.kernel.len(), 1);
    for v in report.kernel_vectors() {
        assert!(!v.is_zero());
        assert!(module.act(1, &v).is_zero());
        assert!(module.act(2, &v).is_zero());
        // d_0 acts by h − 2.
        assert_eq!(module.act(0, &v), v.scale(&(module.h() - &Scalar::from_int(2))));
    }
}

/// The (1,3) Kac factor 3h² + (c − 7)h + 2 + c, read with h ↦ −h.
#[test]
fn level_three_condition_matches_kac_factor() {
    let (c, h) = ch();
    let three = Scalar::from_int(3);
    let kac = &(&(&three * &h.pow(2)) - &(&(&c - &Scalar::from_int(7)) * &h)) + &(&Scalar::from_int(2) + &c);
    let report = find_singular(&TruncatedVermaModule::symbolic(3), 3);
    assert!(proportional(&report.condition, kac.numer()));

    // c = −2 gives 3h² + 9h = 0, so h = −3 away from the level-one root.
    let module = TruncatedVermaModule::new(Scalar::from_int(-2), Scalar::from_int(-3), 3);
    let special = find_singular(&module, 3);
    assert_eq!(special.kernel.len(), 1);
    for v in special.kernel_vectors() {
        for k in 1..=3 {
            assert!(module.act(k, &v).is_zero());
        }
    }
}

#[test]
fn generic_point_has_no_singular_vectors() {
    let module = TruncatedVermaModule::new(q(1, 3), q(2, 7), 4);
    for n in 1..=4 {
        assert!(find_singular(&module, n).kernel.is_empty());
    }
    let report = quotient_dims_after_singular(&module);
    assert_eq!(report.dims, verma_dims(4));
    assert!(report.singular_levels.is_empty());
}

#[test]
fn quotient_drops_the_singular_submodule() {
    // h = 0, c = 7/3: only d_{−1}v is singular through level 3, and it
    // generates p(n − 1) dimensions at level n.
    let report = quotient_dims_after_singular(&TruncatedVermaModule::new(q(7, 3), Scalar::zero(), 3));
    assert_eq!(report.singular_levels, vec![1]);
    let p = partitions(3);
    let expected: Vec<usize> = (0..=3).map(|n| p[n] - if n >= 1 { p[n - 1] } else { 0 }).collect();
    assert_eq!(report.dims, expected);

    let trivial = quotient_dims_after_singular(&TruncatedVermaModule::new(Scalar::zero(), Scalar::zero(), 3));
    assert!(trivial.trivial);
    assert_eq!(trivial.dims, vec![1, 0, 0, 0]);
}

#[test]
fn specialization_agrees_with_evaluating_the_condition() {
    let report = find_singular(&TruncatedVermaModule::symbolic(2), 2);
    let g = Group::integers();
    for (cv, hv) in [(q(1, 2), q(-1, 2)), (q(1, 3), q(2, 7)), (q(0, 1), q(-5, 8))] {
        let mut at = BTreeMap::new();
        at.insert(g.registry().central_charge(), cv.as_rational().unwrap());
        at.insert(g.registry().highest_weight(), hv.as_rational().unwrap());
        let vanishes = report.condition.substitute(&at).is_zero();
        let kernel = find_singular(&TruncatedVermaModule::new(cv, hv, 2), 2).kernel;
        assert_eq!(vanishes, !kernel.is_empty());
    }
}
