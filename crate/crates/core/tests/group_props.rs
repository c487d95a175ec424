use maxwell_core::bases::{AlphaBasis, BetaBasis};
use maxwell_core::linalg::{max_abs_diff, re, CMat3, CMat4, IM};
use maxwell_core::so3c::{
    boost, boost_matrix_closed_form, compose, delta_alpha, delta_beta, double_angle_square,
    rotation, BoostSpec, ElementKind, GroupElement,
};
use nalgebra::Vector3;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn axis() -> impl Strategy<Value = Vector3<f64>> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_map(|(x, y, z)| Vector3::new(x, y, z))
        .prop_filter("non-degenerate", |v| v.norm() > 0.1)
        .prop_map(|v| v / v.norm())
}

fn boost_spec() -> impl Strategy<Value = BoostSpec> {
    (-2.0..2.0f64, axis()).prop_map(|(b, n)| BoostSpec::new(b, n).unwrap())
}

fn rotation_element() -> impl Strategy<Value = GroupElement> {
    (-7.0..7.0f64, axis()).prop_map(|(a, n)| rotation(a, n).unwrap())
}

fn element() -> impl Strategy<Value = GroupElement> {
    prop_oneof![
        boost_spec().prop_map(|s| boost(&s)),
        rotation_element(),
        (boost_spec(), rotation_element()).prop_map(|(s, r)| compose(&boost(&s), &r)),
    ]
}

fn dev3(a: &CMat3, b: &CMat3) -> f64 {
    max_abs_diff(a.iter(), b.iter())
}

fn dev4(a: &CMat4, b: &CMat4) -> f64 {
    max_abs_diff(a.iter(), b.iter())
}

proptest! {
    #[test]
    fn complex_orthogonality(g in element()) {
        let o = g.o();
        prop_assert!(dev3(&(o.transpose() * o), &CMat3::identity()) < TOL);
        prop_assert!((o.determinant() - re(1.0)).norm() < TOL);
        prop_assert!(g.param().norm_defect() < TOL);
    }

    #[test]
    fn rotations_are_real(g in rotation_element()) {
        prop_assert_eq!(g.kind(), ElementKind::Rotation);
        prop_assert!(dev3(&g.o().map(|z| z.conj()), g.o()) < TOL);
    }

    #[test]
    fn boosts_are_conjugate_inverse(spec in boost_spec()) {
        let g = boost(&spec);
        prop_assert!(dev3(&(g.o().map(|z| z.conj()) * g.o()), &CMat3::identity()) < TOL);
        prop_assert!(dev3(&boost_matrix_closed_form(&spec), g.o()) < TOL);
        prop_assert!(dev3(&double_angle_square(&spec), &(g.o() * g.o())) < TOL);
    }

    #[test]
    fn compensators_agree(spec in boost_spec()) {
        let g = boost(&spec);
        let da = delta_alpha(&spec, &AlphaBasis::canonical());
        let db = delta_beta(&spec, &BetaBasis::new());
        prop_assert!(dev4(&(da * g.s()), &(db * g.s_inv())) < TOL);
        let back = delta_alpha(&spec.reversed(), &AlphaBasis::canonical());
        prop_assert!(dev4(&(da * back), &CMat4::identity()) < TOL);
    }

    #[test]
    fn conjugation_rules(g in element()) {
        let alpha = AlphaBasis::canonical();
        let beta = BetaBasis::new();
        let o = g.o();
        let o_inv = g.o_inv();
        for j in 0..3 {
            let lhs = g.s() * alpha.a[j] * g.s_inv();
            let rhs = (0..3).fold(CMat4::zeros(), |acc, m| acc + alpha.a[m] * o[(m, j)]);
            prop_assert!(dev4(&lhs, &rhs) < TOL);
            let lhs = g.s_inv() * beta.b[j] * g.s();
            let rhs = (0..3).fold(CMat4::zeros(), |acc, m| acc + beta.b[m] * o_inv[(m, j)]);
            prop_assert!(dev4(&lhs, &rhs) < TOL);
        }
    }

    #[test]
    fn compensated_generators(spec in boost_spec()) {
        // Δ (αᵐ O_mj) = i sh nⱼ + αʲ + (ch - 1) nⱼ (n·α)
        let alpha = AlphaBasis::canonical();
        let g = boost(&spec);
        let d = delta_alpha(&spec, &alpha);
        let (ch, sh) = (spec.rapidity.cosh(), spec.rapidity.sinh());
        let n = spec.axis;
        let n_alpha = (0..3).fold(CMat4::zeros(), |acc, m| acc + alpha.a[m] * re(n[m]));
        for j in 0..3 {
            let rotated = (0..3).fold(CMat4::zeros(), |acc, m| acc + alpha.a[m] * g.o()[(m, j)]);
            let rhs = CMat4::identity() * (IM * sh * n[j]) + alpha.a[j] + n_alpha * re((ch - 1.0) * n[j]);
            prop_assert!(dev4(&(d * rotated), &rhs) < 1e-11);
        }
    }

    #[test]
    fn composition_keeps_unit_norm(a in element(), b in element()) {
        let c = compose(&a, &b);
        prop_assert!(c.param().norm_defect() < 1e-11);
        prop_assert!(dev3(c.o(), &(a.o() * b.o())) < 1e-10);
        let id = compose(&c, &c.inverse());
        prop_assert!(dev3(id.o(), &CMat3::identity()) < 1e-10);
    }

    #[test]
    fn lorentz_matrix_preserves_metric(g in element()) {
        let eta = maxwell_core::linalg::metric();
        let l = g.lorentz();
        prop_assert!((l.transpose() * eta * l - eta).amax() < 1e-10);
        prop_assert!((l * g.lorentz_inv() - nalgebra::Matrix4::identity()).amax() < 1e-10);
    }
}

#[test]
fn reversed_boost_is_inverse() {
    let spec = BoostSpec::new(1.5, Vector3::new(0.0, 0.6, 0.8)).unwrap();
    let g = boost(&spec);
    let h = boost(&spec.reversed());
    assert!(dev3(&(g.o() * h.o()), &CMat3::identity()) < TOL);
}
