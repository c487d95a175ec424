use maxwell_core::constitutive::{
    general_closed_form, general_linear_complexify, moving_relations, moving_relations_general,
    moving_relations_uniform, real_form_moving, rest_relations, MediaSpec,
};
use maxwell_core::fields::Units;
use maxwell_core::linalg::{max_abs_diff, CVec3, C64};
use maxwell_core::so3c::{boost, rotation, BoostSpec};
use nalgebra::{Matrix3, Vector3};
use proptest::prelude::*;

fn axis() -> impl Strategy<Value = Vector3<f64>> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_map(|(x, y, z)| Vector3::new(x, y, z))
        .prop_filter("non-degenerate", |v| v.norm() > 0.1)
        .prop_map(|v| v / v.norm())
}

fn boost_spec() -> impl Strategy<Value = BoostSpec> {
    (-2.0..2.0f64, axis()).prop_map(|(b, n)| BoostSpec::new(b, n).unwrap())
}

fn small_matrix(scale: f64) -> impl Strategy<Value = Matrix3<f64>> {
    proptest::collection::vec(-scale..scale, 9).prop_map(Matrix3::from_iterator)
}

fn uniform() -> impl Strategy<Value = MediaSpec> {
    (0.2..5.0f64, 0.2..5.0f64).prop_map(|(e, m)| MediaSpec::uniform(e, m).unwrap())
}

fn general() -> impl Strategy<Value = MediaSpec> {
    (small_matrix(0.3), small_matrix(0.3), small_matrix(0.1), small_matrix(0.1)).prop_map(
        |(e, m, a, b)| {
            MediaSpec::general(
                Matrix3::identity() * 2.0 + e,
                Matrix3::identity() * 0.8 + m,
                a,
                b,
            )
            .unwrap()
        },
    )
}

fn media() -> impl Strategy<Value = MediaSpec> {
    prop_oneof![uniform(), general()]
}

fn cvec3() -> impl Strategy<Value = CVec3> {
    proptest::collection::vec(-1.0..1.0f64, 6)
        .prop_map(|v| CVec3::new(C64::new(v[0], v[1]), C64::new(v[2], v[3]), C64::new(v[4], v[5])))
}

proptest! {
    #[test]
    fn forward_inverse_compose(m in media(), f in cvec3()) {
        let rel = rest_relations(&m).unwrap();
        let back = rel.f_of_h(&rel.h_of_f(&f));
        prop_assert!(max_abs_diff(back.iter(), f.iter()) < 1e-12);
    }

    #[test]
    fn boost_substitution(m in media(), spec in boost_spec(), f in cvec3()) {
        let g = boost(&spec);
        let rest = rest_relations(&m).unwrap();
        let h = rest.h_of_f(&f);
        let (fp, hp) = (g.o() * f, g.o() * h);
        let moved = moving_relations(&m, &g).unwrap();
        let scale = 1.0 + fp.norm() + hp.norm();
        prop_assert!(max_abs_diff(moved.h_of_f(&fp).iter(), hp.iter()) < 1e-12 * scale);
        prop_assert!(max_abs_diff(moved.f_of_h(&hp).iter(), fp.iter()) < 1e-12 * scale);
    }

    #[test]
    fn rotation_leaves_scalar_media_untouched(m in uniform(), a in -3.0..3.0f64, n in axis()) {
        let rest = rest_relations(&m).unwrap();
        let moved = moving_relations_uniform(&m, &rotation(a, n).unwrap()).unwrap();
        prop_assert_eq!(moved.forward, rest.forward);
        prop_assert_eq!(moved.inverse, rest.inverse);
    }

    #[test]
    fn boost_involution(m in media(), spec in boost_spec()) {
        let rest = rest_relations(&m).unwrap();
        let back = rest.transform(&boost(&spec)).transform(&boost(&spec.reversed()));
        prop_assert!(back.max_abs_diff(&rest) < 1e-11);
    }

    #[test]
    fn vacuum_is_transparent(spec in boost_spec(), f in cvec3()) {
        let moved = moving_relations(&MediaSpec::vacuum(), &boost(&spec)).unwrap();
        prop_assert_eq!(moved.h_of_f(&f), f);
    }

    #[test]
    fn real_form_matches_complex_form(m in uniform(), spec in boost_spec()) {
        let rf = real_form_moving(&m, &spec).unwrap();
        let complex = moving_relations_uniform(&m, &boost(&spec)).unwrap();
        prop_assert!((rf.as_matrix() - complex.forward.to_real()).amax() < 1e-12 * (1.0 + rf.as_matrix().amax()));
    }

    #[test]
    fn uniform_and_general_paths_agree(m in uniform(), spec in boost_spec()) {
        let a = moving_relations_uniform(&m, &boost(&spec)).unwrap();
        let b = moving_relations_general(&m, &spec).unwrap();
        prop_assert!(a.max_abs_diff(&b) < 1e-12 * (1.0 + a.forward.b.norm()));
    }

    #[test]
    fn probing_matches_closed_form(m in general()) {
        let probed = general_linear_complexify(&m).unwrap().forward;
        prop_assert!(probed.max_abs_diff(&general_closed_form(&m)) < 1e-14);
    }

    #[test]
    fn complex_form_reproduces_material_law(m in general(), e in cvec3()) {
        // any (E, cB) pair: take real and imaginary parts of a random vector
        let units = Units::natural();
        let ev = e.map(|z| z.re);
        let bv = e.map(|z| z.im);
        let (d, h) = m.apply_real(&ev, &bv, &units);
        let hh = general_linear_complexify(&m).unwrap().h_of_f(&e);
        let expected = CVec3::from_fn(|i, _| C64::new(d[i], h[i]));
        prop_assert!(max_abs_diff(hh.iter(), expected.iter()) < 1e-12);
    }

    #[test]
    fn matched_impedance_is_frame_transparent(eps in 0.2..5.0f64, spec in boost_spec()) {
        let m = MediaSpec::uniform(eps, 1.0 / eps).unwrap();
        let rf = real_form_moving(&m, &spec).unwrap();
        prop_assert!((rf.d_e - Matrix3::identity() * eps).amax() < 1e-12 * eps);
        prop_assert!(rf.d_cb.amax() < 1e-12 * eps);
        let moved = moving_relations_uniform(&m, &boost(&spec)).unwrap();
        prop_assert!(moved.forward.b.norm() < 1e-12);
    }
}
