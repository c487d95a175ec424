//! Verification suites.
//!
//! Every suite is a fixed list of checks; random inputs come from seeded
//! samplers so that a given seed always reproduces the same report. Each
//! check draws from its own stream, derived from the suite seed and a
//! per-check salt, so adding a check never perturbs the others.

use std::sync::Arc;

use maxwell_core::bases::{
    beta_diag_conversion, tabulated_rest_gammas, verify_algebra, Algebra, AlphaBasis,
    AlphaBetaCommutation, BetaBasis, DiracBasis, DiracMaps, EspositoGamma, EspositoRest,
    IdentityCheck, QuaternionClosure,
};
use maxwell_core::constitutive::{
    general_closed_form, general_linear_complexify, moving_relations, moving_relations_general,
    moving_relations_uniform, real_form_moving, rest_relations, MediaSpec,
};
use maxwell_core::fields::{
    eb_from_tensor, tensor_from_e_cb, tensor_from_eb, tensor_from_fields, u_inverse, u_map,
    EMFields, Units,
};
use maxwell_core::linalg::{max_abs_diff, metric, re, spatial, CMat3, CMat4, CVec4, Point4};
use maxwell_core::maxwell::{
    circular_polarization, esposito_field, media_plane_wave, plane_wave, relative_residual,
    residual_esposito, residual_esposito_alpha_form, residual_media_uniform, residual_two_sector,
    residual_vacuum, transform_scenario, transform_wave_vector, FnField, FnSource, Formulation,
    Helicity, LinearField, NoSource, PlaneWave, PlaneWaveSpec, Scenario, SpacetimeField,
};
use maxwell_core::sampling::{sample_points, Sampler, DEFAULT_POINTS};
use maxwell_core::so3c::{
    boost, boost_matrix_closed_form, compose, delta_alpha, delta_beta, double_angle_square,
    z_compensator_checks, BoostSpec, GroupElement, COMPENSATOR_GRID,
};
use maxwell_core::Result;
use nalgebra::{Matrix3, Vector3, Vector4};

use crate::report::{Entry, VerifyReport};

/// Tolerance for identities between matrices built from exact entries.
pub const EXACT: f64 = 0.0;
/// Tolerance for identities evaluated in floating point.
pub const ROUNDOFF: f64 = 1e-12;
/// Tolerance for residuals of transformed solutions.
pub const TRANSFORMED: f64 = 1e-9;
/// Smallest relative residual a negative control must produce.
pub const NEGATIVE_CONTROL: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Algebra,
    Group,
    Covariance,
    Constitutive,
    Esposito,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["all", "algebra", "group", "covariance", "constitutive", "esposito"];

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "all" => Suite::All,
            "algebra" => Suite::Algebra,
            "group" => Suite::Group,
            "covariance" => Suite::Covariance,
            "constitutive" => Suite::Constitutive,
            "esposito" => Suite::Esposito,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }

    fn entries(self, seed: u64) -> Vec<Entry> {
        match self {
            Suite::All => [
                Suite::Algebra,
                Suite::Group,
                Suite::Covariance,
                Suite::Constitutive,
                Suite::Esposito,
            ]
            .into_iter()
            .flat_map(|s| {
                s.entries(seed).into_iter().map(move |mut e| {
                    e.identity = format!("{}: {}", s.name(), e.identity);
                    e
                })
            })
            .collect(),
            Suite::Algebra => algebra(),
            Suite::Group => group(seed),
            Suite::Covariance => covariance(seed),
            Suite::Constitutive => constitutive(seed),
            Suite::Esposito => esposito(seed),
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> VerifyReport {
    VerifyReport::new(suite.name(), seed, suite.entries(seed))
}

fn sampler(seed: u64, salt: u64) -> Sampler {
    Sampler::new(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn points(seed: u64) -> Vec<Point4> {
    sample_points(DEFAULT_POINTS, seed)
}

fn dev3(a: &CMat3, b: &CMat3) -> f64 {
    max_abs_diff(a.iter(), b.iter())
}

fn dev4(a: &CMat4, b: &CMat4) -> f64 {
    max_abs_diff(a.iter(), b.iter())
}

/// Turns a fallible measurement into a report entry.
fn measured(identity: &str, tol: f64, f: impl FnOnce() -> Result<f64>) -> Entry {
    match f() {
        Ok(dev) => Entry::within(identity, dev, tol),
        Err(e) => Entry::failed(identity, e),
    }
}

fn control(identity: &str, f: impl FnOnce() -> Result<f64>) -> Entry {
    match f() {
        Ok(dev) => Entry::above(identity, dev, NEGATIVE_CONTROL),
        Err(e) => Entry::failed(identity, e),
    }
}

fn from_checks(family: &str, checks: Vec<IdentityCheck>, tol: f64) -> Vec<Entry> {
    checks
        .into_iter()
        .map(|c| Entry::within(format!("{family}: {}", c.identity), c.max_abs_dev, tol))
        .collect()
}

// ---------------------------------------------------------------- algebra

fn algebra() -> Vec<Entry> {
    let canonical = AlphaBasis::canonical();
    let esposito = AlphaBasis::esposito();
    let beta = BetaBasis::new();
    let dirac = DiracBasis::new();
    let gamma = EspositoGamma::rest();
    let quaternion = QuaternionClosure(&canonical);
    let commutation = AlphaBetaCommutation { alpha: &canonical, beta: &beta };
    let maps = DiracMaps { dirac: &dirac, alpha: &canonical, beta: &beta };
    let families: Vec<(&str, &dyn Algebra)> = vec![
        ("alpha", &canonical),
        ("quaternion units", &quaternion),
        ("beta", &beta),
        ("alpha-beta", &commutation),
        ("dirac", &dirac),
        ("dirac maps", &maps),
        ("esposito alpha", &esposito),
    ];
    let mut out: Vec<Entry> = families
        .into_iter()
        .flat_map(|(name, basis)| from_checks(name, verify_algebra(basis), EXACT))
        .collect();
    out.extend(from_checks(
        "esposito rest",
        verify_algebra(&EspositoRest { alpha: &esposito, gamma: &gamma }),
        EXACT,
    ));
    for (k, table) in tabulated_rest_gammas().iter().enumerate() {
        out.push(Entry::within(
            format!("esposito rest: Gamma^{k}(1,0,0,0) = tabulated values"),
            dev4(&gamma.g[k], table),
            EXACT,
        ));
    }
    out
}

// ------------------------------------------------------------------ group

const GROUP_SAMPLES: usize = 1000;
const COMPENSATOR_SAMPLES: usize = 100;
const CONJUGATION_SAMPLES: usize = 100;

fn group(seed: u64) -> Vec<Entry> {
    let id3 = CMat3::identity();
    let mut out = Vec::new();

    let mut s = sampler(seed, 1);
    let (mut orth, mut det, mut conj, mut closed, mut double, mut norm) = (0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
    for _ in 0..GROUP_SAMPLES {
        let (spec, g) = s.boost();
        let o = g.o();
        orth = orth.max(dev3(&(o.transpose() * o), &id3));
        det = det.max((o.determinant() - re(1.0)).norm());
        conj = conj.max(dev3(&(o.map(|z| z.conj()) * o), &id3));
        closed = closed.max(dev3(&boost_matrix_closed_form(&spec), o));
        double = double.max(dev3(&double_angle_square(&spec), &(o * o)));
        norm = norm.max(g.param().norm_defect());
    }
    out.extend([
        Entry::within("boost: O^T O = I", orth, ROUNDOFF),
        Entry::within("boost: det O = 1", det, ROUNDOFF),
        Entry::within("boost: O* = O^-1", conj, ROUNDOFF),
        Entry::within("boost: closed-form entries = quaternion construction", closed, ROUNDOFF),
        Entry::within("boost: double-angle formula = O O", double, ROUNDOFF),
        Entry::within("boost: c0^2 + c.c = 1", norm, ROUNDOFF),
    ]);

    let mut s = sampler(seed, 2);
    let (mut orth, mut det, mut real) = (0f64, 0f64, 0f64);
    for _ in 0..GROUP_SAMPLES {
        let (_, _, g) = s.rotation();
        let o = g.o();
        orth = orth.max(dev3(&(o.transpose() * o), &id3));
        det = det.max((o.determinant() - re(1.0)).norm());
        real = real.max(dev3(&o.map(|z| z.conj()), o));
    }
    out.extend([
        Entry::within("rotation: O^T O = I", orth, ROUNDOFF),
        Entry::within("rotation: det O = 1", det, ROUNDOFF),
        Entry::within("rotation: O* = O", real, ROUNDOFF),
    ]);

    let alpha = AlphaBasis::canonical();
    let beta = BetaBasis::new();
    let mut s = sampler(seed, 3);
    let (mut pair, mut inverse) = (0f64, 0f64);
    for _ in 0..COMPENSATOR_SAMPLES {
        let (spec, g) = s.boost();
        let da = delta_alpha(&spec, &alpha);
        pair = pair.max(dev4(&(da * g.s()), &(delta_beta(&spec, &beta) * g.s_inv())));
        inverse = inverse.max(dev4(&(da * delta_alpha(&spec.reversed(), &alpha)), &CMat4::identity()));
    }
    out.push(Entry::within("compensator: Delta_alpha S = Delta_beta S^-1", pair, ROUNDOFF));
    out.push(Entry::within("compensator: Delta(b) Delta(-b) = I", inverse, ROUNDOFF));

    // one entry per identity, worst case over the rapidity grid
    let mut grid: Vec<(String, f64)> = Vec::new();
    for b in COMPENSATOR_GRID {
        for (i, check) in z_compensator_checks(b).into_iter().enumerate() {
            let name = check.identity.split(" (b = ").next().unwrap_or_default().to_string();
            if i == grid.len() {
                grid.push((name, check.max_abs_dev));
            } else {
                grid[i].1 = grid[i].1.max(check.max_abs_dev);
            }
        }
    }
    for (name, dev) in grid {
        out.push(Entry::within(format!("z compensator on b-grid: {name}"), dev, ROUNDOFF));
    }

    let mut s = sampler(seed, 4);
    let (mut alpha_rule, mut beta_rule, mut lorentz) = (0f64, 0f64, 0f64);
    let eta = metric();
    for i in 0..CONJUGATION_SAMPLES {
        let g = random_element(&mut s, i);
        let (o, o_inv) = (g.o(), g.o_inv());
        for j in 0..3 {
            let lhs = g.s() * alpha.a[j] * g.s_inv();
            let rhs = (0..3).fold(CMat4::zeros(), |acc, m| acc + alpha.a[m] * o[(m, j)]);
            alpha_rule = alpha_rule.max(dev4(&lhs, &rhs));
            let lhs = g.s_inv() * beta.b[j] * g.s();
            let rhs = (0..3).fold(CMat4::zeros(), |acc, m| acc + beta.b[m] * o_inv[(m, j)]);
            beta_rule = beta_rule.max(dev4(&lhs, &rhs));
        }
        let l = g.lorentz();
        let scale = l.amax() * l.amax();
        lorentz = lorentz.max((l.transpose() * eta * l - eta).amax() / scale);
    }
    out.extend([
        Entry::within("conjugation: S alpha^j S^-1 = alpha^m O_mj", alpha_rule, ROUNDOFF),
        Entry::within("conjugation: S^-1 beta^j S = beta^m (O^-1)_mj", beta_rule, ROUNDOFF),
        Entry::within("lorentz: L^T eta L = eta (relative)", lorentz, ROUNDOFF),
    ]);
    out
}

/// Cycles through boosts, rotations and their compositions.
fn random_element(s: &mut Sampler, i: usize) -> GroupElement {
    match i % 3 {
        0 => s.boost().1,
        1 => s.rotation().2,
        _ => {
            let b = s.boost().1;
            compose(&b, &s.rotation().2)
        }
    }
}

// ------------------------------------------------------------- covariance

const FRAMES: usize = 10;

fn random_k(s: &mut Sampler) -> Vector3<f64> {
    s.unit_axis() * s.uniform(0.5, 2.0)
}

fn covariance(seed: u64) -> Vec<Entry> {
    let units = Units::natural();
    let pts = points(seed);
    let mut out = Vec::new();
    let mut s = sampler(seed, 10);
    let k = random_k(&mut s);

    for h in [Helicity::Positive, Helicity::Negative] {
        out.push(measured(
            &format!("vacuum plane wave, helicity {:+}: residual", h.sign()),
            ROUNDOFF,
            || {
                let spec = PlaneWaveSpec::circular(k, h, 1.0, MediaSpec::vacuum(), units)?;
                Ok(residual_vacuum(&plane_wave(&spec)?, &NoSource, &pts, &units)?.max_abs())
            },
        ));
    }

    let vacuum_wave = || -> Result<PlaneWave> {
        plane_wave(&PlaneWaveSpec::circular(k, Helicity::Positive, 1.0, MediaSpec::vacuum(), units)?)
    };

    out.push(measured("vacuum plane wave in boosted and rotated frames: residual", TRANSFORMED, || {
        let rest = Scenario {
            fields: Formulation::Single(Arc::new(vacuum_wave()?)),
            source: Arc::new(NoSource),
            units,
        };
        let mut s = sampler(seed, 11);
        let mut worst = 0f64;
        for _ in 0..FRAMES {
            let gb = s.boost().1;
            let gr = s.rotation().2;
            for g in [gb.clone(), gr.clone(), compose(&gb, &gr)] {
                worst = worst.max(transform_scenario(&rest, &g).residual(&pts)?.max_abs());
            }
        }
        Ok(worst)
    }));

    out.push(measured("S psi(L^-1 x') = RS vector of L F L^T", TRANSFORMED, || {
        let w: Arc<dyn SpacetimeField> = Arc::new(vacuum_wave()?);
        let mut s = sampler(seed, 12);
        let mut worst = 0f64;
        for i in 0..FRAMES {
            let g = random_element(&mut s, i);
            let moved = LinearField::complex_linear(w.clone(), *g.s()).with_coordinates(g.lorentz_inv());
            for xp in pts.iter().take(10) {
                let x = g.lorentz_inv() * Vector4::from(*xp);
                let psi = spatial(&w.sample(&[x[0], x[1], x[2], x[3]]).value);
                let t = tensor_from_e_cb(&psi.map(|z| z.re), &psi.map(|z| z.im)).transform(g.lorentz());
                let via_tensor = t.rs();
                let via_group = spatial(&moved.sample(xp).value);
                worst = worst.max(max_abs_diff(via_tensor.iter(), via_group.iter()));
            }
        }
        Ok(worst)
    }));

    out.push(measured("Doppler: omega'/omega = e^b along the wave", ROUNDOFF, || {
        let w = vacuum_wave()?;
        let n = k / k.norm();
        let mut s = sampler(seed, 13);
        let mut worst = 0f64;
        for _ in 0..FRAMES {
            let b = s.uniform(-2.0, 2.0);
            let kp = transform_wave_vector(&w, &boost(&BoostSpec::new(b, n)?));
            worst = worst.max((kp[0] / (w.omega / w.clock) / b.exp() - 1.0).abs());
        }
        Ok(worst)
    }));

    out.push(control("negative control: wrong-dispersion wave, relative residual", || {
        let pol = circular_polarization(&k)?;
        let wrong = PlaneWave::unchecked(pol, k, 1.5 * k.norm(), units.c, 1.0);
        let r = residual_vacuum(&wrong, &NoSource, &pts, &units)?;
        Ok(relative_residual(&r, &wrong))
    }));

    out.push(control("negative control: broken continuity, residual", || {
        // E = x̂ sin x¹ needs ρ = cos x¹; supply half of it
        let field = FnField::new(|x: &Point4| {
            CVec4::new(re(0.0), re(x[1].sin()), re(0.0), re(0.0))
        });
        let source = FnSource::new(|x: &Point4| Vector4::new(0.5 * x[1].cos(), 0.0, 0.0, 0.0));
        Ok(residual_vacuum(&field, &source, &pts, &units)?.max_abs())
    }));

    let media = MediaSpec::uniform(2.0, 3.0).expect("valid media");
    out.push(measured("media plane wave, omega = c'|k|: residual", ROUNDOFF, || {
        let spec = PlaneWaveSpec::circular(k, Helicity::Negative, 1.0, media.clone(), units)?;
        Ok(residual_media_uniform(&plane_wave(&spec)?, &NoSource, &pts, &media, &units)?.max_abs())
    }));

    out.push(control("negative control: vacuum dispersion in media, relative residual", || {
        let spec = PlaneWaveSpec::circular(k, Helicity::Negative, 1.0, media.clone(), units)?;
        let wrong = PlaneWave::unchecked(spec.polarization, k, units.c * k.norm(), spec.phase_speed()?, -1.0);
        let r = residual_media_uniform(&wrong, &NoSource, &pts, &media, &units)?;
        Ok(relative_residual(&r, &wrong))
    }));

    let two_sector = || -> Result<Scenario> {
        let (_, m, n) = media_plane_wave(k, Helicity::Positive, 1.0, &media, &units)?;
        Ok(Scenario {
            fields: Formulation::TwoSector { m: Arc::new(m), n: Arc::new(n) },
            source: Arc::new(NoSource),
            units,
        })
    };
    out.push(measured("two-sector media wave (eps=2, mu=3), rest frame: residual", TRANSFORMED, || {
        Ok(two_sector()?.residual(&pts)?.max_abs())
    }));
    out.push(measured("two-sector media wave (eps=2, mu=3), moving frames: residual", TRANSFORMED, || {
        let rest = two_sector()?;
        let mut s = sampler(seed, 14);
        let mut worst = 0f64;
        for i in 0..FRAMES {
            let g = random_element(&mut s, i);
            worst = worst.max(transform_scenario(&rest, &g).residual(&pts)?.max_abs());
        }
        Ok(worst)
    }));
    out.push(control("negative control: N transformed with S instead of S*, residual", || {
        let (_, m, n) = media_plane_wave(k, Helicity::Positive, 1.0, &media, &units)?;
        let g = boost(&BoostSpec::new(0.9, Vector3::new(0.0, 0.6, 0.8))?);
        let mp = LinearField::complex_linear(Arc::new(m), *g.s()).with_coordinates(g.lorentz_inv());
        let np = LinearField::complex_linear(Arc::new(n), *g.s()).with_coordinates(g.lorentz_inv());
        Ok(residual_two_sector(&mp, &np, &NoSource, &pts, &units)?.max_abs())
    }));
    out
}

// ----------------------------------------------------------- constitutive

const MEDIA_SAMPLES: usize = 100;

fn random_uniform(s: &mut Sampler) -> MediaSpec {
    MediaSpec::uniform(s.uniform(0.2, 5.0), s.uniform(0.2, 5.0)).expect("positive constants")
}

fn random_general(s: &mut Sampler) -> MediaSpec {
    let eps = Matrix3::identity() * 2.0 + s.matrix3(0.3);
    let mu = Matrix3::identity() * 0.8 + s.matrix3(0.3);
    MediaSpec::general(eps, mu, s.matrix3(0.1), s.matrix3(0.1)).expect("finite blocks")
}

fn constitutive(seed: u64) -> Vec<Entry> {
    let mut out = Vec::new();

    out.push(measured("rotation leaves scalar-media coefficients bit-identical", EXACT, || {
        let mut s = sampler(seed, 20);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let m = random_uniform(&mut s);
            let g = s.rotation().2;
            let rest = rest_relations(&m)?;
            worst = worst.max(moving_relations_uniform(&m, &g)?.max_abs_diff(&rest));
        }
        Ok(worst)
    }));

    out.push(measured("boost substitution 2h' = A'f' + B'f'* (scalar and general media, relative)", ROUNDOFF, || {
        let mut s = sampler(seed, 21);
        let mut worst = 0f64;
        for i in 0..MEDIA_SAMPLES {
            let m = if i % 2 == 0 { random_uniform(&mut s) } else { random_general(&mut s) };
            let (_, g) = s.boost();
            let f = s.complex3(1.0);
            let rest = rest_relations(&m)?;
            let h = rest.h_of_f(&f);
            let (fp, hp) = (g.o() * f, g.o() * h);
            let moved = moving_relations(&m, &g)?;
            let scale = 1.0 + fp.norm() + hp.norm();
            worst = worst.max(max_abs_diff(moved.h_of_f(&fp).iter(), hp.iter()) / scale);
            worst = worst.max(max_abs_diff(moved.f_of_h(&hp).iter(), fp.iter()) / scale);
        }
        Ok(worst)
    }));

    out.push(measured("boost b then -b restores rest coefficients (relative)", ROUNDOFF, || {
        let mut s = sampler(seed, 22);
        let mut worst = 0f64;
        for i in 0..MEDIA_SAMPLES {
            let m = if i % 2 == 0 { random_uniform(&mut s) } else { random_general(&mut s) };
            let spec = s.boost_spec();
            let rest = rest_relations(&m)?;
            let back = rest.transform(&boost(&spec)).transform(&boost(&spec.reversed()));
            let scale = 1.0 + rest.forward.a.norm() + rest.inverse.a.norm();
            worst = worst.max(back.max_abs_diff(&rest) / scale);
        }
        Ok(worst)
    }));

    out.push(measured("real form = complex form after Re/Im reassembly (relative)", ROUNDOFF, || {
        let mut s = sampler(seed, 23);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let m = random_uniform(&mut s);
            let spec = s.boost_spec();
            let real = real_form_moving(&m, &spec)?.as_matrix();
            let complex = moving_relations_uniform(&m, &boost(&spec))?.forward.to_real();
            worst = worst.max((real - complex).amax() / (1.0 + real.amax()));
        }
        Ok(worst)
    }));

    out.push(measured("uniform fast path = general solve (relative)", ROUNDOFF, || {
        let mut s = sampler(seed, 24);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let m = random_uniform(&mut s);
            let spec = s.boost_spec();
            let a = moving_relations_uniform(&m, &boost(&spec))?;
            let b = moving_relations_general(&m, &spec)?;
            worst = worst.max(a.max_abs_diff(&b) / (1.0 + a.forward.b.norm()));
        }
        Ok(worst)
    }));

    out.push(measured("solved coefficients = closed form (general media)", ROUNDOFF, || {
        let mut s = sampler(seed, 25);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let m = random_general(&mut s);
            worst = worst.max(general_linear_complexify(&m)?.forward.max_abs_diff(&general_closed_form(&m)));
        }
        Ok(worst)
    }));

    out.push(measured("impedance-matched eps = 1/mu media are frame-transparent", ROUNDOFF, || {
        let mut s = sampler(seed, 26);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let eps = s.uniform(0.2, 5.0);
            let m = MediaSpec::uniform(eps, 1.0 / eps)?;
            let spec = s.boost_spec();
            let rf = real_form_moving(&m, &spec)?;
            worst = worst.max((rf.d_e - Matrix3::identity() * eps).amax() / eps);
            worst = worst.max(rf.d_cb.amax() / eps);
            worst = worst.max(moving_relations_uniform(&m, &boost(&spec))?.forward.b.norm());
        }
        Ok(worst)
    }));

    out.push(measured("vacuum: h' = f' in every frame", EXACT, || {
        let mut s = sampler(seed, 27);
        let mut worst = 0f64;
        for _ in 0..MEDIA_SAMPLES {
            let g = s.boost().1;
            let f = s.complex3(1.0);
            let moved = moving_relations(&MediaSpec::vacuum(), &g)?;
            worst = worst.max(max_abs_diff(moved.h_of_f(&f).iter(), f.iter()));
        }
        Ok(worst)
    }));

    out.push(measured("forward then inverse form is the identity (relative)", ROUNDOFF, || {
        let mut s = sampler(seed, 28);
        let mut worst = 0f64;
        for i in 0..MEDIA_SAMPLES {
            let m = if i % 2 == 0 { random_uniform(&mut s) } else { random_general(&mut s) };
            let g = random_element(&mut s, i);
            let rel = moving_relations(&m, &g)?;
            let f = s.complex3(1.0);
            let scale = 1.0 + rel.forward.a.norm() * rel.inverse.a.norm();
            worst = worst.max(max_abs_diff(rel.f_of_h(&rel.h_of_f(&f)).iter(), f.iter()) / scale);
        }
        Ok(worst)
    }));
    out
}

// --------------------------------------------------------------- esposito

const ROUNDTRIP_SAMPLES: usize = 1000;
const REFERENCE_VECTORS: usize = 20;

fn esposito(seed: u64) -> Vec<Entry> {
    let units = Units::natural();
    let pts = points(seed);
    let mut out = Vec::new();

    out.push(measured("F -> (e, b) -> F roundtrip", ROUNDOFF, || {
        let mut s = sampler(seed, 30);
        let mut worst = 0f64;
        for _ in 0..ROUNDTRIP_SAMPLES {
            let f = EMFields::new(s.vector3(1.0), s.vector3(1.0));
            let u = s.unit_timelike(1.0);
            let t = tensor_from_fields(&f, 1.0);
            let back = tensor_from_eb(&eb_from_tensor(&t, &u)?)?;
            worst = worst.max((back.f - t.f).amax());
        }
        Ok(worst)
    }));

    out.push(measured("U(u) then U(u)^-1 recovers (E, B)", ROUNDOFF, || {
        let mut s = sampler(seed, 31);
        let mut worst = 0f64;
        for _ in 0..ROUNDTRIP_SAMPLES {
            let f = EMFields::new(s.vector3(1.0), s.vector3(1.0));
            let u = s.unit_timelike(1.0);
            let back = u_inverse(&u_map(&f, 1.0, &u)?, 1.0, &u)?;
            worst = worst.max((back.e - f.e).amax()).max((back.b - f.b).amax());
        }
        Ok(worst)
    }));

    let gamma = EspositoGamma::rest();
    let table = tabulated_rest_gammas();
    let worst = (0..4).map(|k| dev4(&gamma.g[k], &table[k])).fold(0.0, f64::max);
    out.push(Entry::within("rest-frame Gamma matrices = tabulated values", worst, EXACT));

    out.push(measured("rest frame: Gamma residual = diag(1,i,i,i)^-1 alpha-form residual", ROUNDOFF, || {
        // off-shell wave, so that both residuals are far from zero
        let mut s = sampler(seed, 32);
        let k = random_k(&mut s);
        let wave = PlaneWave::unchecked(circular_polarization(&k)?, k, 1.7 * k.norm(), 1.0, 1.0);
        let rest = Vector4::new(1.0, 0.0, 0.0, 0.0);
        let esp = residual_esposito(&wave, &rest, &NoSource, &pts, &units)?;
        let alpha = residual_esposito_alpha_form(&wave, &NoSource, &pts, &units)?;
        Ok(esp.max_abs_diff_scaled(&beta_diag_conversion(), &alpha))
    }));

    out.push(measured("vacuum plane wave, 20 random u: Gamma(u) residual", TRANSFORMED, || {
        let mut s = sampler(seed, 33);
        let k = random_k(&mut s);
        let spec = PlaneWaveSpec::circular(k, Helicity::Negative, 1.0, MediaSpec::vacuum(), units)?;
        let psi: Arc<dyn SpacetimeField> = Arc::new(plane_wave(&spec)?);
        let mut worst = 0f64;
        for _ in 0..REFERENCE_VECTORS {
            let u = s.unit_timelike(1.0);
            let phi = esposito_field(psi.clone(), &u)?;
            worst = worst.max(residual_esposito(&phi, &u, &NoSource, &pts, &units)?.max_abs());
        }
        Ok(worst)
    }));

    out.push(measured("sourced static field, 20 random u: Gamma(u) residual", TRANSFORMED, || {
        let psi: Arc<dyn SpacetimeField> = Arc::new(FnField::new(|x: &Point4| {
            CVec4::new(re(0.0), re(x[1].sin()), re(0.0), re(0.0))
        }));
        let source = FnSource::new(|x: &Point4| Vector4::new(x[1].cos(), 0.0, 0.0, 0.0));
        let mut s = sampler(seed, 34);
        let mut worst = 0f64;
        for _ in 0..REFERENCE_VECTORS {
            let u = s.unit_timelike(1.0);
            let phi = esposito_field(psi.clone(), &u)?;
            worst = worst.max(residual_esposito(&phi, &u, &source, &pts, &units)?.max_abs());
        }
        Ok(worst)
    }));

    out.push(control("negative control: mismatched u, residual", || {
        let spec = PlaneWaveSpec::circular(Vector3::z(), Helicity::Positive, 1.0, MediaSpec::vacuum(), units)?;
        let psi: Arc<dyn SpacetimeField> = Arc::new(plane_wave(&spec)?);
        let phi = esposito_field(psi, &Vector4::new(2f64.sqrt(), 1.0, 0.0, 0.0))?;
        let rest = Vector4::new(1.0, 0.0, 0.0, 0.0);
        Ok(residual_esposito(&phi, &rest, &NoSource, &pts, &units)?.max_abs())
    }));
    out
}
