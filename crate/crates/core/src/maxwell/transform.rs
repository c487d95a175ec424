//! Frame changes of complete scenarios and the media field builders.
//!
//! A group element `g` with Lorentz matrix `Λ` maps coordinates as
//! `x' = Λx`. Fields follow `Ψ'(x') = SΨ(x)`, or `M' = SM`, `N' = S*N` in
//! the two-sector form, and sources follow `j' = Λj`. For boosts `Λj`
//! coincides with the compensated column `ΔSJ`.

use std::sync::Arc;

use nalgebra::{Vector3, Vector4};

use crate::bases::AlphaBasis;
use crate::constitutive::{rest_relations, ConstitutiveForm, MediaSpec};
use crate::error::Result;
use crate::fields::{u_matrix, Units};
use crate::linalg::{re, CMat3, CMat4, CVec4, Point4};
use crate::so3c::{delta_alpha, BoostSpec, GroupElement};

use super::field::{LinearField, SpacetimeField};
use super::plane_wave::{plane_wave_with_clock, Helicity, PlaneWave, PlaneWaveSpec};
use super::residual::{residual_two_sector, residual_vacuum, Residuals};
use super::source::{source_column, SourceField, TransformedSource};

/// Which matrix form the fields are written in.
#[derive(Clone)]
pub enum Formulation {
    /// Vacuum RS column `Ψ`.
    Single(Arc<dyn SpacetimeField>),
    /// Media columns `M`, `N`.
    TwoSector {
        m: Arc<dyn SpacetimeField>,
        n: Arc<dyn SpacetimeField>,
    },
}

/// Fields plus sources, ready for residual evaluation.
#[derive(Clone)]
pub struct Scenario {
    pub fields: Formulation,
    pub source: Arc<dyn SourceField>,
    pub units: Units,
}

impl Scenario {
    pub fn residual(&self, points: &[Point4]) -> Result<Residuals> {
        match &self.fields {
            Formulation::Single(psi) => {
                residual_vacuum(psi.as_ref(), self.source.as_ref(), points, &self.units)
            }
            Formulation::TwoSector { m, n } => residual_two_sector(
                m.as_ref(),
                n.as_ref(),
                self.source.as_ref(),
                points,
                &self.units,
            ),
        }
    }
}

/// The same physical scenario described in the frame reached by `g`.
pub fn transform_scenario(scenario: &Scenario, g: &GroupElement) -> Scenario {
    let lorentz_inv = g.lorentz_inv();
    let moved = |f: &Arc<dyn SpacetimeField>, m: CMat4| -> Arc<dyn SpacetimeField> {
        Arc::new(LinearField::complex_linear(f.clone(), m).with_coordinates(lorentz_inv))
    };
    let fields = match &scenario.fields {
        Formulation::Single(psi) => Formulation::Single(moved(psi, *g.s())),
        Formulation::TwoSector { m, n } => Formulation::TwoSector {
            m: moved(m, *g.s()),
            n: moved(n, g.s().map(|z| z.conj())),
        },
    };
    Scenario {
        fields,
        source: Arc::new(TransformedSource::new(
            scenario.source.clone(),
            *g.lorentz(),
            lorentz_inv,
        )),
        units: scenario.units,
    }
}

/// `Δ(b, n) S(b, n) J`: the source column after a boost.
pub fn compensated_source(spec: &BoostSpec, g: &GroupElement, j: &Vector4<f64>, eps0: f64) -> CVec4 {
    delta_alpha(spec, &AlphaBasis::canonical()) * g.s() * source_column(j, eps0)
}

/// Wave 4-vector `(ω/clock, k⃗)` seen from the frame reached by `g`.
pub fn transform_wave_vector(wave: &PlaneWave, g: &GroupElement) -> Vector4<f64> {
    g.lorentz() * Vector4::from(wave.wave_four_vector())
}

/// `Φ = U(u)Ψ`.
pub fn esposito_field(psi: Arc<dyn SpacetimeField>, u: &Vector4<f64>) -> Result<LinearField> {
    crate::bases::EspositoGamma::new(*u)?;
    Ok(LinearField::complex_linear(psi, u_matrix(u)))
}

fn block(m: &CMat3) -> CMat4 {
    let mut out = CMat4::zeros();
    out.fixed_view_mut::<3, 3>(1, 1).copy_from(m);
    out
}

/// `(M, N)` from a field whose `f` is `Pψ + Qψ*`, with `h` from a forward
/// constitutive form `2h = Af + Bf*`.
pub fn two_sector_fields(
    psi: Arc<dyn SpacetimeField>,
    p: &CMat3,
    q: &CMat3,
    forward: &ConstitutiveForm,
) -> (LinearField, LinearField) {
    let half = re(0.5);
    let conj = |m: &CMat3| m.map(|z| z.conj());
    let h_psi = (forward.a * p + forward.b * conj(q)) * half;
    let h_conj = (forward.a * q + forward.b * conj(p)) * half;
    let m = LinearField::new(
        psi.clone(),
        block(&((h_psi + p) * half)),
        block(&((h_conj + q) * half)),
    );
    let n = LinearField::new(
        psi,
        block(&((conj(&h_conj) - conj(q)) * half)),
        block(&((conj(&h_psi) - conj(p)) * half)),
    );
    (m, n)
}

/// Rest-frame plane wave in a uniform medium, written in the two-sector form
/// with `x⁰ = ct`. Returns the underlying wave `ψ = E + ic'B` too.
pub fn media_plane_wave(
    k: Vector3<f64>,
    helicity: Helicity,
    amplitude: f64,
    media: &MediaSpec,
    units: &Units,
) -> Result<(Arc<PlaneWave>, LinearField, LinearField)> {
    let spec = PlaneWaveSpec::circular(k, helicity, amplitude, media.clone(), *units)?;
    let phase_speed = spec.phase_speed()?;
    let wave = Arc::new(plane_wave_with_clock(&spec, units.c)?);
    // f = Re ψ + i (c/c') Im ψ
    let r = units.c / phase_speed;
    let id = CMat3::identity();
    let p = id * re(0.5 * (1.0 + r));
    let q = id * re(0.5 * (1.0 - r));
    let relations = rest_relations(media)?;
    let (m, n) = two_sector_fields(wave.clone(), &p, &q, &relations.forward);
    Ok((wave, m, n))
}
