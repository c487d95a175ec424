//! Circularly polarized plane waves.
//!
//! `Ψ(x) = (0, p) · exp(i s (k⃗·x⃗ - ω x⁰ / v))`, where `v` is the speed
//! used to scale the time coordinate (`x⁰ = v t`). The polarization obeys
//! `i k̂ × p = p` for both helicities; the helicity is the phase sign `s`.
//! Positive helicity rotates `E` counter-clockwise about `k̂`.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::constitutive::MediaSpec;
use crate::error::{Error, Result};
use crate::fields::Units;
use crate::linalg::{cross, max_abs, pad3, re, CVec3, CVec4, Point4, C64, IM};
use crate::so3c::rotation;

use super::field::{FieldSample, SpacetimeField};

/// Tolerance for the dispersion and transversality checks.
pub const PLANE_WAVE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Helicity {
    #[serde(rename = "+1")]
    Positive,
    #[serde(rename = "-1")]
    Negative,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Positive => 1.0,
            Helicity::Negative => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Result<Self> {
        match s {
            1 => Ok(Helicity::Positive),
            -1 => Ok(Helicity::Negative),
            other => Err(Error::Unsupported(format!("helicity must be +1 or -1, got {other}"))),
        }
    }
}

/// Plane wave parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveSpec {
    pub k: Vector3<f64>,
    /// Angular frequency in units of inverse time.
    pub omega: f64,
    pub polarization: CVec3,
    pub helicity: Helicity,
    pub media: MediaSpec,
    pub units: Units,
}

/// Unit circular polarization `R (1, i, 0)/√2` with `R` turning `ẑ` into `k̂`.
pub fn circular_polarization(k: &Vector3<f64>) -> Result<CVec3> {
    let norm = k.norm();
    if !(norm > 0.0) {
        return Err(Error::Unsupported("wave vector must be nonzero".into()));
    }
    let khat = k / norm;
    let base = CVec3::new(re(1.0), IM, re(0.0)) * re(std::f64::consts::FRAC_1_SQRT_2);
    let axis = Vector3::z().cross(&khat);
    let s = axis.norm();
    let angle = khat[2].clamp(-1.0, 1.0).acos();
    let r = if s < 1e-15 {
        if khat[2] > 0.0 {
            return Ok(base);
        }
        rotation(std::f64::consts::PI, Vector3::x())?
    } else {
        rotation(angle, axis / s)?
    };
    Ok(r.o() * base)
}

impl PlaneWaveSpec {
    /// Wave with frequency fixed by the dispersion relation `ω = c'|k|`.
    pub fn circular(
        k: Vector3<f64>,
        helicity: Helicity,
        amplitude: f64,
        media: MediaSpec,
        units: Units,
    ) -> Result<Self> {
        let phase_speed = units.c * media.index_factor()?;
        Ok(Self {
            omega: phase_speed * k.norm(),
            polarization: circular_polarization(&k)? * re(amplitude),
            k,
            helicity,
            media,
            units,
        })
    }

    /// `c' = c/√(εμ)`.
    pub fn phase_speed(&self) -> Result<f64> {
        Ok(self.units.c * self.media.index_factor()?)
    }
}

/// Analytic plane wave.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWave {
    pub amplitude: CVec4,
    pub k: Vector3<f64>,
    pub omega: f64,
    /// Speed relating `x⁰` to time.
    pub clock: f64,
    /// Phase sign, `±1`.
    pub sign: f64,
}

/// Validated wave in the medium's own RS variables, `x⁰ = c' t`.
pub fn plane_wave(spec: &PlaneWaveSpec) -> Result<PlaneWave> {
    let phase_speed = spec.phase_speed()?;
    let wave = plane_wave_with_clock(spec, phase_speed)?;
    Ok(wave)
}

/// Validated wave with time coordinate `x⁰ = clock · t`.
pub fn plane_wave_with_clock(spec: &PlaneWaveSpec, clock: f64) -> Result<PlaneWave> {
    let phase_speed = spec.phase_speed()?;
    let expected = phase_speed * spec.k.norm();
    if !((spec.omega - expected).abs() <= PLANE_WAVE_TOL * expected.max(f64::MIN_POSITIVE)) {
        return Err(Error::Dispersion {
            omega: spec.omega,
            expected,
            phase_speed,
        });
    }
    let p = spec.polarization;
    let khat = (spec.k / spec.k.norm()).map(re);
    let deviation = max_abs((cross(&khat, &p) * IM - p).iter());
    let scale = max_abs(p.iter());
    if !(deviation <= PLANE_WAVE_TOL * scale.max(f64::MIN_POSITIVE)) && scale > 0.0 {
        return Err(Error::Transversality { deviation });
    }
    Ok(PlaneWave::unchecked(
        spec.polarization,
        spec.k,
        spec.omega,
        clock,
        spec.helicity.sign(),
    ))
}

impl PlaneWave {
    /// No validation; used for negative controls.
    pub fn unchecked(polarization: CVec3, k: Vector3<f64>, omega: f64, clock: f64, sign: f64) -> Self {
        Self {
            amplitude: pad3(&polarization),
            k,
            omega,
            clock,
            sign,
        }
    }

    pub fn phase(&self, x: &Point4) -> f64 {
        self.sign
            * (self.k[0] * x[1] + self.k[1] * x[2] + self.k[2] * x[3] - self.omega * x[0] / self.clock)
    }

    /// `(k₀, k⃗)` with `k₀ = ω / clock`: the wave depends on `x` through `k₀x⁰ - k⃗·x⃗`.
    pub fn wave_four_vector(&self) -> [f64; 4] {
        [self.omega / self.clock, self.k[0], self.k[1], self.k[2]]
    }
}

impl SpacetimeField for PlaneWave {
    fn sample(&self, x: &Point4) -> FieldSample {
        let value = self.amplitude * C64::from_polar(1.0, self.phase(x));
        let d = |w: f64| value * C64::new(0.0, self.sign * w);
        FieldSample {
            value,
            grad: [
                d(-self.omega / self.clock),
                d(self.k[0]),
                d(self.k[1]),
                d(self.k[2]),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxwell::field::check_derivatives;

    #[test]
    fn z_polarization_is_the_textbook_vector() {
        let p = circular_polarization(&Vector3::new(0.0, 0.0, 2.0)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(p, CVec3::new(re(s), C64::new(0.0, s), re(0.0)));
    }

    #[test]
    fn polarization_is_transverse_for_any_direction() {
        for k in [
            Vector3::new(0.3, -0.5, 0.8),
            Vector3::new(0.0, 0.0, -1.0),
            Vector3::new(1.0, 0.0, 0.0),
        ] {
            let p = circular_polarization(&k).unwrap();
            let khat = (k / k.norm()).map(re);
            assert!(max_abs((cross(&khat, &p) * IM - p).iter()) < 1e-15);
            assert!((p.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn dispersion_enforced() {
        let media = MediaSpec::uniform(2.0, 2.0).unwrap();
        let k = Vector3::new(0.0, 0.0, 1.0);
        let good = PlaneWaveSpec::circular(k, Helicity::Positive, 1.0, media.clone(), Units::natural()).unwrap();
        assert_eq!(good.omega, 0.5);
        assert!(plane_wave(&good).is_ok());
        let bad = PlaneWaveSpec { omega: 1.0, ..good };
        assert!(matches!(plane_wave(&bad), Err(Error::Dispersion { .. })));
    }

    #[test]
    fn transversality_enforced() {
        let k = Vector3::new(0.0, 0.0, 1.0);
        let mut spec = PlaneWaveSpec::circular(k, Helicity::Negative, 1.0, MediaSpec::vacuum(), Units::natural()).unwrap();
        spec.polarization = CVec3::new(re(1.0), re(0.0), re(0.0));
        assert!(matches!(plane_wave(&spec), Err(Error::Transversality { .. })));
    }

    #[test]
    fn zero_amplitude_gives_zero_field() {
        let spec = PlaneWaveSpec::circular(Vector3::new(1.0, 2.0, 0.5), Helicity::Positive, 0.0, MediaSpec::vacuum(), Units::natural()).unwrap();
        let w = plane_wave(&spec).unwrap();
        assert_eq!(w.sample(&[0.3, 0.1, -0.4, 0.2]).value, CVec4::zeros());
    }

    #[test]
    fn analytic_derivatives_are_consistent() {
        let spec = PlaneWaveSpec::circular(Vector3::new(1.0, -2.0, 0.5), Helicity::Negative, 1.5, MediaSpec::vacuum(), Units::natural()).unwrap();
        let w = plane_wave(&spec).unwrap();
        let dev = check_derivatives(&w, &[0.2, -0.3, 0.7, 0.1]).unwrap();
        assert!(dev < 1e-9);
    }
}
