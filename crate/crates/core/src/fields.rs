//! Field representations and the conversions between them.
//!
//! Index conventions: contravariant storage, metric `diag(1,-1,-1,-1)`,
//! `F^{i0} = Eⁱ`, `F^{ij} = -ε_{ijk} cBᵏ`, `ε⁰¹²³ = +1`. The dual is
//! `F̃_{ρσ} = ½ ε_{ρσαβ} F^{αβ}`, which gives `F̃^{i0} = cBⁱ`.

use nalgebra::{Matrix4, Vector3, Vector4};
use serde::{Deserialize, Serialize};

use crate::bases::UNIT_TIMELIKE_TOL;
use crate::error::{Error, Result};
use crate::linalg::{
    complexify3, conj3, cross, levi_civita, lower, minkowski_dot, re, CMat4, CVec3, CVec4, C64,
    IM,
};
use crate::so3c::GroupElement;

/// Speed of light in vacuum, m/s.
pub const SI_LIGHT_SPEED: f64 = 299_792_458.0;
/// Vacuum permittivity, F/m.
pub const SI_EPSILON_0: f64 = 8.854_187_812_8e-12;

/// Unit system. Natural units set `c = ε₀ = 1`; every formula keeps the
/// explicit factors so SI values can be used unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Units {
    pub c: f64,
    pub eps0: f64,
}

impl Units {
    pub const fn natural() -> Self {
        Self { c: 1.0, eps0: 1.0 }
    }

    pub const fn si() -> Self {
        Self {
            c: SI_LIGHT_SPEED,
            eps0: SI_EPSILON_0,
        }
    }

    /// `μ₀ = 1 / (ε₀ c²)`.
    pub fn mu0(&self) -> f64 {
        1.0 / (self.eps0 * self.c * self.c)
    }
}

impl Default for Units {
    fn default() -> Self {
        Self::natural()
    }
}

/// Raw real field state.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct EMFields {
    pub e: Vector3<f64>,
    pub b: Vector3<f64>,
    pub d: Option<Vector3<f64>>,
    pub h: Option<Vector3<f64>>,
}

impl EMFields {
    pub fn new(e: Vector3<f64>, b: Vector3<f64>) -> Self {
        Self {
            e,
            b,
            d: None,
            h: None,
        }
    }

    pub fn with_media_fields(mut self, d: Vector3<f64>, h: Vector3<f64>) -> Self {
        self.d = Some(d);
        self.h = Some(h);
        self
    }
}

/// Riemann-Silberstein vector `ψ = E + i c B` (or `E + i c' B` in uniform media).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RSVector {
    pub psi: CVec3,
}

pub fn to_rs(fields: &EMFields, light_speed: f64) -> RSVector {
    RSVector {
        psi: CVec3::from_fn(|i, _| C64::new(fields.e[i], light_speed * fields.b[i])),
    }
}

impl RSVector {
    /// Splits back into `(E, B)`.
    pub fn split(&self, light_speed: f64) -> (Vector3<f64>, Vector3<f64>) {
        (
            self.psi.map(|z| z.re),
            self.psi.map(|z| z.im / light_speed),
        )
    }

    /// Four-column `Ψ = (0, ψ)`.
    pub fn column(&self) -> CVec4 {
        crate::linalg::pad3(&self.psi)
    }
}

/// Media pair `f = E + icB`, `h = (D + iH/c)/ε₀`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FHPair {
    pub f: CVec3,
    pub h: CVec3,
}

pub fn to_fh(fields: &EMFields, units: &Units) -> Result<FHPair> {
    let d = fields.d.ok_or(Error::MissingField("D"))?;
    let h = fields.h.ok_or(Error::MissingField("H"))?;
    Ok(FHPair {
        f: to_rs(fields, units.c).psi,
        h: CVec3::from_fn(|i, _| C64::new(d[i], h[i] / units.c) / units.eps0),
    })
}

impl FHPair {
    /// Recovers `(E, B, D, H)`.
    pub fn to_fields(&self, units: &Units) -> EMFields {
        let e = self.f.map(|z| z.re);
        let b = self.f.map(|z| z.im / units.c);
        let d = self.h.map(|z| z.re * units.eps0);
        let h = self.h.map(|z| z.im * units.eps0 * units.c);
        EMFields::new(e, b).with_media_fields(d, h)
    }

    /// `f' = O f`, `h' = O h`.
    pub fn transform(&self, g: &GroupElement) -> Self {
        Self {
            f: g.o() * self.f,
            h: g.o() * self.h,
        }
    }
}

/// `M = (h + f)/2`, `N = (h* - f*)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MNPair {
    pub m: CVec3,
    pub n: CVec3,
}

pub fn mn_split(fh: &FHPair) -> MNPair {
    MNPair {
        m: (fh.h + fh.f) * re(0.5),
        n: conj3(&(fh.h - fh.f)) * re(0.5),
    }
}

pub fn mn_join(mn: &MNPair) -> FHPair {
    let n_conj = conj3(&mn.n);
    FHPair {
        f: mn.m - n_conj,
        h: mn.m + n_conj,
    }
}

impl MNPair {
    /// `M' = O M`, `N' = O* N`.
    pub fn transform(&self, g: &GroupElement) -> Self {
        Self {
            m: g.o() * self.m,
            n: g.o().map(|z| z.conj()) * self.n,
        }
    }
}

/// Antisymmetric field tensor, contravariant components `F^{αβ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldTensor {
    pub f: Matrix4<f64>,
}

pub fn tensor_from_fields(fields: &EMFields, c: f64) -> FieldTensor {
    tensor_from_e_cb(&fields.e, &(fields.b * c))
}

/// Tensor from `E` and `cB`.
pub fn tensor_from_e_cb(e: &Vector3<f64>, cb: &Vector3<f64>) -> FieldTensor {
    let mut f = Matrix4::zeros();
    for i in 0..3 {
        f[(i + 1, 0)] = e[i];
        f[(0, i + 1)] = -e[i];
    }
    f[(2, 3)] = -cb[0];
    f[(3, 2)] = cb[0];
    f[(3, 1)] = -cb[1];
    f[(1, 3)] = cb[1];
    f[(1, 2)] = -cb[2];
    f[(2, 1)] = cb[2];
    FieldTensor { f }
}

/// Dual tensor `F̃^{ρσ}` with `F̃_{ρσ} = ½ ε_{ρσαβ} F^{αβ}`.
pub fn dual(t: &FieldTensor) -> FieldTensor {
    let eta = [1.0, -1.0, -1.0, -1.0];
    let f = Matrix4::from_fn(|rho, sigma| {
        let mut lower_sum = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                // ε_{ρσαβ} = -ε^{ρσαβ}
                lower_sum -= 0.5 * levi_civita([rho, sigma, a, b]) * t.f[(a, b)];
            }
        }
        eta[rho] * eta[sigma] * lower_sum
    });
    FieldTensor { f }
}

impl FieldTensor {
    /// `Eⁱ = F^{i0}`.
    pub fn electric(&self) -> Vector3<f64> {
        Vector3::new(self.f[(1, 0)], self.f[(2, 0)], self.f[(3, 0)])
    }

    /// `cBⁱ`, read from `F^{ij} = -ε_{ijk} cBᵏ`.
    pub fn magnetic_c(&self) -> Vector3<f64> {
        Vector3::new(-self.f[(2, 3)], -self.f[(3, 1)], -self.f[(1, 2)])
    }

    pub fn to_fields(&self, c: f64) -> EMFields {
        EMFields::new(self.electric(), self.magnetic_c() / c)
    }

    /// Riemann-Silberstein vector `E + icB` of this tensor.
    pub fn rs(&self) -> CVec3 {
        let e = self.electric();
        let cb = self.magnetic_c();
        CVec3::from_fn(|i, _| C64::new(e[i], cb[i]))
    }

    /// `F' = Λ F Λᵀ`.
    pub fn transform(&self, lorentz: &Matrix4<f64>) -> Self {
        Self {
            f: lorentz * self.f * lorentz.transpose(),
        }
    }

    /// Largest deviation from antisymmetry.
    pub fn antisymmetry_defect(&self) -> f64 {
        (self.f + self.f.transpose()).abs().max()
    }
}

/// Electromagnetic 4-vectors `e^α = u_β F^{αβ}`, `b^α = u_β F̃^{αβ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EBFourVectors {
    pub e: Vector4<f64>,
    pub b: Vector4<f64>,
    pub u: Vector4<f64>,
}

fn check_unit_timelike(u: &Vector4<f64>) -> Result<()> {
    let norm_sq = minkowski_dot(u, u);
    if !((norm_sq - 1.0).abs() <= UNIT_TIMELIKE_TOL) {
        return Err(Error::NonUnitTimelike { norm_sq });
    }
    Ok(())
}

/// Index contraction `e^α = F^{αβ} u_β`, `b^α = F̃^{αβ} u_β`.
pub fn eb_from_tensor(t: &FieldTensor, u: &Vector4<f64>) -> Result<EBFourVectors> {
    check_unit_timelike(u)?;
    let u_low = lower(u);
    Ok(EBFourVectors {
        e: t.f * u_low,
        b: dual(t).f * u_low,
        u: *u,
    })
}

/// `F^{αβ} = e^α u^β - e^β u^α - ε^{αβρσ} b_ρ u_σ`.
pub fn tensor_from_eb(eb: &EBFourVectors) -> Result<FieldTensor> {
    check_unit_timelike(&eb.u)?;
    for (which, v) in [("e", &eb.e), ("b", &eb.b)] {
        let dot = minkowski_dot(v, &eb.u);
        if dot.abs() > UNIT_TIMELIKE_TOL * (1.0 + v.amax()) {
            return Err(Error::NotOrthogonal { which, dot });
        }
    }
    let u = &eb.u;
    let u_low = lower(u);
    let b_low = lower(&eb.b);
    let f = Matrix4::from_fn(|a, b| {
        let mut eps_term = 0.0;
        for r in 0..4 {
            for s in 0..4 {
                eps_term += levi_civita([a, b, r, s]) * b_low[r] * u_low[s];
            }
        }
        eb.e[a] * u[b] - eb.e[b] * u[a] - eps_term
    });
    Ok(FieldTensor { f })
}

/// 3-vector form of `(e, b)`:
/// `e⁰ = u⃗·E`, `e⃗ = u⁰E + c u⃗×B`, `b⁰ = c u⃗·B`, `b⃗ = c u⁰B - u⃗×E`.
pub fn eb_from_fields(fields: &EMFields, c: f64, u: &Vector4<f64>) -> Result<EBFourVectors> {
    check_unit_timelike(u)?;
    let w = Vector3::new(u[1], u[2], u[3]);
    let e3 = &fields.e;
    let cb = fields.b * c;
    let ev = e3 * u[0] + w.cross(&cb);
    let bv = cb * u[0] - w.cross(e3);
    Ok(EBFourVectors {
        e: Vector4::new(w.dot(e3), ev[0], ev[1], ev[2]),
        b: Vector4::new(w.dot(&cb), bv[0], bv[1], bv[2]),
        u: *u,
    })
}

/// `Φ^α = e^α + i b^α`, built from the 3-vector formulas.
pub fn u_map(fields: &EMFields, c: f64, u: &Vector4<f64>) -> Result<CVec4> {
    let eb = eb_from_fields(fields, c, u)?;
    Ok(CVec4::from_fn(|i, _| C64::new(eb.e[i], eb.b[i])))
}

/// Inverse map: `E = e⃗u⁰ - e⁰u⃗ + b⃗×u⃗`, `cB = b⃗u⁰ - b⁰u⃗ - e⃗×u⃗`.
pub fn u_inverse(phi: &CVec4, c: f64, u: &Vector4<f64>) -> Result<EMFields> {
    check_unit_timelike(u)?;
    let w = Vector3::new(u[1], u[2], u[3]);
    let e0 = phi[0].re;
    let b0 = phi[0].im;
    let ev = Vector3::new(phi[1].re, phi[2].re, phi[3].re);
    let bv = Vector3::new(phi[1].im, phi[2].im, phi[3].im);
    let e = ev * u[0] - w * e0 + bv.cross(&w);
    let cb = bv * u[0] - w * b0 - ev.cross(&w);
    Ok(EMFields::new(e, cb / c))
}

/// Complex-linear form of the same change of variables acting on `Ψ = (0, ψ)`:
/// `Φ = (u⃗·ψ, u⁰ψ - i u⃗×ψ)`.
pub fn u_matrix(u: &Vector4<f64>) -> CMat4 {
    let w = complexify3(&Vector3::new(u[1], u[2], u[3]));
    let wx = crate::so3c::cross_operator(&w);
    let mut m = CMat4::zeros();
    for j in 0..3 {
        m[(0, j + 1)] = w[j];
    }
    let block = crate::linalg::CMat3::identity() * re(u[0]) - wx * IM;
    m.fixed_view_mut::<3, 3>(1, 1).copy_from(&block);
    m
}

/// Inverse of [`u_matrix`] on columns with `Φ·u = 0`: `ψ = u⁰Φ⃗ - Φ⁰u⃗ + i u⃗×Φ⃗`.
pub fn u_matrix_inverse(u: &Vector4<f64>) -> CMat4 {
    let w = complexify3(&Vector3::new(u[1], u[2], u[3]));
    let wx = crate::so3c::cross_operator(&w);
    let mut m = CMat4::zeros();
    for j in 0..3 {
        m[(j + 1, 0)] = -w[j];
    }
    let block = crate::linalg::CMat3::identity() * re(u[0]) + wx * IM;
    m.fixed_view_mut::<3, 3>(1, 1).copy_from(&block);
    m
}

/// `ψ × φ` helper re-exported for evaluators.
pub fn rs_cross(a: &CVec3, b: &CVec3) -> CVec3 {
    cross(a, b)
}
