//! The complex rotation group SO(3,C).
//!
//! An element is parametrised by a complex unit quaternion `(c₀, c⃗)` with
//! `c₀² + c⃗·c⃗ = 1` (bilinear, not Hermitian). The 3x3 matrix is
//!
//! ```text
//! O(c) = I + 2 [ c₀ c⃗ˣ + (c⃗ˣ)² ]
//! ```
//!
//! Real parameters give Euclidean rotations (`c₀ = cos a/2`, `c⃗ = sin a/2 n⃗`);
//! the substitution `c₀ = ch b/2`, `c⃗ = i sh b/2 n⃗` gives the Lorentz boost with
//! rapidity `b` along `n⃗`. Acting on the Riemann-Silberstein vector, `ψ' = O ψ`
//! reproduces the tensor law `F' = Λ F Λᵀ` with the Lorentz matrix returned by
//! [`SO3CParam::lorentz`].

use nalgebra::{Matrix2, Matrix4, Vector3};
use serde::{Deserialize, Serialize};

use crate::bases::{AlphaBasis, BetaBasis, IdentityCheck};
use crate::error::{Error, Result};
use crate::linalg::{bilinear_dot, cmat4_from_crows, cross, embed3, re, CMat3, CMat4, CVec3, C64, IM};

/// Tolerance on the quaternion constraint `c₀² + c⃗·c⃗ = 1`.
pub const QUATERNION_TOL: f64 = 1e-12;

/// Tolerance on `|n| = 1` for rotation and boost axes.
pub const AXIS_TOL: f64 = 1e-9;

/// Complex unit quaternion `(c₀, c⃗)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SO3CParam {
    pub c0: C64,
    pub c: CVec3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Rotation,
    Boost,
    General,
}

/// Boost rapidity `b` along the real unit axis `n⃗`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoostSpec {
    pub rapidity: f64,
    pub axis: Vector3<f64>,
}

impl BoostSpec {
    pub fn new(rapidity: f64, axis: Vector3<f64>) -> Result<Self> {
        check_unit_axis(&axis)?;
        Ok(Self { rapidity, axis })
    }

    /// Boost along `ẑ`.
    pub fn along_z(rapidity: f64) -> Self {
        Self {
            rapidity,
            axis: Vector3::z(),
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            rapidity: -self.rapidity,
            axis: self.axis,
        }
    }
}

fn check_unit_axis(axis: &Vector3<f64>) -> Result<()> {
    let norm = axis.norm();
    if (norm - 1.0).abs() > AXIS_TOL || !norm.is_finite() {
        return Err(Error::NonUnitAxis { norm });
    }
    Ok(())
}

/// The matrix `c⃗ˣ` with `(c⃗ˣ)_{kl} = -ε_{klj} c_j`, so that `c⃗ˣ v = c⃗ × v`.
pub fn cross_operator(c: &CVec3) -> CMat3 {
    let z = C64::new(0.0, 0.0);
    CMat3::new(z, -c[2], c[1], c[2], z, -c[0], -c[1], c[0], z)
}

impl SO3CParam {
    pub fn identity() -> Self {
        Self {
            c0: re(1.0),
            c: CVec3::zeros(),
        }
    }

    /// Checked constructor; rejects parameters off the unit constraint.
    pub fn new(c0: C64, c: CVec3) -> Result<Self> {
        let p = Self { c0, c };
        let defect = p.norm_defect();
        if !(defect <= QUATERNION_TOL) {
            return Err(Error::NonUnitQuaternion { defect });
        }
        Ok(p)
    }

    /// `|c₀² + c⃗·c⃗ - 1|`.
    pub fn norm_defect(&self) -> f64 {
        (self.c0 * self.c0 + bilinear_dot(&self.c, &self.c) - 1.0).norm()
    }

    /// Hamilton product; `O(p q) = O(p) O(q)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            c0: self.c0 * rhs.c0 - bilinear_dot(&self.c, &rhs.c),
            c: rhs.c * self.c0 + self.c * rhs.c0 + cross(&self.c, &rhs.c),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            c0: self.c0,
            c: -self.c,
        }
    }

    /// `O(c) = I + 2 [c₀ c⃗ˣ + (c⃗ˣ)²]`.
    pub fn matrix(&self) -> CMat3 {
        let x = cross_operator(&self.c);
        CMat3::identity() + (x * self.c0 + x * x) * re(2.0)
    }

    /// Real Lorentz matrix `Λ^μ_ν` of the same group element, obtained from the
    /// SL(2,C) lift `A = c₀ - i c⃗·σ⃗` as `Λ^μ_ν = ½ tr(σ_μ A σ_ν A†)`.
    pub fn lorentz(&self) -> Matrix4<f64> {
        let z = C64::new(0.0, 0.0);
        let one = re(1.0);
        let sigma = [
            Matrix2::new(one, z, z, one),
            Matrix2::new(z, one, one, z),
            Matrix2::new(z, -IM, IM, z),
            Matrix2::new(one, z, z, -one),
        ];
        let a = sigma[0] * self.c0
            - (sigma[1] * self.c[0] + sigma[2] * self.c[1] + sigma[3] * self.c[2]) * IM;
        let a_dag = a.adjoint();
        Matrix4::from_fn(|mu, nu| 0.5 * (sigma[mu] * a * sigma[nu] * a_dag).trace().re)
    }

    /// Classifies the element from its parameters: real parameters are
    /// rotations, real `c₀` with purely imaginary `c⃗` are boosts.
    pub fn classify(&self) -> ElementKind {
        if self.c0.im == 0.0 && self.c.iter().all(|z| z.im == 0.0) {
            ElementKind::Rotation
        } else if self.c0.im == 0.0 && self.c.iter().all(|z| z.re == 0.0) {
            ElementKind::Boost
        } else {
            ElementKind::General
        }
    }
}

/// An element of SO(3,C) with its 3x3 matrix `O`, 4x4 embedding
/// `S = diag(1, O)` and the Lorentz matrix acting on coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "ParamRepr", try_from = "ParamRepr")]
pub struct GroupElement {
    param: SO3CParam,
    kind: ElementKind,
    o: CMat3,
    s: CMat4,
    lorentz: Matrix4<f64>,
}

impl GroupElement {
    pub fn from_param(param: SO3CParam) -> Self {
        let kind = param.classify();
        Self::with_kind(param, kind)
    }

    fn with_kind(param: SO3CParam, kind: ElementKind) -> Self {
        let o = param.matrix();
        Self {
            param,
            kind,
            o,
            s: embed3(&o),
            lorentz: param.lorentz(),
        }
    }

    pub fn identity() -> Self {
        Self::with_kind(SO3CParam::identity(), ElementKind::Rotation)
    }

    pub fn param(&self) -> &SO3CParam {
        &self.param
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    /// The complex orthogonal 3x3 matrix.
    pub fn o(&self) -> &CMat3 {
        &self.o
    }

    /// `O⁻¹ = Oᵀ`.
    pub fn o_inv(&self) -> CMat3 {
        self.o.transpose()
    }

    /// `S = diag(1, O)`.
    pub fn s(&self) -> &CMat4 {
        &self.s
    }

    /// `S⁻¹ = diag(1, Oᵀ)`.
    pub fn s_inv(&self) -> CMat4 {
        embed3(&self.o.transpose())
    }

    /// Coordinate map `x' = Λ x`.
    pub fn lorentz(&self) -> &Matrix4<f64> {
        &self.lorentz
    }

    /// `Λ⁻¹ = η Λᵀ η`.
    pub fn lorentz_inv(&self) -> Matrix4<f64> {
        let eta = crate::linalg::metric();
        eta * self.lorentz.transpose() * eta
    }

    pub fn inverse(&self) -> Self {
        Self::with_kind(self.param.inverse(), self.kind)
    }

    /// Rapidity and axis when the element is a pure boost (`b ≥ 0`).
    pub fn boost_spec(&self) -> Option<BoostSpec> {
        if self.kind != ElementKind::Boost {
            return None;
        }
        let w = self.param.c.map(|z| z.im);
        let sh_half = w.norm();
        let sign = if self.param.c0.re < 0.0 { -1.0 } else { 1.0 };
        if sh_half == 0.0 {
            return Some(BoostSpec::along_z(0.0));
        }
        Some(BoostSpec {
            rapidity: 2.0 * sh_half.asinh(),
            axis: w * (sign / sh_half),
        })
    }
}

/// Group product `g₁ g₂`: `O = O₁O₂`, `S = S₁S₂`.
pub fn compose(g1: &GroupElement, g2: &GroupElement) -> GroupElement {
    let param = g1.param.mul(&g2.param);
    let kind = match (g1.kind, g2.kind) {
        (ElementKind::Rotation, ElementKind::Rotation) => ElementKind::Rotation,
        _ => param.classify(),
    };
    GroupElement::with_kind(param, kind)
}

/// Euclidean rotation by `angle` about the unit `axis`.
///
/// A zero angle yields the identity for any axis; otherwise the axis must be
/// unit within [`AXIS_TOL`] (degenerate axes are rejected, not renormalised).
pub fn rotation(angle: f64, axis: Vector3<f64>) -> Result<GroupElement> {
    if angle == 0.0 {
        return Ok(GroupElement::identity());
    }
    check_unit_axis(&axis)?;
    let (s, c) = (0.5 * angle).sin_cos();
    let param = SO3CParam {
        c0: re(c),
        c: axis.map(|n| re(s * n)),
    };
    Ok(GroupElement::with_kind(param, ElementKind::Rotation))
}

/// Lorentz boost: the rotation continued to the imaginary angle `a = i b`.
pub fn boost(spec: &BoostSpec) -> GroupElement {
    let half = 0.5 * spec.rapidity;
    let param = SO3CParam {
        c0: re(half.cosh()),
        c: spec.axis.map(|n| C64::new(0.0, half.sinh() * n)),
    };
    GroupElement::with_kind(param, ElementKind::Boost)
}

/// Boost matrix written directly in terms of `ch b`, `sh b` and the axis.
pub fn boost_matrix_closed_form(spec: &BoostSpec) -> CMat3 {
    let n = &spec.axis;
    let (sh, ch) = (spec.rapidity.sinh(), spec.rapidity.cosh());
    let k = 1.0 - ch;
    let ish = |x: f64| C64::new(0.0, sh * x);
    CMat3::new(
        re(1.0 - k * (n[1] * n[1] + n[2] * n[2])),
        -ish(n[2]) + k * n[0] * n[1],
        ish(n[1]) + k * n[0] * n[2],
        ish(n[2]) + k * n[0] * n[1],
        re(1.0 - k * (n[2] * n[2] + n[0] * n[0])),
        -ish(n[0]) + k * n[1] * n[2],
        -ish(n[1]) + k * n[0] * n[2],
        ish(n[0]) + k * n[1] * n[2],
        re(1.0 - k * (n[0] * n[0] + n[1] * n[1])),
    )
}

/// `O²` of a boost via the double-rapidity closed form.
pub fn double_angle_square(spec: &BoostSpec) -> CMat3 {
    let n = &spec.axis;
    let b2 = 2.0 * spec.rapidity;
    let (sh, ch) = (b2.sinh(), b2.cosh());
    let k = 1.0 - ch;
    let ish = |x: f64| C64::new(0.0, sh * x);
    CMat3::new(
        re(ch + k * n[0] * n[0]),
        k * n[0] * n[1] - ish(n[2]),
        k * n[2] * n[0] + ish(n[1]),
        k * n[0] * n[1] + ish(n[2]),
        re(ch + k * n[1] * n[1]),
        k * n[1] * n[2] - ish(n[0]),
        k * n[2] * n[0] - ish(n[1]),
        k * n[1] * n[2] + ish(n[0]),
        re(ch + k * n[2] * n[2]),
    )
}

/// `ch b - i sh b (n·g)` for a triple of generators `g`.
pub fn compensator(spec: &BoostSpec, generators: &[CMat4; 3]) -> CMat4 {
    let (sh, ch) = (spec.rapidity.sinh(), spec.rapidity.cosh());
    let n_dot = generators[0] * re(spec.axis[0])
        + generators[1] * re(spec.axis[1])
        + generators[2] * re(spec.axis[2]);
    CMat4::identity() * re(ch) - n_dot * C64::new(0.0, sh)
}

/// Boost compensator `Δ_(α) = ch b - i sh b n_j αʲ`.
pub fn delta_alpha(spec: &BoostSpec, alphas: &AlphaBasis) -> CMat4 {
    compensator(spec, &alphas.a)
}

/// Boost compensator `Δ_(β) = ch b - i sh b n_j βʲ`, satisfying `Δ_(α) S = Δ_(β) S⁻¹`.
pub fn delta_beta(spec: &BoostSpec, betas: &BetaBasis) -> CMat4 {
    compensator(spec, &betas.b)
}

/// Rapidities at which [`z_compensator_checks`] is evaluated.
pub const COMPENSATOR_GRID: [f64; 7] = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];

/// Identities of the compensator `Δ = ch b - i sh b α³` for a boost along z.
///
/// The transverse pair reads `Δ(ch α¹ + i sh α²) = α¹` and
/// `Δ(-i sh α¹ + ch α²) = α²`.
pub fn z_compensator_checks(b: f64) -> Vec<IdentityCheck> {
    let alpha = AlphaBasis::canonical();
    let spec = BoostSpec::along_z(b);
    let (sh, ch) = (b.sinh(), b.cosh());
    let d = delta_alpha(&spec, &alpha);
    let [a1, a2, a3] = alpha.a;
    let z = re(0.0);
    let product = cmat4_from_crows([
        [re(ch), z, z, C64::new(0.0, -sh)],
        [z, re(1.0), z, z],
        [z, z, re(1.0), z],
        [C64::new(0.0, sh), z, z, re(ch)],
    ]);
    let g = boost(&spec);
    let tag = |name: &str| format!("{name} (b = {b})");
    vec![
        IdentityCheck::new(
            tag("Delta (-i) = -i ch - sh alpha^3"),
            &(d * (-IM)),
            &(CMat4::identity() * C64::new(0.0, -ch) - a3 * re(sh)),
        ),
        IdentityCheck::new(
            tag("Delta alpha^3 = i sh + ch alpha^3"),
            &(d * a3),
            &(CMat4::identity() * C64::new(0.0, sh) + a3 * re(ch)),
        ),
        IdentityCheck::new(
            tag("Delta (ch alpha^1 + i sh alpha^2) = alpha^1"),
            &(d * (a1 * re(ch) + a2 * C64::new(0.0, sh))),
            &a1,
        ),
        IdentityCheck::new(
            tag("Delta (-i sh alpha^1 + ch alpha^2) = alpha^2"),
            &(d * (a1 * C64::new(0.0, -sh) + a2 * re(ch))),
            &a2,
        ),
        IdentityCheck::new(tag("Delta_alpha S = explicit product"), &(d * g.s()), &product),
        IdentityCheck::new(
            tag("Delta_beta S^-1 = explicit product"),
            &(delta_beta(&spec, &BetaBasis::new()) * g.s_inv()),
            &product,
        ),
    ]
}

#[derive(Serialize, Deserialize)]
struct ParamRepr {
    c0: [f64; 2],
    c: [[f64; 2]; 3],
}

impl From<GroupElement> for ParamRepr {
    fn from(g: GroupElement) -> Self {
        let p = g.param;
        ParamRepr {
            c0: [p.c0.re, p.c0.im],
            c: [0, 1, 2].map(|i| [p.c[i].re, p.c[i].im]),
        }
    }
}

impl TryFrom<ParamRepr> for GroupElement {
    type Error = Error;

    fn try_from(r: ParamRepr) -> Result<Self> {
        let c0 = C64::new(r.c0[0], r.c0[1]);
        let c = CVec3::new(
            C64::new(r.c[0][0], r.c[0][1]),
            C64::new(r.c[1][0], r.c[1][1]),
            C64::new(r.c[2][0], r.c[2][1]),
        );
        Ok(GroupElement::from_param(SO3CParam::new(c0, c)?))
    }
}
