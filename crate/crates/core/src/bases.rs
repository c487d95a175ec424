//! The `α`, `β`, Dirac `γ` and Esposito `Γ(u)` matrix families.
//!
//! All fixed matrices have Gaussian-integer entries, so their algebra is
//! checked with exact floating point equality: every reported deviation of
//! [`Algebra::checks`] for these families is exactly zero.

use nalgebra::Vector4;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    cmat4_from_crows, cmat4_from_rows, levi_civita, lower, max_abs_diff, minkowski_dot, re,
    CMat4, C64, IM,
};

/// Tolerance on `u·u = 1` for Esposito's reference vector.
pub const UNIT_TIMELIKE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaVariant {
    /// `α⁰ = I`, `(αʲ)² = -I`: the form used throughout for `(-i∂₀ + αʲ∂ⱼ)Ψ = J`.
    Canonical,
    /// `α⁰ = diag(0,1,1,1)` with vanishing first columns, tied to `Γ(u)` at rest.
    Esposito,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBasis {
    pub variant: AlphaVariant,
    pub a0: CMat4,
    pub a: [CMat4; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetaBasis {
    pub b: [CMat4; 3],
}

/// Dirac matrices in the spinor basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracBasis {
    pub g: [CMat4; 4],
    pub g5: CMat4,
}

/// Esposito's matrices `(Γ^α)^β_γ` for a unit timelike 4-vector `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct EspositoGamma {
    pub u: Vector4<f64>,
    pub g: [CMat4; 4],
}

/// One named identity with its largest entrywise deviation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub max_abs_dev: f64,
}

impl IdentityCheck {
    pub fn new(identity: impl Into<String>, lhs: &CMat4, rhs: &CMat4) -> Self {
        Self {
            identity: identity.into(),
            max_abs_dev: max_abs_diff(lhs.iter(), rhs.iter()),
        }
    }
}

/// A matrix family with a list of algebraic relations to verify.
pub trait Algebra {
    fn checks(&self) -> Vec<IdentityCheck>;
}

/// Runs the algebra checks of any basis.
pub fn verify_algebra(basis: &dyn Algebra) -> Vec<IdentityCheck> {
    basis.checks()
}

fn i4() -> CMat4 {
    CMat4::identity()
}

fn commutator(a: &CMat4, b: &CMat4) -> CMat4 {
    a * b - b * a
}

fn anticommutator(a: &CMat4, b: &CMat4) -> CMat4 {
    a * b + b * a
}

impl AlphaBasis {
    pub fn new(variant: AlphaVariant) -> Self {
        match variant {
            AlphaVariant::Canonical => Self::canonical(),
            AlphaVariant::Esposito => Self::esposito(),
        }
    }

    pub fn canonical() -> Self {
        Self {
            variant: AlphaVariant::Canonical,
            a0: i4(),
            a: [
                cmat4_from_rows([
                    [0., 1., 0., 0.],
                    [-1., 0., 0., 0.],
                    [0., 0., 0., -1.],
                    [0., 0., 1., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 1., 0.],
                    [0., 0., 0., 1.],
                    [-1., 0., 0., 0.],
                    [0., -1., 0., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 0., 1.],
                    [0., 0., -1., 0.],
                    [0., 1., 0., 0.],
                    [-1., 0., 0., 0.],
                ]),
            ],
        }
    }

    pub fn esposito() -> Self {
        Self {
            variant: AlphaVariant::Esposito,
            a0: cmat4_from_rows([
                [0., 0., 0., 0.],
                [0., 1., 0., 0.],
                [0., 0., 1., 0.],
                [0., 0., 0., 1.],
            ]),
            a: [
                cmat4_from_rows([
                    [0., 1., 0., 0.],
                    [0., 0., 0., 0.],
                    [0., 0., 0., -1.],
                    [0., 0., 1., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 1., 0.],
                    [0., 0., 0., 1.],
                    [0., 0., 0., 0.],
                    [0., -1., 0., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 0., 1.],
                    [0., 0., -1., 0.],
                    [0., 1., 0., 0.],
                    [0., 0., 0., 0.],
                ]),
            ],
        }
    }
}

impl Algebra for AlphaBasis {
    fn checks(&self) -> Vec<IdentityCheck> {
        let a = &self.a;
        match self.variant {
            AlphaVariant::Canonical => {
                let mut out = Vec::new();
                for j in 0..3 {
                    out.push(IdentityCheck::new(
                        format!("(alpha^{})^2 = -I", j + 1),
                        &(a[j] * a[j]),
                        &-i4(),
                    ));
                }
                for (j, k, l) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    out.push(IdentityCheck::new(
                        format!("alpha^{} alpha^{} = alpha^{}", j + 1, k + 1, l + 1),
                        &(a[j] * a[k]),
                        &a[l],
                    ));
                    out.push(IdentityCheck::new(
                        format!("alpha^{} alpha^{} = -alpha^{}", k + 1, j + 1, l + 1),
                        &(a[k] * a[j]),
                        &-a[l],
                    ));
                }
                out
            }
            AlphaVariant::Esposito => {
                let mut out = vec![IdentityCheck::new(
                    "esposito alpha^0 = diag(0,1,1,1)",
                    &self.a0,
                    &CMat4::from_diagonal(&Vector4::new(0.0, 1.0, 1.0, 1.0).map(re)),
                )];
                for j in 0..3 {
                    let mut first_col = CMat4::zeros();
                    first_col.set_column(0, &a[j].column(0));
                    out.push(IdentityCheck::new(
                        format!("esposito alpha^{} first column = 0", j + 1),
                        &first_col,
                        &CMat4::zeros(),
                    ));
                }
                out
            }
        }
    }
}

impl BetaBasis {
    pub fn new() -> Self {
        Self {
            b: [
                cmat4_from_rows([
                    [0., 1., 0., 0.],
                    [-1., 0., 0., 0.],
                    [0., 0., 0., 1.],
                    [0., 0., -1., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 1., 0.],
                    [0., 0., 0., -1.],
                    [-1., 0., 0., 0.],
                    [0., 1., 0., 0.],
                ]),
                cmat4_from_rows([
                    [0., 0., 0., 1.],
                    [0., 0., 1., 0.],
                    [0., -1., 0., 0.],
                    [-1., 0., 0., 0.],
                ]),
            ],
        }
    }
}

impl Default for BetaBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl Algebra for BetaBasis {
    fn checks(&self) -> Vec<IdentityCheck> {
        let b = &self.b;
        let mut out = Vec::new();
        for j in 0..3 {
            out.push(IdentityCheck::new(
                format!("(beta^{})^2 = -I", j + 1),
                &(b[j] * b[j]),
                &-i4(),
            ));
        }
        for (j, k, l) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            out.push(IdentityCheck::new(
                format!("beta^{} beta^{} = -beta^{}", j + 1, k + 1, l + 1),
                &(b[j] * b[k]),
                &-b[l],
            ));
            out.push(IdentityCheck::new(
                format!("beta^{} beta^{} = +beta^{}", k + 1, j + 1, l + 1),
                &(b[k] * b[j]),
                &b[l],
            ));
        }
        out
    }
}

/// `[αʲ, βᵏ] = 0` for the canonical `α` and the `β` triple.
pub struct AlphaBetaCommutation<'a> {
    pub alpha: &'a AlphaBasis,
    pub beta: &'a BetaBasis,
}

impl Algebra for AlphaBetaCommutation<'_> {
    fn checks(&self) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        for j in 0..3 {
            for k in 0..3 {
                out.push(IdentityCheck::new(
                    format!("[alpha^{}, beta^{}] = 0", j + 1, k + 1),
                    &commutator(&self.alpha.a[j], &self.beta.b[k]),
                    &CMat4::zeros(),
                ));
            }
        }
        out
    }
}

/// The map `α¹ → i, α² → j, α³ → k` closes on products like the quaternion units.
pub struct QuaternionClosure<'a>(pub &'a AlphaBasis);

impl Algebra for QuaternionClosure<'_> {
    fn checks(&self) -> Vec<IdentityCheck> {
        // Hamilton table: units[q] * units[r] = sign * units[idx] (idx 0 = identity).
        let a = &self.0.a;
        let units = [i4(), a[0], a[1], a[2]];
        let table: [[(f64, usize); 4]; 4] = [
            [(1., 0), (1., 1), (1., 2), (1., 3)],
            [(1., 1), (-1., 0), (1., 3), (-1., 2)],
            [(1., 2), (-1., 3), (-1., 0), (1., 1)],
            [(1., 3), (1., 2), (-1., 1), (-1., 0)],
        ];
        let names = ["1", "i", "j", "k"];
        let mut out = Vec::new();
        for q in 1..4 {
            for r in 1..4 {
                let (sign, idx) = table[q][r];
                out.push(IdentityCheck::new(
                    format!(
                        "quaternion {}{} = {}{}",
                        names[q],
                        names[r],
                        if sign < 0.0 { "-" } else { "" },
                        names[idx]
                    ),
                    &(units[q] * units[r]),
                    &(units[idx] * re(sign)),
                ));
            }
        }
        out
    }
}

impl DiracBasis {
    /// Spinor-basis matrices; `γ⁵` is computed as `-iγ⁰γ¹γ²γ³`.
    pub fn new() -> Self {
        let z = re(0.0);
        let o = re(1.0);
        let g0 = cmat4_from_rows([
            [0., 0., 1., 0.],
            [0., 0., 0., 1.],
            [1., 0., 0., 0.],
            [0., 1., 0., 0.],
        ]);
        let g1 = cmat4_from_rows([
            [0., 0., 0., -1.],
            [0., 0., -1., 0.],
            [0., 1., 0., 0.],
            [1., 0., 0., 0.],
        ]);
        let g2 = cmat4_from_crows([
            [z, z, z, IM],
            [z, z, -IM, z],
            [z, -IM, z, z],
            [IM, z, z, z],
        ]);
        let g3 = cmat4_from_crows([[z, z, -o, z], [z, z, z, o], [o, z, z, z], [z, -o, z, z]]);
        let g5 = g0 * g1 * g2 * g3 * (-IM);
        Self {
            g: [g0, g1, g2, g3],
            g5,
        }
    }
}

impl Default for DiracBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl Algebra for DiracBasis {
    fn checks(&self) -> Vec<IdentityCheck> {
        let eta = [1.0, -1.0, -1.0, -1.0];
        let mut out = Vec::new();
        for a in 0..4 {
            for b in a..4 {
                let rhs = if a == b { i4() * re(2.0 * eta[a]) } else { CMat4::zeros() };
                out.push(IdentityCheck::new(
                    format!("{{gamma^{a}, gamma^{b}}} = 2 g^{a}{b} I"),
                    &anticommutator(&self.g[a], &self.g[b]),
                    &rhs,
                ));
            }
        }
        out.push(IdentityCheck::new(
            "gamma^5 = diag(-1,-1,1,1)",
            &self.g5,
            &CMat4::from_diagonal(&Vector4::new(-1.0, -1.0, 1.0, 1.0).map(re)),
        ));
        for a in 0..4 {
            out.push(IdentityCheck::new(
                format!("{{gamma^5, gamma^{a}}} = 0"),
                &anticommutator(&self.g5, &self.g[a]),
                &CMat4::zeros(),
            ));
        }
        out
    }
}

/// Expressions of the canonical `α` and the `β` matrices through Dirac matrices.
pub struct DiracMaps<'a> {
    pub dirac: &'a DiracBasis,
    pub alpha: &'a AlphaBasis,
    pub beta: &'a BetaBasis,
}

impl Algebra for DiracMaps<'_> {
    fn checks(&self) -> Vec<IdentityCheck> {
        let g = &self.dirac.g;
        let g5 = &self.dirac.g5;
        let a = &self.alpha.a;
        let b = &self.beta.b;
        vec![
            IdentityCheck::new("alpha^1 = i gamma^0 gamma^2", &a[0], &(g[0] * g[2] * IM)),
            IdentityCheck::new("alpha^2 = gamma^0 gamma^5", &a[1], &(g[0] * g5)),
            IdentityCheck::new("alpha^3 = i gamma^5 gamma^2", &a[2], &(g5 * g[2] * IM)),
            IdentityCheck::new("beta^1 = -gamma^3 gamma^1", &b[0], &-(g[3] * g[1])),
            IdentityCheck::new("beta^2 = -gamma^3", &b[1], &-g[3]),
            IdentityCheck::new("beta^3 = -gamma^1", &b[2], &-g[1]),
        ]
    }
}

impl EspositoGamma {
    /// `(Γ^α)^β_γ = δ^α_γ u^β - δ^β_γ u^α + i ε^{αβρσ} g_{ργ} u_σ`, with `ε⁰¹²³ = +1`.
    pub fn new(u: Vector4<f64>) -> Result<Self> {
        let norm_sq = minkowski_dot(&u, &u);
        if !((norm_sq - 1.0).abs() <= UNIT_TIMELIKE_TOL) {
            return Err(Error::NonUnitTimelike { norm_sq });
        }
        Ok(Self::unchecked(u))
    }

    pub(crate) fn unchecked(u: Vector4<f64>) -> Self {
        let u_low = lower(&u);
        let metric = [1.0, -1.0, -1.0, -1.0];
        let delta = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };
        let g = [0, 1, 2, 3].map(|alpha| {
            CMat4::from_fn(|beta, gamma| {
                let real = delta(alpha, gamma) * u[beta] - delta(beta, gamma) * u[alpha];
                // g_{ργ} is diagonal, so only ρ = γ contributes.
                let imag: f64 = (0..4)
                    .map(|sigma| {
                        levi_civita([alpha, beta, gamma, sigma]) * metric[gamma] * u_low[sigma]
                    })
                    .sum();
                C64::new(real, imag)
            })
        });
        Self { u, g }
    }

    /// Rest-frame matrices, `u = (1, 0, 0, 0)`.
    pub fn rest() -> Self {
        Self::unchecked(Vector4::new(1.0, 0.0, 0.0, 0.0))
    }
}

/// `β = diag(1, -i, -i, -i)`, relating the Esposito-variant `α` to `Γ` at rest:
/// `β(-iα⁰) = Γ⁰` and `βαʲ = Γʲ`.
pub fn beta_diag_conversion() -> CMat4 {
    CMat4::from_diagonal(&Vector4::new(re(1.0), -IM, -IM, -IM))
}

/// Relations tying the Esposito-variant `α` to the rest-frame `Γ` matrices.
pub struct EspositoRest<'a> {
    pub alpha: &'a AlphaBasis,
    pub gamma: &'a EspositoGamma,
}

impl Algebra for EspositoRest<'_> {
    fn checks(&self) -> Vec<IdentityCheck> {
        let beta = beta_diag_conversion();
        let mut out = vec![IdentityCheck::new(
            "beta (-i alpha^0) = Gamma^0",
            &(beta * self.alpha.a0 * (-IM)),
            &self.gamma.g[0],
        )];
        for j in 0..3 {
            out.push(IdentityCheck::new(
                format!("beta alpha^{} = Gamma^{}", j + 1, j + 1),
                &(beta * self.alpha.a[j]),
                &self.gamma.g[j + 1],
            ));
        }
        out
    }
}

/// Hand-entered table of the rest-frame `Γ` matrices. The `(2,4)` entry of
/// `Γ³` is zero, as the defining formula gives.
pub fn tabulated_rest_gammas() -> [CMat4; 4] {
    let z = re(0.0);
    let o = re(1.0);
    [
        cmat4_from_rows([
            [0., 0., 0., 0.],
            [0., -1., 0., 0.],
            [0., 0., -1., 0.],
            [0., 0., 0., -1.],
        ]),
        cmat4_from_crows([[z, o, z, z], [z, z, z, z], [z, z, z, IM], [z, z, -IM, z]]),
        cmat4_from_crows([[z, z, o, z], [z, z, z, -IM], [z, z, z, z], [z, IM, z, z]]),
        cmat4_from_crows([[z, z, z, o], [z, z, IM, z], [z, -IM, z, z], [z, z, z, z]]),
    ]
}
