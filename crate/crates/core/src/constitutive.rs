//! Constitutive relations in complex form.
//!
//! A relation is stored as a pair of 3x3 complex blocks `(A, B)` acting as
//! `2h = A f + B f*`; the inverse direction `2f = C h + D h*` uses the same
//! type. Coefficients for general linear media are obtained by probing the
//! real 6x6 system `Re h = ε Re f + α Im f`, `Im h = β Re f + μ Im f`,
//! which is the unambiguous definition. Here `μ` is the dimensionless
//! inverse-permeability matrix (`H = ε₀cβE + μB/μ₀`), so a scalar medium
//! with permeability `μ` has `μ`-matrix `I/μ`.
//!
//! Under a frame change `f' = O f`, `h' = O h` the blocks become
//! `A' = O A Oᵀ` and `B' = O B Oᵀ · O(O⁻¹)*`. The trailing factor is `I`
//! for rotations and `O²` for boosts. For isotropic blocks the conjugation
//! by `O` is skipped so scalar coefficients stay bit-identical.

use nalgebra::{Matrix3, Matrix6, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::Units;
use crate::linalg::{conj3, re, CMat3, CVec3, C64, IM};
use crate::so3c::{boost, double_angle_square, BoostSpec, ElementKind, GroupElement};

/// Linear medium description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", try_from = "MediaRepr", into = "MediaRepr")]
pub enum MediaSpec {
    /// Isotropic medium with relative permittivity `eps` and permeability `mu`.
    Uniform { eps: f64, mu: f64 },
    /// `D = ε₀εE + ε₀cαB`, `H = ε₀cβE + μB/μ₀` with 3x3 matrices.
    General {
        eps: Matrix3<f64>,
        mu: Matrix3<f64>,
        alpha_m: Matrix3<f64>,
        beta_m: Matrix3<f64>,
    },
}

impl Default for MediaSpec {
    fn default() -> Self {
        Self::vacuum()
    }
}

impl MediaSpec {
    pub fn vacuum() -> Self {
        Self::Uniform { eps: 1.0, mu: 1.0 }
    }

    pub fn uniform(eps: f64, mu: f64) -> Result<Self> {
        let m = Self::Uniform { eps, mu };
        m.validate()?;
        Ok(m)
    }

    pub fn general(
        eps: Matrix3<f64>,
        mu: Matrix3<f64>,
        alpha_m: Matrix3<f64>,
        beta_m: Matrix3<f64>,
    ) -> Result<Self> {
        let m = Self::General {
            eps,
            mu,
            alpha_m,
            beta_m,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Uniform { eps, mu } => {
                if !(eps.is_finite() && *eps > 0.0) {
                    return Err(Error::InvalidMedia(format!("eps must be positive, got {eps}")));
                }
                if !(mu.is_finite() && *mu > 0.0) {
                    return Err(Error::InvalidMedia(format!("mu must be positive, got {mu}")));
                }
            }
            Self::General {
                eps,
                mu,
                alpha_m,
                beta_m,
            } => {
                for (name, m) in [("eps", eps), ("mu", mu), ("alpha_m", alpha_m), ("beta_m", beta_m)] {
                    if m.iter().any(|x| !x.is_finite()) {
                        return Err(Error::InvalidMedia(format!("{name} has non-finite entries")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Phase speed factor `1/√(εμ)` of a uniform medium.
    pub fn index_factor(&self) -> Result<f64> {
        match self {
            Self::Uniform { eps, mu } => Ok(1.0 / (eps * mu).sqrt()),
            Self::General { .. } => Err(Error::Unsupported(
                "phase speed is defined for uniform media only".into(),
            )),
        }
    }

    /// Real system `K` mapping `(Re f, Im f)` to `(Re h, Im h)`.
    pub fn real_system(&self) -> Matrix6<f64> {
        let (eps, mu, alpha, beta) = self.blocks();
        let mut k = Matrix6::zeros();
        k.fixed_view_mut::<3, 3>(0, 0).copy_from(&eps);
        k.fixed_view_mut::<3, 3>(0, 3).copy_from(&alpha);
        k.fixed_view_mut::<3, 3>(3, 0).copy_from(&beta);
        k.fixed_view_mut::<3, 3>(3, 3).copy_from(&mu);
        k
    }

    /// `(ε, μ, α, β)` as matrices; a uniform medium has `μ`-matrix `I/μ`.
    pub fn blocks(&self) -> (Matrix3<f64>, Matrix3<f64>, Matrix3<f64>, Matrix3<f64>) {
        match self {
            Self::Uniform { eps, mu } => (
                Matrix3::identity() * *eps,
                Matrix3::identity() / *mu,
                Matrix3::zeros(),
                Matrix3::zeros(),
            ),
            Self::General {
                eps,
                mu,
                alpha_m,
                beta_m,
            } => (*eps, *mu, *alpha_m, *beta_m),
        }
    }

    /// `(D, H)` from `(E, B)` by direct evaluation of the real relations.
    pub fn apply_real(
        &self,
        e: &Vector3<f64>,
        b: &Vector3<f64>,
        units: &Units,
    ) -> (Vector3<f64>, Vector3<f64>) {
        let (eps, mu, alpha, beta) = self.blocks();
        let d = (eps * e + alpha * b * units.c) * units.eps0;
        let h = beta * e * (units.eps0 * units.c) + mu * b / units.mu0();
        (d, h)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum MediaRepr {
    Uniform {
        eps: f64,
        mu: f64,
    },
    General {
        eps: [[f64; 3]; 3],
        mu: [[f64; 3]; 3],
        #[serde(default)]
        alpha_m: [[f64; 3]; 3],
        #[serde(default)]
        beta_m: [[f64; 3]; 3],
    },
}

fn rows_to_matrix(rows: &[[f64; 3]; 3]) -> Matrix3<f64> {
    Matrix3::from_fn(|i, j| rows[i][j])
}

fn matrix_to_rows(m: &Matrix3<f64>) -> [[f64; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)]))
}

impl TryFrom<MediaRepr> for MediaSpec {
    type Error = Error;

    fn try_from(r: MediaRepr) -> Result<Self> {
        match r {
            MediaRepr::Uniform { eps, mu } => MediaSpec::uniform(eps, mu),
            MediaRepr::General {
                eps,
                mu,
                alpha_m,
                beta_m,
            } => MediaSpec::general(
                rows_to_matrix(&eps),
                rows_to_matrix(&mu),
                rows_to_matrix(&alpha_m),
                rows_to_matrix(&beta_m),
            ),
        }
    }
}

impl From<MediaSpec> for MediaRepr {
    fn from(m: MediaSpec) -> Self {
        match m {
            MediaSpec::Uniform { eps, mu } => MediaRepr::Uniform { eps, mu },
            MediaSpec::General {
                eps,
                mu,
                alpha_m,
                beta_m,
            } => MediaRepr::General {
                eps: matrix_to_rows(&eps),
                mu: matrix_to_rows(&mu),
                alpha_m: matrix_to_rows(&alpha_m),
                beta_m: matrix_to_rows(&beta_m),
            },
        }
    }
}

/// `2·out = A z + B z*`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstitutiveForm {
    pub a: CMat3,
    pub b: CMat3,
}

impl ConstitutiveForm {
    pub fn apply(&self, z: &CVec3) -> CVec3 {
        (self.a * z + self.b * conj3(z)) * re(0.5)
    }

    /// Complex form of a real-linear map given as a 6x6 block matrix on
    /// `(Re z, Im z)`, found by probing with `eⱼ` and `i eⱼ`.
    pub fn from_real(m: &Matrix6<f64>) -> Self {
        let eval = |z: &CVec3| -> CVec3 {
            let x = nalgebra::Vector6::from_fn(|i, _| if i < 3 { z[i].re } else { z[i - 3].im });
            let y = m * x;
            CVec3::from_fn(|i, _| C64::new(y[i], y[i + 3]))
        };
        let mut a = CMat3::zeros();
        let mut b = CMat3::zeros();
        for j in 0..3 {
            let mut e = CVec3::zeros();
            e[j] = re(1.0);
            let real_probe = eval(&e);
            let imag_probe = eval(&(e * IM));
            a.set_column(j, &(real_probe - imag_probe * IM));
            b.set_column(j, &(real_probe + imag_probe * IM));
        }
        Self { a, b }
    }

    /// 6x6 real matrix acting on `(Re z, Im z)`.
    pub fn to_real(&self) -> Matrix6<f64> {
        let sum = self.a + self.b;
        let diff = self.a - self.b;
        let mut m = Matrix6::zeros();
        m.fixed_view_mut::<3, 3>(0, 0)
            .copy_from(&sum.map(|z| 0.5 * z.re));
        m.fixed_view_mut::<3, 3>(0, 3)
            .copy_from(&diff.map(|z| -0.5 * z.im));
        m.fixed_view_mut::<3, 3>(3, 0)
            .copy_from(&sum.map(|z| 0.5 * z.im));
        m.fixed_view_mut::<3, 3>(3, 3)
            .copy_from(&diff.map(|z| 0.5 * z.re));
        m
    }

    /// Blocks in the primed frame.
    pub fn transform(&self, g: &GroupElement) -> Self {
        let o = g.o();
        let ot = o.transpose();
        let conjugate = |m: &CMat3| match scalar_value(m) {
            Some(_) => *m,
            None => o * m * ot,
        };
        let b = match scalar_value(&self.b) {
            Some(s) if s == C64::new(0.0, 0.0) => self.b,
            Some(s) => twist(g) * s,
            None => conjugate(&self.b) * twist(g),
        };
        Self {
            a: conjugate(&self.a),
            b,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        crate::linalg::max_abs_diff(self.a.iter().chain(self.b.iter()), other.a.iter().chain(other.b.iter()))
    }
}

/// Returns the common diagonal value when `m` is exactly a multiple of `I`.
fn scalar_value(m: &CMat3) -> Option<C64> {
    let d = m[(0, 0)];
    let zero = C64::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j { d } else { zero };
            if m[(i, j)] != expected {
                return None;
            }
        }
    }
    Some(d)
}

/// `O (O⁻¹)*`: `I` for rotations, `O²` for boosts (closed form).
pub fn twist(g: &GroupElement) -> CMat3 {
    match g.kind() {
        ElementKind::Rotation => CMat3::identity(),
        ElementKind::Boost => match g.boost_spec() {
            Some(spec) => double_angle_square(&spec),
            None => CMat3::identity(),
        },
        ElementKind::General => g.o() * g.o_inv().map(|z| z.conj()),
    }
}

/// Both directions of a constitutive law in one frame.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstitutiveRelations {
    /// `2h = A f + B f*`.
    pub forward: ConstitutiveForm,
    /// `2f = C h + D h*`.
    pub inverse: ConstitutiveForm,
    /// `None` for the rest frame.
    pub frame: Option<GroupElement>,
}

impl ConstitutiveRelations {
    pub fn h_of_f(&self, f: &CVec3) -> CVec3 {
        self.forward.apply(f)
    }

    pub fn f_of_h(&self, h: &CVec3) -> CVec3 {
        self.inverse.apply(h)
    }

    /// Relations in the frame reached by `g` from the current one.
    pub fn transform(&self, g: &GroupElement) -> Self {
        let frame = match &self.frame {
            Some(prev) => crate::so3c::compose(g, prev),
            None => g.clone(),
        };
        Self {
            forward: self.forward.transform(g),
            inverse: self.inverse.transform(g),
            frame: Some(frame),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.forward
            .max_abs_diff(&other.forward)
            .max(self.inverse.max_abs_diff(&other.inverse))
    }
}

/// Rest-frame relations. Uniform media use the closed form
/// `2h = (ε + 1/μ) f + (ε - 1/μ) f*`, `2f = (1/ε + μ) h + (1/ε - μ) h*`;
/// general media go through [`general_linear_complexify`].
pub fn rest_relations(media: &MediaSpec) -> Result<ConstitutiveRelations> {
    media.validate()?;
    match media {
        MediaSpec::Uniform { eps, mu } => {
            let id = CMat3::identity();
            Ok(ConstitutiveRelations {
                forward: ConstitutiveForm {
                    a: id * re(eps + 1.0 / mu),
                    b: id * re(eps - 1.0 / mu),
                },
                inverse: ConstitutiveForm {
                    a: id * re(1.0 / eps + mu),
                    b: id * re(1.0 / eps - mu),
                },
                frame: None,
            })
        }
        MediaSpec::General { .. } => general_linear_complexify(media),
    }
}

/// Coefficients of any medium from its real 6x6 system; the inverse needs
/// the system to be invertible.
pub fn general_linear_complexify(media: &MediaSpec) -> Result<ConstitutiveRelations> {
    media.validate()?;
    let k = media.real_system();
    let k_inv = k
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::Singular("constitutive system is not invertible".into()))?;
    if k_inv.iter().any(|x| !x.is_finite()) {
        return Err(Error::Singular("constitutive system is not invertible".into()));
    }
    Ok(ConstitutiveRelations {
        forward: ConstitutiveForm::from_real(&k),
        inverse: ConstitutiveForm::from_real(&k_inv),
        frame: None,
    })
}

/// Closed-form coefficients `A = (ε + μ) + i(β - α)`, `B = (ε - μ) + i(β + α)`.
pub fn general_closed_form(media: &MediaSpec) -> ConstitutiveForm {
    let (eps, mu, alpha, beta) = media.blocks();
    ConstitutiveForm {
        a: CMat3::from_fn(|i, j| C64::new(eps[(i, j)] + mu[(i, j)], beta[(i, j)] - alpha[(i, j)])),
        b: CMat3::from_fn(|i, j| C64::new(eps[(i, j)] - mu[(i, j)], beta[(i, j)] + alpha[(i, j)])),
    }
}

/// Relations seen from the frame reached by `g`.
pub fn moving_relations(media: &MediaSpec, g: &GroupElement) -> Result<ConstitutiveRelations> {
    Ok(rest_relations(media)?.transform(g))
}

pub fn moving_relations_uniform(media: &MediaSpec, g: &GroupElement) -> Result<ConstitutiveRelations> {
    if !matches!(media, MediaSpec::Uniform { .. }) {
        return Err(Error::Unsupported("expected uniform media".into()));
    }
    moving_relations(media, g)
}

pub fn moving_relations_general(media: &MediaSpec, spec: &BoostSpec) -> Result<ConstitutiveRelations> {
    let rest = general_linear_complexify(media)?;
    Ok(rest.transform(&boost(spec)))
}

/// Real moving-frame map for a uniform medium:
/// `D'/ε₀ = d_e E' + d_cb cB'`, `H'/(cε₀) = h_e E' + h_cb cB'`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealForm {
    pub d_e: Matrix3<f64>,
    pub d_cb: Matrix3<f64>,
    pub h_e: Matrix3<f64>,
    pub h_cb: Matrix3<f64>,
}

pub fn real_form_moving(media: &MediaSpec, spec: &BoostSpec) -> Result<RealForm> {
    media.validate()?;
    let MediaSpec::Uniform { eps, mu } = *media else {
        return Err(Error::Unsupported("expected uniform media".into()));
    };
    let o2 = double_angle_square(spec);
    let re_o2 = o2.map(|z| z.re);
    let im_o2 = o2.map(|z| z.im);
    let plus = eps + 1.0 / mu;
    let minus = eps - 1.0 / mu;
    let id = Matrix3::identity();
    Ok(RealForm {
        d_e: (id * plus + re_o2 * minus) * 0.5,
        d_cb: im_o2 * (0.5 * minus),
        h_e: im_o2 * (0.5 * minus),
        h_cb: (id * plus - re_o2 * minus) * 0.5,
    })
}

impl RealForm {
    pub fn apply(
        &self,
        e: &Vector3<f64>,
        b: &Vector3<f64>,
        units: &Units,
    ) -> (Vector3<f64>, Vector3<f64>) {
        let cb = b * units.c;
        let d = (self.d_e * e + self.d_cb * cb) * units.eps0;
        let h = (self.h_e * e + self.h_cb * cb) * (units.eps0 * units.c);
        (d, h)
    }

    /// Same map as a 6x6 block matrix on `(E, cB) -> (D/ε₀, H/(cε₀))`.
    pub fn as_matrix(&self) -> Matrix6<f64> {
        let mut m = Matrix6::zeros();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.d_e);
        m.fixed_view_mut::<3, 3>(0, 3).copy_from(&self.d_cb);
        m.fixed_view_mut::<3, 3>(3, 0).copy_from(&self.h_e);
        m.fixed_view_mut::<3, 3>(3, 3).copy_from(&self.h_cb);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use crate::so3c::rotation;

    fn c3(v: [(f64, f64); 3]) -> CVec3 {
        CVec3::from_fn(|i, _| C64::new(v[i].0, v[i].1))
    }

    fn sample_f() -> CVec3 {
        c3([(0.3, -1.2), (0.8, 0.4), (-0.5, 0.9)])
    }

    fn aniso() -> MediaSpec {
        MediaSpec::general(
            Matrix3::new(2.0, 0.1, 0.0, 0.1, 3.0, 0.2, 0.0, 0.2, 4.0),
            Matrix3::new(0.5, 0.0, 0.05, 0.0, 0.7, 0.0, 0.05, 0.0, 0.9),
            Matrix3::new(0.0, 0.02, 0.0, 0.01, 0.0, 0.0, 0.0, 0.0, 0.03),
            Matrix3::new(0.0, 0.01, 0.0, 0.02, 0.0, 0.0, 0.0, 0.0, 0.03),
        )
        .unwrap()
    }

    #[test]
    fn vacuum_is_identity() {
        let rel = rest_relations(&MediaSpec::vacuum()).unwrap();
        assert_eq!(rel.forward.a, CMat3::identity() * re(2.0));
        assert_eq!(rel.forward.b, CMat3::zeros());
        let f = sample_f();
        assert_eq!(rel.h_of_f(&f), f);
    }

    #[test]
    fn dielectric_arithmetic() {
        let rel = rest_relations(&MediaSpec::uniform(2.0, 1.0).unwrap()).unwrap();
        let f = sample_f();
        let expected = (f * re(3.0) + conj3(&f)) * re(0.5);
        assert!(max_abs_diff(rel.h_of_f(&f).iter(), expected.iter()) < 1e-15);
    }

    #[test]
    fn forward_inverse_compose_to_identity() {
        for media in [MediaSpec::uniform(2.5, 0.7).unwrap(), aniso()] {
            let rel = rest_relations(&media).unwrap();
            let f = sample_f();
            let back = rel.f_of_h(&rel.h_of_f(&f));
            assert!(max_abs_diff(back.iter(), f.iter()) < 1e-12);
        }
    }

    #[test]
    fn invalid_media_rejected() {
        assert!(MediaSpec::uniform(0.0, 1.0).is_err());
        assert!(MediaSpec::uniform(1.0, -2.0).is_err());
        let singular = MediaSpec::general(
            Matrix3::identity(),
            Matrix3::zeros(),
            Matrix3::zeros(),
            Matrix3::zeros(),
        )
        .unwrap();
        assert!(matches!(
            general_linear_complexify(&singular),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn scalar_general_matches_uniform() {
        let uniform = MediaSpec::uniform(2.0, 3.0).unwrap();
        let (eps, mu, alpha, beta) = uniform.blocks();
        let general = MediaSpec::general(eps, mu, alpha, beta).unwrap();
        let a = rest_relations(&uniform).unwrap();
        let b = general_linear_complexify(&general).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn diagonal_anisotropic_coefficients() {
        let media = MediaSpec::general(
            Matrix3::from_diagonal(&Vector3::new(2.0, 3.0, 4.0)),
            Matrix3::identity(),
            Matrix3::zeros(),
            Matrix3::zeros(),
        )
        .unwrap();
        let rel = general_linear_complexify(&media).unwrap();
        for i in 0..3 {
            let e = [2.0, 3.0, 4.0][i];
            assert!((rel.forward.a[(i, i)] - re(e + 1.0)).norm() < 1e-15);
            assert!((rel.forward.b[(i, i)] - re(e - 1.0)).norm() < 1e-15);
            // inverse of diag(ε, 1) is diag(1/ε, 1)
            assert!((rel.inverse.a[(i, i)] - re(1.0 / e + 1.0)).norm() < 1e-15);
            assert!((rel.inverse.b[(i, i)] - re(1.0 / e - 1.0)).norm() < 1e-15);
        }
        let off = rel.forward.a[(0, 1)].norm() + rel.forward.b[(1, 2)].norm();
        assert_eq!(off, 0.0);
    }

    #[test]
    fn probing_matches_closed_form() {
        let media = aniso();
        let probed = general_linear_complexify(&media).unwrap().forward;
        assert!(probed.max_abs_diff(&general_closed_form(&media)) < 1e-15);
    }

    #[test]
    fn complex_form_reproduces_real_relations() {
        let media = aniso();
        let units = Units::natural();
        let e = Vector3::new(0.4, -0.3, 1.1);
        let b = Vector3::new(-0.9, 0.2, 0.5);
        let (d, h) = media.apply_real(&e, &b, &units);
        let f = CVec3::from_fn(|i, _| C64::new(e[i], b[i]));
        let hh = general_linear_complexify(&media).unwrap().h_of_f(&f);
        let expected = CVec3::from_fn(|i, _| C64::new(d[i], h[i]));
        assert!(max_abs_diff(hh.iter(), expected.iter()) < 1e-12);
    }

    #[test]
    fn real_matrix_roundtrip() {
        let form = general_linear_complexify(&aniso()).unwrap().forward;
        let back = ConstitutiveForm::from_real(&form.to_real());
        assert!(back.max_abs_diff(&form) < 1e-15);
    }

    #[test]
    fn rotation_keeps_uniform_coefficients_bit_identical() {
        let media = MediaSpec::uniform(2.0, 3.0).unwrap();
        let rest = rest_relations(&media).unwrap();
        let g = rotation(1.1, Vector3::new(0.0, 0.6, 0.8)).unwrap();
        let moved = rest.transform(&g);
        assert_eq!(moved.forward, rest.forward);
        assert_eq!(moved.inverse, rest.inverse);
    }

    #[test]
    fn boost_substitution_uniform_and_general() {
        let spec = BoostSpec::new(0.8, Vector3::new(0.48, 0.6, 0.64)).unwrap();
        let g = boost(&spec);
        for media in [MediaSpec::uniform(2.0, 3.0).unwrap(), aniso()] {
            let rest = rest_relations(&media).unwrap();
            let f = sample_f();
            let h = rest.h_of_f(&f);
            let (f1, h1) = (g.o() * f, g.o() * h);
            let moved = moving_relations(&media, &g).unwrap();
            assert!(max_abs_diff(moved.h_of_f(&f1).iter(), h1.iter()) < 1e-12);
            assert!(max_abs_diff(moved.f_of_h(&h1).iter(), f1.iter()) < 1e-12);
        }
    }

    #[test]
    fn uniform_boost_carries_double_angle_square() {
        let spec = BoostSpec::along_z(0.5);
        let media = MediaSpec::uniform(2.0, 3.0).unwrap();
        let moved = moving_relations_uniform(&media, &boost(&spec)).unwrap();
        let o2 = double_angle_square(&spec);
        assert_eq!(moved.forward.a, CMat3::identity() * re(2.0 + 1.0 / 3.0));
        assert!(max_abs_diff(moved.forward.b.iter(), (o2 * re(2.0 - 1.0 / 3.0)).iter()) < 1e-15);
        assert!(max_abs_diff(moved.inverse.b.iter(), (o2 * re(0.5 - 3.0)).iter()) < 1e-15);
        let general = moving_relations_general(&media, &spec).unwrap();
        assert!(general.max_abs_diff(&moved) < 1e-12);
    }

    #[test]
    fn boost_involution() {
        let spec = BoostSpec::new(1.3, Vector3::new(0.0, 0.6, -0.8)).unwrap();
        let media = aniso();
        let rest = rest_relations(&media).unwrap();
        let back = rest
            .transform(&boost(&spec))
            .transform(&boost(&spec.reversed()));
        assert!(back.max_abs_diff(&rest) < 1e-12);
    }

    #[test]
    fn real_form_zero_boost_and_matched_impedance() {
        let units = Units::natural();
        let e = Vector3::new(0.3, 0.2, -0.1);
        let b = Vector3::new(1.0, -0.4, 0.6);
        let media = MediaSpec::uniform(2.0, 3.0).unwrap();
        let rf = real_form_moving(&media, &BoostSpec::along_z(0.0)).unwrap();
        let (d, h) = rf.apply(&e, &b, &units);
        assert!((d - e * 2.0).amax() < 1e-15);
        assert!((h - b / 3.0).amax() < 1e-15);

        let matched = MediaSpec::uniform(4.0, 0.25).unwrap();
        let rf = real_form_moving(&matched, &BoostSpec::along_z(1.7)).unwrap();
        let (d, _) = rf.apply(&e, &b, &units);
        assert!((d - e * 4.0).amax() < 1e-14);
    }

    #[test]
    fn real_form_equals_complex_form() {
        let spec = BoostSpec::new(0.9, Vector3::new(0.6, 0.0, 0.8)).unwrap();
        let media = MediaSpec::uniform(2.0, 3.0).unwrap();
        let rf = real_form_moving(&media, &spec).unwrap();
        let complex = moving_relations_uniform(&media, &boost(&spec)).unwrap();
        let diff = (rf.as_matrix() - complex.forward.to_real()).amax();
        assert!(diff < 1e-12, "{diff}");
    }

    #[test]
    fn media_json_shapes() {
        let m: MediaSpec = serde_json::from_str(r#"{"kind":"uniform","eps":2,"mu":3}"#).unwrap();
        assert_eq!(m, MediaSpec::Uniform { eps: 2.0, mu: 3.0 });
        let g = aniso();
        let s = serde_json::to_string(&g).unwrap();
        let back: MediaSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<MediaSpec>(r#"{"kind":"uniform","eps":-1,"mu":1}"#).is_err());
    }
}
