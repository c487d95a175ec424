//! Residual evaluators for the matrix forms of the field equations.
//!
//! * vacuum: `(-i∂₀ + αʲ∂ⱼ)Ψ - J` with `J = (1/ε₀)(j⁰, ij¹, ij², ij³)`
//! * uniform media: same operator on the medium's RS vector, `J/ε`
//! * two sectors: `(-i∂₀ + αʲ∂ⱼ)M + (-i∂₀ + βʲ∂ⱼ)N - J`
//! * Esposito: `Γ^α(u)∂_αΦ - j/ε₀`
//!
//! Points are evaluated in parallel; the output order matches the input.

use nalgebra::Vector4;
use rayon::prelude::*;

use crate::bases::{AlphaBasis, AlphaVariant, BetaBasis, EspositoGamma};
use crate::constitutive::MediaSpec;
use crate::error::{Error, Result};
use crate::fields::Units;
use crate::linalg::{complexify4, max_abs, re, CMat4, CVec4, Point4, IM};

use super::field::{check_derivatives, FieldSample, SpacetimeField};
use super::source::{source_column, SourceField};

/// First-order operator `time·∂₀ + spaceʲ·∂ⱼ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixOperator {
    pub time: CMat4,
    pub space: [CMat4; 3],
}

impl MatrixOperator {
    pub fn apply(&self, s: &FieldSample) -> CVec4 {
        self.time * s.grad[0]
            + self.space[0] * s.grad[1]
            + self.space[1] * s.grad[2]
            + self.space[2] * s.grad[3]
    }

    /// `-iα⁰∂₀ + αʲ∂ⱼ`; for the canonical basis `α⁰ = I`.
    pub fn alpha(alpha: &AlphaBasis) -> Self {
        Self {
            time: alpha.a0 * (-IM),
            space: alpha.a,
        }
    }

    /// `-i∂₀ + βʲ∂ⱼ`.
    pub fn beta(beta: &BetaBasis) -> Self {
        Self {
            time: CMat4::identity() * (-IM),
            space: beta.b,
        }
    }

    /// `Γ^α ∂_α`.
    pub fn esposito(gamma: &EspositoGamma) -> Self {
        Self {
            time: gamma.g[0],
            space: [gamma.g[1], gamma.g[2], gamma.g[3]],
        }
    }
}

/// Per-point residual 4-columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Residuals {
    pub points: Vec<Point4>,
    pub values: Vec<CVec4>,
}

impl Residuals {
    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .map(|v| max_abs(v.iter()))
            .fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest entrywise deviation from `m · other`.
    pub fn max_abs_diff_scaled(&self, m: &CMat4, other: &Residuals) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| max_abs((a - m * b).iter()))
            .fold(0.0, f64::max)
    }
}

/// Largest entry modulus of a field over a set of points.
pub fn field_scale(field: &dyn SpacetimeField, points: &[Point4]) -> f64 {
    points
        .iter()
        .map(|x| max_abs(field.sample(x).value.iter()))
        .fold(0.0, f64::max)
}

fn ensure_consistent(fields: &[&dyn SpacetimeField], points: &[Point4]) -> Result<()> {
    for f in fields.iter().filter(|f| f.has_analytic_derivatives()) {
        points
            .par_iter()
            .try_for_each(|x| check_derivatives(*f, x).map(|_| ()))?;
    }
    Ok(())
}

/// Generic driver: `Σ opᵢ fieldᵢ - src(j)` at every point.
fn evaluate(
    terms: &[(&MatrixOperator, &dyn SpacetimeField)],
    source: &dyn SourceField,
    src: impl Fn(&Vector4<f64>) -> CVec4 + Sync,
    points: &[Point4],
) -> Result<Residuals> {
    let fields: Vec<&dyn SpacetimeField> = terms.iter().map(|(_, f)| *f).collect();
    ensure_consistent(&fields, points)?;
    let values = points
        .par_iter()
        .map(|x| {
            let lhs = terms
                .iter()
                .fold(CVec4::zeros(), |acc, (op, f)| acc + op.apply(&f.sample(x)));
            lhs - src(&source.sample(x).j)
        })
        .collect();
    Ok(Residuals {
        points: points.to_vec(),
        values,
    })
}

pub fn residual_vacuum(
    field: &dyn SpacetimeField,
    source: &dyn SourceField,
    points: &[Point4],
    units: &Units,
) -> Result<Residuals> {
    let op = MatrixOperator::alpha(&AlphaBasis::canonical());
    evaluate(&[(&op, field)], source, |j| source_column(j, units.eps0), points)
}

/// Uniform medium in its rest frame, with `x⁰ = c't` and `ψ = E + ic'B`.
pub fn residual_media_uniform(
    field: &dyn SpacetimeField,
    source: &dyn SourceField,
    points: &[Point4],
    media: &MediaSpec,
    units: &Units,
) -> Result<Residuals> {
    media.validate()?;
    let MediaSpec::Uniform { eps, .. } = *media else {
        return Err(Error::Unsupported("expected uniform media".into()));
    };
    let op = MatrixOperator::alpha(&AlphaBasis::canonical());
    evaluate(&[(&op, field)], source, |j| source_column(j, units.eps0 * eps), points)
}

pub fn residual_two_sector(
    m: &dyn SpacetimeField,
    n: &dyn SpacetimeField,
    source: &dyn SourceField,
    points: &[Point4],
    units: &Units,
) -> Result<Residuals> {
    let op_m = MatrixOperator::alpha(&AlphaBasis::canonical());
    let op_n = MatrixOperator::beta(&BetaBasis::new());
    evaluate(
        &[(&op_m, m), (&op_n, n)],
        source,
        |j| source_column(j, units.eps0),
        points,
    )
}

pub fn residual_esposito(
    field: &dyn SpacetimeField,
    u: &Vector4<f64>,
    source: &dyn SourceField,
    points: &[Point4],
    units: &Units,
) -> Result<Residuals> {
    let op = MatrixOperator::esposito(&EspositoGamma::new(*u)?);
    let scale = re(1.0 / units.eps0);
    evaluate(&[(&op, field)], source, |j| complexify4(j) * scale, points)
}

/// `(-iα⁰∂₀ + αʲ∂ⱼ)Ψ - J` with the Esposito-variant `α`.
pub fn residual_esposito_alpha_form(
    field: &dyn SpacetimeField,
    source: &dyn SourceField,
    points: &[Point4],
    units: &Units,
) -> Result<Residuals> {
    let op = MatrixOperator::alpha(&AlphaBasis::new(AlphaVariant::Esposito));
    evaluate(&[(&op, field)], source, |j| source_column(j, units.eps0), points)
}

/// Relative size of a residual compared with the field.
pub fn relative_residual(res: &Residuals, field: &dyn SpacetimeField) -> f64 {
    let scale = field_scale(field, &res.points);
    if scale == 0.0 {
        return res.max_abs();
    }
    res.max_abs() / scale
}
