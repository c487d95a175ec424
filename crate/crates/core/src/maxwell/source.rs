//! Charge-current sources `j^a = (ρ, J/c)`.

use std::sync::Arc;

use nalgebra::{Matrix4, Vector4};

use crate::linalg::{complexify4, Point4, C64, CVec4};

use super::field::central_difference;

/// Source value and gradient, `grad[μ] = ∂_μ j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SourceSample {
    pub j: Vector4<f64>,
    pub grad: [Vector4<f64>; 4],
}

pub trait SourceField: Send + Sync {
    fn sample(&self, x: &Point4) -> SourceSample;
}

/// Source-free region.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NoSource;

impl SourceField for NoSource {
    fn sample(&self, _x: &Point4) -> SourceSample {
        SourceSample {
            j: Vector4::zeros(),
            grad: [Vector4::zeros(); 4],
        }
    }
}

/// Constant `j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantSource(pub Vector4<f64>);

impl ConstantSource {
    /// From charge density and current density.
    pub fn from_rho_current(rho: f64, current: [f64; 3], c: f64) -> Self {
        Self(Vector4::new(rho, current[0] / c, current[1] / c, current[2] / c))
    }
}

impl SourceField for ConstantSource {
    fn sample(&self, _x: &Point4) -> SourceSample {
        SourceSample {
            j: self.0,
            grad: [Vector4::zeros(); 4],
        }
    }
}

/// Source given by a closure; derivatives by fourth-order central differences.
pub struct FnSource<F> {
    f: F,
    step: f64,
}

impl<F> FnSource<F>
where
    F: Fn(&Point4) -> Vector4<f64> + Send + Sync,
{
    pub fn new(f: F) -> Self {
        Self { f, step: 1e-3 }
    }
}

impl<F> SourceField for FnSource<F>
where
    F: Fn(&Point4) -> Vector4<f64> + Send + Sync,
{
    fn sample(&self, x: &Point4) -> SourceSample {
        let lifted = |y: &Point4| complexify4(&(self.f)(y));
        SourceSample {
            j: (self.f)(x),
            grad: std::array::from_fn(|axis| {
                central_difference(lifted, x, axis, self.step).map(|z| z.re)
            }),
        }
    }
}

/// `j'(x') = Λ j(Λ⁻¹ x')`.
#[derive(Clone)]
pub struct TransformedSource {
    inner: Arc<dyn SourceField>,
    lorentz: Matrix4<f64>,
    lorentz_inv: Matrix4<f64>,
}

impl TransformedSource {
    pub fn new(inner: Arc<dyn SourceField>, lorentz: Matrix4<f64>, lorentz_inv: Matrix4<f64>) -> Self {
        Self {
            inner,
            lorentz,
            lorentz_inv,
        }
    }
}

impl SourceField for TransformedSource {
    fn sample(&self, xp: &Point4) -> SourceSample {
        let xv = self.lorentz_inv * Vector4::from(*xp);
        let s = self.inner.sample(&[xv[0], xv[1], xv[2], xv[3]]);
        let mapped: [Vector4<f64>; 4] = std::array::from_fn(|nu| self.lorentz * s.grad[nu]);
        SourceSample {
            j: self.lorentz * s.j,
            grad: std::array::from_fn(|mu| {
                (0..4).fold(Vector4::zeros(), |acc, nu| acc + mapped[nu] * self.lorentz_inv[(nu, mu)])
            }),
        }
    }
}

/// Column `(1/ε₀)(j⁰, i j¹, i j², i j³)` entering the matrix equation.
pub fn source_column(j: &Vector4<f64>, eps0: f64) -> CVec4 {
    CVec4::new(
        C64::new(j[0], 0.0),
        C64::new(0.0, j[1]),
        C64::new(0.0, j[2]),
        C64::new(0.0, j[3]),
    ) / C64::new(eps0, 0.0)
}

/// Largest `|∂₀j⁰ + ∇·j⃗|` over the points.
pub fn continuity_check(source: &dyn SourceField, points: &[Point4]) -> f64 {
    points
        .iter()
        .map(|x| {
            let s = source.sample(x);
            (s.grad[0][0] + s.grad[1][1] + s.grad[2][2] + s.grad[3][3]).abs()
        })
        .fold(0.0, f64::max)
}
