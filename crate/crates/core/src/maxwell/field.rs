//! Spacetime field evaluators.
//!
//! A field returns its 4-column value together with all four first
//! derivatives `∂_μ` at a point `x = (x⁰, x¹, x², x³)`.

use std::sync::Arc;

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, max_abs_diff, re, CMat4, CVec4, Point4};

/// Value and gradient of a field, `grad[μ] = ∂_μ value`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldSample {
    pub value: CVec4,
    pub grad: [CVec4; 4],
}

impl FieldSample {
    pub fn zero() -> Self {
        Self {
            value: CVec4::zeros(),
            grad: [CVec4::zeros(); 4],
        }
    }
}

/// A field on spacetime. Implementations must be free of interior
/// mutation so one evaluator can be shared across worker threads.
pub trait SpacetimeField: Send + Sync {
    fn sample(&self, x: &Point4) -> FieldSample;

    /// Whether `sample` returns derivatives computed independently of
    /// finite differences. Only those are checked for self-consistency.
    fn has_analytic_derivatives(&self) -> bool {
        true
    }
}

/// Step used by the derivative self-consistency check.
pub const CONSISTENCY_STEP: f64 = 1e-4;
/// Relative tolerance of the derivative self-consistency check.
pub const CONSISTENCY_TOL: f64 = 1e-6;

/// Fourth-order central difference of `f` along `axis`.
pub fn central_difference(
    f: impl Fn(&Point4) -> CVec4,
    x: &Point4,
    axis: usize,
    step: f64,
) -> CVec4 {
    let shifted = |k: f64| {
        let mut y = *x;
        y[axis] += k * step;
        f(&y)
    };
    (shifted(-2.0) - shifted(2.0) + (shifted(1.0) - shifted(-1.0)) * re(8.0)) / re(12.0 * step)
}

/// Compares supplied derivatives with central differences of the values.
/// Returns the largest relative deviation.
pub fn check_derivatives(field: &dyn SpacetimeField, x: &Point4) -> Result<f64> {
    let s = field.sample(x);
    let scale = s
        .grad
        .iter()
        .map(|g| max_abs(g.iter()))
        .fold(max_abs(s.value.iter()), f64::max)
        .max(f64::MIN_POSITIVE);
    let mut worst: f64 = 0.0;
    for axis in 0..4 {
        let fd = central_difference(|y| field.sample(y).value, x, axis, CONSISTENCY_STEP);
        let deviation = max_abs_diff(fd.iter(), s.grad[axis].iter()) / scale;
        if !(deviation <= CONSISTENCY_TOL) {
            return Err(Error::DerivativeMismatch {
                axis,
                point: *x,
                deviation,
            });
        }
        worst = worst.max(deviation);
    }
    Ok(worst)
}

/// Constant field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantField(pub CVec4);

impl SpacetimeField for ConstantField {
    fn sample(&self, _x: &Point4) -> FieldSample {
        FieldSample {
            value: self.0,
            grad: [CVec4::zeros(); 4],
        }
    }
}

/// Field given by a closure; derivatives by fourth-order central differences.
pub struct FnField<F> {
    f: F,
    step: f64,
}

impl<F> FnField<F>
where
    F: Fn(&Point4) -> CVec4 + Send + Sync,
{
    pub fn new(f: F) -> Self {
        Self { f, step: 1e-3 }
    }

    pub fn with_step(f: F, step: f64) -> Self {
        Self { f, step }
    }
}

impl<F> SpacetimeField for FnField<F>
where
    F: Fn(&Point4) -> CVec4 + Send + Sync,
{
    fn sample(&self, x: &Point4) -> FieldSample {
        FieldSample {
            value: (self.f)(x),
            grad: std::array::from_fn(|axis| central_difference(&self.f, x, axis, self.step)),
        }
    }

    fn has_analytic_derivatives(&self) -> bool {
        false
    }
}

/// Field sampled on a regular grid. Derivatives use the fourth-order
/// stencil, so only nodes at least two steps from every face are usable;
/// queries snap to the nearest such node.
#[derive(Clone, Debug)]
pub struct GridField {
    origin: Point4,
    spacing: [f64; 4],
    shape: [usize; 4],
    data: Vec<CVec4>,
}

impl GridField {
    pub fn from_fn(
        origin: Point4,
        spacing: [f64; 4],
        shape: [usize; 4],
        f: impl Fn(&Point4) -> CVec4,
    ) -> Result<Self> {
        if shape.iter().any(|&n| n < 5) {
            return Err(Error::Unsupported(
                "grid needs at least 5 nodes along every axis".into(),
            ));
        }
        if spacing.iter().any(|&h| !(h > 0.0)) {
            return Err(Error::Unsupported("grid spacing must be positive".into()));
        }
        let mut grid = Self {
            origin,
            spacing,
            shape,
            data: Vec::with_capacity(shape.iter().product()),
        };
        for i0 in 0..shape[0] {
            for i1 in 0..shape[1] {
                for i2 in 0..shape[2] {
                    for i3 in 0..shape[3] {
                        let x = grid.node([i0, i1, i2, i3]);
                        grid.data.push(f(&x));
                    }
                }
            }
        }
        Ok(grid)
    }

    pub fn node(&self, idx: [usize; 4]) -> Point4 {
        std::array::from_fn(|a| self.origin[a] + idx[a] as f64 * self.spacing[a])
    }

    fn flat(&self, idx: [usize; 4]) -> usize {
        ((idx[0] * self.shape[1] + idx[1]) * self.shape[2] + idx[2]) * self.shape[3] + idx[3]
    }

    /// Nodes where the stencil fits; boundary nodes are left out.
    pub fn interior_points(&self) -> Vec<Point4> {
        let mut out = Vec::new();
        let r = |a: usize| 2..self.shape[a] - 2;
        for i0 in r(0) {
            for i1 in r(1) {
                for i2 in r(2) {
                    for i3 in r(3) {
                        out.push(self.node([i0, i1, i2, i3]));
                    }
                }
            }
        }
        out
    }

    fn nearest_interior(&self, x: &Point4) -> [usize; 4] {
        std::array::from_fn(|a| {
            let t = ((x[a] - self.origin[a]) / self.spacing[a]).round();
            let hi = (self.shape[a] - 3) as f64;
            t.clamp(2.0, hi) as usize
        })
    }
}

impl SpacetimeField for GridField {
    fn sample(&self, x: &Point4) -> FieldSample {
        let idx = self.nearest_interior(x);
        let at = |axis: usize, k: isize| {
            let mut j = idx;
            j[axis] = (j[axis] as isize + k) as usize;
            self.data[self.flat(j)]
        };
        FieldSample {
            value: self.data[self.flat(idx)],
            grad: std::array::from_fn(|a| {
                (at(a, -2) - at(a, 2) + (at(a, 1) - at(a, -1)) * re(8.0))
                    / re(12.0 * self.spacing[a])
            }),
        }
    }

    fn has_analytic_derivatives(&self) -> bool {
        false
    }
}

/// Superposition of fields.
#[derive(Clone)]
pub struct SumField(pub Vec<Arc<dyn SpacetimeField>>);

impl SpacetimeField for SumField {
    fn sample(&self, x: &Point4) -> FieldSample {
        self.0.iter().fold(FieldSample::zero(), |mut acc, f| {
            let s = f.sample(x);
            acc.value += s.value;
            for mu in 0..4 {
                acc.grad[mu] += s.grad[mu];
            }
            acc
        })
    }

    fn has_analytic_derivatives(&self) -> bool {
        self.0.iter().all(|f| f.has_analytic_derivatives())
    }
}

/// `value(x') = A Ψ(Λ⁻¹x') + B Ψ*(Λ⁻¹x')`.
///
/// Covers frame changes (`A = S`, `B = 0`), conjugate sectors (`A = 0`)
/// and real-linear repackaging such as building `(M, N)` from an RS wave.
#[derive(Clone)]
pub struct LinearField {
    inner: Arc<dyn SpacetimeField>,
    a: CMat4,
    b: CMat4,
    lorentz_inv: Matrix4<f64>,
}

impl LinearField {
    pub fn new(inner: Arc<dyn SpacetimeField>, a: CMat4, b: CMat4) -> Self {
        Self {
            inner,
            a,
            b,
            lorentz_inv: Matrix4::identity(),
        }
    }

    /// Same map seen in coordinates `x' = Λ x`.
    pub fn with_coordinates(mut self, lorentz_inv: Matrix4<f64>) -> Self {
        self.lorentz_inv = lorentz_inv;
        self
    }

    pub fn complex_linear(inner: Arc<dyn SpacetimeField>, a: CMat4) -> Self {
        Self::new(inner, a, CMat4::zeros())
    }
}

impl SpacetimeField for LinearField {
    fn sample(&self, xp: &Point4) -> FieldSample {
        let xv = self.lorentz_inv * nalgebra::Vector4::from(*xp);
        let x: Point4 = [xv[0], xv[1], xv[2], xv[3]];
        let s = self.inner.sample(&x);
        let map = |v: &CVec4| self.a * v + self.b * v.map(|z| z.conj());
        let mapped: [CVec4; 4] = std::array::from_fn(|nu| map(&s.grad[nu]));
        FieldSample {
            value: map(&s.value),
            grad: std::array::from_fn(|mu| {
                (0..4).fold(CVec4::zeros(), |acc, nu| {
                    acc + mapped[nu] * re(self.lorentz_inv[(nu, mu)])
                })
            }),
        }
    }

    fn has_analytic_derivatives(&self) -> bool {
        self.inner.has_analytic_derivatives()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    fn poly(x: &Point4) -> CVec4 {
        CVec4::new(
            C64::new(x[0] * x[1], x[2]),
            C64::new(x[3].powi(3), -x[0] * x[0]),
            C64::new(0.5 * x[1] * x[2] * x[3], 0.0),
            C64::new(1.0, x[0] - x[3]),
        )
    }

    #[test]
    fn central_difference_is_exact_on_cubics() {
        let x = [0.3, -0.7, 0.2, 0.9];
        let d3 = central_difference(poly, &x, 3, 0.1);
        assert!((d3[1] - C64::new(3.0 * 0.81, 0.0)).norm() < 1e-13);
        assert!((d3[3] - C64::new(0.0, -1.0)).norm() < 1e-13);
    }

    #[test]
    fn grid_field_matches_polynomial_derivatives() {
        let grid = GridField::from_fn([-0.2; 4], [0.1; 4], [5, 6, 5, 7], poly).unwrap();
        let pts = grid.interior_points();
        assert_eq!(pts.len(), 2 * 3);
        let fun = FnField::new(poly);
        for p in &pts {
            let a = grid.sample(p);
            let b = fun.sample(p);
            for mu in 0..4 {
                assert!(max_abs_diff(a.grad[mu].iter(), b.grad[mu].iter()) < 1e-10);
            }
        }
        assert!(GridField::from_fn([0.0; 4], [0.1; 4], [4, 5, 5, 5], poly).is_err());
    }

    #[test]
    fn consistency_check_flags_wrong_derivatives() {
        struct Wrong;
        impl SpacetimeField for Wrong {
            fn sample(&self, x: &Point4) -> FieldSample {
                FieldSample {
                    value: CVec4::repeat(re(x[0])),
                    grad: [CVec4::zeros(); 4],
                }
            }
        }
        assert!(matches!(
            check_derivatives(&Wrong, &[0.1, 0.0, 0.0, 0.0]),
            Err(Error::DerivativeMismatch { axis: 0, .. })
        ));
        assert!(check_derivatives(&ConstantField(CVec4::repeat(re(2.0))), &[0.0; 4]).unwrap() == 0.0);
    }

    #[test]
    fn linear_field_applies_conjugate_part() {
        let inner: Arc<dyn SpacetimeField> = Arc::new(FnField::new(poly));
        let f = LinearField::new(inner, CMat4::zeros(), CMat4::identity());
        let x = [0.1, 0.2, 0.3, 0.4];
        let expected = poly(&x).map(|z| z.conj());
        assert_eq!(f.sample(&x).value, expected);
    }
}
