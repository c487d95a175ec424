//! Small dense complex linear algebra.
//!
//! Everything in the formalism lives in 3 or 4 complex dimensions, so plain
//! statically sized nalgebra matrices are used throughout.

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CVec3 = Vector3<C64>;
pub type CVec4 = Vector4<C64>;
pub type CMat3 = Matrix3<C64>;
pub type CMat4 = Matrix4<C64>;

/// Spacetime point `(x⁰, x¹, x², x³)`.
pub type Point4 = [f64; 4];

/// The imaginary unit.
pub const IM: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Largest entry modulus of any complex array-like.
pub fn max_abs<'a>(entries: impl IntoIterator<Item = &'a C64>) -> f64 {
    entries.into_iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff<'a>(
    a: impl IntoIterator<Item = &'a C64>,
    b: impl IntoIterator<Item = &'a C64>,
) -> f64 {
    a.into_iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Builds a 4x4 complex matrix from real row-major entries.
pub fn cmat4_from_rows(rows: [[f64; 4]; 4]) -> CMat4 {
    CMat4::from_fn(|i, j| re(rows[i][j]))
}

/// Builds a 4x4 complex matrix from complex row-major entries.
pub fn cmat4_from_crows(rows: [[C64; 4]; 4]) -> CMat4 {
    CMat4::from_fn(|i, j| rows[i][j])
}

/// `diag(1, m)`: the 4x4 embedding acting on columns `(0, ψ¹, ψ², ψ³)`.
pub fn embed3(m: &CMat3) -> CMat4 {
    let mut s = CMat4::identity();
    s.fixed_view_mut::<3, 3>(1, 1).copy_from(m);
    s
}

/// Column `(0, v¹, v², v³)`.
pub fn pad3(v: &CVec3) -> CVec4 {
    CVec4::new(C64::new(0.0, 0.0), v[0], v[1], v[2])
}

/// Spatial part of a 4-column.
pub fn spatial(v: &CVec4) -> CVec3 {
    CVec3::new(v[1], v[2], v[3])
}

pub fn complexify3(v: &Vector3<f64>) -> CVec3 {
    v.map(re)
}

pub fn complexify4(v: &Vector4<f64>) -> CVec4 {
    v.map(re)
}

/// Elementwise complex conjugate of a vector or matrix.
pub fn conj3(v: &CVec3) -> CVec3 {
    v.map(|z| z.conj())
}

/// Bilinear (non-Hermitian) dot product `Σ aᵢ bᵢ`.
pub fn bilinear_dot(a: &CVec3, b: &CVec3) -> C64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &CVec3, b: &CVec3) -> CVec3 {
    CVec3::new(
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
}

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub fn metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0))
}

/// Lowers (or raises) the index of a 4-vector with `diag(1,-1,-1,-1)`.
pub fn lower(v: &Vector4<f64>) -> Vector4<f64> {
    Vector4::new(v[0], -v[1], -v[2], -v[3])
}

/// Minkowski product `u·v = u⁰v⁰ - u⃗·v⃗`.
pub fn minkowski_dot(u: &Vector4<f64>, v: &Vector4<f64>) -> f64 {
    u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]
}

/// Totally antisymmetric symbol with upper indices, `ε⁰¹²³ = +1`.
pub fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut p = idx;
    if p.iter().any(|&i| i > 3) {
        return 0.0;
    }
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return 0.0;
            }
        }
    }
    // selection sort, counting transpositions
    for i in 0..4 {
        let mut min = i;
        for j in (i + 1)..4 {
            if p[j] < p[min] {
                min = j;
            }
        }
        if min != i {
            p.swap(i, min);
            sign = -sign;
        }
    }
    sign
}

/// Three-dimensional Levi-Civita symbol `ε_{ijk}` with `ε_{123} = +1` (0-based indices).
pub fn levi_civita3(i: usize, j: usize, k: usize) -> f64 {
    levi_civita([0, i + 1, j + 1, k + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1.0);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1.0);
        assert_eq!(levi_civita([3, 1, 2, 0]), -1.0);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0.0);
        assert_eq!(levi_civita3(0, 1, 2), 1.0);
        assert_eq!(levi_civita3(2, 1, 0), -1.0);
    }

    #[test]
    fn embed_places_block() {
        let m = CMat3::from_fn(|i, j| re((3 * i + j) as f64));
        let s = embed3(&m);
        assert_eq!(s[(0, 0)], re(1.0));
        assert_eq!(s[(1, 1)], re(0.0));
        assert_eq!(s[(3, 2)], re(7.0));
        assert_eq!(s[(0, 2)], re(0.0));
    }
}
