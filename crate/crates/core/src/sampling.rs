//! Seeded pseudo-random inputs for property checks and residual sampling.

use nalgebra::{Matrix3, Vector3, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{CVec3, Point4, C64};
use crate::so3c::{boost, rotation, BoostSpec, GroupElement};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_POINTS: usize = 100;
/// Largest rapidity drawn by [`Sampler::boost_spec`].
pub const MAX_RAPIDITY: f64 = 2.0;

/// Deterministic generator of test inputs.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Point in `[-1, 1]⁴`.
    pub fn point(&mut self) -> Point4 {
        std::array::from_fn(|_| self.uniform(-1.0, 1.0))
    }

    pub fn points(&mut self, n: usize) -> Vec<Point4> {
        (0..n).map(|_| self.point()).collect()
    }

    pub fn vector3(&mut self, scale: f64) -> Vector3<f64> {
        Vector3::from_fn(|_, _| self.uniform(-scale, scale))
    }

    pub fn complex3(&mut self, scale: f64) -> CVec3 {
        CVec3::from_fn(|_, _| C64::new(self.uniform(-scale, scale), self.uniform(-scale, scale)))
    }

    pub fn matrix3(&mut self, scale: f64) -> Matrix3<f64> {
        Matrix3::from_fn(|_, _| self.uniform(-scale, scale))
    }

    /// Unit vector, drawn by rejection from the unit ball.
    pub fn unit_axis(&mut self) -> Vector3<f64> {
        loop {
            let v = self.vector3(1.0);
            let n = v.norm();
            if n > 0.1 && n <= 1.0 {
                return v / n;
            }
        }
    }

    pub fn boost_spec(&mut self) -> BoostSpec {
        let rapidity = self.uniform(-MAX_RAPIDITY, MAX_RAPIDITY);
        let axis = self.unit_axis();
        BoostSpec::new(rapidity, axis).expect("unit axis")
    }

    pub fn boost(&mut self) -> (BoostSpec, GroupElement) {
        let spec = self.boost_spec();
        let g = boost(&spec);
        (spec, g)
    }

    pub fn rotation(&mut self) -> (f64, Vector3<f64>, GroupElement) {
        let angle = self.uniform(-std::f64::consts::PI, std::f64::consts::PI);
        let axis = self.unit_axis();
        let g = rotation(angle, axis).expect("unit axis");
        (angle, axis, g)
    }

    /// Unit timelike `u = (√(1 + |w|²), w)` with `|wᵢ| ≤ scale`.
    pub fn unit_timelike(&mut self, scale: f64) -> Vector4<f64> {
        let w = self.vector3(scale);
        Vector4::new((1.0 + w.norm_squared()).sqrt(), w[0], w[1], w[2])
    }
}

/// `n` points in `[-1, 1]⁴` from `seed`.
pub fn sample_points(n: usize, seed: u64) -> Vec<Point4> {
    Sampler::new(seed).points(n)
}
