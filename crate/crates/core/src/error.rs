use thiserror::Error;

/// Errors raised by constructors and evaluators in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("axis must be a unit vector (|n| = {norm})")]
    NonUnitAxis { norm: f64 },

    #[error("quaternion parameters violate c0^2 + c.c = 1 (defect {defect:e})")]
    NonUnitQuaternion { defect: f64 },

    #[error("4-vector u must satisfy u.u = 1 (got {norm_sq})")]
    NonUnitTimelike { norm_sq: f64 },

    #[error("{which} is not orthogonal to u (u.{which} = {dot:e})")]
    NotOrthogonal { which: &'static str, dot: f64 },

    #[error("missing field {0}")]
    MissingField(&'static str),

    #[error("dispersion violated: omega = {omega}, expected {expected} (c' = {phase_speed})")]
    Dispersion {
        omega: f64,
        expected: f64,
        phase_speed: f64,
    },

    #[error("polarization is not a solution of i k x p = |k| p (deviation {deviation:e})")]
    Transversality { deviation: f64 },

    #[error(
        "analytic derivative d{axis} disagrees with central differences at {point:?} \
         (deviation {deviation:e})"
    )]
    DerivativeMismatch {
        axis: usize,
        point: [f64; 4],
        deviation: f64,
    },

    #[error("invalid media: {0}")]
    InvalidMedia(String),

    #[error("singular constitutive system: {0}")]
    Singular(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
