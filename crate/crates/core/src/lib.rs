//! Matrix (Riemann-Silberstein-Majorana-Oppenheimer) formulation of Maxwell
//! electrodynamics in vacuum and in linear media.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] - complex 3/4-component vectors and matrices used everywhere.
//! * [`so3c`] - the complex rotation group SO(3,C), its 4x4 embedding `S`,
//!   the Lorentz matrix of every element and the boost compensators `Δ`.
//! * [`bases`] - the `α`, `β`, Dirac `γ` and Esposito `Γ(u)` matrix families.
//! * [`fields`] - field representations (RS vector, `(f, h)`, `(M, N)`,
//!   field tensor and its dual, electromagnetic 4-vectors `e`, `b`).
//! * [`constitutive`] - Minkowski constitutive relations in rest and moving frames.
//! * [`maxwell`] - residual evaluators for every matrix form of the field
//!   equations, plane waves, sources and the frame-transformation engine.
//! * [`scenario`] - the JSON scenario file schema.

pub mod bases;
pub mod constitutive;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod maxwell;
pub mod sampling;
pub mod scenario;
pub mod so3c;

pub use error::{Error, Result};
pub use linalg::{CMat3, CMat4, CVec3, CVec4, Point4, C64};
