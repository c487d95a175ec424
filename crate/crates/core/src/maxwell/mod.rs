//! Matrix forms of the field equations: field evaluators, plane waves,
//! sources, residuals and frame changes.

pub mod field;
pub mod plane_wave;
pub mod residual;
pub mod source;
pub mod transform;

pub use field::{
    check_derivatives, ConstantField, FieldSample, FnField, GridField, LinearField, SpacetimeField,
    SumField,
};
pub use plane_wave::{circular_polarization, plane_wave, Helicity, PlaneWave, PlaneWaveSpec};
pub use residual::{
    field_scale, relative_residual, residual_esposito, residual_esposito_alpha_form,
    residual_media_uniform, residual_two_sector, residual_vacuum, MatrixOperator, Residuals,
};
pub use source::{
    continuity_check, source_column, ConstantSource, FnSource, NoSource, SourceField,
    SourceSample, TransformedSource,
};
pub use transform::{
    compensated_source, esposito_field, media_plane_wave, transform_scenario,
    transform_wave_vector, two_sector_fields, Formulation, Scenario,
};
