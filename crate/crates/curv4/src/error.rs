use thiserror::Error;

/// Errors raised by curvature construction, model lookup, and certification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurvError {
    /// The first Bianchi identity fails beyond tolerance.
    #[error("first Bianchi identity violated (residual {residual:e})")]
    BianchiViolation { residual: f64 },

    /// A frame transform was requested with a non-orthogonal matrix.
    #[error("frame matrix is not orthogonal (|q^T q - I| = {defect:e})")]
    NotOrthogonal { defect: f64 },

    /// Input data lacks the required tensor symmetries.
    #[error("tensor symmetry violated: {detail}")]
    SymmetryViolation { detail: String },

    /// Requested model name is not in the catalog.
    #[error("unknown model `{name}` (expected one of: s4, cp2, s2xr2, s3xr, r4, s2xs2)")]
    UnknownModel { name: String },

    /// The requested normalization is not available for this model.
    #[error("model `{model}` has no `{normalization}` normalization")]
    InvalidNormalization {
        model: String,
        normalization: String,
    },

    /// Point coordinates do not match the model's free parameters.
    #[error("model `{model}` takes {expected} point coordinate(s), got {got}")]
    InvalidPointParams {
        model: String,
        expected: usize,
        got: usize,
    },

    /// An operation precondition does not hold.
    #[error("precondition violated: {what}")]
    PreconditionViolated { what: String },

    /// A ratio against scalar curvature was requested at R = 0.
    #[error("scalar curvature vanishes; normalized balance undefined")]
    ZeroScalarCurvature,

    /// A certification stage found a sample beyond the asserted bound.
    #[error(
        "certification failed at stage `{stage}` (seed {seed}, sample {index}): \
         value {value:.12} exceeds bound {bound:.12}"
    )]
    CertificationFailure {
        stage: &'static str,
        seed: u64,
        index: u64,
        value: f64,
        bound: f64,
    },

    /// The second-kind matrix does not have the expected block structure.
    #[error("second-kind structure check failed at entry ({row}, {col}): {value:e}")]
    StructureFailure { row: usize, col: usize, value: f64 },
}

pub type Result<T> = std::result::Result<T, CurvError>;
