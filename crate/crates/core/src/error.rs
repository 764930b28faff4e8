use thiserror::Error;

/// Errors produced by the tensor, strain, and stress operations.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite entry in {context}")]
    NonFinite { context: &'static str },

    #[error("matrix is not symmetric (asymmetry {asymmetry:.3e} exceeds {tolerance:.3e})")]
    NotSymmetric { asymmetry: f64, tolerance: f64 },

    #[error("matrix is not orthogonal (defect {defect:.3e})")]
    NotOrthogonal { defect: f64 },

    #[error("matrix is an improper rotation (det = {det:.6e})")]
    ImproperRotation { det: f64 },

    #[error("matrix is not positive definite (eigenvalue {eigenvalue:.6e})")]
    NotPositiveDefinite { eigenvalue: f64 },

    #[error("eigenvalue {eigenvalue} lies outside the domain of `{function}`")]
    Domain { function: String, eigenvalue: f64 },

    #[error("deformation gradient reverses orientation (det = {det:.6e})")]
    Orientation { det: f64 },

    #[error("singular matrix (det = {det:.6e})")]
    Singular { det: f64 },

    #[error("unknown strain family `{name}`")]
    UnknownFamily { name: String },

    #[error("seth-hill with m = 0 is the logarithmic family; use `hencky` instead")]
    SethHillZeroExponent,

    #[error("strain family `{name}` rejected: {detail}")]
    FamilyParameter { name: String, detail: String },

    #[error("strain family `{name}` failed verification: {detail}")]
    FamilyVerification { name: String, detail: String },

    #[error("stretches are not coaxial (commutator norm {commutator:.3e} exceeds {tolerance:.3e})")]
    NonCoaxial { commutator: f64, tolerance: f64 },

    #[error("invariant pair is not realizable by a deformation (zeta = {zeta:.6e} outside [0, 1/6])")]
    NotRealizable { zeta: f64 },

    #[error("energy potential evaluation failed: {detail}")]
    Potential { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
