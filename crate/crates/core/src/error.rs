use thiserror::Error;

use crate::algebra::{BasisBlade, Signature};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),

    #[error("at most 6 generators are supported, got {0}")]
    UnsupportedDimension(usize),

    #[error("generator square must be +1 or -1, got {0}")]
    InvalidGeneratorSquare(i8),

    #[error("expected {expected} coefficients, found {found}")]
    CoefficientLength { expected: usize, found: usize },

    #[error("expected an even multivector; odd blades present: {0:?}")]
    NotEven(Vec<BasisBlade>),

    #[error("expected a grade-1 multivector; offending blades: {0:?}")]
    NotVector(Vec<BasisBlade>),

    #[error("grade structure violated; offending blades: {0:?}")]
    GradeStructure(Vec<BasisBlade>),

    #[error("gamma rejected: {0}")]
    InadmissibleGamma(String),

    #[error("empty sample set")]
    EmptySamples,

    #[error("cylinder condition violated: |d4 field| = {0:e}")]
    CylinderViolation(f64),

    #[error("radial direction must be a unit vector in span{{e1,e2,e3}}: {0}")]
    InvalidRadialDirection(String),

    #[error("coupling outside the bound-state domain: lambda^2 = {lambda_sq} must be < kappa^2 = {kappa_sq}")]
    CouplingDomain { lambda_sq: f64, kappa_sq: f64 },

    #[error("kappa must be a nonzero integer")]
    ZeroKappa,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no terminating radial series found: {0}")]
    NoBoundState(String),

    #[error("scalar potential branch works only in that case of non-zero mass")]
    MasslessScalarPotential,
}
