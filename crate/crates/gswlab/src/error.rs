//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quaternion is not unit length: |q| = {norm}")]
    NonUnitQuaternion { norm: f64 },

    #[error("quaternion has nonzero real part: Re = {re}")]
    NotImaginary { re: f64 },

    #[error("complex scalar is not unit length: |z| = {norm}")]
    NonUnitScalar { norm: f64 },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("cannot raise degree of a {degree}-form on a 4-dimensional grid")]
    DegreeOverflow { degree: usize },

    #[error("cannot lower degree of a 0-form")]
    DegreeUnderflow,

    #[error("time grids do not match: {left} vs {right} samples")]
    GridMismatch { left: usize, right: usize },

    #[error("(g, I, omega) is not a compatible Hermitian triple: defect = {defect}")]
    IncompatibleTriple { defect: f64 },

    #[error("ADHM data is not on the B1 = B2 = 0 slice: |B| = {norm}")]
    NotOnSlice { norm: f64 },

    #[error("descent diverged: residual grew to {current} from {initial}")]
    Diverged { initial: f64, current: f64 },

    #[error("flow blew up: field norm {norm} exceeds {limit}")]
    BlowUp { norm: f64, limit: f64 },

    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn shape(context: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
        }
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
