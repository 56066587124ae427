use crate::collapse::Sample;
use crate::units::Dimension;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite value {value} for a quantity of dimension {dim}")]
    NonFinite { value: f64, dim: Dimension },

    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: Dimension,
        right: Dimension,
    },

    #[error("cannot express {dim} in {unit}")]
    Conversion { dim: Dimension, unit: &'static str },

    #[error("{0}")]
    Domain(String),

    #[error("integration did not reach r_stop within {steps} steps (last r = {last_r:e} m)")]
    Convergence {
        steps: usize,
        last_r: f64,
        partial: Vec<Sample>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
