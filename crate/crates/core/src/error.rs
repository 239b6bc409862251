use thiserror::Error;

use crate::family::Family;

/// Errors produced by the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadiiError {
    #[error("{family}: parameter {parameter} outside the valid domain {domain}{detail}")]
    ParameterOutOfRange {
        family: Family,
        parameter: f64,
        domain: &'static str,
        detail: &'static str,
    },

    #[error("series for {family} at x = {x} did not converge within {max_terms} terms")]
    TruncationFailure {
        family: Family,
        x: f64,
        max_terms: usize,
    },

    #[error("{needed} coefficients required, only {available} available")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("closed-form sums exist only for orders 1..=4, got {k}")]
    UnsupportedOrder { k: usize },

    #[error("power-sum order {k} exceeds the supported maximum {max}")]
    OrderTooHigh { k: usize, max: usize },

    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("{family} at parameter {parameter}: no sign change found below {ceiling}")]
    RootNotFound {
        family: Family,
        parameter: f64,
        ceiling: f64,
    },
}

pub type Result<T> = std::result::Result<T, RadiiError>;
