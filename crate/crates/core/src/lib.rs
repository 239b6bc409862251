//! Radii of univalence and starlikeness of six normalized Bessel, Struve and
//! Lommel functions.
//!
//! Each radius is the first positive zero of the derivative of the normalized
//! function. It is bracketed by Euler–Rayleigh inequalities built from power
//! sums of the zeros of a transformed derivative, and then refined by
//! bisection inside the bracket.

pub mod base;
pub mod cli;
pub mod continuation;
pub mod error;
pub mod family;
pub mod rayleigh;
pub mod roots;
pub mod series;
pub mod verification;

pub use error::{RadiiError, Result};
pub use family::{Base, Family, TransformKind};
pub use rayleigh::{BracketInterval, SumLedger, SumSource};
pub use roots::{find_radius, RadiusReport};
pub use series::{CoefficientSequence, SeriesPolicy};
