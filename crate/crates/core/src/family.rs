//! The six normalized functions and their parameter domains.
//!
//! Every family is built from one of three base series,
//!
//! ```text
//! U(x) = sum_n (-x^2/4)^n / ((a)_n (b)_n)
//! ```
//!
//! with Pochhammer parameters `(a, b)`:
//!
//! | base    | a         | b         |
//! |---------|-----------|-----------|
//! | Bessel  | 1         | nu + 1    |
//! | Struve  | 3/2       | nu + 3/2  |
//! | Lommel  | (mu+2)/2  | (mu+3)/2  |
//!
//! A circle family is `f(x) = x U(x)` (odd in `x`), a sqrt family is
//! `f(x) = x U(sqrt x)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RadiiError, Result};

/// Which substitution turns `f'` into a positive-coefficient entire function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransformKind {
    /// `F(z) = f'(2i sqrt z)`; a zero `-a` of `F` gives the radius `2 sqrt a`.
    Circle,
    /// `F(z) = f'(-4z)`; a zero `-a` of `F` gives the radius `4a`.
    Sqrt,
}

/// The special function a family is normalized from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    Bessel,
    Struve,
    Lommel,
}

impl Base {
    pub const ALL: [Base; 3] = [Base::Bessel, Base::Struve, Base::Lommel];

    /// The circle family sharing this base's zeros.
    pub fn circle(self) -> Family {
        match self {
            Base::Bessel => Family::BesselCircle,
            Base::Struve => Family::StruveCircle,
            Base::Lommel => Family::LommelCircle,
        }
    }

    pub fn sqrt(self) -> Family {
        match self {
            Base::Bessel => Family::BesselSqrt,
            Base::Struve => Family::StruveSqrt,
            Base::Lommel => Family::LommelSqrt,
        }
    }

    /// Pochhammer parameters `(a, b)` of the base series.
    pub fn pochhammer_params(self, p: f64) -> (f64, f64) {
        match self {
            Base::Bessel => (1.0, p + 1.0),
            Base::Struve => (1.5, p + 1.5),
            Base::Lommel => ((p + 2.0) / 2.0, (p + 3.0) / 2.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Base::Bessel => "bessel",
            Base::Struve => "struve",
            Base::Lommel => "lommel",
        }
    }

    /// Validates `p` against the base's domain.
    pub fn check(self, p: f64) -> Result<()> {
        self.circle().check(p)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bessel" => Ok(Base::Bessel),
            "struve" => Ok(Base::Struve),
            "lommel" => Ok(Base::Lommel),
            other => Err(format!("unknown base function `{other}`")),
        }
    }
}

/// One of the six normalized functions.
///
/// | family          | function | defined from                                   |
/// |-----------------|----------|------------------------------------------------|
/// | `BesselCircle`  | φ_ν      | 2^ν Γ(ν+1) z^(1-ν) J_ν(z)                      |
/// | `BesselSqrt`    | ϕ_ν      | 2^ν Γ(ν+1) z^(1-ν/2) J_ν(√z)                   |
/// | `StruveCircle`  | v_ν      | √π 2^ν z^(-ν) Γ(ν+3/2) H_ν(z)                  |
/// | `StruveSqrt`    | w_ν      | √π 2^ν z^((1-ν)/2) Γ(ν+3/2) H_ν(√z)            |
/// | `LommelCircle`  | g_μ      | μ(μ+1) z^(1/2-μ) s_{μ-1/2,1/2}(z)              |
/// | `LommelSqrt`    | h_μ      | μ(μ+1) z^((3-2μ)/4) s_{μ-1/2,1/2}(√z)          |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    BesselCircle,
    BesselSqrt,
    StruveCircle,
    StruveSqrt,
    LommelCircle,
    LommelSqrt,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::BesselCircle,
        Family::BesselSqrt,
        Family::StruveCircle,
        Family::StruveSqrt,
        Family::LommelCircle,
        Family::LommelSqrt,
    ];

    pub fn base(self) -> Base {
        match self {
            Family::BesselCircle | Family::BesselSqrt => Base::Bessel,
            Family::StruveCircle | Family::StruveSqrt => Base::Struve,
            Family::LommelCircle | Family::LommelSqrt => Base::Lommel,
        }
    }

    pub fn transform(self) -> TransformKind {
        match self {
            Family::BesselCircle | Family::StruveCircle | Family::LommelCircle => {
                TransformKind::Circle
            }
            Family::BesselSqrt | Family::StruveSqrt | Family::LommelSqrt => TransformKind::Sqrt,
        }
    }

    /// ASCII identifier used on the command line and in reports.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::BesselCircle => "bessel-circle",
            Family::BesselSqrt => "bessel-sqrt",
            Family::StruveCircle => "struve-circle",
            Family::StruveSqrt => "struve-sqrt",
            Family::LommelCircle => "lommel-circle",
            Family::LommelSqrt => "lommel-sqrt",
        }
    }

    /// Conventional symbol of the normalized function.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::BesselCircle => "φ",
            Family::BesselSqrt => "ϕ",
            Family::StruveCircle => "v",
            Family::StruveSqrt => "w",
            Family::LommelCircle => "g",
            Family::LommelSqrt => "h",
        }
    }

    /// Human-readable domain of the parameter.
    pub fn domain(self) -> &'static str {
        match self.base() {
            Base::Bessel => "ν > -1",
            Base::Struve => "ν ∈ [-1/2, 1/2]",
            Base::Lommel => "μ ∈ (-1, 1), μ ≠ 0",
        }
    }

    pub fn contains(self, p: f64) -> bool {
        match self.base() {
            Base::Bessel => p > -1.0 && p.is_finite(),
            Base::Struve => (-0.5..=0.5).contains(&p),
            Base::Lommel => p > -1.0 && p < 1.0 && p != 0.0,
        }
    }

    pub fn check(self, p: f64) -> Result<()> {
        if self.contains(p) {
            return Ok(());
        }
        let detail = if self.base() == Base::Lommel && p == 0.0 {
            " (μ=0 excluded)"
        } else {
            ""
        };
        Err(RadiiError::ParameterOutOfRange {
            family: self,
            parameter: p,
            domain: self.domain(),
            detail,
        })
    }

    /// Lommel results for `μ < 0` rely on the parameter-shift extension of the
    /// sums and are flagged in reports.
    pub fn is_extended_domain(self, p: f64) -> bool {
        self.base() == Base::Lommel && p < 0.0
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.cli_name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}
