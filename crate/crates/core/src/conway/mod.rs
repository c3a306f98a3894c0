//! Conway polynomials of knot diagrams, by two independent routes.

mod alexander;
mod skein;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use alexander::{alexander_matrix, alexander_polynomial, alexander_to_conway, bareiss_determinant, normalize};
pub use skein::{conway_of_link, SkeinEvaluator};

pub use crate::split::determinant;

use crate::diagram::{DiagramCode, DiagramError};
use crate::IntPoly;

/// Default node budget for the skein route.
pub const DEFAULT_BUDGET: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConwayError {
    #[error(transparent)]
    InvalidDiagram(#[from] DiagramError),
    #[error("Alexander normalization failed: {0}")]
    NormalizationFailure(String),
    #[error("skein budget of {0} diagrams exceeded")]
    BudgetExceeded(usize),
    #[error("methods disagree: Alexander gives {alexander}, skein gives {skein}")]
    Disagreement { alexander: String, skein: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Alexander,
    Skein,
    /// Runs both and fails unless they agree.
    Both,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alexander" => Ok(Self::Alexander),
            "skein" => Ok(Self::Skein),
            "both" => Ok(Self::Both),
            other => Err(format!("unknown method '{other}' (alexander, skein, both)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Alexander => "alexander",
            Self::Skein => "skein",
            Self::Both => "both",
        })
    }
}

pub fn conway_via_alexander(d: &DiagramCode) -> Result<IntPoly, ConwayError> {
    alexander_to_conway(&alexander_polynomial(&d.to_gauss())?)
}

pub fn conway_via_skein(d: &DiagramCode, budget: usize) -> Result<IntPoly, ConwayError> {
    conway_of_link(&d.to_gauss().to_link(), budget)
}

pub fn conway(d: &DiagramCode, method: Method) -> Result<IntPoly, ConwayError> {
    match method {
        Method::Alexander => conway_via_alexander(d),
        Method::Skein => conway_via_skein(d, DEFAULT_BUDGET),
        Method::Both => {
            let a = conway_via_alexander(d)?;
            let s = conway_via_skein(d, DEFAULT_BUDGET)?;
            if a == s {
                Ok(a)
            } else {
                Err(ConwayError::Disagreement {
                    alexander: a.to_string(),
                    skein: s.to_string(),
                })
            }
        }
    }
}
