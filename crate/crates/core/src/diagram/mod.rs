//! Knot diagram codes: planar diagram (PD) codes and signed Gauss codes.

mod braid;
mod gauss;
mod pd;
pub mod table;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use braid::braid_closure;
pub use gauss::{GaussCode, LinkCode, Visit};
pub use pd::PdCode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid diagram: {0}")]
    Validation(String),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T, DiagramError> {
    Err(DiagramError::Validation(msg.into()))
}

/// Either accepted input format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramCode {
    Pd(PdCode),
    Gauss(GaussCode),
}

impl DiagramCode {
    /// Reads a PD code if the text starts with `[`, a Gauss code otherwise.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        if text.trim_start().starts_with('[') {
            Ok(Self::Pd(text.parse()?))
        } else {
            Ok(Self::Gauss(text.parse()?))
        }
    }

    pub fn to_gauss(&self) -> GaussCode {
        match self {
            Self::Pd(pd) => pd.to_gauss(),
            Self::Gauss(g) => g.clone(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        match self {
            Self::Pd(pd) => pd.crossing_count(),
            Self::Gauss(g) => g.crossing_count(),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.to_gauss().writhe()
    }

    pub fn mirror(&self) -> Self {
        match self {
            Self::Pd(pd) => Self::Pd(pd.mirror()),
            Self::Gauss(g) => Self::Gauss(g.mirror()),
        }
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pd(pd) => pd.fmt(f),
            Self::Gauss(g) => g.fmt(f),
        }
    }
}

impl FromStr for DiagramCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    text.parse()
}

pub fn parse_gauss(text: &str) -> Result<GaussCode, DiagramError> {
    text.parse()
}

pub fn pd_to_gauss(pd: &PdCode) -> GaussCode {
    pd.to_gauss()
}

pub fn simplify(g: &GaussCode) -> GaussCode {
    g.simplify()
}

pub fn writhe(d: &DiagramCode) -> i64 {
    d.writhe()
}

pub fn mirror(d: &DiagramCode) -> DiagramCode {
    d.mirror()
}

pub fn is_split_union(link: &LinkCode) -> bool {
    link.is_split_union()
}
