//! Knot tables: JSON record lists `{name, pd, conway}` with `conway` given as
//! ascending coefficients.

use serde::{Deserialize, Serialize};

use super::{DiagramError, PdCode};
use crate::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub pd: Vec<[u32; 4]>,
    pub conway: Vec<i64>,
    /// Braid word the PD code was generated from, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<Vec<i32>>,
}

impl KnotRecord {
    pub fn diagram(&self) -> Result<PdCode, DiagramError> {
        PdCode::new(self.pd.clone())
    }

    pub fn conway_poly(&self) -> IntPoly {
        IntPoly::from_i64s(&self.conway)
    }
}

pub fn parse_table(text: &str) -> Result<Vec<KnotRecord>, DiagramError> {
    serde_json::from_str(text).map_err(|e| DiagramError::Parse {
        position: e.column(),
        message: format!("line {}: {e}", e.line()),
    })
}

pub fn format_table(records: &[KnotRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

const BUNDLED: &str = include_str!("../../data/knot_table.json");

/// The table shipped with the crate.
pub fn bundled_table() -> Vec<KnotRecord> {
    parse_table(BUNDLED).expect("bundled table is well formed")
}
