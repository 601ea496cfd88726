use serde::{Deserialize, Serialize};

use super::CaseFile;
use crate::characters::DirichletCharacter;
use crate::poly::IntPoly;

const CASES: [(&str, &str); 6] = [
    ("2-3-55", include_str!("../../cases/2-3-55.json")),
    ("2-3-57", include_str!("../../cases/2-3-57.json")),
    ("2-3-58", include_str!("../../cases/2-3-58.json")),
    ("3-7-3", include_str!("../../cases/3-7-3.json")),
    ("3-13-9", include_str!("../../cases/3-13-9.json")),
    ("5-17-1", include_str!("../../cases/5-17-1.json")),
];

const FIELDS: &str = include_str!("../../cases/fields.json");

/// One of the twelve A6 fields ramified at two primes up to 19. Fields
/// without a `case` are data only.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldEntry {
    pub label: String,
    pub sextic: IntPoly,
    pub lifts_to_3a6: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mod3_level: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mod3_nebentype: Option<DirichletCharacter>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

pub fn bundled_cases() -> Vec<(&'static str, CaseFile)> {
    CASES
        .iter()
        .map(|&(name, text)| (name, CaseFile::from_json(text).unwrap_or_else(|e| panic!("bundled case {name}: {e}"))))
        .collect()
}

pub fn bundled_case(name: &str) -> Option<CaseFile> {
    bundled_cases().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
}

pub fn field_table() -> Vec<FieldEntry> {
    serde_json::from_str(FIELDS).expect("bundled field table parses")
}
