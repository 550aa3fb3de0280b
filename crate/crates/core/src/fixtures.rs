//! Bundled example configurations.

use crate::config::{AlgebraConfig, ConfigError};
use crate::hecke::HeckeAlgebra;

pub const NAMES: &[&str] = &[
    "a1_root_lattice",
    "a1_weight_lattice",
    "a1_torsion",
    "a2_omega3",
    "c2_alternating",
    "su6_ramified",
    "so_ramified",
];

/// The JSON text of a bundled fixture.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "a1_root_lattice" => include_str!("../../../fixtures/a1_root_lattice.json"),
        "a1_weight_lattice" => include_str!("../../../fixtures/a1_weight_lattice.json"),
        "a1_torsion" => include_str!("../../../fixtures/a1_torsion.json"),
        "a2_omega3" => include_str!("../../../fixtures/a2_omega3.json"),
        "c2_alternating" => include_str!("../../../fixtures/c2_alternating.json"),
        "su6_ramified" => include_str!("../../../fixtures/su6_ramified.json"),
        "so_ramified" => include_str!("../../../fixtures/so_ramified.json"),
        _ => return None,
    })
}

pub fn config(name: &str) -> Result<AlgebraConfig, ConfigError> {
    let text = source(name).ok_or_else(|| ConfigError::ParseError(format!("no bundled fixture {name:?}")))?;
    AlgebraConfig::from_json(text)
}

/// Builds a bundled fixture. Panics on unknown names or invalid data.
pub fn load(name: &str) -> HeckeAlgebra {
    config(name)
        .and_then(|c| c.build())
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}
