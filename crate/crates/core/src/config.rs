//! JSON configuration files describing `(Σ, Λ, L)`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ext::{ExtGroup, Lat, ParamSys, TranslationGroup};
use crate::hecke::HeckeAlgebra;
use crate::roots::{CartanType, Embedding, NamedComponent, RootSpec, RootSystem};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("schema_version {found} is not supported (expected {expected})")]
    SchemaVersionMismatch { found: u32, expected: u32 },
    #[error("configuration {name:?} is invalid:\n  - {}", violations.join("\n  - "))]
    ValidationFailed { name: String, violations: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentConfig {
    #[serde(rename = "type")]
    pub cartan: String,
    #[serde(default)]
    pub embedding: Embedding,
    #[serde(default)]
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RootSystemConfig {
    Named(Vec<ComponentConfig>),
    Explicit {
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        roots: Option<Vec<Vec<i64>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub free_rank: usize,
    #[serde(default)]
    pub torsion_orders: Vec<i64>,
    pub root_system: RootSystemConfig,
    /// Torsion components of the simple coroots; zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coroot_torsion: Option<Vec<Vec<i64>>>,
    /// `L(s)` keyed by generator name (`s0`, `s0'`, `s1`, …).
    pub parameters: BTreeMap<String, u32>,
}

impl AlgebraConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| ConfigError::ParseError(e.to_string()))?;
        let found = value
            .get("schema_version")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| ConfigError::ParseError("missing integer field `schema_version`".into()))?;
        if found != u64::from(SCHEMA_VERSION) {
            return Err(ConfigError::SchemaVersionMismatch {
                found: found as u32,
                expected: SCHEMA_VERSION,
            });
        }
        serde_json::from_value(value).map_err(|e| ConfigError::ParseError(e.to_string()))
    }

    fn root_spec(&self) -> Result<RootSpec, String> {
        Ok(match &self.root_system {
            RootSystemConfig::Named(components) => RootSpec::Named {
                ambient_rank: self.free_rank,
                components: components
                    .iter()
                    .map(|c| {
                        Ok(NamedComponent {
                            cartan: c.cartan.parse::<CartanType>().map_err(|e| e.to_string())?,
                            embedding: c.embedding,
                            offset: c.offset,
                        })
                    })
                    .collect::<Result<_, String>>()?,
            },
            RootSystemConfig::Explicit {
                simple_roots,
                simple_coroots,
                roots,
            } => RootSpec::Explicit {
                ambient_rank: self.free_rank,
                simple_roots: simple_roots.clone(),
                simple_coroots: simple_coroots.clone(),
                roots: roots.clone(),
            },
        })
    }

    /// Validates everything and builds the algebra.
    pub fn build(&self) -> Result<HeckeAlgebra, ConfigError> {
        let fail = |violations: Vec<String>| ConfigError::ValidationFailed {
            name: self.name.clone(),
            violations,
        };
        let spec = self.root_spec().map_err(|e| fail(vec![e]))?;
        let roots = RootSystem::build(&spec).map_err(|e| fail(vec![e.to_string()]))?;
        let (_, _, simple_co) = spec.simple_data().map_err(|e| fail(vec![e.to_string()]))?;
        let k = self.torsion_orders.len();
        let mut violations = Vec::new();
        let tors = match &self.coroot_torsion {
            Some(t) if t.len() != simple_co.len() => {
                violations.push(format!(
                    "coroot_torsion lists {} entries for {} simple roots",
                    t.len(),
                    simple_co.len()
                ));
                vec![vec![0; k]; simple_co.len()]
            }
            Some(t) => t.clone(),
            None => vec![vec![0; k]; simple_co.len()],
        };
        let coroots: Vec<Lat> = simple_co.iter().zip(&tors).map(|(f, t)| Lat::new(f, t)).collect();
        let lattice = TranslationGroup::new(self.free_rank, self.torsion_orders.clone(), coroots);
        let group = match ExtGroup::new(Arc::new(roots), lattice) {
            Ok(g) => g,
            Err(e) => {
                violations.push(e.to_string());
                return Err(fail(violations));
            }
        };
        let mut weights = Vec::new();
        for g in group.gen_ids() {
            match self.parameters.get(group.gen_name(g)) {
                Some(&w) => weights.push(w),
                None => {
                    violations.push(format!("missing parameter for {}", group.gen_name(g)));
                    weights.push(1);
                }
            }
        }
        for key in self.parameters.keys() {
            if group.gen_by_name(key).is_none() {
                violations.push(format!("parameter for unknown generator {key:?}"));
            }
        }
        let params = ParamSys::new(weights);
        violations.extend(group.validate_params(&params).iter().map(ToString::to_string));
        if !violations.is_empty() {
            return Err(fail(violations));
        }
        HeckeAlgebra::new(self.name.clone(), Arc::new(group), params)
            .map_err(|v| fail(v.iter().map(ToString::to_string).collect()))
    }
}

/// Reads and validates a configuration file.
pub fn load_config(path: impl AsRef<Path>) -> Result<AlgebraConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let cfg = AlgebraConfig::from_json(&text)?;
    cfg.build()?;
    Ok(cfg)
}

/// Reads a configuration file and builds its algebra.
pub fn load(path: impl AsRef<Path>) -> Result<HeckeAlgebra, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    AlgebraConfig::from_json(&text)?.build()
}
