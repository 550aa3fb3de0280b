use std::path::PathBuf;

use iwahori_hecke::config::{load, load_config, AlgebraConfig, ConfigError};
use iwahori_hecke::fixtures;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

#[test]
fn every_fixture_file_loads() {
    for name in fixtures::NAMES {
        let cfg = load_config(fixture_path(name)).unwrap();
        assert_eq!(cfg.name, *name);
        assert_eq!(load(fixture_path(name)).unwrap().name(), *name);
    }
}

#[test]
fn ramified_fixtures_encode_the_expected_data() {
    let su6 = load(fixture_path("su6_ramified")).unwrap();
    let g = su6.group();
    assert_eq!(su6.group().roots().type_name(), "B3");
    assert_eq!(g.lattice().torsion_orders(), &[] as &[i64]);
    let short = g.roots().index_of(&[0, 0, 1]).unwrap();
    assert_eq!(g.coroot(short).free.as_slice(), &[0, 0, 2]);
    let so = load(fixture_path("so_ramified")).unwrap();
    let g = so.group();
    assert_eq!(g.roots().type_name(), "C3");
    assert_eq!(g.lattice().torsion_orders(), &[2]);
    let long = g.roots().index_of(&[0, 0, 2]).unwrap();
    assert_eq!(g.coroot(long).free.as_slice(), &[0, 0, 1]);
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load_config("/nonexistent/x.json"), Err(ConfigError::Io { .. })));
}

#[test]
fn parse_errors() {
    assert!(matches!(AlgebraConfig::from_json("{"), Err(ConfigError::ParseError(_))));
    assert!(matches!(AlgebraConfig::from_json("{}"), Err(ConfigError::ParseError(_))));
    let unknown_field = fixtures::source("a1_root_lattice").unwrap().replacen("\"name\"", "\"nmae\"", 1);
    assert!(matches!(AlgebraConfig::from_json(&unknown_field), Err(ConfigError::ParseError(_))));
}

#[test]
fn schema_version_is_checked_first() {
    let text = fixtures::source("a1_root_lattice").unwrap().replace("\"schema_version\": 1", "\"schema_version\": 7");
    assert!(matches!(
        AlgebraConfig::from_json(&text),
        Err(ConfigError::SchemaVersionMismatch { found: 7, expected: 1 })
    ));
}

#[test]
fn validation_lists_every_violation() {
    let text = r#"{
        "schema_version": 1,
        "name": "bad_a2",
        "free_rank": 2,
        "root_system": { "named": [{ "type": "A2", "embedding": "coweight" }] },
        "parameters": { "s1": 1, "s2": 2, "s7": 1 }
    }"#;
    let cfg = AlgebraConfig::from_json(text).unwrap();
    let Err(ConfigError::ValidationFailed { name, violations }) = cfg.build() else {
        panic!("expected a validation failure");
    };
    assert_eq!(name, "bad_a2");
    let all = violations.join("\n");
    assert!(all.contains("missing parameter for s0"), "{all}");
    assert!(all.contains("unknown generator \"s7\""), "{all}");
    assert!(all.contains("is odd"), "{all}");
}

#[test]
fn root_system_errors_surface() {
    let non_reduced = r#"{
        "schema_version": 1,
        "name": "bc1",
        "free_rank": 1,
        "root_system": { "explicit": { "simple_roots": [[1]], "simple_coroots": [[2]], "roots": [[1], [-1], [2], [-2]] } },
        "parameters": { "s0": 1, "s1": 1 }
    }"#;
    let err = AlgebraConfig::from_json(non_reduced).unwrap().build().unwrap_err();
    assert!(err.to_string().contains("reduced"), "{err}");
    let bad_pairing = non_reduced.replace("\"simple_coroots\": [[2]]", "\"simple_coroots\": [[3]]").replace(", \"roots\": [[1], [-1], [2], [-2]]", "");
    assert!(AlgebraConfig::from_json(&bad_pairing).unwrap().build().is_err());
}

#[test]
fn inconsistent_torsion_is_rejected() {
    let text = fixtures::source("a1_torsion").unwrap().replace("\"coroot_torsion\": [[1]]", "\"coroot_torsion\": [[1], [0]]");
    let err = AlgebraConfig::from_json(&text).unwrap().build().unwrap_err();
    assert!(err.to_string().contains("coroot_torsion"), "{err}");
}

#[test]
fn configs_round_trip_through_json() {
    for name in fixtures::NAMES {
        let cfg = fixtures::config(name).unwrap();
        let again = AlgebraConfig::from_json(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(cfg, again);
    }
}
