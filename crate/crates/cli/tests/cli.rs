use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn mul_quadratic_relation() {
    let o = hecke(&["mul", &fixture("a1_root_lattice"), "T[s]", "T[s]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "v^2·T[1] + (v^2 - 1)·T[s1]\n");
    let o = hecke(&["mul", &fixture("c2_alternating"), "s0", "s0", "--normalized"]);
    assert_eq!(stdout(&o), "v^4·T~[1] + (v^6 - v^2)·T~[s0]\n");
    let o = hecke(&["mul", &fixture("c2_alternating"), "T~[s0]", "T~[s0]", "--normalized"]);
    assert_eq!(stdout(&o), "T~[1] + (v^2 - v^-2)·T~[s0]\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["center", "a2_omega3", "(1,1)"];
    assert_eq!(hecke(&args).stdout, hecke(&args).stdout);
}

#[test]
fn theta_certificate() {
    let o = hecke(&["theta", &fixture("a1_root_lattice"), "(-1;)"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("bernstein     Θ[(-1)]"), "{out}");
    assert!(out.contains("support ⪯ t_λ true"), "{out}");
}

#[test]
fn center_round_trip_json() {
    let o = hecke(&["center", "so_ramified", "(1,0,0;1)", "--output", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orbit_size"], 6);
    assert_eq!(v["round_trip"], true);
}

#[test]
fn info_reports_families() {
    let o = hecke(&["info", &fixture("so_ramified")]);
    let out = stdout(&o);
    assert!(out.contains("family([2,0,0]): transitive=false"), "{out}");
    assert!(out.contains("torsion: Z/2"), "{out}");
    let o = hecke(&["info", "su6_ramified", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weyl_order"], 48);
    assert_eq!(v["omega_order"], 2);
}

#[test]
fn verify_su6_window_4() {
    let o = hecke(&["verify", &fixture("su6_ramified"), "--window", "4"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("family([1,0,0]): transitive=true, L(H₀)=L(H₁)"), "{out}");
    assert!(out.ends_with("all checks passed\n"));
}

#[test]
fn verify_json_report() {
    let o = hecke(&["verify", "a1_torsion", "--window", "3", "--seed", "5", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "iota.homomorphism"));
}

#[test]
fn usage_and_config_errors_exit_2() {
    assert_eq!(hecke(&["mul", "a1_root_lattice", "s9", "s1"]).status.code(), Some(2));
    assert_eq!(hecke(&["info", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(hecke(&["info", "no_such_fixture"]).status.code(), Some(2));
    assert_eq!(hecke(&["frobnicate"]).status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"schema_version": 2, "name": "x"}"#).unwrap();
    let o = hecke(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema_version 2"));
}
