use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use iwahori_hecke::config::{self, ConfigError};
use iwahori_hecke::hecke::DEFAULT_MAX_STEPS;
use iwahori_hecke::literal;
use iwahori_hecke::verify::{self, SuiteConfig, Windows};
use iwahori_hecke::{fixtures, HeckeAlgebra, HeckeElt, WeylElt};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Iwahori-Hecke algebras of extended affine Weyl groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Length window for checks and enumerations.
    #[arg(long, global = true)]
    window: Option<u32>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Render in the normalized basis T~_w = v^{-L(w)} T_w.
    #[arg(long, global = true)]
    normalized: bool,
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Group data, generators, parameters and hyperplane families.
    Info { config: String },
    /// Product of two elements, e.g. `mul cfg.json "T[s1]" "(1,0)|s2"`.
    Mul { config: String, a: String, b: String },
    /// Θ_λ in the T-basis with its Bernstein certificate.
    Theta { config: String, lambda: String },
    /// The orbit sum z_O through λ and its decomposition.
    Center { config: String, lambda: String },
    /// Runs the full relation suite; exits 1 on any failure.
    Verify { config: String },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// A path to a JSON file, or the name of a bundled fixture.
fn load(spec: &str) -> Result<HeckeAlgebra, Failure> {
    if Path::new(spec).exists() || spec.ends_with(".json") {
        return Ok(config::load(spec)?);
    }
    match fixtures::config(spec) {
        Ok(cfg) => Ok(cfg.build()?),
        Err(_) => Err(Failure::Usage(format!("{spec}: no such file or bundled fixture"))),
    }
}

fn element(alg: &HeckeAlgebra, s: &str) -> Result<HeckeElt, Failure> {
    alg.parse_basis(s).map_err(usage)
}

fn render(cli: &Cli, alg: &HeckeAlgebra, h: &HeckeElt) -> String {
    if cli.normalized {
        alg.render_normalized(h)
    } else {
        alg.render(h)
    }
}

fn info(cli: &Cli, alg: &HeckeAlgebra) -> Result<(), Failure> {
    let g = alg.group();
    let gens: Vec<_> = g
        .gen_ids()
        .map(|s| json!({ "name": g.gen_name(s), "weight": alg.params().weight(s), "affine": g.is_affine_gen(s) }))
        .collect();
    let omega = g.omega_elements(verify::suite::OMEGA_CAP);
    let omega_gens: Vec<String> = g.omega_generators().iter().map(|t| alg.render_elt(t)).collect();
    let families = verify::hyperplane_families(alg).map_err(usage)?;
    let lattice = g.lattice();
    let torsion: Vec<String> = lattice.torsion_orders().iter().map(|d| format!("Z/{d}")).collect();
    if cli.output == Output::Json {
        let v = json!({
            "name": alg.name(),
            "root_system": g.roots().type_name(),
            "weyl_order": g.weyl().order(),
            "free_rank": lattice.free_rank(),
            "torsion_orders": lattice.torsion_orders(),
            "generators": gens,
            "omega_order": omega.as_ref().map(Vec::len),
            "omega_generators": omega_gens,
            "families": families,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        return Ok(());
    }
    println!("name          {}", alg.name());
    println!("root system   {}", g.roots().type_name());
    println!("|W|           {}", g.weyl().order());
    let tors = if torsion.is_empty() { "none".to_string() } else { torsion.join(" ⊕ ") };
    println!("Λ             Z^{} (torsion: {tors})", lattice.free_rank());
    let d: Vec<String> = g.gen_ids().map(|s| format!("{} (L = {})", g.gen_name(s), alg.params().weight(s))).collect();
    println!("Δ_aff         {}", d.join(", "));
    match omega {
        Some(o) if omega_gens.is_empty() => println!("Ω_G           order {}", o.len()),
        Some(o) => println!("Ω_G           order {}, generated by {}", o.len(), omega_gens.join(", ")),
        None => println!("Ω_G           infinite, generated by {}", omega_gens.join(", ")),
    }
    println!("families");
    for f in &families {
        println!("  {f}");
    }
    Ok(())
}

fn mul(cli: &Cli, alg: &HeckeAlgebra, a: &str, b: &str) -> Result<(), Failure> {
    let (x, y) = (element(alg, a)?, element(alg, b)?);
    let p = alg.mul(&x, &y).map_err(usage)?;
    let text = render(cli, alg, &p);
    match cli.output {
        Output::Json => println!("{}", json!({ "a": render(cli, alg, &x), "b": render(cli, alg, &y), "product": text, "terms": p.len() })),
        Output::Table => println!("{text}"),
    }
    Ok(())
}

fn theta(cli: &Cli, alg: &HeckeAlgebra, lambda: &str) -> Result<(), Failure> {
    let g = alg.group();
    let lam = alg.parse_lattice(lambda).map_err(usage)?;
    let th = alg.theta(&lam);
    let cert = alg.to_bernstein(&th, DEFAULT_MAX_STEPS).map_err(usage)?;
    let certified = cert.len() == 1 && cert.get(&(lam.clone(), WeylElt::IDENTITY)).is_some_and(|c| c.is_one());
    let t = g.translation(lam.clone());
    let support_ok = th.support().all(|w| g.bruhat_leq(w, &t) && g.omega(w) == g.omega(&t));
    let (l1, l2) = g.compact_decompose(&lam);
    let text = render(cli, alg, &th);
    match cli.output {
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "lambda": lam.to_string(),
                "decomposition": [l1.to_string(), l2.to_string()],
                "theta": text,
                "terms": th.len(),
                "bernstein": alg.render_bernstein(&cert),
                "support_below_t_lambda": support_ok,
            }))
            .expect("json")
        ),
        Output::Table => {
            println!("Θ[{lam}] = T~[{l1}]·T~[{l2}]^-1");
            println!("  = {text}");
            println!("terms         {}", th.len());
            println!("bernstein     {}", alg.render_bernstein(&cert));
            println!("support ⪯ t_λ {support_ok}");
        }
    }
    if certified && support_ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn center(cli: &Cli, alg: &HeckeAlgebra, lambda: &str) -> Result<(), Failure> {
    let g = alg.group();
    let lam = alg.parse_lattice(lambda).map_err(usage)?;
    let orbit = g.weyl_orbit(&lam);
    let z = alg.central_element(&orbit);
    let dec = alg.center_decompose(&z).map_err(usage)?;
    let round_trip = dec.len() == 1 && dec.get(&orbit).is_some_and(|c| c.is_one());
    let text = render(cli, alg, &z);
    let dec_text: Vec<String> = dec.iter().map(|(o, c)| literal::render_term(c, &format!("z[{o}]"))).collect();
    match cli.output {
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "orbit": orbit.to_string(),
                "orbit_size": orbit.len(),
                "z": text,
                "terms": z.len(),
                "decomposition": dec_text,
                "round_trip": round_trip,
            }))
            .expect("json")
        ),
        Output::Table => {
            println!("O = {orbit} ({} elements)", orbit.len());
            println!("z_O = {text}");
            println!("terms         {}", z.len());
            println!("decomposition {}", literal::join_terms(&dec_text));
            println!("round trip    {round_trip}");
        }
    }
    if round_trip {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_verify(cli: &Cli, alg: &HeckeAlgebra) -> Result<(), Failure> {
    let windows = cli.window.map(Windows::with_window).unwrap_or_default();
    let report = verify::run_paper_suite(alg, SuiteConfig { windows, seed: cli.seed });
    match cli.output {
        Output::Json => println!("{}", report.to_json()),
        Output::Table => print!("{}", report.to_table()),
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Info { config } => info(cli, &load(config)?),
        Command::Mul { config, a, b } => mul(cli, &load(config)?, a, b),
        Command::Theta { config, lambda } => theta(cli, &load(config)?, lambda),
        Command::Center { config, lambda } => center(cli, &load(config)?, lambda),
        Command::Verify { config } => run_verify(cli, &load(config)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
