//! Acceptance criteria 1 to 10. Prints one line per criterion and exits nonzero on failure.

use std::collections::HashMap;
use std::process::ExitCode;

use iwahori_hecke::verify::{run_paper_suite, SuiteConfig, VerificationReport};
use iwahori_hecke::{fixtures, HeckeAlgebra, Laurent};
use rayon::prelude::*;

type Outcome = Result<String, String>;

struct Run {
    algs: HashMap<&'static str, HeckeAlgebra>,
    reports: HashMap<&'static str, VerificationReport>,
}

impl Run {
    fn new() -> Self {
        let pairs: Vec<_> = fixtures::NAMES
            .par_iter()
            .map(|&n| {
                let alg = fixtures::load(n);
                let rep = run_paper_suite(&alg, SuiteConfig::default());
                (n, alg, rep)
            })
            .collect();
        let mut algs = HashMap::new();
        let mut reports = HashMap::new();
        for (n, a, r) in pairs {
            algs.insert(n, a);
            reports.insert(n, r);
        }
        Run { algs, reports }
    }

    /// Fails unless `check` passed with at least `window` in every fixture.
    fn require(&self, check: &str, window: u32, fixtures: &[&str]) -> Outcome {
        let mut cases = 0;
        for f in fixtures {
            let c = self.reports[f].check(check).ok_or(format!("{f}: no check {check}"))?;
            if !c.passed {
                return Err(format!("{f}: {check} failed: {:?}", c.counterexample));
            }
            if c.window < window {
                return Err(format!("{f}: {check} ran at window {} < {window}", c.window));
            }
            cases += c.cases;
        }
        Ok(format!("{check}: {cases} cases"))
    }
}

fn all() -> &'static [&'static str] {
    fixtures::NAMES
}

fn join(parts: Vec<Outcome>) -> Outcome {
    let mut out = Vec::new();
    for p in parts {
        out.push(p?);
    }
    Ok(out.join("; "))
}

fn criterion_1(run: &Run) -> Outcome {
    join(vec![
        run.require("im.additivity", 6, all()),
        run.require("im.quadratic", 1, all()),
        run.require("im.descent", 6, all()),
        run.require("im.omega_twist", 6, all()),
        run.require("im.associativity", 3, all()),
    ])
}

fn criterion_2(run: &Run) -> Outcome {
    run.require("oracle.group_ring", 4, all())?;
    // Recomputed here from the group law.
    let mut n = 0;
    for f in all() {
        let alg = &run.algs[f];
        let g = alg.group();
        let els = g.elements_up_to(4, 64).ok_or("Ω_G too large")?;
        for a in &els {
            for b in &els {
                let p = alg.specialize_one(&alg.mul(&alg.basis(a), &alg.basis(b)).map_err(|e| e.to_string())?);
                if p.len() != 1 || p.get(&g.mul(a, b)) != Some(&1) {
                    return Err(format!("{f}: {} * {}", alg.render_elt(a), alg.render_elt(b)));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} products at v = 1"))
}

fn criterion_3(run: &Run) -> Outcome {
    let r = run.require("alcove.length", 6, all())?;
    for f in all() {
        let c = run.reports[f].check("alcove.length").unwrap();
        let w = run.reports[f].windows;
        if w.random_samples < 1000 || w.random_len < 12 {
            return Err(format!("{f}: only {} samples up to ℓ {}", w.random_samples, w.random_len));
        }
        if !c.notes.iter().any(|n| n.contains("1000 sampled with ℓ ≤ 12")) {
            return Err(format!("{f}: sampling not recorded"));
        }
    }
    Ok(r)
}

fn criterion_4(run: &Run) -> Outcome {
    join(vec![
        run.require("theta.well_defined", 4, all()),
        run.require("theta.additivity", 4, all()),
        run.require("theta.support", 4, all()),
    ])
}

fn criterion_5(run: &Run) -> Outcome {
    let r = run.require("theta.commutation", 6, all())?;
    // c2_alternating: s2 reflects in 2e2, whose walls at levels 0 and 1 have types s2 and s0.
    let alg = &run.algs["c2_alternating"];
    let g = alg.group();
    let p = alg.params();
    let (s2, s0) = (g.gen_by_name("s2").unwrap(), g.gen_by_name("s0").unwrap());
    let (l, lt) = (p.weight(s2) as i32, p.weight(s0) as i32);
    let l0 = &Laurent::v_pow(2 * l) - &Laurent::one();
    let l1 = &Laurent::v_pow(l + lt) - &Laurent::v_pow(l - lt);
    if l0 == l1 {
        return Err("fixture parameters do not alternate".into());
    }
    for lam in g.translations_up_to(6, 1) {
        let n = g.pairing(1, &lam);
        if n < 2 {
            continue;
        }
        let mut want = alg.zero();
        for j in 0..n {
            let mu = g.lattice().add_scaled(&lam, g.coroot(1), -j);
            want.add_scaled(&alg.theta(&mu), if j % 2 == 0 { &l0 } else { &l1 });
        }
        let lhs = alg.commutation_lhs(1, &lam).map_err(|e| e.to_string())?;
        if lhs != want {
            return Err(format!("c2_alternating s2 at {lam}: {} ≠ {}", alg.render(&lhs), alg.render(&want)));
        }
        return Ok(format!("{r}; c2_alternating s2 at {lam}: ℒ(0,s) = {l0}, ℒ(1,s) = {l1}"));
    }
    Err("no λ with ⟨α2, λ⟩ ≥ 2 and ℓ(t_λ) ≤ 6".into())
}

fn criterion_6(run: &Run) -> Outcome {
    run.require("bernstein.round_trip", 5, all())
}

fn criterion_7(run: &Run) -> Outcome {
    let r = join(vec![
        run.require("center.centrality", 8, all()),
        run.require("center.independence", 8, all()),
        run.require("center.decompose", 4, all()),
    ])?;
    for f in all() {
        let alg = &run.algs[f];
        let g = alg.group();
        let s = g.gen_ids().next().unwrap();
        match alg.center_decompose(&alg.gen(s)) {
            Err(iwahori_hecke::hecke::HeckeError::NotCentral { terms, .. }) if terms > 0 => {}
            other => return Err(format!("{f}: T_s gave {other:?}")),
        }
    }
    Ok(r)
}

fn criterion_8(run: &Run) -> Outcome {
    let f = "a1_torsion";
    let r = run.require("iota.homomorphism", 4, &[f])?;
    if run.reports[f].windows.iota_samples < 200 {
        return Err("fewer than 200 sampled products".into());
    }
    let alg = &run.algs[f];
    let q = alg.torsion_free_quotient();
    let g = alg.group();
    for lam in g.translations_up_to(6, 1) {
        let img = alg.iota(&alg.theta(&lam), &q).map_err(|e| e.to_string())?;
        if img != q.theta(&lam.free_part()) {
            return Err(format!("ι(Θ_{lam}) ≠ Θ_ι({lam})"));
        }
    }
    for o in alg.orbits_up_to(8, 1) {
        let z = alg.iota(&alg.central_element(&o), &q).map_err(|e| e.to_string())?;
        if let Some((w, _)) = q.central_witness(&z) {
            return Err(format!("ι(z_{o}) does not commute with {w}"));
        }
    }
    Ok(r)
}

fn criterion_9(run: &Run) -> Outcome {
    let family = |f: &str, root: &[i64]| {
        run.reports[f]
            .families
            .iter()
            .find(|x| x.root == root)
            .cloned()
            .ok_or(format!("{f}: family {root:?} missing"))
    };
    let su6 = family("su6_ramified", &[1, 0, 0])?;
    let so = family("so_ramified", &[2, 0, 0])?;
    let g = run.algs["su6_ramified"].group();
    let b = g.roots().index_of(&[1, 0, 0]).unwrap();
    let direct = g.hyperplane_family_transitive(b, 100_000) == Ok(true);
    let g2 = run.algs["so_ramified"].group();
    let b2 = g2.roots().index_of(&[2, 0, 0]).unwrap();
    let direct2 = g2.hyperplane_family_transitive(b2, 100_000) == Ok(false);
    if su6.transitive && su6.l_h0 == su6.l_h1 && !so.transitive && direct && direct2 {
        Ok(format!("su6_ramified: {su6}; so_ramified: {so}"))
    } else {
        Err(format!("su6_ramified: {su6}; so_ramified: {so}"))
    }
}

fn criterion_10(run: &Run) -> Outcome {
    let fs = ["a1_root_lattice", "a1_weight_lattice", "a1_torsion", "a2_omega3"];
    let r = run.require("conjugation.chain", 4, &fs)?;
    for f in fs {
        let g = run.algs[f].group();
        for w in g.elements_up_to(4, 64).unwrap() {
            if w.u != iwahori_hecke::WeylElt::IDENTITY {
                g.find_length_increasing_conjugation(&w, 10)
                    .map_err(|e| format!("{f}: {}: {e}", run.algs[f].render_elt(&w)))?;
            }
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let run = Run::new();
    type Criterion = (&'static str, fn(&Run) -> Outcome);
    let criteria: [Criterion; 10] = [
        ("Iwahori-Matsumoto relations, ℓ ≤ 6", criterion_1),
        ("group-ring oracle at v = 1, ℓ ≤ 4", criterion_2),
        ("closed-form length = gallery length", criterion_3),
        ("Θ well-defined and additive", criterion_4),
        ("Bernstein commutation relation", criterion_5),
        ("Bernstein basis round trip, ℓ ≤ 5", criterion_6),
        ("center: centrality, decomposition, rejection", criterion_7),
        ("ι_H on a1_torsion", criterion_8),
        ("hyperplane-family dichotomy", criterion_9),
        ("length-increasing conjugation chains", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        match f(&run) {
            Ok(detail) => println!("criterion {:>2}: PASS  {title} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
