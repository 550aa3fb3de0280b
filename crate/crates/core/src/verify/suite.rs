//! The relation suite: every identity of the algebra, checked over a window of lengths.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::oracles::{ball_reduced_word, gallery_distances, group_algebra_oracle, subword_bruhat_leq, wall_image};
use super::report::{CheckResult, Counterexample, FamilyReport, VerificationReport};
use crate::ext::{ExtElt, Gen, Lat, Orbit};
use crate::hecke::{HeckeAlgebra, HeckeElt, HeckeError, DEFAULT_MAX_STEPS};
use crate::laurent::Laurent;
use crate::weyl::WeylElt;

/// Largest `Ω_G` the suite will enumerate.
pub const OMEGA_CAP: usize = 4096;
const BALL_CAP: usize = 2_000_000;
const WALL_BOUND: usize = 100_000;
const CONJUGATION_CAP: usize = 10;

/// Length windows for each family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Windows {
    pub binary: u32,
    pub unary: u32,
    pub group_ring: u32,
    pub triple: u32,
    pub bernstein: u32,
    pub additivity: u32,
    pub conjugation: u32,
    pub bruhat: u32,
    pub center: u32,
    pub random_len: u32,
    pub random_samples: usize,
    pub iota_samples: usize,
}

impl Default for Windows {
    fn default() -> Self {
        Windows {
            binary: 6,
            unary: 8,
            group_ring: 4,
            triple: 3,
            bernstein: 5,
            additivity: 4,
            conjugation: 4,
            bruhat: 5,
            center: 8,
            random_len: 12,
            random_samples: 1000,
            iota_samples: 200,
        }
    }
}

impl Windows {
    /// Binary checks at `n`, unary checks at `n + 2`, everything else capped at `n`.
    pub fn with_window(n: u32) -> Self {
        let d = Windows::default();
        Windows {
            binary: n,
            unary: n + 2,
            group_ring: d.group_ring.min(n),
            triple: d.triple.min(n),
            bernstein: d.bernstein.min(n),
            additivity: d.additivity.min(n),
            conjugation: d.conjugation.min(n),
            bruhat: d.bruhat.min(n),
            center: n + 2,
            ..d
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub windows: Windows,
    pub seed: u64,
}

struct Ctx<'a> {
    alg: &'a HeckeAlgebra,
    cfg: SuiteConfig,
    omega: Vec<ExtElt>,
}

impl Ctx<'_> {
    fn els(&self, n: u32) -> Vec<ExtElt> {
        self.alg.group().elements_up_to(n, OMEGA_CAP).unwrap_or_default()
    }

    fn rng(&self, name: &str) -> ChaCha8Rng {
        let salt = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ salt)
    }

    fn e(&self, w: &ExtElt) -> String {
        self.alg.render_elt(w)
    }

    fn h(&self, h: &HeckeElt) -> String {
        self.alg.render(h)
    }

    fn translations(&self, n: u32) -> Vec<Lat> {
        self.alg.group().translations_up_to(n, 1)
    }
}

fn ce(elements: Vec<String>, lhs: String, rhs: String) -> Counterexample {
    Counterexample { elements, lhs, rhs }
}

fn compare(ctx: &Ctx, elements: Vec<String>, lhs: &HeckeElt, rhs: &HeckeElt) -> Option<Counterexample> {
    (lhs != rhs).then(|| ce(elements, ctx.h(lhs), ctx.h(rhs)))
}

fn q(ctx: &Ctx, g: Gen) -> Laurent {
    Laurent::v_pow(2 * ctx.alg.params().weight(g) as i32)
}

/// Runs `f` over `cases` in parallel and records the first failure in input order.
fn run_cases<T: Sync>(
    result: &mut CheckResult,
    cases: &[T],
    f: impl Fn(&T) -> Option<Counterexample> + Sync + Send,
) {
    result.cases += cases.len();
    if let Some(c) = cases.par_iter().find_map_first(f) {
        result.fail(c);
    }
}

fn err_ce(what: String, e: impl std::fmt::Display) -> Counterexample {
    ce(vec![what], format!("error: {e}"), "a value".into())
}

fn im_additivity(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("im.additivity", alg.name(), n);
    let els = ctx.els(n);
    let pairs: Vec<(&ExtElt, &ExtElt)> = els
        .iter()
        .flat_map(|a| els.iter().map(move |b| (a, b)))
        .filter(|(a, b)| g.length(&g.mul(a, b)) == g.length(a) + g.length(b))
        .collect();
    run_cases(&mut r, &pairs, |(a, b)| {
        let got = alg.product(&alg.basis(a), &alg.basis(b));
        compare(ctx, vec![ctx.e(a), ctx.e(b)], &got, &alg.basis(&g.mul(a, b)))
    });
    r
}

fn im_quadratic(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let mut r = CheckResult::new("im.quadratic", alg.name(), 1);
    let gens: Vec<Gen> = g.gen_ids().collect();
    run_cases(&mut r, &gens, |&s| {
        let ts = alg.gen(s);
        let q = q(ctx, s);
        let mut want = ts.scale(&(&q - &Laurent::one()));
        want.add_term(&g.identity(), &q);
        compare(ctx, vec![g.gen_name(s).into(), g.gen_name(s).into()], &alg.product(&ts, &ts), &want)
    });
    r
}

/// `T_w T_s` and `T_s T_w` when `s` is a descent of `w`.
fn im_descent(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("im.descent", alg.name(), n);
    let els = ctx.els(n);
    let cases: Vec<(&ExtElt, Gen)> = els.iter().flat_map(|w| g.gen_ids().map(move |s| (w, s))).collect();
    run_cases(&mut r, &cases, |&(w, s)| {
        let q = q(ctx, s);
        let tw = alg.basis(w);
        let ws = g.right_mul_gen(w, s);
        if g.length(&ws) < g.length(w) {
            let mut want = tw.scale(&(&q - &Laurent::one()));
            want.add_term(&ws, &q);
            let bad = compare(ctx, vec![ctx.e(w), g.gen_name(s).into()], &alg.product(&tw, &alg.gen(s)), &want);
            if bad.is_some() {
                return bad;
            }
        }
        let sw = g.left_mul_gen(s, w);
        if g.length(&sw) < g.length(w) {
            let mut want = tw.scale(&(&q - &Laurent::one()));
            want.add_term(&sw, &q);
            return compare(ctx, vec![g.gen_name(s).into(), ctx.e(w)], &alg.product(&alg.gen(s), &tw), &want);
        }
        None
    });
    r
}

fn im_omega_twist(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("im.omega_twist", alg.name(), n);
    let els = ctx.els(n);
    let cases: Vec<(&ExtElt, &ExtElt)> = els.iter().flat_map(|w| ctx.omega.iter().map(move |t| (w, t))).collect();
    run_cases(&mut r, &cases, |&(w, tau)| {
        let want = alg.basis(&g.mul(w, tau));
        let right = alg.product(&alg.basis(w), &alg.basis(tau));
        let conj = g.mul(&g.mul(&g.inverse(tau), w), tau);
        let left = alg.product(&alg.basis(tau), &alg.basis(&conj));
        let names = vec![ctx.e(w), ctx.e(tau)];
        compare(ctx, names.clone(), &right, &want).or_else(|| compare(ctx, names, &left, &want))
    });
    r
}

fn im_associativity(ctx: &Ctx) -> CheckResult {
    let alg = ctx.alg;
    let n = ctx.cfg.windows.triple;
    let mut r = CheckResult::new("im.associativity", alg.name(), n);
    let els = ctx.els(n);
    let pairs: Vec<(&ExtElt, &ExtElt)> = els.iter().flat_map(|a| els.iter().map(move |b| (a, b))).collect();
    r.cases = els.len().pow(3);
    let failure = pairs.par_iter().find_map_first(|&(a, b)| {
        let ab = alg.product(&alg.basis(a), &alg.basis(b));
        els.iter().find_map(|c| {
            let left = alg.product(&ab, &alg.basis(c));
            let right = alg.product(&alg.basis(a), &alg.product(&alg.basis(b), &alg.basis(c)));
            compare(ctx, vec![ctx.e(a), ctx.e(b), ctx.e(c)], &left, &right)
        })
    });
    if let Some(c) = failure {
        r.fail(c);
    }
    r
}

fn alcove_length(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let w = ctx.cfg.windows;
    let mut r = CheckResult::new("alcove.length", alg.name(), w.unary);
    let radius = w.unary.max(w.random_len);
    let Some(dist) = gallery_distances(g, radius, BALL_CAP) else {
        r.passed = false;
        r.notes.push("gallery ball too large".into());
        return r;
    };
    let els = ctx.els(w.unary);
    let ball: HashSet<&ExtElt> = dist.iter().filter(|(_, &d)| d <= w.unary).map(|(x, _)| x).collect();
    if ball.len() != els.len() || !els.iter().all(|x| ball.contains(x)) {
        r.fail(ce(
            vec![format!("ℓ ≤ {}", w.unary)],
            format!("{} enumerated elements", els.len()),
            format!("{} elements in the gallery ball", ball.len()),
        ));
    }
    let mut rng = ctx.rng("alcove.length");
    let mut cases = els.clone();
    cases.extend((0..w.random_samples).map(|_| {
        let len = rng.gen_range(0..=w.random_len);
        g.random_element(&mut rng, len, &ctx.omega)
    }));
    r.notes.push(format!("{} enumerated, {} sampled with ℓ ≤ {}", els.len(), w.random_samples, w.random_len));
    run_cases(&mut r, &cases, |x| {
        let len = g.length(x);
        let oracle = dist.get(x).copied();
        let gal = g.gallery_walk(x);
        let rebuilt = g.mul(&g.from_word(&gal.word), &gal.omega);
        let ok = oracle == Some(len) && gal.word.len() as u32 == len && rebuilt == *x && g.length(&gal.omega) == 0;
        (!ok).then(|| {
            ce(
                vec![format!("{}|{}", x.lam, crate::render::weyl(g, x.u))],
                format!("ℓ = {len}, gallery {} letters", gal.word.len()),
                format!("distance {oracle:?}"),
            )
        })
    });
    r
}

fn alcove_omega(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.group_ring;
    let mut r = CheckResult::new("alcove.omega_projection", alg.name(), n);
    let els = ctx.els(n);
    let pairs: Vec<(&ExtElt, &ExtElt)> = els.iter().flat_map(|a| els.iter().map(move |b| (a, b))).collect();
    run_cases(&mut r, &pairs, |&(a, b)| {
        let lhs = g.omega(&g.mul(a, b));
        let rhs = g.mul(&g.omega(a), &g.omega(b));
        (lhs != rhs).then(|| ce(vec![ctx.e(a), ctx.e(b)], ctx.e(&lhs), ctx.e(&rhs)))
    });
    let weyl = g.weyl();
    let conj: Vec<(&ExtElt, WeylElt)> = els.iter().flat_map(|w| weyl.elements().map(move |u| (w, u))).collect();
    run_cases(&mut r, &conj, |&(w, u)| {
        let uu = g.finite(u);
        let c = g.mul(&g.mul(&uu, w), &g.inverse(&uu));
        let (lhs, rhs) = (g.omega(&c), g.omega(w));
        (lhs != rhs).then(|| ce(vec![ctx.e(w), crate::render::weyl(g, u)], ctx.e(&lhs), ctx.e(&rhs)))
    });
    r
}

fn dominance_facts(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.unary;
    let mut r = CheckResult::new("dominance.facts", alg.name(), n);
    let lams = ctx.translations(n);
    let weyl = g.weyl();
    run_cases(&mut r, &lams, |lam| {
        let name = vec![lam.to_string()];
        let (u, dom) = g.dominant_conjugate(lam);
        if !g.is_dominant(&dom) || g.act(u, lam) != dom {
            return Some(ce(name, format!("u(λ) = {dom}"), "dominant conjugate".into()));
        }
        let (l1, l2) = g.dominant_decompose(lam);
        if !g.is_dominant(&l1) || !g.is_dominant(&l2) || g.lattice().sub(&l1, &l2) != *lam {
            return Some(ce(name, format!("{l1} - {l2}"), "dominant decomposition".into()));
        }
        let tl = g.length(&g.translation(lam.clone()));
        if let Some(u) = weyl.elements().find(|&u| g.length(&g.translation(g.act(u, lam))) != tl) {
            return Some(ce(name, format!("ℓ(t_(uλ)) for u = {}", crate::render::weyl(g, u)), format!("{tl}")));
        }
        if g.is_dominant(lam) {
            let t = g.translation(lam.clone());
            if let Some(u) = weyl.elements().find(|&u| g.length(&g.mul(&g.finite(u), &t)) != weyl.length(u) + tl) {
                return Some(ce(name, format!("ℓ(u t_λ) for u = {}", crate::render::weyl(g, u)), "ℓ(u) + ℓ(t_λ)".into()));
            }
        }
        None
    });
    let b = ctx.cfg.windows.binary;
    let dom: Vec<&Lat> = lams.iter().filter(|l| g.is_dominant(l) && g.translation_length(l) <= b).collect();
    let pairs: Vec<(&Lat, &Lat)> = dom.iter().flat_map(|a| dom.iter().map(move |c| (*a, *c))).collect();
    run_cases(&mut r, &pairs, |&(a, c)| {
        let (ta, tc) = (g.translation(a.clone()), g.translation(c.clone()));
        let lhs = g.length(&g.mul(&ta, &tc));
        let rhs = g.length(&ta) + g.length(&tc);
        (lhs != rhs).then(|| ce(vec![a.to_string(), c.to_string()], lhs.to_string(), rhs.to_string()))
    });
    r
}

fn bruhat_subword(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.bruhat;
    let mut r = CheckResult::new("bruhat.subword", alg.name(), n);
    let Some(dist) = gallery_distances(g, n, BALL_CAP) else {
        r.passed = false;
        return r;
    };
    let els = ctx.els(n);
    run_cases(&mut r, &els, |b| {
        let Some((tau, word)) = ball_reduced_word(g, &dist, b) else {
            return Some(ce(vec![ctx.e(b)], "no reduced word in the ball".into(), String::new()));
        };
        els.iter().find_map(|a| {
            let got = g.bruhat_leq(a, b);
            let want = subword_bruhat_leq(g, a, &tau, &word);
            (got != want).then(|| ce(vec![ctx.e(a), ctx.e(b)], format!("bruhat_leq = {got}"), format!("subword = {want}")))
        })
    });
    r.cases = els.len() * els.len();
    r
}

fn theta_well_defined(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("theta.well_defined", alg.name(), n);
    let lams = ctx.translations(n);
    let lat = g.lattice();
    // The shortest non-central dominant translation, used to shift decompositions.
    let nu = lams
        .iter()
        .filter(|l| g.is_dominant(l) && g.translation_length(l) > 0)
        .min_by_key(|l| (g.translation_length(l), (*l).clone()))
        .cloned()
        .unwrap_or_else(|| lat.zero());
    r.notes.push(format!("decompositions: compact, compact + ν, compact + 2ν, k·2ρ∨ with ν = {nu}"));
    run_cases(&mut r, &lams, |lam| {
        let want = alg.theta(lam);
        let (a1, a2) = g.compact_decompose(lam);
        let decs = [
            (a1.clone(), a2.clone()),
            (lat.add(&a1, &nu), lat.add(&a2, &nu)),
            (lat.add_scaled(&a1, &nu, 2), lat.add_scaled(&a2, &nu, 2)),
            g.dominant_decompose(lam),
        ];
        decs.iter().find_map(|(l1, l2)| match alg.theta_from(l1, l2) {
            Ok(h) => compare(ctx, vec![lam.to_string(), format!("{l1} - {l2}")], &h, &want),
            Err(e) => Some(err_ce(lam.to_string(), e)),
        })
    });
    r
}

fn theta_support(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("theta.support", alg.name(), n);
    let lams = ctx.translations(n);
    run_cases(&mut r, &lams, |lam| {
        let t = g.translation(lam.clone());
        let th = alg.theta(lam);
        if g.is_dominant(lam) {
            let want = alg.term(&t, Laurent::v_pow(-(alg.weight(&t) as i32)));
            if let Some(c) = compare(ctx, vec![lam.to_string()], &th, &want) {
                return Some(c);
            }
        }
        let tau = g.omega(&t);
        let bad = th.support().find(|w| !g.bruhat_leq(w, &t) || g.omega(w) != tau).cloned();
        bad.map(|w| ce(vec![lam.to_string(), ctx.e(&w)], "w in supp Θ_λ".into(), "w ⪯ t_λ in the same Ω_G-sector".into()))
    });
    r
}

fn theta_additivity(ctx: &Ctx) -> CheckResult {
    let alg = ctx.alg;
    let n = ctx.cfg.windows.additivity;
    let mut r = CheckResult::new("theta.additivity", alg.name(), n);
    let lams = ctx.translations(n);
    let pairs: Vec<(&Lat, &Lat)> = lams.iter().flat_map(|a| lams.iter().map(move |b| (a, b))).collect();
    run_cases(&mut r, &pairs, |&(a, b)| {
        let lhs = alg.product(&alg.theta(a), &alg.theta(b));
        let rhs = alg.theta(&alg.group().lattice().add(a, b));
        compare(ctx, vec![a.to_string(), b.to_string()], &lhs, &rhs)
    });
    r
}

fn theta_commutation(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.binary;
    let mut r = CheckResult::new("theta.commutation", alg.name(), n);
    let lams = ctx.translations(n);
    let rank = g.roots().rank();
    let cases: Vec<(usize, &Lat)> = lams.iter().flat_map(|l| (0..rank).map(move |i| (i, l))).collect();
    run_cases(&mut r, &cases, |&(i, lam)| {
        let name = vec![format!("s{}", i + 1), lam.to_string()];
        match (alg.commutation_lhs(i, lam), alg.commutation_rhs(i, lam)) {
            (Ok(lhs), Ok(rhs)) => compare(ctx, name, &lhs, &rhs),
            (Err(e), _) | (_, Err(e)) => Some(err_ce(name.join(" "), e)),
        }
    });
    let negative = cases.iter().filter(|(i, l)| g.pairing(*i, l) < 0).count();
    r.notes.push(format!("negative-N convention exercised in {negative} cases"));
    for i in 0..rank {
        let (Ok(l0), Ok(l1)) = (alg.script_l(0, i), alg.script_l(1, i)) else { continue };
        if l0 != l1 && cases.iter().any(|(j, l)| *j == i && g.pairing(i, l).abs() >= 2) {
            r.notes.push(format!("s{}: ℒ(0,s) = {l0} ≠ ℒ(1,s) = {l1} exercised", i + 1));
        }
    }
    r
}

fn bernstein_round_trip(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.bernstein;
    let mut r = CheckResult::new("bernstein.round_trip", alg.name(), n);
    let els = ctx.els(n);
    run_cases(&mut r, &els, |x| {
        let h = alg.basis(x);
        match alg.to_bernstein(&h, DEFAULT_MAX_STEPS) {
            Ok(b) => compare(ctx, vec![ctx.e(x)], &alg.from_bernstein(&b), &h),
            Err(e) => Some(err_ce(ctx.e(x), e)),
        }
    });
    let lams = ctx.translations(n);
    let weyl = g.weyl();
    let basis: Vec<(&Lat, WeylElt)> = lams.iter().flat_map(|l| weyl.elements().map(move |u| (l, u))).collect();
    run_cases(&mut r, &basis, |&(lam, u)| {
        let h = alg.bernstein_basis(lam, u);
        let name = format!("Θ[{lam}]·T[{}]", crate::render::weyl(g, u));
        match alg.to_bernstein(&h, DEFAULT_MAX_STEPS) {
            Ok(b) => {
                let ok = b.len() == 1 && b.get(&(lam.clone(), u)).is_some_and(Laurent::is_one);
                (!ok).then(|| ce(vec![name.clone()], alg.render_bernstein(&b), name))
            }
            Err(e) => Some(err_ce(name, e)),
        }
    });
    r
}

fn orbits(ctx: &Ctx, n: u32) -> Vec<(Orbit, u32)> {
    let g = ctx.alg.group();
    ctx.alg
        .orbits_up_to(n, 1)
        .into_iter()
        .map(|o| {
            let l = g.translation_length(&o.elements()[0]);
            (o, l)
        })
        .collect()
}

fn center_centrality(ctx: &Ctx) -> CheckResult {
    let alg = ctx.alg;
    let n = ctx.cfg.windows.center;
    let mut r = CheckResult::new("center.centrality", alg.name(), n);
    let os = orbits(ctx, n);
    run_cases(&mut r, &os, |(o, _)| {
        let z = alg.central_element(o);
        alg.central_witness(&z)
            .map(|(name, c)| ce(vec![o.to_string(), name], ctx.h(&c), "0".into()))
    });
    r
}

fn center_independence(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.center;
    let mut r = CheckResult::new("center.independence", alg.name(), n);
    let os = orbits(ctx, n);
    let pairs: Vec<_> = os
        .iter()
        .flat_map(|a| os.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.0 != b.0 && b.1 <= a.1)
        .collect();
    run_cases(&mut r, &pairs, |&((o, _), (o2, _))| {
        let dom = g.dominant_members(o);
        let t = g.translation(dom[0].clone());
        let c = alg.central_element(o2).coeff(&t);
        (!c.is_zero()).then(|| ce(vec![o.to_string(), o2.to_string()], c.to_string(), "0".into()))
    });
    r
}

fn center_decompose(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.center.min(ctx.cfg.windows.binary);
    let mut r = CheckResult::new("center.decompose", alg.name(), n);
    let os: Vec<Orbit> = orbits(ctx, n).into_iter().map(|(o, _)| o).collect();
    let mut rng = ctx.rng("center.decompose");
    let samples: Vec<BTreeMap<Orbit, Laurent>> = (0..25)
        .map(|_| {
            let k = rng.gen_range(1..=4.min(os.len()));
            let mut m = BTreeMap::new();
            for _ in 0..k {
                let o = os[rng.gen_range(0..os.len())].clone();
                let c = Laurent::monomial(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-3..=3));
                m.insert(o, c);
            }
            m
        })
        .collect();
    run_cases(&mut r, &samples, |m| {
        let mut h = alg.zero();
        for (o, c) in m {
            h.add_scaled(&alg.central_element(o), c);
        }
        let want: String = m.iter().map(|(o, c)| format!("{c}·z[{o}] ")).collect();
        match alg.center_decompose(&h) {
            Ok(got) if got == *m => None,
            Ok(got) => Some(ce(vec![want.clone()], got.iter().map(|(o, c)| format!("{c}·z[{o}] ")).collect(), want)),
            Err(e) => Some(err_ce(want, e)),
        }
    });
    let gens: Vec<Gen> = g.gen_ids().collect();
    let commuting = gens
        .iter()
        .all(|&s| gens.iter().all(|&t| alg.commutator(&alg.gen(s), &alg.gen(t)).is_zero()));
    if commuting {
        r.notes.push("all generators commute; rejection of T_s not tested".into());
    } else {
        run_cases(&mut r, &gens, |&s| match alg.center_decompose(&alg.gen(s)) {
            Err(HeckeError::NotCentral { .. }) => None,
            other => Some(ce(vec![g.gen_name(s).into()], format!("{other:?}"), "NotCentral".into())),
        });
    }
    r
}

fn iota_homomorphism(ctx: &Ctx) -> CheckResult {
    let alg = ctx.alg;
    let w = ctx.cfg.windows;
    let n = w.additivity;
    let mut r = CheckResult::new("iota.homomorphism", alg.name(), n);
    let quotient = alg.torsion_free_quotient();
    let els = ctx.els(n);
    let mut rng = ctx.rng("iota.homomorphism");
    let random_h = |rng: &mut ChaCha8Rng| {
        let mut h = alg.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let x = &els[rng.gen_range(0..els.len())];
            h.add_term(x, &Laurent::monomial(rng.gen_range(-3..=3i64).max(1), rng.gen_range(-2..=2)));
        }
        h
    };
    let samples: Vec<(HeckeElt, HeckeElt)> = (0..w.iota_samples).map(|_| (random_h(&mut rng), random_h(&mut rng))).collect();
    let iota = |h: &HeckeElt| alg.iota(h, &quotient).expect("quotient matches");
    run_cases(&mut r, &samples, |(a, b)| {
        let lhs = iota(&alg.product(a, b));
        let rhs = quotient.product(&iota(a), &iota(b));
        (lhs != rhs).then(|| ce(vec![ctx.h(a), ctx.h(b)], quotient.render(&lhs), quotient.render(&rhs)))
    });
    let lams = ctx.translations(n);
    run_cases(&mut r, &lams, |lam| {
        let lhs = iota(&alg.theta(lam));
        let rhs = quotient.theta(&HeckeAlgebra::iota_lat(lam));
        (lhs != rhs).then(|| ce(vec![lam.to_string()], quotient.render(&lhs), quotient.render(&rhs)))
    });
    let os = orbits(ctx, n);
    run_cases(&mut r, &os, |(o, _)| {
        let z = iota(&alg.central_element(o));
        quotient
            .central_witness(&z)
            .map(|(name, c)| ce(vec![o.to_string(), name], quotient.render(&c), "0".into()))
    });
    r
}

fn wall_families(ctx: &Ctx) -> (CheckResult, Vec<FamilyReport>) {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let n = ctx.cfg.windows.unary;
    let mut r = CheckResult::new("walls.families", alg.name(), n);
    let roots = g.roots();
    let els = ctx.els(n);
    let mut families = Vec::new();
    for b in 0..roots.num_positive() {
        r.cases += 1;
        let name = format!("{:?}", roots.root(b));
        let outcome = g.hyperplane_family_transitive(b, WALL_BOUND).map_err(|e| e.to_string()).and_then(|t| {
            let p = alg.params();
            let l0 = g.wall_parameter(g.wall(b, 0), p).map_err(|e| e.to_string())?;
            let l1 = g.wall_parameter(g.wall(b, 1), p).map_err(|e| e.to_string())?;
            Ok((t, l0, l1))
        });
        let (transitive, l0, l1) = match outcome {
            Ok(x) => x,
            Err(e) => {
                r.fail(ce(vec![name], format!("error: {e}"), "a value".into()));
                continue;
            }
        };
        families.push(FamilyReport {
            root: roots.root(b).to_vec(),
            transitive,
            l_h0: l0,
            l_h1: l1,
        });
        if transitive && l0 != l1 {
            r.fail(ce(vec![name.clone()], format!("L(H₀) = {l0}, L(H₁) = {l1}"), "equal parameters".into()));
        }
        let witness = els.iter().find(|w| wall_image(g, w, b, 0) == (b, 1));
        match (transitive, witness) {
            (false, Some(w)) => r.fail(ce(vec![name.clone(), ctx.e(w)], "maps H₀ to H₁".into(), "family reported intransitive".into())),
            (true, None) => r.notes.push(format!("{name}: no witness with ℓ ≤ {n}")),
            _ => {}
        }
        // Walls of the base alcove carry the parameter of their generator.
        if b < roots.rank() && l0 != alg.params().weight(Gen(b as u8)) {
            r.fail(ce(vec![name], format!("L(H₀) = {l0}"), format!("L(s{})", b + 1)));
        }
    }
    for s in g.gen_ids().filter(|&s| g.is_affine_gen(s)) {
        let h = g.wall(g.gen_root(s), 1);
        if g.wall_parameter(h, alg.params()) != Ok(alg.params().weight(s)) {
            r.fail(ce(vec![g.gen_name(s).into()], "wall parameter".into(), format!("L({})", g.gen_name(s))));
        }
    }
    (r, families)
}

fn params_valid(ctx: &Ctx) -> CheckResult {
    let (alg, g) = (ctx.alg, ctx.alg.group());
    let mut r = CheckResult::new("params.valid", alg.name(), 0);
    r.cases = 1;
    let v = g.validate_params(alg.params());
    if !v.is_empty() {
        r.fail(ce(vec![], v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "), "no violations".into()));
    }
    r
}

fn conjugation_chain(ctx: &Ctx) -> CheckResult {
    let g = ctx.alg.group();
    let n = ctx.cfg.windows.conjugation;
    let mut r = CheckResult::new("conjugation.chain", ctx.alg.name(), n);
    let els: Vec<ExtElt> = ctx.els(n).into_iter().filter(|w| w.u != WeylElt::IDENTITY).collect();
    run_cases(&mut r, &els, |w| {
        let chain = match g.find_length_increasing_conjugation(w, CONJUGATION_CAP) {
            Ok(c) => c,
            Err(e) => return Some(err_ce(ctx.e(w), e)),
        };
        let len = g.length(w);
        let mut cur = w.clone();
        for (k, &s) in chain.iter().enumerate() {
            cur = g.mul(&g.mul(g.gen(s), &cur), g.gen(s));
            let last = k + 1 == chain.len();
            if (last && g.length(&cur) <= len) || (!last && g.length(&cur) != len) {
                return Some(ce(
                    vec![ctx.e(w), crate::render::word(g, &chain)],
                    format!("ℓ = {} after {} steps", g.length(&cur), k + 1),
                    format!("ℓ(w) = {len}"),
                ));
            }
        }
        None
    });
    r
}

/// Runs every check on `alg`. Deterministic in `(alg, cfg)`.
pub fn run_paper_suite(alg: &HeckeAlgebra, cfg: SuiteConfig) -> VerificationReport {
    let omega = alg.group().omega_elements(OMEGA_CAP).unwrap_or_default();
    let ctx = Ctx { alg, cfg, omega };
    type Check = fn(&Ctx) -> CheckResult;
    let checks: Vec<Check> = vec![
        im_additivity,
        im_quadratic,
        im_descent,
        im_omega_twist,
        im_associativity,
        alcove_length,
        alcove_omega,
        dominance_facts,
        bruhat_subword,
        theta_well_defined,
        theta_support,
        theta_additivity,
        theta_commutation,
        bernstein_round_trip,
        center_centrality,
        center_independence,
        center_decompose,
        iota_homomorphism,
        params_valid,
        conjugation_chain,
    ];
    let mut results: Vec<CheckResult> = checks.par_iter().map(|c| c(&ctx)).collect();
    results.push(group_algebra_oracle(alg, cfg.windows.group_ring, |a, b| alg.product(a, b)));
    let (walls, families) = wall_families(&ctx);
    results.push(walls);
    if ctx.omega.is_empty() {
        let mut r = CheckResult::new("omega.finite", alg.name(), 0);
        r.passed = false;
        r.notes.push(format!("Ω_G has more than {OMEGA_CAP} elements"));
        results.push(r);
    }
    results.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport {
        fixture: alg.name().to_string(),
        seed: cfg.seed,
        windows: cfg.windows,
        passed: results.iter().all(|c| c.passed),
        families,
        checks: results,
    }
}

/// Transitivity and the two wall parameters for every positive root family.
pub fn hyperplane_families(alg: &HeckeAlgebra) -> Result<Vec<FamilyReport>, crate::ext::WallError> {
    let g = alg.group();
    (0..g.roots().num_positive())
        .map(|b| {
            Ok(FamilyReport {
                root: g.roots().root(b).to_vec(),
                transitive: g.hyperplane_family_transitive(b, WALL_BOUND)?,
                l_h0: g.wall_parameter(g.wall(b, 0), alg.params())?,
                l_h1: g.wall_parameter(g.wall(b, 1), alg.params())?,
            })
        })
        .collect()
}
