//! Oracles that recompute expected values from the group law alone.

use std::collections::{HashMap, HashSet, VecDeque};

use super::report::{CheckResult, Counterexample};
use crate::ext::{ExtElt, ExtGroup, Gen};
use crate::hecke::{HeckeAlgebra, HeckeElt};

/// Distances from the identity in the Cayley graph of `W̃` with edges `w → w s`
/// (`s ∈ Δ_aff`, cost 1) and `w → w τ^{±1}` (`τ` an `Ω_G` generator, cost 0).
///
/// Returns `None` if the ball holds more than `cap` elements.
pub fn gallery_distances(group: &ExtGroup, radius: u32, cap: usize) -> Option<HashMap<ExtElt, u32>> {
    let mut zero_cost: Vec<ExtElt> = group.omega_generators().to_vec();
    zero_cost.extend(group.omega_generators().iter().map(|t| group.inverse(t)));
    let mut dist = HashMap::from([(group.identity(), 0u32)]);
    let mut deque = VecDeque::from([group.identity()]);
    while let Some(w) = deque.pop_front() {
        let d = dist[&w];
        for t in &zero_cost {
            let x = group.mul(&w, t);
            if dist.get(&x).map_or(true, |&e| e > d) {
                dist.insert(x.clone(), d);
                deque.push_front(x);
            }
        }
        if d == radius {
            continue;
        }
        for s in group.gens() {
            let x = group.mul(&w, s);
            if dist.get(&x).map_or(true, |&e| e > d + 1) {
                dist.insert(x.clone(), d + 1);
                deque.push_back(x);
            }
        }
        if dist.len() > cap {
            return None;
        }
    }
    Some(dist)
}

/// `w = τ · s_1 ⋯ s_k` with `k` minimal, read off a distance table by peeling on the right.
pub fn ball_reduced_word(group: &ExtGroup, dist: &HashMap<ExtElt, u32>, w: &ExtElt) -> Option<(ExtElt, Vec<Gen>)> {
    let mut cur = w.clone();
    let mut word = Vec::new();
    let mut d = *dist.get(w)?;
    while d > 0 {
        let (g, x) = group
            .gen_ids()
            .map(|g| (g, group.right_mul_gen(&cur, g)))
            .find(|(_, x)| dist.get(x) == Some(&(d - 1)))?;
        word.push(g);
        cur = x;
        d -= 1;
    }
    word.reverse();
    Some((cur, word))
}

/// Bruhat order by the subword property: `a ⪯ τ·s_1⋯s_k` iff `a = τ·(subword product)`.
pub fn subword_bruhat_leq(group: &ExtGroup, a: &ExtElt, tau: &ExtElt, word: &[Gen]) -> bool {
    let mut products = HashSet::from([tau.clone()]);
    for &g in word {
        let next: Vec<ExtElt> = products.iter().map(|x| group.right_mul_gen(x, g)).collect();
        products.extend(next);
    }
    products.contains(a)
}

/// Image of the wall `⟨β, x⟩ = k` under `w = t_λ u`, as a canonical `(positive root, level)`.
pub fn wall_image(group: &ExtGroup, w: &ExtElt, root: usize, level: i64) -> (usize, i64) {
    let img = group.weyl().act_root(w.u, root);
    let k = level + group.pairing(img, &w.lam);
    let roots = group.roots();
    if roots.is_positive(img) {
        (img, k)
    } else {
        (roots.neg(img), -k)
    }
}

/// Checks that `mul(T_a, T_b)` at `v = 1` is the group element `ab` for all `ℓ(a), ℓ(b) ≤ window`.
///
/// `mul` is a parameter so that a deliberately broken multiplication can be fed in.
pub fn group_algebra_oracle<F>(alg: &HeckeAlgebra, window: u32, mul: F) -> CheckResult
where
    F: Fn(&HeckeElt, &HeckeElt) -> HeckeElt + Sync,
{
    use rayon::prelude::*;
    let group = alg.group();
    let mut result = CheckResult::new("oracle.group_ring", alg.name(), window);
    let Some(els) = group.elements_up_to(window, super::suite::OMEGA_CAP) else {
        result.passed = false;
        result.notes.push("Ω_G too large to enumerate".into());
        return result;
    };
    result.cases = els.len() * els.len();
    let failure = els.par_iter().find_map_first(|a| {
        els.iter().find_map(|b| {
            let got = alg.specialize_one(&mul(&alg.basis(a), &alg.basis(b)));
            let ab = group.mul(a, b);
            let ok = got.len() == 1 && got.get(&ab) == Some(&1);
            (!ok).then(|| {
                let mut terms: Vec<String> = got
                    .iter()
                    .map(|(w, c)| format!("{c}·{}", alg.render_elt(w)))
                    .collect();
                terms.sort();
                Counterexample {
                    elements: vec![alg.render_elt(a), alg.render_elt(b)],
                    lhs: if terms.is_empty() { "0".into() } else { terms.join(" + ") },
                    rhs: format!("1·{}", alg.render_elt(&ab)),
                }
            })
        })
    });
    if let Some(ce) = failure {
        result.fail(ce);
    }
    result
}
