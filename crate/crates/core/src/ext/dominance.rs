//! Dominance, dominant decompositions and Weyl orbits in `Λ`.

use std::collections::BTreeSet;
use std::fmt;

use super::{ExtGroup, Lat};
use crate::weyl::WeylElt;

/// A finite `W`-orbit in `Λ`, stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit(Vec<Lat>);

impl Orbit {
    pub fn elements(&self) -> &[Lat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: &Lat) -> bool {
        self.0.binary_search(l).is_ok()
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Lat::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl ExtGroup {
    /// `⟨α, λ⟩ ≥ 0` for every simple root; torsion elements are dominant.
    pub fn is_dominant(&self, lam: &Lat) -> bool {
        (0..self.roots.rank()).all(|i| self.pairing(i, lam) >= 0)
    }

    /// `λ = λ₁ - λ₂` with `λ₂ = k·2ρ∨` for the least `k ≥ 0` making `λ₁` dominant.
    pub fn dominant_decompose(&self, lam: &Lat) -> (Lat, Lat) {
        // ⟨α_i, 2ρ∨⟩ = 2 for every simple root.
        let k = (0..self.roots.rank())
            .map(|i| crate::lattice::div_ceil(-self.pairing(i, lam), 2))
            .max()
            .unwrap_or(0)
            .max(0);
        let lam2 = self.lattice.scale(&self.two_rho, k);
        (self.lattice.add(lam, &lam2), lam2)
    }

    /// A dominant decomposition with `λ₂` torsion-free and `⟨2ρ, λ₂⟩` small.
    ///
    /// Both parts are typically far shorter than those of
    /// [`ExtGroup::dominant_decompose`], which keeps `Θ_λ` cheap.
    pub fn compact_decompose(&self, lam: &Lat) -> (Lat, Lat) {
        if self.is_dominant(lam) {
            return (lam.clone(), self.lattice.zero());
        }
        let h = self.hermite.as_ref().expect("non-dominant elements need roots");
        let r = self.roots.rank();
        let need: Vec<i64> = (0..r).map(|i| (-self.pairing(i, lam)).max(0)).collect();
        let base = h.greedy_above(&need);
        let mut best: Option<(i64, Vec<i64>)> = None;
        let tries = 1u32 << r.min(8);
        for mask in 0..tries {
            let y: Vec<i64> = base
                .iter()
                .enumerate()
                .map(|(i, &b)| b + i64::from(mask >> i & 1 == 1))
                .collect();
            if h.image(&y).iter().zip(&need).any(|(c, b)| c < b) {
                continue;
            }
            let x = h.lift(&y);
            let cost: i64 = (0..self.roots.num_positive()).map(|b| self.roots.pairing(b, &x)).sum();
            if best.as_ref().map_or(true, |(c, bx)| (cost, &x) < (*c, bx)) {
                best = Some((cost, x));
            }
        }
        let (_, x) = best.expect("the greedy choice is admissible");
        let mut lam2 = self.lattice.zero();
        lam2.free = x.into_iter().collect();
        (self.lattice.add(lam, &lam2), lam2)
    }

    /// Closure of `{λ}` under the simple reflections.
    pub fn weyl_orbit(&self, lam: &Lat) -> Orbit {
        let mut seen = BTreeSet::from([lam.clone()]);
        let mut stack = vec![lam.clone()];
        while let Some(x) = stack.pop() {
            for i in 0..self.roots.rank() {
                let y = self.reflect_simple(i, &x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        Orbit(seen.into_iter().collect())
    }

    /// Some `u ∈ W` with `u(λ)` dominant, together with `u(λ)`.
    pub fn dominant_conjugate(&self, lam: &Lat) -> (WeylElt, Lat) {
        let weyl = &self.weyl;
        let mut u = WeylElt::IDENTITY;
        let mut x = lam.clone();
        while let Some(i) = (0..self.roots.rank()).find(|&i| self.pairing(i, &x) < 0) {
            x = self.reflect_simple(i, &x);
            u = weyl.left_mul_simple(i, u);
        }
        (u, x)
    }

    /// Dominant members of an orbit, in sorted order.
    pub fn dominant_members(&self, orbit: &Orbit) -> Vec<Lat> {
        orbit.0.iter().filter(|l| self.is_dominant(l)).cloned().collect()
    }

    /// `ℓ(t_λ) = Σ_{α>0} |⟨α, λ⟩|`.
    pub fn translation_length(&self, lam: &Lat) -> u32 {
        (0..self.roots.num_positive())
            .map(|b| self.pairing(b, lam).unsigned_abs() as u32)
            .sum()
    }

    /// Every `λ` with `ℓ(t_λ) ≤ max_len`, sorted.
    ///
    /// Central directions (the kernel of the pairing) are sampled in the box
    /// `[-central, central]` since they do not change the length.
    pub fn translations_up_to(&self, max_len: u32, central: i64) -> Vec<Lat> {
        let r = self.roots.rank();
        let n = self.lattice.free_rank;
        let mut free_parts: Vec<Vec<i64>> = Vec::new();
        match &self.hermite {
            None => free_parts.push(vec![0; n]),
            Some(h) => {
                let m = i64::from(max_len);
                let mut c = vec![-m; r];
                let kernel = h.kernel();
                loop {
                    if let Some(x) = h.solve(&c) {
                        let mut shifts = vec![x];
                        for k in &kernel {
                            shifts = shifts
                                .into_iter()
                                .flat_map(|base| {
                                    (-central..=central).map(move |t| {
                                        base.iter().zip(k).map(|(a, b)| a + t * b).collect::<Vec<i64>>()
                                    })
                                })
                                .collect();
                        }
                        free_parts.extend(shifts);
                    }
                    let Some(pos) = (0..r).find(|&i| c[i] < m) else { break };
                    c[pos] += 1;
                    for v in c.iter_mut().take(pos) {
                        *v = -m;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for f in free_parts {
            let mut l = self.lattice.zero();
            l.free = f.into_iter().collect();
            if self.translation_length(&l) > max_len {
                continue;
            }
            for t in self.lattice.torsion_elements() {
                out.push(self.lattice.add(&l, &t));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}
