//! The orbit sums `z_O = Σ_{λ∈O} Θ_λ` and decomposition of central elements.

use std::collections::BTreeMap;

use super::{HeckeAlgebra, HeckeElt, HeckeError};
use crate::ext::Orbit;
use crate::laurent::Laurent;
use crate::weyl::WeylElt;

/// Stops peeling after this many orbits.
const MAX_PEEL: usize = 10_000;

impl HeckeAlgebra {
    pub fn central_element(&self, orbit: &Orbit) -> HeckeElt {
        let mut out = self.zero();
        for lam in orbit.elements() {
            out.add_scaled(&self.theta(lam), &Laurent::one());
        }
        out
    }

    /// Algebra generators used for centrality tests: `T_s` for `s ∈ Δ_aff` and
    /// `T_τ` for generators `τ` of `Ω_G`, with their names.
    pub fn generator_elements(&self) -> Vec<(String, HeckeElt)> {
        let g = &self.group;
        let mut out: Vec<(String, HeckeElt)> = g
            .gen_ids()
            .map(|s| (g.gen_name(s).to_string(), self.gen(s)))
            .collect();
        for tau in g.omega_generators() {
            out.push((crate::render::ext(g, tau), self.basis(tau)));
        }
        out
    }

    /// The first generator that fails to commute with `h`, and the commutator.
    pub fn central_witness(&self, h: &HeckeElt) -> Option<(String, HeckeElt)> {
        self.generator_elements().into_iter().find_map(|(name, x)| {
            let c = self.commutator(&x, h);
            (!c.is_zero()).then_some((name, c))
        })
    }

    /// `W`-orbits of `Λ` whose translations have length at most `max_len`.
    pub fn orbits_up_to(&self, max_len: u32, central: i64) -> Vec<Orbit> {
        let mut out: Vec<Orbit> = self
            .group
            .translations_up_to(max_len, central)
            .iter()
            .filter(|l| self.group.is_dominant(l))
            .map(|l| self.group.weyl_orbit(l))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Writes a central `h` as `Σ c_O z_O`.
    pub fn center_decompose(&self, h: &HeckeElt) -> Result<BTreeMap<Orbit, Laurent>, HeckeError> {
        self.check(h)?;
        if let Some((witness, c)) = self.central_witness(h) {
            return Err(HeckeError::NotCentral {
                witness,
                terms: c.len(),
                commutator: self.render(&c),
            });
        }
        let mut rem = h.clone();
        let mut out = BTreeMap::new();
        for _ in 0..MAX_PEEL {
            if rem.is_zero() {
                return Ok(out);
            }
            // The top term of z_O at a dominant λ_O is v^{-L(t_λ)} T_{t_λ}.
            let top = rem
                .support()
                .filter(|w| w.u == WeylElt::IDENTITY && self.group.is_dominant(&w.lam))
                .max_by(|a, b| {
                    self.group
                        .length(a)
                        .cmp(&self.group.length(b))
                        .then_with(|| a.cmp(b))
                })
                .cloned();
            let Some(t) = top else { break };
            let c = rem.coeff(&t).shift(self.weight(&t) as i32);
            let orbit = self.group.weyl_orbit(&t.lam);
            rem.add_scaled(&self.central_element(&orbit), &-&c);
            out.insert(orbit, c);
        }
        Err(HeckeError::ResidueNonzero { terms: rem.len() })
    }
}
