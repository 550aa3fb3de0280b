//! Enumeration and sampling of elements by length.

use std::collections::HashSet;

use rand::Rng;

use super::{ExtElt, ExtGroup};

impl ExtGroup {
    /// Elements of `W_aff` of length exactly `0, 1, …, max_len`, grouped by length.
    pub fn affine_layers(&self, max_len: u32) -> Vec<Vec<ExtElt>> {
        let mut layers = vec![vec![self.identity()]];
        for _ in 0..max_len {
            let prev = layers.last().expect("nonempty");
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for w in prev {
                for g in self.gen_ids() {
                    if self.is_left_descent(g, w) {
                        continue;
                    }
                    let x = self.left_mul_gen(g, w);
                    if seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            next.sort_by_cached_key(|x| self.gallery_walk(x).word);
            layers.push(next);
        }
        layers
    }

    /// Every element with `ℓ(w) ≤ max_len`: `W_aff` layers times `Ω_G`.
    ///
    /// Returns `None` if `Ω_G` has more than `omega_cap` elements.
    pub fn elements_up_to(&self, max_len: u32, omega_cap: usize) -> Option<Vec<ExtElt>> {
        let omega = self.omega_elements(omega_cap)?;
        let layers = self.affine_layers(max_len);
        let mut out = Vec::new();
        for layer in &layers {
            for tau in &omega {
                out.extend(layer.iter().map(|w| self.mul(w, tau)));
            }
        }
        Some(out)
    }

    /// A random element built from a random word of `len` letters and a random `Ω_G` factor.
    ///
    /// The word need not be reduced, so the length is at most `len`.
    pub fn random_element<R: Rng>(&self, rng: &mut R, len: u32, omega: &[ExtElt]) -> ExtElt {
        let k = self.gens().len();
        let mut w = omega[rng.gen_range(0..omega.len())].clone();
        for _ in 0..len {
            let g = super::Gen(rng.gen_range(0..k) as u8);
            w = self.left_mul_gen(g, &w);
        }
        w
    }
}
