//! Alcove walks, `Ω_G`-projection and the Bruhat order.

use super::{ExtElt, ExtGroup, Gen};

/// A reduced factorization `w = s_1 ⋯ s_k · τ` with `τ` stabilizing the base alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gallery {
    pub word: Vec<Gen>,
    pub omega: ExtElt,
}

impl ExtGroup {
    /// `denom · ⟨f_g, w(x₀)⟩` where `f_g` is the root bounding the base alcove at `g`.
    fn wall_coordinate(&self, g: Gen, w: &ExtElt) -> i64 {
        let b = self.gen_root[g.index()];
        self.denom * self.pairing(b, &w.lam) + self.offsets[w.u.index()][g.index()]
    }

    /// Whether the wall of `g` separates the base alcove from `w(C)`, i.e. `ℓ(g w) < ℓ(w)`.
    pub fn is_left_descent(&self, g: Gen, w: &ExtElt) -> bool {
        let y = self.wall_coordinate(g, w);
        if self.is_affine_gen(g) {
            y > self.denom
        } else {
            y < 0
        }
    }

    /// Whether `ℓ(w g) < ℓ(w)`.
    pub fn is_right_descent(&self, w: &ExtElt, g: Gen) -> bool {
        self.is_left_descent(g, &self.inverse(w))
    }

    pub fn left_descents(&self, w: &ExtElt) -> Vec<Gen> {
        self.gen_ids().filter(|&g| self.is_left_descent(g, w)).collect()
    }

    /// `g · w`.
    pub fn left_mul_gen(&self, g: Gen, w: &ExtElt) -> ExtElt {
        self.mul(&self.gens[g.index()], w)
    }

    /// `w · g`.
    pub fn right_mul_gen(&self, w: &ExtElt, g: Gen) -> ExtElt {
        self.mul(w, &self.gens[g.index()])
    }

    /// Peels left descents until the alcove is back at the base alcove.
    ///
    /// The number of steps is the number of separating walls, so this gives
    /// the length independently of [`ExtGroup::length`].
    pub fn gallery_walk(&self, w: &ExtElt) -> Gallery {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'peel: loop {
            for g in self.gen_ids() {
                if self.is_left_descent(g, &cur) {
                    cur = self.left_mul_gen(g, &cur);
                    word.push(g);
                    continue 'peel;
                }
            }
            break;
        }
        Gallery { word, omega: cur }
    }

    /// `Ω_G(w)`, the alcove-stabilizing factor of `w`.
    pub fn omega(&self, w: &ExtElt) -> ExtElt {
        self.gallery_walk(w).omega
    }

    pub fn from_word(&self, word: &[Gen]) -> ExtElt {
        word.iter()
            .rev()
            .fold(self.identity(), |acc, &g| self.left_mul_gen(g, &acc))
    }

    /// Bruhat order on `W̃`: equal `Ω_G`-parts and comparable `W_aff`-parts.
    pub fn bruhat_leq(&self, a: &ExtElt, b: &ExtElt) -> bool {
        let ga = self.gallery_walk(a);
        let gb = self.gallery_walk(b);
        if ga.omega != gb.omega {
            return false;
        }
        let tau_inv = self.inverse(&ga.omega);
        let mut x = self.mul(a, &tau_inv);
        let mut y = self.mul(b, &tau_inv);
        let (mut lx, mut ly) = (ga.word.len(), gb.word.len());
        // Lifting property: for s with sy < y, x ≤ y iff min(x, sx) ≤ sy.
        loop {
            if lx > ly {
                return false;
            }
            if ly == 0 {
                return x == y;
            }
            let s = self
                .gen_ids()
                .find(|&g| self.is_left_descent(g, &y))
                .expect("positive length has a descent");
            if self.is_left_descent(s, &x) {
                x = self.left_mul_gen(s, &x);
                lx -= 1;
            }
            y = self.left_mul_gen(s, &y);
            ly -= 1;
        }
    }
}
