//! Affine walls, their parameters, and transitivity of parallel families.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use super::{ExtElt, ExtGroup, ParamSys};
use crate::lattice::gcd_all;

/// The hyperplane `{x : ⟨β, x⟩ = k}` with `β` positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWall {
    pub root: usize,
    pub level: i64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WallError {
    #[error("explored {bound} walls without deciding")]
    BoundExceeded { bound: usize },
    #[error("reflection in the wall could not be conjugated into Δ_aff")]
    NotConjugate,
}

impl ExtGroup {
    /// Canonical form of `(β, k)`: `(−β, −k)` is the same wall.
    pub fn wall(&self, root: usize, level: i64) -> AffineWall {
        if self.roots.is_positive(root) {
            AffineWall { root, level }
        } else {
            AffineWall {
                root: self.roots.neg(root),
                level: -level,
            }
        }
    }

    /// The affine reflection `(k β∨, s_β)` in the wall.
    pub fn wall_reflection(&self, h: AffineWall) -> ExtElt {
        ExtElt {
            lam: self.lattice.scale(&self.coroots[h.root], h.level),
            u: self.weyl.reflection(h.root),
        }
    }

    /// `L(s)` for the generator `s` conjugate to the reflection in `h`.
    pub fn wall_parameter(&self, h: AffineWall, p: &ParamSys) -> Result<u32, WallError> {
        let mut r = self.wall_reflection(h);
        let mut len = self.length(&r);
        while len > 1 {
            let step = self.gen_ids().find_map(|g| {
                let c = self.mul(&self.mul(self.gen(g), &r), self.gen(g));
                let lc = self.length(&c);
                (lc + 2 == len).then_some((c, lc))
            });
            let Some((c, lc)) = step else {
                return Err(WallError::NotConjugate);
            };
            r = c;
            len = lc;
        }
        self.gen_ids()
            .find(|&g| *self.gen(g) == r)
            .map(|g| p.weight(g))
            .ok_or(WallError::NotConjugate)
    }

    /// `gcd` of `⟨β, λ⟩` over the free part of `Λ`; translations move levels by its multiples.
    pub fn level_step(&self, root: usize) -> i64 {
        gcd_all(self.roots.root(root).iter().copied())
    }

    /// Whether some element of `W̃` carries the wall `(α, 0)` to `(α, 1)`.
    ///
    /// Explores walls up to translation, i.e. pairs `(β, k mod g_β)`, moving by simple
    /// reflections; translations are absorbed by the reduction of `k`.
    pub fn hyperplane_family_transitive(&self, root: usize, bound: usize) -> Result<bool, WallError> {
        let canon = |b: usize, k: i64| {
            let w = self.wall(b, k);
            let g = self.level_step(w.root);
            let level = if g == 0 { w.level } else { w.level.rem_euclid(g) };
            (w.root, level)
        };
        let start = canon(root, 0);
        let target = canon(root, 1);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((b, k)) = queue.pop_front() {
            if (b, k) == target {
                return Ok(true);
            }
            for i in 0..self.roots.rank() {
                let img = self.roots.simple_perm(i)[b] as usize;
                let next = canon(img, k);
                if seen.insert(next) {
                    if seen.len() > bound {
                        return Err(WallError::BoundExceeded { bound });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }
}
