//! Bernstein elements `Θ_λ` and the commutation relation with `T_s`.

use super::{HeckeAlgebra, HeckeElt, HeckeError};
use crate::ext::Lat;
use crate::laurent::Laurent;

impl HeckeAlgebra {
    /// `Θ_λ = T̃_{λ₁} T̃_{λ₂}⁻¹` for any dominant `λ₁, λ₂` with `λ = λ₁ - λ₂`.
    pub fn theta(&self, lam: &Lat) -> HeckeElt {
        if let Some(h) = self.theta_cache.read().expect("cache lock").get(lam) {
            return h.clone();
        }
        let (lam1, lam2) = self.group.compact_decompose(lam);
        let h = self.theta_unchecked(&lam1, &lam2);
        self.theta_cache
            .write()
            .expect("cache lock")
            .insert(lam.clone(), h.clone());
        h
    }

    /// `Θ_{λ₁ - λ₂}` computed from the given decomposition.
    pub fn theta_from(&self, lam1: &Lat, lam2: &Lat) -> Result<HeckeElt, HeckeError> {
        if !self.group.is_dominant(lam1) || !self.group.is_dominant(lam2) {
            return Err(HeckeError::NotDominant {
                lam1: lam1.to_string(),
                lam2: lam2.to_string(),
            });
        }
        Ok(self.theta_unchecked(lam1, lam2))
    }

    fn theta_unchecked(&self, lam1: &Lat, lam2: &Lat) -> HeckeElt {
        let t1 = self.group.translation(lam1.clone());
        let t2 = self.group.translation(lam2.clone());
        let e = self.weight(&t2) as i32 - self.weight(&t1) as i32;
        self.left_mul_basis(&t1, &self.inverse(&t2)).scale(&Laurent::v_pow(e))
    }

    /// Whether `Θ_λ Θ_μ = Θ_{λ+μ}`.
    pub fn theta_additivity_check(&self, lam: &Lat, mu: &Lat) -> bool {
        let sum = self.group.lattice().add(lam, mu);
        self.product(&self.theta(lam), &self.theta(mu)) == self.theta(&sum)
    }

    /// `L(s̃)` for the finite simple reflection `s_i`: the parameter of the wall `⟨α_i, x⟩ = 1`.
    pub fn tilde_weight(&self, i: usize) -> Result<u32, HeckeError> {
        if i >= self.group.roots().rank() {
            return Err(HeckeError::NotFiniteSimple(i + 1));
        }
        Ok(self.group.wall_parameter(self.group.wall(i, 1), &self.params)?)
    }

    /// `ℒ(0, s) = v^{2L(s)} - 1` and `ℒ(1, s) = v^{L(s)+L(s̃)} - v^{L(s)-L(s̃)}`.
    pub fn script_l(&self, parity: i64, i: usize) -> Result<Laurent, HeckeError> {
        let l = self.params.weight(crate::ext::Gen(i as u8)) as i32;
        if parity.rem_euclid(2) == 0 {
            Ok(&Laurent::v_pow(2 * l) - &Laurent::one())
        } else {
            let lt = self.tilde_weight(i)? as i32;
            Ok(&Laurent::v_pow(l + lt) - &Laurent::v_pow(l - lt))
        }
    }

    /// `Σ_{j=0}^{N-1} ℒ(j mod 2, s) Θ_{λ - jα∨}` with `N = ⟨α, λ⟩`;
    /// for `N < 0` the sum is `-Σ_{j=N}^{-1}`.
    pub fn commutation_rhs(&self, i: usize, lam: &Lat) -> Result<HeckeElt, HeckeError> {
        if i >= self.group.roots().rank() {
            return Err(HeckeError::NotFiniteSimple(i + 1));
        }
        let n = self.group.pairing(i, lam);
        let (range, sign) = if n >= 0 { (0..n, 1) } else { (n..0, -1) };
        let coroot = self.group.coroot(i);
        let mut out = self.zero();
        for j in range {
            let c = self.script_l(j, i)?.scale(sign);
            let mu = self.group.lattice().add_scaled(lam, coroot, -j);
            out.add_scaled(&self.theta(&mu), &c);
        }
        Ok(out)
    }

    /// `T_s Θ_λ - Θ_{s(λ)} T_s`.
    pub fn commutation_lhs(&self, i: usize, lam: &Lat) -> Result<HeckeElt, HeckeError> {
        if i >= self.group.roots().rank() {
            return Err(HeckeError::NotFiniteSimple(i + 1));
        }
        let g = crate::ext::Gen(i as u8);
        let s_lam = self.group.reflect_simple(i, lam);
        Ok(&self.left_mul_gen(g, &self.theta(lam)) - &self.right_mul_gen(&self.theta(&s_lam), g))
    }

    pub fn commutation_check(&self, i: usize, lam: &Lat) -> Result<bool, HeckeError> {
        Ok(self.commutation_lhs(i, lam)? == self.commutation_rhs(i, lam)?)
    }
}
