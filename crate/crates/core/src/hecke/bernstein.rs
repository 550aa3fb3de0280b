//! Conversion between the `T`-basis and the Bernstein basis `{Θ_λ T_u}`.

use std::collections::BTreeMap;

use super::{HeckeAlgebra, HeckeElt, HeckeError};
use crate::ext::{ExtElt, ExtGroup, Lat};
use crate::laurent::Laurent;
use crate::weyl::WeylElt;

/// Coefficients `c_{λ,u}` of `Σ c_{λ,u} Θ_λ T_u`.
pub type BernsteinElt = BTreeMap<(Lat, WeylElt), Laurent>;

/// Default cap on elimination steps in [`HeckeAlgebra::to_bernstein`].
pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// Elimination order for `x = t_μ u`: `(ℓ(t_μ), #{α > 0 : ⟨α, μ⟩ < 0}, ℓ(u))`.
pub fn bernstein_key(group: &ExtGroup, x: &ExtElt) -> (u32, u32, u32) {
    let roots = group.roots();
    let negative = (0..roots.num_positive())
        .filter(|&b| group.pairing(b, &x.lam) < 0)
        .count() as u32;
    (group.translation_length(&x.lam), negative, group.weyl().length(x.u))
}

impl HeckeAlgebra {
    /// `Θ_λ T_u`.
    pub fn bernstein_basis(&self, lam: &Lat, u: WeylElt) -> HeckeElt {
        self.right_mul_basis(&self.theta(lam), &self.group.finite(u))
    }

    pub fn from_bernstein(&self, b: &BernsteinElt) -> HeckeElt {
        let mut out = self.zero();
        for ((lam, u), c) in b {
            out.add_scaled(&self.bernstein_basis(lam, *u), c);
        }
        out
    }

    /// Triangular elimination: repeatedly cancel the term `T_{t_μ u}` of largest
    /// [`bernstein_key`] against `Θ_μ T_u`, whose leading coefficient is a unit.
    pub fn to_bernstein(&self, h: &HeckeElt, max_steps: usize) -> Result<BernsteinElt, HeckeError> {
        self.check(h)?;
        let mut rem = h.clone();
        let mut out = BernsteinElt::new();
        let mut steps = 0;
        while !rem.is_zero() {
            if steps == max_steps {
                return Err(HeckeError::WindowExceeded { steps });
            }
            steps += 1;
            let x = rem
                .support()
                .max_by(|a, b| {
                    bernstein_key(&self.group, a)
                        .cmp(&bernstein_key(&self.group, b))
                        .then_with(|| a.cmp(b))
                })
                .expect("nonzero remainder")
                .clone();
            let key = bernstein_key(&self.group, &x);
            let b = self.bernstein_basis(&x.lam, x.u);
            let lead = b.coeff(&x);
            let leading_ok = lead.is_unit()
                && b.support().all(|y| *y == x || bernstein_key(&self.group, y) < key);
            let Some(inv) = lead.unit_inverse().filter(|_| leading_ok) else {
                return Err(HeckeError::LeadingTermMismatch {
                    element: self.render_elt(&x),
                });
            };
            let c = &rem.coeff(&x) * &inv;
            rem.add_scaled(&b, &-&c);
            let slot = out.entry((x.lam.clone(), x.u)).or_default();
            *slot += &c;
            if slot.is_zero() {
                out.remove(&(x.lam, x.u));
            }
        }
        Ok(out)
    }

    pub fn render_bernstein(&self, b: &BernsteinElt) -> String {
        if b.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = b
            .iter()
            .map(|((lam, u), c)| {
                let basis = if *u == WeylElt::IDENTITY {
                    format!("Θ[{lam}]")
                } else {
                    format!("Θ[{lam}]·T[{}]", crate::render::weyl(&self.group, *u))
                };
                crate::literal::render_term(c, &basis)
            })
            .collect();
        crate::literal::join_terms(&parts)
    }
}
