//! The Iwahori–Hecke algebra `H(W̃, L)` over `Z[v, v⁻¹]` in the `T`-basis.

mod bernstein;
mod center;
mod iota;
mod theta;

use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use rustc_hash::FxBuildHasher;
use thiserror::Error;

use crate::ext::{ExtElt, ExtGroup, Gen, Lat, ParamSys, ParamViolation, WallError};
use crate::laurent::Laurent;

pub use bernstein::{bernstein_key, BernsteinElt, DEFAULT_MAX_STEPS};

type TermMap = HashMap<ExtElt, Laurent, FxBuildHasher>;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("elements belong to different algebra contexts")]
    ContextMismatch,
    #[error("Bernstein elimination did not finish within {steps} steps")]
    WindowExceeded { steps: usize },
    #[error("Bernstein element for {element} does not have a unit leading term")]
    LeadingTermMismatch { element: String },
    #[error("λ₁ = {lam1} and λ₂ = {lam2} must both be dominant")]
    NotDominant { lam1: String, lam2: String },
    #[error("element is not central: commutator with T[{witness}] has {terms} terms")]
    NotCentral {
        witness: String,
        terms: usize,
        commutator: String,
    },
    #[error("orbit peeling stopped with {terms} terms left")]
    ResidueNonzero { terms: usize },
    #[error("s{0} is not a finite simple reflection")]
    NotFiniteSimple(usize),
    #[error(transparent)]
    Wall(#[from] WallError),
}

/// A finite `Z[v, v⁻¹]`-combination of basis symbols `T_w`.
///
/// Zero coefficients are never stored. Elements remember the algebra that made
/// them, and binary operations across algebras are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElt {
    ctx: u64,
    terms: TermMap,
}

impl HeckeElt {
    fn empty(ctx: u64) -> Self {
        Self {
            ctx,
            terms: TermMap::default(),
        }
    }

    pub fn context(&self) -> u64 {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &ExtElt) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtElt, &Laurent)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExtElt> {
        self.terms.keys()
    }

    /// Adds `k · v^e · c · T_w`.
    pub fn add_term_scaled(&mut self, w: &ExtElt, c: &Laurent, k: i64, e: i32) {
        if c.is_zero() || k == 0 {
            return;
        }
        match self.terms.get_mut(w) {
            Some(x) => {
                x.add_scaled(c, k, e);
                if x.is_zero() {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.clone(), c.scale(k).shift(e));
            }
        }
    }

    pub fn add_term(&mut self, w: &ExtElt, c: &Laurent) {
        self.add_term_scaled(w, c, 1, 0);
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &HeckeElt, c: &Laurent) {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        for (w, x) in &other.terms {
            let term = c * x;
            self.add_term(w, &term);
        }
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElt {
        let mut out = HeckeElt::empty(self.ctx);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), c * x);
        }
        out
    }

    /// Terms sorted by `(Ω_G-sector, length, reduced word)`.
    pub fn sorted_terms(&self, group: &ExtGroup) -> Vec<(ExtElt, Laurent)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (crate::render::sort_key(group, w), w.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }
}

impl Add for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::one());
        out
    }
}

impl Sub for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::constant(-1));
        out
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        self.scale(&Laurent::constant(-1))
    }
}

/// The Hecke algebra of an extended affine Weyl group with a valid parameter system.
///
/// Contexts are immutable apart from an internal cache of `Θ_λ`, which is safe to
/// fill from several threads.
#[derive(Debug)]
pub struct HeckeAlgebra {
    id: u64,
    name: String,
    group: Arc<ExtGroup>,
    params: ParamSys,
    theta_cache: RwLock<HashMap<Lat, HeckeElt, FxBuildHasher>>,
}

impl HeckeAlgebra {
    pub fn new(name: impl Into<String>, group: Arc<ExtGroup>, params: ParamSys) -> Result<Self, Vec<ParamViolation>> {
        let violations = group.validate_params(&params);
        if !violations.is_empty() {
            return Err(violations);
        }
        Ok(Self {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.into(),
            group,
            params,
            theta_cache: RwLock::default(),
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<ExtGroup> {
        &self.group
    }

    pub fn params(&self) -> &ParamSys {
        &self.params
    }

    pub fn zero(&self) -> HeckeElt {
        HeckeElt::empty(self.id)
    }

    pub fn one(&self) -> HeckeElt {
        self.basis(&self.group.identity())
    }

    /// `T_w`.
    pub fn basis(&self, w: &ExtElt) -> HeckeElt {
        self.term(w, Laurent::one())
    }

    /// `c · T_w`.
    pub fn term(&self, w: &ExtElt, c: Laurent) -> HeckeElt {
        let mut out = self.zero();
        if !c.is_zero() {
            out.terms.insert(w.clone(), c);
        }
        out
    }

    pub fn from_terms<'a, I: IntoIterator<Item = (&'a ExtElt, &'a Laurent)>>(&self, terms: I) -> HeckeElt {
        let mut out = self.zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    /// `q_s = v^{2L(s)}`.
    pub fn q(&self, g: Gen) -> Laurent {
        Laurent::v_pow(2 * self.params.weight(g) as i32)
    }

    /// `L(w)`, summed along a reduced word of the `W_aff`-part.
    pub fn weight(&self, w: &ExtElt) -> u32 {
        self.group
            .gallery_walk(w)
            .word
            .iter()
            .map(|&g| self.params.weight(g))
            .sum()
    }

    /// `T̃_w = v^{-L(w)} T_w`.
    pub fn normalized(&self, w: &ExtElt) -> HeckeElt {
        self.term(w, Laurent::v_pow(-(self.weight(w) as i32)))
    }

    fn check(&self, h: &HeckeElt) -> Result<(), HeckeError> {
        if h.ctx == self.id {
            Ok(())
        } else {
            Err(HeckeError::ContextMismatch)
        }
    }

    /// `T_s · h`.
    pub fn left_mul_gen(&self, g: Gen, h: &HeckeElt) -> HeckeElt {
        let q = self.params.weight(g) as i32 * 2;
        let mut out = HeckeElt::empty(h.ctx);
        for (w, c) in &h.terms {
            let sw = self.group.left_mul_gen(g, w);
            if self.group.is_left_descent(g, w) {
                out.add_term_scaled(w, c, 1, q);
                out.add_term_scaled(w, c, -1, 0);
                out.add_term_scaled(&sw, c, 1, q);
            } else {
                out.add_term(&sw, c);
            }
        }
        out
    }

    /// `h · T_s`.
    pub fn right_mul_gen(&self, h: &HeckeElt, g: Gen) -> HeckeElt {
        let q = self.params.weight(g) as i32 * 2;
        let mut out = HeckeElt::empty(h.ctx);
        for (w, c) in &h.terms {
            let ws = self.group.right_mul_gen(w, g);
            if self.group.is_right_descent(w, g) {
                out.add_term_scaled(w, c, 1, q);
                out.add_term_scaled(w, c, -1, 0);
                out.add_term_scaled(&ws, c, 1, q);
            } else {
                out.add_term(&ws, c);
            }
        }
        out
    }

    /// `T_w · h`, letter by letter along `w = s_1⋯s_k τ`.
    pub fn left_mul_basis(&self, w: &ExtElt, h: &HeckeElt) -> HeckeElt {
        let gal = self.group.gallery_walk(w);
        let mut out = HeckeElt::empty(h.ctx);
        for (x, c) in &h.terms {
            out.terms.insert(self.group.mul(&gal.omega, x), c.clone());
        }
        for &g in gal.word.iter().rev() {
            out = self.left_mul_gen(g, &out);
        }
        out
    }

    /// `h · T_w`.
    pub fn right_mul_basis(&self, h: &HeckeElt, w: &ExtElt) -> HeckeElt {
        let gal = self.group.gallery_walk(w);
        let mut out = h.clone();
        for &g in &gal.word {
            out = self.right_mul_gen(&out, g);
        }
        let mut twisted = HeckeElt::empty(h.ctx);
        for (x, c) in &out.terms {
            twisted.terms.insert(self.group.mul(x, &gal.omega), c.clone());
        }
        twisted
    }

    pub(crate) fn product(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut out = self.zero();
        if a.len() <= b.len() {
            for (x, c) in &a.terms {
                out.add_scaled(&self.left_mul_basis(x, b), c);
            }
        } else {
            for (y, c) in &b.terms {
                out.add_scaled(&self.right_mul_basis(a, y), c);
            }
        }
        out
    }

    /// Product in the algebra.
    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt, HeckeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.product(a, b))
    }

    /// `T_w⁻¹`, using `T_s⁻¹ = v^{-2L} T_s + (v^{-2L} - 1)` and `T_τ⁻¹ = T_{τ⁻¹}`.
    pub fn inverse(&self, w: &ExtElt) -> HeckeElt {
        let gal = self.group.gallery_walk(w);
        // T_w⁻¹ = T_τ⁻¹ T_{s_k}⁻¹ ⋯ T_{s_1}⁻¹
        let mut out = self.basis(&self.group.inverse(&gal.omega));
        for &g in gal.word.iter().rev() {
            let e = -2 * self.params.weight(g) as i32;
            let mut next = self.right_mul_gen(&out, g).scale(&Laurent::v_pow(e));
            next.add_scaled(&out, &(&Laurent::v_pow(e) - &Laurent::one()));
            out = next;
        }
        out
    }

    /// `T_{g}` for a simple affine reflection.
    pub fn gen(&self, g: Gen) -> HeckeElt {
        self.basis(self.group.gen(g))
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        &self.product(a, b) - &self.product(b, a)
    }

    /// Value at `v = 1`, as integer coefficients on group elements.
    pub fn specialize_one(&self, h: &HeckeElt) -> HashMap<ExtElt, i64> {
        h.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_one()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    pub fn parse(&self, s: &str) -> Result<ExtElt, crate::literal::LiteralError> {
        crate::literal::parse_element(&self.group, s)
    }

    pub fn parse_lattice(&self, s: &str) -> Result<Lat, crate::literal::LiteralError> {
        crate::literal::parse_lattice(&self.group, s)
    }

    /// `T[w]` as `T_w`, `T~[w]` as the normalized `T̃_w`.
    pub fn parse_basis(&self, s: &str) -> Result<HeckeElt, crate::literal::LiteralError> {
        crate::literal::parse_basis(self, s)
    }

    /// `T`-basis rendering in canonical term order.
    pub fn render(&self, h: &HeckeElt) -> String {
        crate::literal::render_hecke(self, h, false)
    }

    /// `T̃`-basis rendering.
    pub fn render_normalized(&self, h: &HeckeElt) -> String {
        crate::literal::render_hecke(self, h, true)
    }

    pub fn render_elt(&self, w: &ExtElt) -> String {
        crate::render::ext(&self.group, w)
    }
}

#[cfg(test)]
mod tests;
