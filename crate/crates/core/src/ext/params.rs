//! Parameter systems `L : Δ_aff → Z_{>0}` and their validity conditions.

use std::fmt;

use serde::Serialize;

use super::{ExtGroup, Gen};

/// Exponential parameters `L(s)`; the quadratic relation uses `q_s = v^{2L(s)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSys {
    weights: Vec<u32>,
}

impl ParamSys {
    pub fn new(weights: Vec<u32>) -> Self {
        Self { weights }
    }

    pub fn uniform(group: &ExtGroup, l: u32) -> Self {
        Self::new(vec![l; group.gens().len()])
    }

    pub fn weight(&self, g: Gen) -> u32 {
        self.weights[g.index()]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamViolation {
    WrongArity { expected: usize, found: usize },
    NonPositive { generator: String },
    OddEdge {
        a: String,
        b: String,
        m: u32,
        la: u32,
        lb: u32,
    },
    OmegaOrbit {
        tau: String,
        a: String,
        b: String,
        la: u32,
        lb: u32,
    },
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongArity { expected, found } => {
                write!(f, "expected {expected} parameter weights, found {found}")
            }
            Self::NonPositive { generator } => write!(f, "L({generator}) must be positive"),
            Self::OddEdge { a, b, m, la, lb } => {
                write!(f, "m({a}, {b}) = {m} is odd but L({a}) = {la} ≠ L({b}) = {lb}")
            }
            Self::OmegaOrbit { tau, a, b, la, lb } => write!(
                f,
                "conjugation by {tau} sends {a} to {b} but L({a}) = {la} ≠ L({b}) = {lb}"
            ),
        }
    }
}

impl ExtGroup {
    /// Order of `g h`, or `0` if it exceeds 6 (affine rank-one pairs have infinite order).
    pub fn coxeter_order(&self, g: Gen, h: Gen) -> u32 {
        if g == h {
            return 1;
        }
        let gh = self.mul(self.gen(g), self.gen(h));
        let mut p = gh.clone();
        for m in 1..=6 {
            if p == self.identity() {
                return m;
            }
            p = self.mul(&p, &gh);
        }
        0
    }

    /// `τ g τ⁻¹` as a generator, if it is one.
    pub fn conjugate_gen(&self, tau: &super::ExtElt, g: Gen) -> Option<Gen> {
        let c = self.mul(&self.mul(tau, self.gen(g)), &self.inverse(tau));
        self.gen_ids().find(|&h| *self.gen(h) == c)
    }

    /// Every violated condition; empty means the parameters are valid.
    pub fn validate_params(&self, p: &ParamSys) -> Vec<ParamViolation> {
        let gens: Vec<Gen> = self.gen_ids().collect();
        if p.weights.len() != gens.len() {
            return vec![ParamViolation::WrongArity {
                expected: gens.len(),
                found: p.weights.len(),
            }];
        }
        let name = |g: Gen| self.gen_name(g).to_string();
        let mut out = Vec::new();
        for &g in &gens {
            if p.weight(g) == 0 {
                out.push(ParamViolation::NonPositive { generator: name(g) });
            }
        }
        for (k, &g) in gens.iter().enumerate() {
            for &h in &gens[k + 1..] {
                let m = self.coxeter_order(g, h);
                if m % 2 == 1 && p.weight(g) != p.weight(h) {
                    out.push(ParamViolation::OddEdge {
                        a: name(g),
                        b: name(h),
                        m,
                        la: p.weight(g),
                        lb: p.weight(h),
                    });
                }
            }
        }
        for tau in self.omega_generators() {
            for &g in &gens {
                let Some(h) = self.conjugate_gen(tau, g) else {
                    continue;
                };
                if p.weight(g) != p.weight(h) {
                    out.push(ParamViolation::OmegaOrbit {
                        tau: crate::render::ext(self, tau),
                        a: name(g),
                        b: name(h),
                        la: p.weight(g),
                        lb: p.weight(h),
                    });
                }
            }
        }
        out
    }
}
