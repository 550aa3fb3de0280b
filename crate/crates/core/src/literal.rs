//! Text syntax for group elements and Hecke algebra elements.
//!
//! An element literal is a `*`-separated product of factors, each one of
//!
//! * a translation `(c1,…,cn;t1,…,tk)` (the `;` part may be omitted),
//! * a translation followed by a finite word, `(c1,…,cn;t1,…,tk)|s1.s2`,
//! * a dot-separated word in `s0, s0', s1, s2, …`, or `1`.
//!
//! The whole literal may be wrapped as `T[…]`, or as `T~[…]` for the normalized basis.

use thiserror::Error;

use crate::ext::{ExtElt, ExtGroup, Lat};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::laurent::Laurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiteralError {
    #[error("empty element literal")]
    Empty,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad translation {literal:?}: {reason}")]
    BadTranslation { literal: String, reason: String },
    #[error("unbalanced brackets in {0:?}")]
    Unbalanced(String),
}

fn strip_wrapper(s: &str) -> Result<&str, LiteralError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("T[").or_else(|| s.strip_prefix("T~[")) {
        return rest
            .strip_suffix(']')
            .map(str::trim)
            .ok_or_else(|| LiteralError::Unbalanced(s.to_string()));
    }
    Ok(s)
}

/// Parses a translation `(c1,…,cn;t1,…,tk)`.
pub fn parse_lattice(group: &ExtGroup, s: &str) -> Result<Lat, LiteralError> {
    let s = strip_wrapper(s)?;
    let bad = |reason: &str| LiteralError::BadTranslation {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let inner = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| bad("expected parentheses"))?;
    let (free, tors) = match inner.split_once(';') {
        Some((f, t)) => (f, t),
        None => (inner, ""),
    };
    let nums = |part: &str| -> Result<Vec<i64>, LiteralError> {
        part.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<i64>().map_err(|_| bad("expected integers")))
            .collect()
    };
    let (free, mut tors) = (nums(free)?, nums(tors)?);
    let lattice = group.lattice();
    if free.len() != lattice.free_rank() {
        return Err(bad(&format!("expected {} free coordinates", lattice.free_rank())));
    }
    if tors.is_empty() {
        tors = vec![0; lattice.torsion_orders().len()];
    }
    if tors.len() != lattice.torsion_orders().len() {
        return Err(bad(&format!(
            "expected {} torsion coordinates",
            lattice.torsion_orders().len()
        )));
    }
    let mut lam = Lat::new(&free, &tors);
    lattice.reduce(&mut lam);
    Ok(lam)
}

fn parse_word(group: &ExtGroup, s: &str) -> Result<ExtElt, LiteralError> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok(group.identity());
    }
    let mut out = group.identity();
    for letter in s.split('.') {
        let letter = letter.trim();
        let g = group
            .gen_by_name(letter)
            .or_else(|| (letter == "s").then(|| group.gen_by_name("s1")).flatten())
            .ok_or_else(|| LiteralError::UnknownGenerator(letter.to_string()))?;
        out = group.right_mul_gen(&out, g);
    }
    Ok(out)
}

pub fn parse_element(group: &ExtGroup, s: &str) -> Result<ExtElt, LiteralError> {
    let s = strip_wrapper(s)?;
    if s.is_empty() {
        return Err(LiteralError::Empty);
    }
    let mut out = group.identity();
    for factor in s.split('*') {
        let factor = factor.trim();
        let x = if factor.starts_with('(') {
            let (t, w) = match factor.split_once('|') {
                Some((t, w)) => (t, w),
                None => (factor, "1"),
            };
            let lam = parse_lattice(group, t)?;
            group.mul(&group.translation(lam), &parse_word(group, w)?)
        } else {
            parse_word(group, factor)?
        };
        out = group.mul(&out, &x);
    }
    Ok(out)
}

/// Parses `T[w]` (or a bare element literal) as `T_w` and `T~[w]` as `v^{-L(w)} T_w`.
pub fn parse_basis(alg: &HeckeAlgebra, s: &str) -> Result<HeckeElt, LiteralError> {
    let w = parse_element(alg.group(), s)?;
    if s.trim().starts_with("T~[") {
        Ok(alg.term(&w, Laurent::v_pow(-(alg.weight(&w) as i32))))
    } else {
        Ok(alg.basis(&w))
    }
}

/// `c·basis` with the usual sign and unit conventions.
pub fn render_term(c: &Laurent, basis: &str) -> String {
    if c.is_one() {
        return basis.to_string();
    }
    if (-c).is_one() {
        return format!("-{basis}");
    }
    let s = c.to_string();
    if c.terms().count() == 1 {
        format!("{s}·{basis}")
    } else {
        format!("({s})·{basis}")
    }
}

/// Joins rendered terms with ` + ` and ` - `.
pub fn join_terms(parts: &[String]) -> String {
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        match (k, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

/// Renders `h` in the `T`-basis, or in `T̃_w = v^{-L(w)} T_w` when `normalized`.
pub fn render_hecke(alg: &HeckeAlgebra, h: &HeckeElt, normalized: bool) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let group = alg.group();
    let parts: Vec<String> = h
        .sorted_terms(group)
        .iter()
        .map(|(w, c)| {
            let name = crate::render::ext(group, w);
            if normalized {
                render_term(&c.shift(alg.weight(w) as i32), &format!("T~[{name}]"))
            } else {
                render_term(c, &format!("T[{name}]"))
            }
        })
        .collect();
    join_terms(&parts)
}
