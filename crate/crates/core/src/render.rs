//! Canonical text forms and the sort order used for output.

use crate::ext::{ExtElt, ExtGroup, Gen};
use crate::weyl::WeylElt;

pub fn word(group: &ExtGroup, word: &[Gen]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|&g| group.gen_name(g)).collect::<Vec<_>>().join(".")
}

pub fn weyl(group: &ExtGroup, u: WeylElt) -> String {
    let w = group.weyl().word(u);
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(".")
}

/// `(λ)` or `(λ)|u` for an alcove stabilizer; `1` for the identity.
pub fn omega(group: &ExtGroup, tau: &ExtElt) -> String {
    if tau.u == WeylElt::IDENTITY {
        if tau.lam.is_zero() {
            "1".into()
        } else {
            tau.lam.to_string()
        }
    } else {
        format!("{}|{}", tau.lam, weyl(group, tau.u))
    }
}

/// Reduced word followed by the `Ω_G` factor, e.g. `s0.s1*(1)|s1`.
pub fn ext(group: &ExtGroup, w: &ExtElt) -> String {
    let gal = group.gallery_walk(w);
    let tau = omega(group, &gal.omega);
    match (gal.word.is_empty(), tau == "1") {
        (true, _) => tau,
        (false, true) => word(group, &gal.word),
        (false, false) => format!("{}*{}", word(group, &gal.word), tau),
    }
}

/// Output order: `Ω_G`-sector name, then length, then reduced word.
pub fn sort_key(group: &ExtGroup, w: &ExtElt) -> (String, usize, Vec<Gen>) {
    let gal = group.gallery_walk(w);
    (omega(group, &gal.omega), gal.word.len(), gal.word)
}
