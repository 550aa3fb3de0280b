//! Conjugation chains that first preserve and then increase length.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::{ExtElt, ExtGroup, Gen};
use crate::weyl::WeylElt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjugationError {
    #[error("element is a translation; a non-translation is required")]
    NotATranslationRequired,
    #[error("no length-increasing conjugation within depth {0}")]
    NotFound(usize),
}

impl ExtGroup {
    /// Finds `s_1, …, s_n, s` with every `s_k⋯s_1 w s_1⋯s_k` of length `ℓ(w)` and
    /// `ℓ(s s_n⋯s_1 w s_1⋯s_n s) > ℓ(w)`. Returns the chain with `s` last.
    pub fn find_length_increasing_conjugation(&self, w: &ExtElt, cap: usize) -> Result<Vec<Gen>, ConjugationError> {
        if w.u == WeylElt::IDENTITY {
            return Err(ConjugationError::NotATranslationRequired);
        }
        let len = self.length(w);
        let mut parent: HashMap<ExtElt, Option<(ExtElt, Gen)>> = HashMap::from([(w.clone(), None)]);
        let mut queue = VecDeque::from([(w.clone(), 0usize)]);
        let path_to = |x: &ExtElt, parent: &HashMap<ExtElt, Option<(ExtElt, Gen)>>| {
            let mut path = Vec::new();
            let mut cur = x.clone();
            while let Some(Some((prev, g))) = parent.get(&cur) {
                path.push(*g);
                cur = prev.clone();
            }
            path.reverse();
            path
        };
        while let Some((x, depth)) = queue.pop_front() {
            for g in self.gen_ids() {
                let y = self.mul(&self.mul(self.gen(g), &x), self.gen(g));
                let ly = self.length(&y);
                if ly > len {
                    let mut chain = path_to(&x, &parent);
                    chain.push(g);
                    return Ok(chain);
                }
                if ly == len && depth < cap && !parent.contains_key(&y) {
                    parent.insert(y.clone(), Some((x.clone(), g)));
                    queue.push_back((y, depth + 1));
                }
            }
        }
        Err(ConjugationError::NotFound(cap))
    }
}
