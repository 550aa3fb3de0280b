//! The finite Weyl group, enumerated as permutations of the root set.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::roots::RootSystem;

/// Enumeration refuses groups larger than this.
pub const MAX_WEYL_ORDER: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("Weyl group has more than {MAX_WEYL_ORDER} elements")]
pub struct WeylTooLarge;

/// Handle to an element of a [`WeylGroup`]; `WeylElt(0)` is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylElt(pub u32);

impl WeylElt {
    pub const IDENTITY: WeylElt = WeylElt(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// All elements of `W(Σ)` with multiplication, inverses and reduced words.
#[derive(Debug)]
pub struct WeylGroup {
    roots: Arc<RootSystem>,
    perms: Vec<Box<[u32]>>,
    lookup: HashMap<Box<[u32]>, u32>,
    left: Vec<Box<[u32]>>,
    right: Vec<Box<[u32]>>,
    lengths: Vec<u32>,
    inverses: Vec<u32>,
    words: Vec<Box<[u8]>>,
    longest: u32,
}

impl WeylGroup {
    pub fn new(roots: Arc<RootSystem>) -> Result<Self, WeylTooLarge> {
        let r = roots.rank();
        let p = roots.num_positive();
        let id: Box<[u32]> = (0..roots.num_roots() as u32).collect();
        let mut perms = vec![id.clone()];
        let mut lookup = HashMap::from([(id, 0u32)]);
        let mut left: Vec<Box<[u32]>> = Vec::new();
        let mut k = 0;
        // Breadth-first, so elements appear in order of length.
        while k < perms.len() {
            let mut row = vec![0u32; r];
            for (i, slot) in row.iter_mut().enumerate() {
                let s = roots.simple_perm(i);
                let img: Box<[u32]> = perms[k].iter().map(|&b| s[b as usize]).collect();
                *slot = match lookup.get(&img) {
                    Some(&j) => j,
                    None => {
                        if perms.len() >= MAX_WEYL_ORDER {
                            return Err(WeylTooLarge);
                        }
                        let j = perms.len() as u32;
                        lookup.insert(img.clone(), j);
                        perms.push(img);
                        j
                    }
                };
            }
            left.push(row.into_boxed_slice());
            k += 1;
        }
        let n = perms.len();
        let lengths: Vec<u32> = perms
            .iter()
            .map(|pm| pm[..p].iter().filter(|&&b| (b as usize) >= p).count() as u32)
            .collect();
        let inverses: Vec<u32> = perms
            .iter()
            .map(|pm| {
                let mut inv = vec![0u32; pm.len()];
                for (b, &img) in pm.iter().enumerate() {
                    inv[img as usize] = b as u32;
                }
                lookup[inv.as_slice()]
            })
            .collect();
        // w s_i = (s_i w^{-1})^{-1}
        let right: Vec<Box<[u32]>> = (0..n)
            .map(|w| (0..r).map(|i| inverses[left[inverses[w] as usize][i] as usize]).collect())
            .collect();
        let mut words: Vec<Box<[u8]>> = vec![Box::new([]); n];
        for w in 1..n {
            // Smallest left descent: s_i w < w.
            let i = (0..r)
                .find(|&i| lengths[left[w][i] as usize] < lengths[w])
                .expect("non-identity element has a descent");
            let rest = &words[left[w][i] as usize];
            let mut word = Vec::with_capacity(rest.len() + 1);
            word.push(i as u8);
            word.extend_from_slice(rest);
            words[w] = word.into_boxed_slice();
        }
        let longest = (0..n).max_by_key(|&w| lengths[w]).unwrap_or(0) as u32;
        Ok(Self {
            roots,
            perms,
            lookup,
            left,
            right,
            lengths,
            inverses,
            words,
            longest,
        })
    }

    pub fn roots(&self) -> &Arc<RootSystem> {
        &self.roots
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Every element, identity first, in order of length.
    pub fn elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.perms.len() as u32).map(WeylElt)
    }

    pub fn simple(&self, i: usize) -> WeylElt {
        WeylElt(self.left[0][i])
    }

    pub fn longest(&self) -> WeylElt {
        WeylElt(self.longest)
    }

    /// `s_i · w`.
    pub fn left_mul_simple(&self, i: usize, w: WeylElt) -> WeylElt {
        WeylElt(self.left[w.index()][i])
    }

    /// `w · s_i`.
    pub fn right_mul_simple(&self, w: WeylElt, i: usize) -> WeylElt {
        WeylElt(self.right[w.index()][i])
    }

    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        let mut acc = b;
        for &i in self.words[a.index()].iter().rev() {
            acc = self.left_mul_simple(i as usize, acc);
        }
        acc
    }

    pub fn inverse(&self, w: WeylElt) -> WeylElt {
        WeylElt(self.inverses[w.index()])
    }

    pub fn length(&self, w: WeylElt) -> u32 {
        self.lengths[w.index()]
    }

    /// Canonical reduced word (0-based simple indices), lexicographically first left descents.
    pub fn word(&self, w: WeylElt) -> &[u8] {
        &self.words[w.index()]
    }

    /// Image of root `b` under `w`.
    pub fn act_root(&self, w: WeylElt, b: usize) -> usize {
        self.perms[w.index()][b] as usize
    }

    pub fn perm(&self, w: WeylElt) -> &[u32] {
        &self.perms[w.index()]
    }

    pub fn from_perm(&self, perm: &[u32]) -> Option<WeylElt> {
        self.lookup.get(perm).map(|&i| WeylElt(i))
    }

    /// The reflection `s_β` for root index `b`.
    pub fn reflection(&self, b: usize) -> WeylElt {
        self.from_perm(&self.roots.reflection_perm(b))
            .expect("reflections lie in the Weyl group")
    }

    /// `s_β · w`.
    pub fn reflect(&self, w: WeylElt, b: usize) -> WeylElt {
        self.mul(self.reflection(b), w)
    }

    pub fn is_left_descent(&self, i: usize, w: WeylElt) -> bool {
        // s_i w < w  iff  w^{-1}(α_i) < 0
        !self.roots.is_positive(self.act_root(self.inverse(w), i))
    }

    pub fn from_word(&self, word: &[u8]) -> WeylElt {
        word.iter()
            .rev()
            .fold(WeylElt::IDENTITY, |acc, &i| self.left_mul_simple(i as usize, acc))
    }
}
