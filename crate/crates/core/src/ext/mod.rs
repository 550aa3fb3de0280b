//! The translation group `Λ`, the extended affine Weyl group `W̃ = Λ ⋊ W`,
//! and its alcove geometry.

mod alcove;
mod conjugation;
mod dominance;
mod enumerate;
mod params;
mod walls;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::lattice::{lcm, ColumnHermite};
use crate::roots::RootSystem;
use crate::weyl::{WeylElt, WeylGroup, WeylTooLarge};

pub use alcove::Gallery;
pub use conjugation::ConjugationError;
pub use dominance::Orbit;
pub use params::{ParamSys, ParamViolation};
pub use walls::{AffineWall, WallError};

/// An element of `Λ = Z^n ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`.
///
/// Torsion coordinates are kept reduced into `0..d_j` by [`TranslationGroup`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lat {
    pub free: SmallVec<[i64; 4]>,
    pub tors: SmallVec<[i64; 2]>,
}

impl Lat {
    pub fn new(free: &[i64], tors: &[i64]) -> Self {
        Self {
            free: free.into(),
            tors: tors.into(),
        }
    }

    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            free: SmallVec::from_elem(0, n),
            tors: SmallVec::from_elem(0, k),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.tors).all(|&x| x == 0)
    }

    pub fn is_torsion(&self) -> bool {
        self.free.iter().all(|&x| x == 0)
    }

    /// The image in the torsion-free quotient.
    pub fn free_part(&self) -> Lat {
        Lat {
            free: self.free.clone(),
            tors: SmallVec::new(),
        }
    }
}

impl fmt::Display for Lat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        if self.tors.is_empty() {
            write!(f, "({})", join(&self.free))
        } else {
            write!(f, "({};{})", join(&self.free), join(&self.tors))
        }
    }
}

/// `Λ` together with the coroots of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationGroup {
    free_rank: usize,
    torsion_orders: Vec<i64>,
    coroots: Vec<Lat>,
}

impl TranslationGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<i64>, coroots: Vec<Lat>) -> Self {
        Self {
            free_rank,
            torsion_orders,
            coroots,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[i64] {
        &self.torsion_orders
    }

    /// Coroots of the simple roots, torsion components included.
    pub fn simple_coroots(&self) -> &[Lat] {
        &self.coroots
    }

    pub fn zero(&self) -> Lat {
        Lat::zero(self.free_rank, self.torsion_orders.len())
    }

    pub fn reduce(&self, l: &mut Lat) {
        for (t, &d) in l.tors.iter_mut().zip(&self.torsion_orders) {
            *t = t.rem_euclid(d);
        }
    }

    pub fn has_shape(&self, l: &Lat) -> bool {
        l.free.len() == self.free_rank
            && l.tors.len() == self.torsion_orders.len()
            && l.tors.iter().zip(&self.torsion_orders).all(|(&t, &d)| (0..d).contains(&t))
    }

    /// `a + k·b`.
    pub fn add_scaled(&self, a: &Lat, b: &Lat, k: i64) -> Lat {
        let mut out = Lat {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + k * y).collect(),
            tors: a.tors.iter().zip(&b.tors).map(|(x, y)| x + k * y).collect(),
        };
        self.reduce(&mut out);
        out
    }

    pub fn add(&self, a: &Lat, b: &Lat) -> Lat {
        self.add_scaled(a, b, 1)
    }

    pub fn sub(&self, a: &Lat, b: &Lat) -> Lat {
        self.add_scaled(a, b, -1)
    }

    pub fn neg(&self, a: &Lat) -> Lat {
        self.add_scaled(&self.zero(), a, -1)
    }

    pub fn scale(&self, a: &Lat, k: i64) -> Lat {
        self.add_scaled(&self.zero(), a, k)
    }

    /// Standard generators: free basis vectors, then torsion generators.
    pub fn generators(&self) -> Vec<Lat> {
        let (n, k) = (self.free_rank, self.torsion_orders.len());
        let mut out = Vec::with_capacity(n + k);
        for j in 0..n {
            let mut l = Lat::zero(n, k);
            l.free[j] = 1;
            out.push(l);
        }
        for j in 0..k {
            let mut l = Lat::zero(n, k);
            l.tors[j] = 1;
            out.push(l);
        }
        out
    }

    /// Every torsion element, in lexicographic order.
    pub fn torsion_elements(&self) -> Vec<Lat> {
        let mut out = vec![self.zero()];
        for (j, &d) in self.torsion_orders.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|l| {
                    (0..d).map(move |t| {
                        let mut m = l.clone();
                        m.tors[j] = t;
                        m
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("torsion order {0} is less than 2")]
    BadTorsionOrder(i64),
    #[error("expected {expected} coroots, found {found}")]
    CorootCount { expected: usize, found: usize },
    #[error("coroot {index} has shape ({free};{tors}), expected ({n};{k})")]
    CorootShape {
        index: usize,
        free: usize,
        tors: usize,
        n: usize,
        k: usize,
    },
    #[error("free part of coroot {index} differs from the root system's coroot")]
    CorootMismatch { index: usize },
    #[error("root system acts on {found} coordinates but the lattice has free rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("braid relation of order {m} between s{i} and s{j} fails on the lattice")]
    BraidFailure { i: usize, j: usize, m: u32 },
    #[error("torsion parts of coroots are not Weyl-equivariant at root {0:?}; independent torsion actions are unsupported")]
    UnsupportedTorsionAction(Vec<i64>),
    #[error(transparent)]
    Weyl(#[from] WeylTooLarge),
}

/// A simple affine reflection, indexing [`ExtGroup::gens`].
///
/// Indices `0..r` are the finite simple reflections, followed by one affine
/// reflection per irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Gen(pub u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// `(λ, u)` acting on the apartment by `x ↦ λ + u(x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElt {
    pub lam: Lat,
    pub u: WeylElt,
}

/// The extended affine Weyl group of a root system and a translation lattice.
#[derive(Debug)]
pub struct ExtGroup {
    roots: Arc<RootSystem>,
    weyl: Arc<WeylGroup>,
    lattice: TranslationGroup,
    /// Coroot (free and torsion parts) of every root.
    coroots: Vec<Lat>,
    /// `action[u][j] = u(e_j)` for the free basis.
    action: Vec<Vec<Lat>>,
    gens: Vec<ExtElt>,
    gen_names: Vec<String>,
    /// Root index whose wall bounds the base alcove for each generator.
    gen_root: Vec<usize>,
    /// Scale factor making the alcove sample point integral.
    denom: i64,
    /// `offsets[u][g] = denom · ⟨u⁻¹ f_g, x₀⟩`.
    offsets: Vec<Vec<i64>>,
    omega_gens: Vec<ExtElt>,
    two_rho: Lat,
    hermite: Option<ColumnHermite>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl ExtGroup {
    pub fn new(roots: Arc<RootSystem>, lattice: TranslationGroup) -> Result<Self, LatticeError> {
        let weyl = Arc::new(WeylGroup::new(roots.clone())?);
        Self::with_weyl(roots, weyl, lattice)
    }

    /// Builds a group sharing an existing Weyl group, so `WeylElt` handles agree.
    pub fn with_weyl(
        roots: Arc<RootSystem>,
        weyl: Arc<WeylGroup>,
        lattice: TranslationGroup,
    ) -> Result<Self, LatticeError> {
        let (n, k, r) = (lattice.free_rank, lattice.torsion_orders.len(), roots.rank());
        if let Some(&d) = lattice.torsion_orders.iter().find(|&&d| d < 2) {
            return Err(LatticeError::BadTorsionOrder(d));
        }
        if roots.ambient_rank() != n {
            return Err(LatticeError::RankMismatch {
                expected: n,
                found: roots.ambient_rank(),
            });
        }
        if lattice.coroots.len() != r {
            return Err(LatticeError::CorootCount {
                expected: r,
                found: lattice.coroots.len(),
            });
        }
        let mut lattice = lattice;
        for (i, c) in lattice.coroots.clone().iter().enumerate() {
            if c.free.len() != n || c.tors.len() != k {
                return Err(LatticeError::CorootShape {
                    index: i,
                    free: c.free.len(),
                    tors: c.tors.len(),
                    n,
                    k,
                });
            }
            if c.free.as_slice() != roots.coroot(i) {
                return Err(LatticeError::CorootMismatch { index: i });
            }
            let orders = lattice.torsion_orders.clone();
            for (t, d) in lattice.coroots[i].tors.iter_mut().zip(orders) {
                *t = t.rem_euclid(d);
            }
        }

        let reflect = |i: usize, l: &Lat| -> Lat {
            let a = dot(roots.root(i), &l.free);
            lattice.add_scaled(l, &lattice.coroots[i], -a)
        };

        // Full coroots of all roots, transported along simple reflections.
        let mut coroots: Vec<Option<Lat>> = vec![None; roots.num_roots()];
        let mut queue: Vec<usize> = (0..r).collect();
        for (c, l) in coroots.iter_mut().zip(&lattice.coroots) {
            *c = Some(l.clone());
        }
        while let Some(b) = queue.pop() {
            let cb = coroots[b].clone().expect("queued roots have coroots");
            for i in 0..r {
                let img = roots.simple_perm(i)[b] as usize;
                let c = reflect(i, &cb);
                match &coroots[img] {
                    Some(existing) if *existing != c => {
                        return Err(LatticeError::UnsupportedTorsionAction(roots.root(img).to_vec()));
                    }
                    Some(_) => {}
                    None => {
                        coroots[img] = Some(c);
                        queue.push(img);
                    }
                }
            }
        }
        let coroots: Vec<Lat> = coroots.into_iter().map(|c| c.expect("closure reaches every root")).collect();

        for i in 0..r {
            for j in i + 1..r {
                let st = weyl.mul(weyl.simple(i), weyl.simple(j));
                let mut m = 1;
                let mut p = st;
                while p != WeylElt::IDENTITY {
                    p = weyl.mul(p, st);
                    m += 1;
                }
                for mut l in lattice.generators() {
                    let start = l.clone();
                    for _ in 0..m {
                        l = reflect(i, &reflect(j, &l));
                    }
                    if l != start {
                        return Err(LatticeError::BraidFailure {
                            i: i + 1,
                            j: j + 1,
                            m,
                        });
                    }
                }
            }
        }

        let basis: Vec<Lat> = lattice.generators().into_iter().take(n).collect();
        let mut action: Vec<Vec<Lat>> = vec![Vec::new(); weyl.order()];
        action[0] = basis;
        for w in weyl.elements().skip(1) {
            let i = weyl.word(w)[0] as usize;
            let rest = weyl.left_mul_simple(i, w);
            action[w.index()] = action[rest.index()].iter().map(|l| reflect(i, l)).collect();
        }

        let mut gens: Vec<ExtElt> = (0..r)
            .map(|i| ExtElt {
                lam: lattice.zero(),
                u: weyl.simple(i),
            })
            .collect();
        let mut gen_root: Vec<usize> = (0..r).collect();
        let mut gen_names: Vec<String> = (0..r).map(|i| format!("s{}", i + 1)).collect();
        for (c, comp) in roots.components().iter().enumerate() {
            gens.push(ExtElt {
                lam: coroots[comp.highest].clone(),
                u: weyl.reflection(comp.highest),
            });
            gen_root.push(comp.highest);
            gen_names.push(format!("s0{}", "'".repeat(c)));
        }

        // Sample point with ⟨α_i, x₀⟩ = 1/(h_c + 1), scaled by `denom`.
        let denom = roots
            .components()
            .iter()
            .map(|c| roots.height(c.highest) + 1)
            .fold(1, lcm);
        let mut x0 = vec![0i64; r];
        for c in roots.components() {
            for &i in &c.simple {
                x0[i] = denom / (roots.height(c.highest) + 1);
            }
        }
        let offsets = weyl
            .elements()
            .map(|u| {
                let uinv = weyl.inverse(u);
                gen_root
                    .iter()
                    .map(|&b| dot(roots.coords(weyl.act_root(uinv, b)), &x0))
                    .collect()
            })
            .collect();

        let mut two_rho = lattice.zero();
        for c in &coroots[..roots.num_positive()] {
            two_rho = lattice.add(&two_rho, c);
        }
        let pairing_rows: Vec<Vec<i64>> = (0..r).map(|i| roots.root(i).to_vec()).collect();
        let hermite = if r == 0 {
            None
        } else {
            ColumnHermite::new(&pairing_rows, n)
        };

        let mut group = Self {
            roots,
            weyl,
            lattice,
            coroots,
            action,
            gens,
            gen_names,
            gen_root,
            denom,
            offsets,
            omega_gens: Vec::new(),
            two_rho,
            hermite,
        };
        let mut omega_gens: Vec<ExtElt> = Vec::new();
        for g in group.lattice.generators() {
            let tau = group.omega(&group.translation(g));
            if tau != group.identity() && !omega_gens.contains(&tau) {
                omega_gens.push(tau);
            }
        }
        group.omega_gens = omega_gens;
        Ok(group)
    }

    pub fn roots(&self) -> &Arc<RootSystem> {
        &self.roots
    }

    pub fn weyl(&self) -> &Arc<WeylGroup> {
        &self.weyl
    }

    pub fn lattice(&self) -> &TranslationGroup {
        &self.lattice
    }

    pub fn free_rank(&self) -> usize {
        self.lattice.free_rank
    }

    pub fn identity(&self) -> ExtElt {
        ExtElt {
            lam: self.lattice.zero(),
            u: WeylElt::IDENTITY,
        }
    }

    /// `t_λ`.
    pub fn translation(&self, mut lam: Lat) -> ExtElt {
        self.lattice.reduce(&mut lam);
        ExtElt {
            lam,
            u: WeylElt::IDENTITY,
        }
    }

    pub fn finite(&self, u: WeylElt) -> ExtElt {
        ExtElt {
            lam: self.lattice.zero(),
            u,
        }
    }

    /// Whether `w` has the shape of an element of this group.
    pub fn contains(&self, w: &ExtElt) -> bool {
        self.lattice.has_shape(&w.lam) && w.u.index() < self.weyl.order()
    }

    /// Coroot of root `b`, torsion part included.
    pub fn coroot(&self, b: usize) -> &Lat {
        &self.coroots[b]
    }

    /// `⟨β_b, λ⟩`, reading only the free part.
    pub fn pairing(&self, b: usize, lam: &Lat) -> i64 {
        dot(self.roots.root(b), &lam.free)
    }

    /// `u(λ)`.
    pub fn act(&self, u: WeylElt, lam: &Lat) -> Lat {
        if u == WeylElt::IDENTITY {
            return lam.clone();
        }
        let mut out = Lat {
            free: SmallVec::from_elem(0, self.lattice.free_rank),
            tors: lam.tors.clone(),
        };
        for (j, &c) in lam.free.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = &self.action[u.index()][j];
            for (o, x) in out.free.iter_mut().zip(&img.free) {
                *o += c * x;
            }
            for (o, x) in out.tors.iter_mut().zip(&img.tors) {
                *o += c * x;
            }
        }
        self.lattice.reduce(&mut out);
        out
    }

    /// `s_i(λ) = λ - ⟨α_i, λ⟩ α_i∨`.
    pub fn reflect_simple(&self, i: usize, lam: &Lat) -> Lat {
        let a = self.pairing(i, lam);
        self.lattice.add_scaled(lam, &self.coroots[i], -a)
    }

    pub fn mul(&self, a: &ExtElt, b: &ExtElt) -> ExtElt {
        ExtElt {
            lam: self.lattice.add(&a.lam, &self.act(a.u, &b.lam)),
            u: self.weyl.mul(a.u, b.u),
        }
    }

    pub fn inverse(&self, a: &ExtElt) -> ExtElt {
        let uinv = self.weyl.inverse(a.u);
        ExtElt {
            lam: self.lattice.neg(&self.act(uinv, &a.lam)),
            u: uinv,
        }
    }

    /// Closed-form length: `Σ_{α>0} |⟨α,λ⟩ - [u⁻¹α < 0]|`.
    pub fn length(&self, w: &ExtElt) -> u32 {
        let uinv = self.weyl.inverse(w.u);
        (0..self.roots.num_positive())
            .map(|b| {
                let a = self.pairing(b, &w.lam);
                let shift = i64::from(!self.roots.is_positive(self.weyl.act_root(uinv, b)));
                (a - shift).unsigned_abs() as u32
            })
            .sum()
    }

    /// `Δ_aff` as group elements.
    pub fn gens(&self) -> &[ExtElt] {
        &self.gens
    }

    pub fn gen_ids(&self) -> impl Iterator<Item = Gen> {
        (0..self.gens.len() as u8).map(Gen)
    }

    pub fn gen(&self, g: Gen) -> &ExtElt {
        &self.gens[g.index()]
    }

    pub fn gen_name(&self, g: Gen) -> &str {
        &self.gen_names[g.index()]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<Gen> {
        self.gen_names.iter().position(|n| n == name).map(|i| Gen(i as u8))
    }

    pub fn is_affine_gen(&self, g: Gen) -> bool {
        g.index() >= self.roots.rank()
    }

    /// Root whose wall (level 0 for finite, level 1 for affine) bounds the base alcove.
    pub fn gen_root(&self, g: Gen) -> usize {
        self.gen_root[g.index()]
    }

    /// `Ω_G`-parts of the lattice generators, without repeats or the identity; they generate `Ω_G`.
    pub fn omega_generators(&self) -> &[ExtElt] {
        &self.omega_gens
    }

    /// Sum of the positive coroots.
    pub fn two_rho_vee(&self) -> &Lat {
        &self.two_rho
    }

    /// Every element of `Ω_G`, or `None` if there are more than `cap`.
    pub fn omega_elements(&self, cap: usize) -> Option<Vec<ExtElt>> {
        let mut out = vec![self.identity()];
        let mut seen: HashMap<ExtElt, ()> = HashMap::from([(self.identity(), ())]);
        let mut k = 0;
        while k < out.len() {
            for g in &self.omega_gens {
                let x = self.mul(g, &out[k]);
                if seen.insert(x.clone(), ()).is_none() {
                    if out.len() >= cap {
                        return None;
                    }
                    out.push(x);
                }
            }
            k += 1;
        }
        out.sort();
        Some(out)
    }

    /// The same root data over the torsion-free quotient `Λ / Λ_tor`.
    pub fn torsion_free_quotient(&self) -> ExtGroup {
        let lattice = TranslationGroup::new(
            self.lattice.free_rank,
            Vec::new(),
            self.lattice.coroots.iter().map(Lat::free_part).collect(),
        );
        Self::with_weyl(self.roots.clone(), self.weyl.clone(), lattice)
            .expect("quotient of a valid group is valid")
    }
}

#[cfg(test)]
mod tests;
