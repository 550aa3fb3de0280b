//! Finite reduced root systems given by integer functionals and coroots.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Integer rows, one per root or coroot.
pub type Matrix = Vec<Vec<i64>>;

/// Hard cap on the number of roots; guards against non-finite Cartan data.
const MAX_ROOTS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("root system is not reduced: {0:?} and twice it are both roots")]
    NonReduced(Vec<i64>),
    #[error("not closed under reflection: {0}")]
    NotClosedUnderReflection(String),
    #[error("bad Cartan pairing: {0}")]
    BadCartanPairing(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    /// `A_ij = ⟨α_i, α_j∨⟩` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (1..r).for_each(|i| link(i - 1, i, -1, -1)),
            Family::B => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 2, r - 1, -2, -1);
            }
            Family::C => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 2, r - 1, -1, -2);
            }
            Family::D => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 3, r - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (3..r).for_each(|i| link(i - 1, i, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
        }
        a
    }

    fn valid(&self) -> bool {
        let r = self.rank;
        match self.family {
            Family::A => r >= 1,
            Family::B | Family::C => r >= 2,
            Family::D => r >= 4,
            Family::E => (6..=8).contains(&r),
            Family::F => r == 4,
            Family::G => r == 2,
        }
    }

    /// Number of coordinates the classical realization occupies.
    pub fn standard_width(&self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B | Family::C | Family::D => Some(self.rank),
            _ => None,
        }
    }

    /// Classical realization: simple roots and coroots on `Z^width`.
    fn standard(&self) -> Option<(Matrix, Matrix)> {
        let w = self.standard_width()?;
        let r = self.rank;
        let e = |i: usize| -> Vec<i64> { (0..w).map(|k| i64::from(k == i)).collect() };
        let diff = |i: usize, j: usize| -> Vec<i64> { e(i).iter().zip(e(j)).map(|(a, b)| a - b).collect() };
        let scaled = |v: Vec<i64>, k: i64| -> Vec<i64> { v.into_iter().map(|x| x * k).collect() };
        let mut roots: Vec<Vec<i64>> = (0..r - 1).map(|i| diff(i, i + 1)).collect();
        let mut coroots = roots.clone();
        let (last, last_co) = match self.family {
            Family::A => (diff(r - 1, r), diff(r - 1, r)),
            Family::B => (e(r - 1), scaled(e(r - 1), 2)),
            Family::C => (scaled(e(r - 1), 2), e(r - 1)),
            Family::D => {
                let v: Vec<i64> = e(r - 2).iter().zip(e(r - 1)).map(|(a, b)| a + b).collect();
                (v.clone(), v)
            }
            _ => return None,
        };
        roots.push(last);
        coroots.push(last_co);
        Some((roots, coroots))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSystemError::UnknownType(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = CartanType { family, rank };
        if t.valid() {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

/// How a named component is laid out in the ambient lattice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Embedding {
    /// Classical coordinates (`e_i - e_{i+1}`, `e_r`, `2e_r`, ...); types A–D only.
    #[default]
    Standard,
    /// Lattice basis of fundamental coweights: simple roots are coordinate functionals.
    Coweight,
    /// Lattice basis of simple coroots.
    Coroot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedComponent {
    pub cartan: CartanType,
    pub embedding: Embedding,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSpec {
    Named {
        ambient_rank: usize,
        components: Vec<NamedComponent>,
    },
    Explicit {
        ambient_rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        /// Optional full root list, checked against the generated closure.
        roots: Option<Vec<Vec<i64>>>,
    },
}

impl RootSpec {
    /// Simple roots and coroots on the ambient lattice.
    pub fn simple_data(&self) -> Result<(usize, Matrix, Matrix), RootSystemError> {
        match self {
            RootSpec::Explicit {
                ambient_rank,
                simple_roots,
                simple_coroots,
                ..
            } => Ok((*ambient_rank, simple_roots.clone(), simple_coroots.clone())),
            RootSpec::Named {
                ambient_rank,
                components,
            } => {
                let n = *ambient_rank;
                let (mut roots, mut coroots) = (Vec::new(), Vec::new());
                for c in components {
                    let (rs, cs) = match c.embedding {
                        Embedding::Standard => c.cartan.standard().ok_or_else(|| {
                            RootSystemError::Shape(format!("{} has no standard embedding", c.cartan))
                        })?,
                        Embedding::Coweight | Embedding::Coroot => {
                            let a = c.cartan.cartan_matrix();
                            let r = c.cartan.rank;
                            let unit = |i: usize| (0..r).map(|k| i64::from(k == i)).collect::<Vec<_>>();
                            if c.embedding == Embedding::Coweight {
                                ((0..r).map(unit).collect(), (0..r).map(|j| (0..r).map(|i| a[i][j]).collect()).collect())
                            } else {
                                (a.clone(), (0..r).map(unit).collect())
                            }
                        }
                    };
                    let width = rs[0].len();
                    if c.offset + width > n {
                        return Err(RootSystemError::Shape(format!(
                            "{} at offset {} needs {} coordinates but the lattice has {}",
                            c.cartan, c.offset, width, n
                        )));
                    }
                    let pad = |v: &Vec<i64>| {
                        let mut out = vec![0; n];
                        out[c.offset..c.offset + width].copy_from_slice(v);
                        out
                    };
                    roots.extend(rs.iter().map(pad));
                    coroots.extend(cs.iter().map(pad));
                }
                Ok((n, roots, coroots))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Positions in the simple-root list.
    pub simple: Vec<usize>,
    /// Root index of the highest root.
    pub highest: usize,
    pub cartan_type: CartanType,
}

/// A finite reduced root system.
///
/// Roots are indexed so that `0..P` are the positive roots ordered by height,
/// `P..2P` their negatives in the same order, and `0..r` the simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ambient_rank: usize,
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    coords: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
    root_component: Vec<usize>,
    simple_perms: Vec<Vec<u32>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn build(spec: &RootSpec) -> Result<Self, RootSystemError> {
        let (n, simple, simple_co) = spec.simple_data()?;
        let r = simple.len();
        if simple_co.len() != r {
            return Err(RootSystemError::Shape(format!(
                "{} simple roots but {} simple coroots",
                r,
                simple_co.len()
            )));
        }
        for v in simple.iter().chain(&simple_co) {
            if v.len() != n {
                return Err(RootSystemError::Shape(format!("vector {v:?} does not have length {n}")));
            }
        }
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| dot(&simple[i], &simple_co[j])).collect())
            .collect();
        check_cartan(&cartan)?;

        // Closure of the simple pairs under simple reflections, tracking simple coordinates.
        let mut found: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let c: Vec<i64> = (0..r).map(|k| i64::from(k == i)).collect();
            if index.insert(simple[i].clone(), found.len()).is_some() {
                return Err(RootSystemError::BadCartanPairing("repeated simple root".into()));
            }
            found.push((simple[i].clone(), simple_co[i].clone(), c));
            queue.push_back(found.len() - 1);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let (beta, beta_co, c) = &found[b];
                let k = dot(beta, &simple_co[i]);
                let kc = dot(&simple[i], beta_co);
                let nb: Vec<i64> = beta.iter().zip(&simple[i]).map(|(x, a)| x - k * a).collect();
                let nc: Vec<i64> = beta_co.iter().zip(&simple_co[i]).map(|(x, a)| x - kc * a).collect();
                let mut ncoord = c.clone();
                ncoord[i] -= k;
                match index.get(&nb) {
                    Some(&j) => {
                        if found[j].1 != nc {
                            return Err(RootSystemError::BadCartanPairing(format!(
                                "root {nb:?} acquires two different coroots"
                            )));
                        }
                    }
                    None => {
                        if found.len() >= MAX_ROOTS {
                            return Err(RootSystemError::NotClosedUnderReflection(
                                "reflection closure is not finite".into(),
                            ));
                        }
                        index.insert(nb.clone(), found.len());
                        found.push((nb, nc, ncoord));
                        queue.push_back(found.len() - 1);
                    }
                }
            }
        }
        for (beta, _, c) in &found {
            let pos = c.iter().all(|&x| x >= 0);
            let neg = c.iter().all(|&x| x <= 0);
            if !(pos || neg) {
                return Err(RootSystemError::BadCartanPairing(format!(
                    "root {beta:?} is neither positive nor negative"
                )));
            }
        }
        for (beta, beta_co, _) in &found {
            if dot(beta, beta_co) != 2 {
                return Err(RootSystemError::BadCartanPairing(format!("⟨β, β∨⟩ ≠ 2 for β = {beta:?}")));
            }
            let double: Vec<i64> = beta.iter().map(|x| 2 * x).collect();
            if index.contains_key(&double) {
                return Err(RootSystemError::NonReduced(beta.clone()));
            }
        }
        if let RootSpec::Explicit { roots: Some(list), .. } = spec {
            for beta in list {
                let double: Vec<i64> = beta.iter().map(|x| 2 * x).collect();
                if list.contains(&double) {
                    return Err(RootSystemError::NonReduced(beta.clone()));
                }
                if !index.contains_key(beta) {
                    return Err(RootSystemError::NotClosedUnderReflection(format!(
                        "{beta:?} is not generated by the simple roots"
                    )));
                }
            }
            if let Some((beta, _, _)) = found.iter().find(|(b, _, _)| !list.contains(b)) {
                return Err(RootSystemError::NotClosedUnderReflection(format!(
                    "reflection produces {beta:?}, which is missing from the root list"
                )));
            }
        }

        let height = |c: &Vec<i64>| c.iter().sum::<i64>();
        let mut positive: Vec<usize> = (0..found.len()).filter(|&b| height(&found[b].2) > 0).collect();
        positive.sort_by(|&a, &b| {
            height(&found[a].2)
                .cmp(&height(&found[b].2))
                .then_with(|| found[b].2.cmp(&found[a].2))
        });
        let p = positive.len();
        let mut roots = Vec::with_capacity(2 * p);
        let mut coroots = Vec::with_capacity(2 * p);
        let mut coords = Vec::with_capacity(2 * p);
        for &b in &positive {
            roots.push(found[b].0.clone());
            coroots.push(found[b].1.clone());
            coords.push(found[b].2.clone());
        }
        for k in 0..p {
            roots.push(roots[k].iter().map(|x| -x).collect());
            coroots.push(coroots[k].iter().map(|x| -x).collect::<Vec<i64>>());
            coords.push(coords[k].iter().map(|x| -x).collect());
        }
        let index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        if index.len() != found.len() {
            return Err(RootSystemError::NotClosedUnderReflection("negatives are missing".into()));
        }

        let components = split_components(&cartan, &coords, p)?;
        let mut root_component = vec![0; 2 * p];
        for (ci, comp) in components.iter().enumerate() {
            for (b, c) in coords.iter().enumerate() {
                if comp.simple.iter().any(|&k| c[k] != 0) {
                    root_component[b] = ci;
                }
            }
        }
        let simple_perms = (0..r)
            .map(|i| {
                roots
                    .iter()
                    .map(|beta| {
                        let k = dot(beta, &simple_co[i]);
                        let img: Vec<i64> = beta.iter().zip(&simple[i]).map(|(x, a)| x - k * a).collect();
                        index[&img] as u32
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            ambient_rank: n,
            rank: r,
            roots,
            coroots,
            coords,
            index,
            cartan,
            components,
            root_component,
            simple_perms,
        })
    }

    /// Dimension of the free lattice the roots act on.
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    /// Free part of the coroot of root `i`.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// Coordinates of root `i` in the basis of simple roots.
    pub fn coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coords[i].iter().sum()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn neg(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    /// Positive representative of `±β`.
    pub fn abs(&self, i: usize) -> usize {
        i % self.num_positive()
    }

    pub fn index_of(&self, functional: &[i64]) -> Option<usize> {
        self.index.get(functional).copied()
    }

    /// `⟨β_i, x⟩` for `x` in the free lattice.
    pub fn pairing(&self, i: usize, x: &[i64]) -> i64 {
        dot(&self.roots[i], x)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of_root(&self, i: usize) -> usize {
        self.root_component[i]
    }

    /// Permutation of root indices induced by the `k`-th simple reflection.
    pub fn simple_perm(&self, k: usize) -> &[u32] {
        &self.simple_perms[k]
    }

    /// Permutation of root indices induced by the reflection in root `i`.
    pub fn reflection_perm(&self, i: usize) -> Vec<u32> {
        let co = &self.coroots[i];
        let a = &self.roots[i];
        self.roots
            .iter()
            .map(|beta| {
                let k = dot(beta, co);
                let img: Vec<i64> = beta.iter().zip(a).map(|(x, y)| x - k * y).collect();
                self.index[&img] as u32
            })
            .collect()
    }

    /// Component types joined by `×`, e.g. `B3` or `A1×A1`.
    pub fn type_name(&self) -> String {
        if self.components.is_empty() {
            return "∅".into();
        }
        self.components
            .iter()
            .map(|c| c.cartan_type.to_string())
            .collect::<Vec<_>>()
            .join("×")
    }
}

#[allow(clippy::needless_range_loop)]
fn check_cartan(a: &[Vec<i64>]) -> Result<(), RootSystemError> {
    for i in 0..a.len() {
        if a[i][i] != 2 {
            return Err(RootSystemError::BadCartanPairing(format!(
                "⟨α_{}, α_{}∨⟩ = {} instead of 2",
                i + 1,
                i + 1,
                a[i][i]
            )));
        }
        for j in 0..a.len() {
            if i == j {
                continue;
            }
            let (x, y) = (a[i][j], a[j][i]);
            if x > 0 || (x == 0) != (y == 0) || x * y > 3 {
                return Err(RootSystemError::BadCartanPairing(format!(
                    "entries ({}, {}) = {x}, {y} are not a finite-type Cartan pair",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

fn split_components(cartan: &[Vec<i64>], coords: &[Vec<i64>], p: usize) -> Result<Vec<Component>, RootSystemError> {
    let r = cartan.len();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut simple = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < simple.len() {
            let i = simple[k];
            for j in 0..r {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    simple.push(j);
                }
            }
            k += 1;
        }
        simple.sort_unstable();
        let in_comp = |b: usize| simple.iter().any(|&s| coords[b][s] != 0);
        let members: Vec<usize> = (0..p).filter(|&b| in_comp(b)).collect();
        let highest = *members
            .iter()
            .max_by_key(|&&b| coords[b].iter().sum::<i64>())
            .expect("component has a root");
        for &b in &members {
            if coords[highest].iter().zip(&coords[b]).any(|(h, c)| h < c) {
                return Err(RootSystemError::BadCartanPairing(
                    "highest root does not dominate its component".into(),
                ));
            }
        }
        let cartan_type = classify(cartan, &simple)?;
        out.push(Component {
            simple,
            highest,
            cartan_type,
        });
    }
    Ok(out)
}

/// Identifies the Dynkin type of a connected set of simple roots.
fn classify(a: &[Vec<i64>], nodes: &[usize]) -> Result<CartanType, RootSystemError> {
    let r = nodes.len();
    let mut edges = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for (y, &j) in nodes.iter().enumerate().skip(x + 1) {
            if a[i][j] != 0 {
                edges.push((x, y, a[i][j] * a[j][i]));
            }
        }
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let bad = || RootSystemError::BadCartanPairing("Dynkin diagram is not of finite type".into());
    if edges.len() + 1 != r {
        return Err(bad());
    }
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    let t = |f| Ok(CartanType::new(f, r));
    if r == 1 {
        return t(Family::A);
    }
    if let Some(e) = multi.first() {
        if multi.len() > 1 || (0..r).any(|v| degree(v) > 2) {
            return Err(bad());
        }
        if e.2 == 3 {
            return if r == 2 { t(Family::G) } else { Err(bad()) };
        }
        let (x, y) = (e.0, e.1);
        let end = if degree(x) == 1 && (r == 2 || degree(y) == 2) { x } else { y };
        if degree(end) != 1 {
            return if r == 4 { t(Family::F) } else { Err(bad()) };
        }
        let other = if end == x { y } else { x };
        // |A_ij| < |A_ji| means α_i is the shorter root.
        let end_short = a[nodes[end]][nodes[other]].abs() < a[nodes[other]][nodes[end]].abs();
        return if r == 2 {
            // Rank two: the later simple root plays the role of the end node.
            let last_short = a[nodes[1]][nodes[0]].abs() < a[nodes[0]][nodes[1]].abs();
            t(if last_short { Family::B } else { Family::C })
        } else if end_short {
            t(Family::B)
        } else {
            t(Family::C)
        };
    }
    let branch: Vec<usize> = (0..r).filter(|&v| degree(v) == 3).collect();
    match branch.as_slice() {
        [] if (0..r).all(|v| degree(v) <= 2) => t(Family::A),
        [b] => {
            let mut arms = Vec::new();
            for &(x, y, _) in &edges {
                let start = if x == *b {
                    y
                } else if y == *b {
                    x
                } else {
                    continue;
                };
                let (mut prev, mut cur, mut len) = (*b, start, 1);
                loop {
                    let next = edges.iter().find_map(|&(p, q, _)| {
                        if p == cur && q != prev {
                            Some(q)
                        } else if q == cur && p != prev {
                            Some(p)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(nx) => {
                            (prev, cur) = (cur, nx);
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => t(Family::D),
                [1, 2, 2..=4] => t(Family::E),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(ty: &str, embedding: Embedding, n: usize) -> RootSystem {
        RootSystem::build(&RootSpec::Named {
            ambient_rank: n,
            components: vec![NamedComponent {
                cartan: ty.parse().unwrap(),
                embedding,
                offset: 0,
            }],
        })
        .unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let rs = named("A1", Embedding::Coroot, 1);
        assert_eq!(rs.num_roots(), 2);
        assert_eq!(rs.root(0), &[2]);
        assert_eq!(rs.root(1), &[-2]);
        assert_eq!(rs.components().len(), 1);
    }

    #[test]
    fn positive_root_counts() {
        for (ty, emb, n, p) in [
            ("A2", Embedding::Standard, 3, 3),
            ("B3", Embedding::Standard, 3, 9),
            ("C3", Embedding::Standard, 3, 9),
            ("D4", Embedding::Standard, 4, 12),
            ("G2", Embedding::Coweight, 2, 6),
            ("F4", Embedding::Coroot, 4, 24),
            ("E6", Embedding::Coweight, 6, 36),
        ] {
            let rs = named(ty, emb, n);
            assert_eq!(rs.num_positive(), p, "{ty}");
            assert_eq!(rs.type_name(), ty);
        }
    }

    #[test]
    fn highest_root_of_c3() {
        let rs = named("C3", Embedding::Standard, 3);
        let hi = rs.components()[0].highest;
        assert_eq!(rs.root(hi), &[2, 0, 0]);
        assert_eq!(rs.coords(hi), &[2, 2, 1]);
    }

    #[test]
    fn explicit_list_must_match_closure() {
        let spec = RootSpec::Explicit {
            ambient_rank: 1,
            simple_roots: vec![vec![1]],
            simple_coroots: vec![vec![2]],
            roots: Some(vec![vec![1], vec![-1], vec![2], vec![-2]]),
        };
        assert!(matches!(RootSystem::build(&spec), Err(RootSystemError::NonReduced(_))));
        let spec = RootSpec::Explicit {
            ambient_rank: 2,
            simple_roots: vec![vec![1, -1]],
            simple_coroots: vec![vec![1, -1]],
            roots: Some(vec![vec![1, -1]]),
        };
        assert!(matches!(
            RootSystem::build(&spec),
            Err(RootSystemError::NotClosedUnderReflection(_))
        ));
    }

    #[test]
    fn bad_pairing_is_rejected() {
        let spec = RootSpec::Explicit {
            ambient_rank: 1,
            simple_roots: vec![vec![1]],
            simple_coroots: vec![vec![1]],
            roots: None,
        };
        assert!(matches!(
            RootSystem::build(&spec),
            Err(RootSystemError::BadCartanPairing(_))
        ));
    }

    #[test]
    fn affine_cartan_is_not_finite() {
        let spec = RootSpec::Explicit {
            ambient_rank: 2,
            simple_roots: vec![vec![2, -2], vec![-2, 2]],
            simple_coroots: vec![vec![1, 0], vec![0, 1]],
            roots: None,
        };
        assert!(RootSystem::build(&spec).is_err());
    }
}
