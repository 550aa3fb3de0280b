//! Exact arithmetic in Iwahori–Hecke algebras of extended affine Weyl groups.
//!
//! The input is a finite reduced root system `Σ` acting on a lattice
//! `Λ = Z^n ⊕ (torsion)` through coroots, together with a parameter system
//! `L` on the simple affine reflections. From that the crate builds
//! `W̃ = Λ ⋊ W`, its Hecke algebra over `Z[v, v⁻¹]`, the Bernstein elements
//! `Θ_λ`, and the orbit-sum basis of the center.
//!
//! ```
//! use iwahori_hecke::fixtures;
//!
//! let alg = fixtures::load("a1_root_lattice");
//! let s = alg.parse("s1").unwrap();
//! let ss = alg.mul(&alg.basis(&s), &alg.basis(&s)).unwrap();
//! assert_eq!(alg.render(&ss), "v^2·T[1] + (v^2 - 1)·T[s1]");
//! ```

pub mod config;
pub mod ext;
pub mod fixtures;
pub mod hecke;
pub mod lattice;
pub mod laurent;
pub mod literal;
pub mod render;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use ext::{ExtElt, ExtGroup, Gen, Lat, ParamSys};
pub use hecke::{HeckeAlgebra, HeckeElt};
pub use laurent::Laurent;
pub use roots::RootSystem;
pub use weyl::{WeylElt, WeylGroup};


#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/configs.md")]
    mod configs {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/alcoves.md")]
    mod alcoves {}
    #[doc = include_str!("../../../book/src/bernstein.md")]
    mod bernstein {}
    #[doc = include_str!("../../../book/src/center.md")]
    mod center {}
    #[doc = include_str!("../../../book/src/walls.md")]
    mod walls {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
