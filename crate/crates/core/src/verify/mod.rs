//! Independent oracles and the relation suite.

pub mod oracles;
pub mod report;
pub mod suite;

pub use oracles::{gallery_distances, group_algebra_oracle, subword_bruhat_leq, wall_image};
pub use report::{CheckResult, Counterexample, FamilyReport, VerificationReport};
pub use suite::{hyperplane_families, run_paper_suite, SuiteConfig, Windows};
