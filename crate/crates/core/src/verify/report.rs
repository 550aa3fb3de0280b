//! Verification reports: JSON with a fixed field order, and a text table.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::suite::Windows;

/// Inputs and both sides of a failed identity, as rendered text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub elements: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub fixture: String,
    pub window: u32,
    pub cases: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn new(name: &str, fixture: &str, window: u32) -> Self {
        CheckResult {
            name: name.into(),
            fixture: fixture.into(),
            window,
            cases: 0,
            passed: true,
            notes: Vec::new(),
            counterexample: None,
        }
    }

    pub fn fail(&mut self, ce: Counterexample) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(ce);
        }
    }
}

/// Outcome of the hyperplane-family analysis for one positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub root: Vec<i64>,
    pub transitive: bool,
    pub l_h0: u32,
    pub l_h1: u32,
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.root.iter().map(ToString::to_string).collect();
        let rel = if self.l_h0 == self.l_h1 { "=" } else { "≠" };
        write!(
            f,
            "family([{}]): transitive={}, L(H₀){rel}L(H₁) ({}, {})",
            coords.join(","),
            self.transitive,
            self.l_h0,
            self.l_h1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub fixture: String,
    pub seed: u64,
    pub windows: Windows,
    pub passed: bool,
    pub families: Vec<FamilyReport>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = format!("fixture {}  seed {}\n", self.fixture, self.seed);
        for fam in &self.families {
            out.push_str(&format!("{fam}\n"));
        }
        out.push_str(&format!("{:<width$}  {:>6}  {:>8}  result\n", "check", "window", "cases"));
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<width$}  {:>6}  {:>8}  {status}\n", c.name, c.window, c.cases));
            for n in &c.notes {
                out.push_str(&format!("{:<width$}    {n}\n", ""));
            }
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("{:<width$}    at {}\n", "", ce.elements.join(", ")));
                out.push_str(&format!("{:<width$}    lhs {}\n", "", ce.lhs));
                out.push_str(&format!("{:<width$}    rhs {}\n", "", ce.rhs));
            }
        }
        let verdict = if self.passed { "all checks passed" } else { "FAILED" };
        out.push_str(verdict);
        out.push('\n');
        out
    }
}
