//! Outcome of checking one identity.

use serde::{Deserialize, Serialize};

use crate::exact::{format_rat, Rat};

/// Exact left- and right-hand sides of a checked identity.
///
/// `pass` is true exactly when `lhs == rhs`. An `advisory` note is set when
/// the identity's hypotheses do not hold for the input, in which case a
/// failure is expected rather than a defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub identity: String,
    #[serde(with = "crate::exact::serde_rat")]
    pub lhs: Rat,
    #[serde(with = "crate::exact::serde_rat")]
    pub rhs: Rat,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub advisory: Option<String>,
    pub diagnostics: Vec<String>,
}

impl VerifierReport {
    pub fn new(identity: impl Into<String>, lhs: Rat, rhs: Rat) -> Self {
        let pass = lhs == rhs;
        Self { identity: identity.into(), lhs, rhs, pass, advisory: None, diagnostics: Vec::new() }
    }

    pub fn with_advisory(mut self, note: Option<String>) -> Self {
        self.advisory = note;
        self
    }

    pub fn with_diagnostics(mut self, diagnostics: Vec<String>) -> Self {
        self.diagnostics = diagnostics;
        self
    }

    /// Combines sub-checks: `lhs` is the number of failing parts, `rhs` is 0.
    pub fn aggregate(identity: impl Into<String>, parts: &[VerifierReport]) -> Self {
        let failed = parts.iter().filter(|p| !p.pass).count();
        let diagnostics = parts
            .iter()
            .filter(|p| !p.pass)
            .map(|p| p.summary())
            .collect();
        let mut r = Self::new(identity, Rat::from_integer(failed.into()), Rat::from_integer(0.into()));
        r.diagnostics = diagnostics;
        r.diagnostics.insert(0, format!("{} instances checked", parts.len()));
        r
    }

    /// One line: `identity: lhs = rhs (pass)`.
    pub fn summary(&self) -> String {
        let rel = if self.pass { "=" } else { "!=" };
        let verdict = if self.pass { "pass" } else { "FAIL" };
        let mut s = format!("{}: {} {} {} ({})", self.identity, format_rat(&self.lhs), rel, format_rat(&self.rhs), verdict);
        if let Some(a) = &self.advisory {
            s.push_str(&format!(" [advisory: {a}]"));
        }
        s
    }
}
