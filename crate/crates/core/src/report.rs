use std::fmt;

use serde::{Deserialize, Serialize};

/// One violated rule together with the cells or objects that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

/// Outcome of a structural validator. Empty means every checked rule holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

/// Validators stop recording after this many violations per report.
pub(crate) const MAX_VIOLATIONS: usize = 64;

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, rule: impl Into<String>, witness: impl Into<String>) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation { rule: rule.into(), witness: witness.into() });
        }
    }

    pub(crate) fn full(&self) -> bool {
        self.violations.len() >= MAX_VIOLATIONS
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for v in other.violations {
            self.push(format!("{prefix}: {}", v.rule), v.witness);
        }
    }

    pub fn mentions(&self, needle: &str) -> bool {
        self.violations.iter().any(|v| v.rule.contains(needle) || v.witness.contains(needle))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.rule, v.witness)?;
        }
        Ok(())
    }
}
