use std::fmt;

use serde::Serialize;

/// Outcome of checking one identity, optionally at one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub identity: String,
    pub degree: Option<usize>,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Ordered list of identity checks. Failures are data, not errors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(
        &mut self,
        identity: impl Into<String>,
        degree: Option<usize>,
        witness: Option<String>,
    ) {
        self.checks.push(CheckOutcome {
            identity: identity.into(),
            degree,
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn pass(&mut self, identity: impl Into<String>, degree: Option<usize>) {
        self.record(identity, degree, None);
    }

    pub fn fail(&mut self, identity: impl Into<String>, degree: Option<usize>, witness: String) {
        self.record(identity, degree, Some(witness));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {}", self.identity)?;
        if let Some(d) = self.degree {
            write!(f, " [degree {d}]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
