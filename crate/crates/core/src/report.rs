use serde::{Deserialize, Serialize};

/// Violations kept verbatim in a report; the rest are only counted.
pub const MAX_LISTED_VIOLATIONS: usize = 256;

/// A violated axiom together with the ids that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of an exhaustive structural check. Never an error: a broken
/// input produces a report listing what is broken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checked: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
            not_applicable: None,
        }
    }

    pub fn not_applicable(subject: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = ValidationReport::new(subject);
        r.not_applicable = Some(reason.into());
        r
    }

    pub fn is_valid(&self) -> bool {
        self.violation_count == 0 && self.not_applicable.is_none()
    }

    pub fn is_applicable(&self) -> bool {
        self.not_applicable.is_none()
    }

    /// Records one checked instance; `ok == false` with a witness is a violation.
    pub fn check(&mut self, ok: bool, axiom: &str, witness: &[usize], detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.push(axiom, witness, detail());
        }
    }

    pub fn push(&mut self, axiom: &str, witness: &[usize], detail: String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_LISTED_VIOLATIONS {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness.to_vec(),
                detail,
            });
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_LISTED_VIOLATIONS {
                self.violations.push(v);
            }
        }
        if self.not_applicable.is_none() {
            self.not_applicable = other.not_applicable;
        }
    }

    pub fn first(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.first(axiom).is_some()
    }
}
