use serde::{Deserialize, Serialize};

/// Witnesses kept per law. Further violations are only counted.
pub const MAX_WITNESSES: usize = 8;

/// One concrete counterexample to a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub expected: String,
    pub got: String,
}

impl Violation {
    pub fn new<I, S>(inputs: I, expected: impl Into<String>, got: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Violation {
            inputs: inputs.into_iter().map(|s| s.to_string()).collect(),
            expected: expected.into(),
            got: got.into(),
        }
    }
}

/// Outcome of checking one law over a sample pool.
///
/// A report passes iff it holds no violations. `inconclusive` counts samples
/// where a bounded existence search ran out without a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub name: String,
    pub samples: u64,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub violation_count: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub inconclusive: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn is_zero(n: &u64) -> bool {
    *n == 0
}

impl LawReport {
    pub fn new(name: impl Into<String>) -> Self {
        LawReport {
            name: name.into(),
            samples: 0,
            violations: Vec::new(),
            violation_count: 0,
            inconclusive: 0,
            note: None,
        }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tick(&mut self) {
        self.samples += 1;
    }

    pub fn record(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(v);
        }
    }

    /// Records a violation unless `ok` holds. Returns `ok`.
    pub fn expect(&mut self, ok: bool, violation: impl FnOnce() -> Violation) -> bool {
        if !ok {
            self.record(violation());
        }
        ok
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Folds `other` into `self`, keeping `self`'s name.
    pub fn absorb(&mut self, other: LawReport) {
        self.samples += other.samples;
        self.inconclusive += other.inconclusive;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(v);
            }
        }
    }
}
