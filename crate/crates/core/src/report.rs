use serde::Serialize;

/// Outcome of a verification sweep. Failure is data, not an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), passed: true, checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    /// Record one check; keeps at most a handful of failure messages.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < 8 {
                self.failures.push(what());
            }
        }
        ok
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn absorb(&mut self, other: Report) {
        self.passed &= other.passed;
        self.checked += other.checked;
        for f in other.failures {
            if self.failures.len() < 8 {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
        self.notes.extend(other.notes);
    }
}
