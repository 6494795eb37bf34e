use std::fmt;

/// One failed identity, with the basis element (or tuple) that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Finding {
    pub label: String,
    pub witness: String,
    pub detail: String,
}

impl Finding {
    pub fn new(label: impl Into<String>, witness: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding { label: label.into(), witness: witness.into(), detail: detail.into() }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} FAIL at {}: {}", self.label, self.witness, self.detail)
    }
}

/// Outcome of a check: an empty report means every identity held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn push(&mut self, label: impl Into<String>, witness: impl Into<String>, detail: impl Into<String>) {
        self.findings.push(Finding::new(label, witness, detail));
    }

    pub fn extend(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }

    /// Re-labels every finding as `prefix/label`.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for f in &mut self.findings {
            f.label = format!("{prefix}/{}", f.label);
        }
        self
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.findings.iter().any(|f| f.label == label)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.findings.iter().map(|f| f.label.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS");
        }
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{finding}")?;
        }
        Ok(())
    }
}
