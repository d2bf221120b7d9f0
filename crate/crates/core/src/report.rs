use std::fmt::Write;
use std::time::Duration;

use crate::error::Result;

/// Outcome of a single identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Short machine-readable slug, unique within a suite.
    pub label: String,
    /// The identity being checked, in words.
    pub description: String,
    pub passed: bool,
    /// Counterexample or extra output.
    pub detail: Option<String>,
}

impl Check {
    pub fn new(label: impl Into<String>, description: impl Into<String>, passed: bool) -> Self {
        Check {
            label: label.into(),
            description: description.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Attaches `detail` only if the check failed.
    pub fn or_counterexample(self, detail: Option<String>) -> Self {
        match detail {
            Some(d) if !self.passed => self.with_detail(d),
            _ => self,
        }
    }
}

/// Runs `ok` over `items` and describes the first item for which it is false.
pub fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut ok: impl FnMut(&T) -> Result<bool>,
    show: impl Fn(&T) -> String,
) -> Result<Option<String>> {
    for item in items {
        if !ok(&item)? {
            return Ok(Some(show(&item)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One `CHECK <suite>.<label> PASS|FAIL` line per check, followed by the
    /// description and any detail lines indented by four spaces. Timing is
    /// only printed on request so that reports stay byte-reproducible.
    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "CHECK {}.{} {}  {}", self.suite, c.label, status, c.description);
            if let Some(detail) = &c.detail {
                for line in detail.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = write!(out, "SUITE {} {}/{} passed", self.suite, passed, self.checks.len());
        if timing {
            let _ = write!(out, " in {:.3}s", self.elapsed.as_secs_f64());
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_lines() {
        let mut r = VerificationReport::new("demo");
        r.push(Check::new("one", "1 = 1", true));
        r.push(Check::new("two", "1 = 2", false).with_detail("lhs 1\nrhs 2"));
        let text = r.render(false);
        assert!(text.starts_with("CHECK demo.one PASS  1 = 1\nCHECK demo.two FAIL  1 = 2\n    lhs 1\n    rhs 2\n"));
        assert!(text.ends_with("SUITE demo 1/2 passed\n"));
        assert!(!r.all_passed());
    }
}
