//! Verification reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One checked relation and its worst deviation over all samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub identity: String,
    pub max_abs_dev: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Entry {
    /// Passes when `max_abs_dev <= tolerance`.
    pub fn within(identity: impl Into<String>, max_abs_dev: f64, tolerance: f64) -> Self {
        Self {
            identity: identity.into(),
            max_abs_dev,
            tolerance,
            pass: max_abs_dev <= tolerance,
        }
    }

    /// Negative control: passes when the deviation exceeds the threshold.
    pub fn above(identity: impl Into<String>, max_abs_dev: f64, threshold: f64) -> Self {
        Self {
            identity: identity.into(),
            max_abs_dev,
            tolerance: threshold,
            pass: max_abs_dev > threshold,
        }
    }

    /// An entry for a check that could not be evaluated.
    pub fn failed(identity: impl Into<String>, reason: impl std::fmt::Display) -> Self {
        Self {
            identity: format!("{} [error: {reason}]", identity.into()),
            max_abs_dev: f64::INFINITY,
            tolerance: 0.0,
            pass: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, seed: u64, entries: Vec<Entry>) -> Self {
        let passed = entries.iter().filter(|e| e.pass).count();
        let summary = Summary {
            total: entries.len(),
            passed,
            failed: entries.len() - passed,
        };
        Self {
            suite: suite.into(),
            seed,
            pass: summary.failed == 0,
            entries,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        // Infinity is not representable in JSON; failed evaluations serialize as null.
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// Human-readable listing. `timestamp` is printed in the header when given.
    pub fn to_text(&self, timestamp: Option<u64>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}  seed: {}", self.suite, self.seed);
        if let Some(t) = timestamp {
            let _ = writeln!(out, "generated: {t} (unix seconds)");
        }
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{}  dev={}  tol={}  {}",
                if e.pass { "PASS" } else { "FAIL" },
                format_number(e.max_abs_dev),
                format_number(e.tolerance),
                e.identity
            );
        }
        let _ = writeln!(
            out,
            "{} of {} checks passed{}",
            self.summary.passed,
            self.summary.total,
            if self.pass { "" } else { "; FAILED" }
        );
        out
    }
}

/// 17 significant digits, scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_and_overall_flag() {
        let r = VerifyReport::new(
            "demo",
            1,
            vec![
                Entry::within("a", 0.0, 1e-12),
                Entry::within("b", 1e-3, 1e-12),
                Entry::above("c", 0.5, 0.1),
            ],
        );
        assert_eq!(r.summary, Summary { total: 3, passed: 2, failed: 1 });
        assert!(!r.pass);
    }

    #[test]
    fn numbers_keep_seventeen_digits() {
        assert_eq!(format_number(0.1), "1.0000000000000001e-1");
        assert_eq!(format_number(0.0), "0.0000000000000000e0");
        let back: f64 = format_number(1.0 / 3.0).parse().unwrap();
        assert_eq!(back, 1.0 / 3.0);
    }

    #[test]
    fn text_has_no_timestamp_unless_asked() {
        let r = VerifyReport::new("demo", 7, vec![Entry::within("a", 0.0, 0.0)]);
        assert!(!r.to_text(None).contains("generated"));
        assert!(r.to_text(Some(5)).contains("generated: 5"));
        let back: VerifyReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
