//! Verification reports for brute-force identity checks.
//!
//! Every checker in this crate enumerates basis tuples in lexicographic
//! order and returns the full list of violated instances (capped), so a
//! failing hand-entered table can be debugged from the report alone. Reports
//! are plain data: byte-identical serialization for identical inputs.

use serde::Serialize;

use crate::linalg::Vector;

/// Default cap on recorded violations per report.
pub const DEFAULT_MAX_FAILURES: usize = 32;

/// One violated identity instance on a basis tuple.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Which equation failed, e.g. `"fundamental-identity"` or `"mp-3"`.
    pub equation: String,
    /// Basis indices of the instance, 1-based, in equation argument order.
    pub tuple: Vec<usize>,
    /// Left-hand side value.
    pub lhs: Vec<String>,
    /// Right-hand side value.
    pub rhs: Vec<String>,
    /// `lhs - rhs`.
    pub residual: Vec<String>,
}

/// Outcome of one brute-force check: empty violation list means the
/// identity holds on every enumerated tuple.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub verdict: Verdict,
    /// Total number of violated tuples found (may exceed `violations.len()`).
    pub total_violations: u64,
    /// Uncapped violation counts per equation label.
    pub totals_by_equation: std::collections::BTreeMap<String, u64>,
    /// Recorded violations, capped at `max_failures`, lexicographic order.
    pub violations: Vec<Violation>,
    pub max_failures: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, max_failures: usize) -> Self {
        VerificationReport {
            check: check.into(),
            verdict: Verdict::Pass,
            total_violations: 0,
            totals_by_equation: Default::default(),
            violations: Vec::new(),
            max_failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Records a violation if `lhs != rhs`; tuple indices are 0-based here
    /// and stored 1-based.
    pub fn check_equal(&mut self, equation: &str, tuple: &[usize], lhs: &Vector, rhs: &Vector) {
        if lhs == rhs {
            return;
        }
        self.verdict = Verdict::Fail;
        self.total_violations += 1;
        *self.totals_by_equation.entry(equation.to_string()).or_insert(0) += 1;
        if self.violations.len() < self.max_failures {
            self.violations.push(Violation {
                equation: equation.to_string(),
                tuple: tuple.iter().map(|i| i + 1).collect(),
                lhs: lhs.to_strings(),
                rhs: rhs.to_strings(),
                residual: lhs.difference(rhs).to_strings(),
            });
        }
    }

    /// Records a violation if `value != 0`.
    pub fn check_zero(&mut self, equation: &str, tuple: &[usize], value: &Vector) {
        let zero = Vector::zero(value.dim());
        self.check_equal(equation, tuple, value, &zero);
    }

    /// Folds another report into this one, keeping the shared cap.
    pub fn absorb(&mut self, other: VerificationReport) {
        if !other.passed() {
            self.verdict = Verdict::Fail;
        }
        self.total_violations += other.total_violations;
        for (k, n) in other.totals_by_equation {
            *self.totals_by_equation.entry(k).or_insert(0) += n;
        }
        for v in other.violations {
            if self.violations.len() < self.max_failures {
                self.violations.push(v);
            }
        }
    }

    /// Same report with every equation label prefixed, for nesting
    /// sub-checks inside a larger one.
    pub fn prefixed(mut self, prefix: &str) -> VerificationReport {
        for v in &mut self.violations {
            v.equation = format!("{prefix}{}", v.equation);
        }
        self.totals_by_equation = self
            .totals_by_equation
            .into_iter()
            .map(|(k, v)| (format!("{prefix}{k}"), v))
            .collect();
        self
    }

    /// Label of the first recorded violation, if any.
    pub fn first_equation(&self) -> Option<&str> {
        self.violations.first().map(|v| v.equation.as_str())
    }

    /// Number of recorded violations for a given equation label.
    pub fn violations_for(&self, equation: &str) -> usize {
        self.violations
            .iter()
            .filter(|v| v.equation == equation)
            .count()
    }

    /// Canonical JSON: sorted object keys, LF line endings, rationals as
    /// strings. Identical inputs produce identical bytes.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialization");
        serde_json::to_string_pretty(&value).expect("report serialization")
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "check {}: {}\n",
            self.check,
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
        ));
        if self.total_violations > 0 {
            out.push_str(&format!(
                "violations: {} total, {} recorded (cap {})\n",
                self.total_violations,
                self.violations.len(),
                self.max_failures
            ));
            for v in &self.violations {
                out.push_str(&format!(
                    "  {} at ({}): lhs=({}) rhs=({}) residual=({})\n",
                    v.equation,
                    join(&v.tuple),
                    v.lhs.join(", "),
                    v.rhs.join(", "),
                    v.residual.join(", "),
                ));
            }
        }
        out
    }
}

fn join(ix: &[usize]) -> String {
    ix.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use crate::scalar::Scalar;

    #[test]
    fn cap_limits_recorded_but_counts_all() {
        let mut r = VerificationReport::new("demo", 2);
        let one = {
            let mut v = Vector::zero(1);
            v.set(0, Scalar::one());
            v
        };
        for i in 0..5 {
            r.check_zero("eq", &[i], &one);
        }
        assert_eq!(r.total_violations, 5);
        assert_eq!(r.violations.len(), 2);
        assert!(!r.passed());
        assert_eq!(r.violations[0].tuple, vec![1]);
    }

    #[test]
    fn json_is_deterministic() {
        let mut r = VerificationReport::new("demo", 8);
        r.check_zero("eq", &[0, 1], &Vector::basis(2, 0));
        assert_eq!(r.to_json(), r.to_json());
        assert!(r.to_json().contains("\"verdict\": \"fail\""));
    }
}
