//! Verification reports shared by every identity checker.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::coeff::Coefficient;
use crate::symfunc::SymFunc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

/// The first failing comparison of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub lhs: Value,
    pub rhs: Value,
    pub difference: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    /// Number of individual equalities that were checked.
    pub checks: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time; kept out of the JSON so reruns diff cleanly.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "[{}] {} ({}) checks={} failures={} {:.3}s",
            if self.holds() { "PASS" } else { "FAIL" },
            self.claim,
            params.join(", "),
            self.checks,
            self.failures,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  first failure: {}\n  difference: {}", w.label, w.difference)?;
        }
        Ok(())
    }
}

/// Accumulates checks and produces a [`VerificationReport`].
pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim: impl Into<String>) -> Self {
        ReportBuilder {
            report: VerificationReport {
                claim: claim.into(),
                parameters: BTreeMap::new(),
                verdict: Verdict::Holds,
                checks: 0,
                failures: 0,
                witness: None,
                notes: Vec::new(),
                elapsed: Duration::ZERO,
            },
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.set_param(key, value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("parameter serializes");
        self.report.parameters.insert(key.to_string(), v);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    fn fail(&mut self, witness: Witness) {
        self.report.verdict = Verdict::Fails;
        self.report.failures += 1;
        if self.report.witness.is_none() {
            self.report.witness = Some(witness);
        }
    }

    /// Structural equality of two symmetric polynomials.
    pub fn check_equal<C: Coefficient>(
        &mut self,
        label: impl Into<String>,
        lhs: &SymFunc<C>,
        rhs: &SymFunc<C>,
    ) -> bool {
        self.report.checks += 1;
        if lhs == rhs {
            return true;
        }
        let difference = match lhs.try_sub(rhs) {
            Ok(d) => serde_json::to_value(&d).expect("serializes"),
            Err(e) => Value::String(e.to_string()),
        };
        self.fail(Witness {
            label: label.into(),
            lhs: serde_json::to_value(lhs).expect("serializes"),
            rhs: serde_json::to_value(rhs).expect("serializes"),
            difference,
        });
        false
    }

    /// Equality of two serializable values with an explicit difference.
    pub fn check_values(
        &mut self,
        label: impl Into<String>,
        lhs: impl Serialize,
        rhs: impl Serialize,
        difference: impl Serialize,
        equal: bool,
    ) -> bool {
        self.report.checks += 1;
        if !equal {
            self.fail(Witness {
                label: label.into(),
                lhs: serde_json::to_value(lhs).expect("serializes"),
                rhs: serde_json::to_value(rhs).expect("serializes"),
                difference: serde_json::to_value(difference).expect("serializes"),
            });
        }
        equal
    }

    pub fn check_count(&mut self, label: impl Into<String>, got: u64, expected: u64) -> bool {
        let diff = got as i128 - expected as i128;
        self.check_values(label, got, expected, diff, got == expected)
    }

    /// Folds another report in as a sub-check.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.report.checks += other.checks;
        if !other.holds() {
            self.report.verdict = Verdict::Fails;
            self.report.failures += other.failures.max(1);
            if self.report.witness.is_none() {
                self.report.witness = other.witness;
            }
        }
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.elapsed = self.started.elapsed();
        self.report
    }
}
