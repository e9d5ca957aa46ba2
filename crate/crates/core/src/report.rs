//! Law reports: one outcome per checked equation, rendered as sorted text.

use std::fmt;

use crate::error::Error;

/// A failed case: a human-readable reproduction of the violated equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure(s.to_string())
    }
}

/// Result of a single sampled case.
pub type CaseResult = Result<(), Failure>;

/// Fails the case unless both sides are equal, printing both.
pub fn expect_eq<T: PartialEq + fmt::Display>(what: &str, lhs: &T, rhs: &T) -> CaseResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure(format!("{what}: {lhs} != {rhs}")))
    }
}

/// Fails the case with `message` unless `cond` holds.
pub fn expect(cond: bool, message: impl FnOnce() -> String) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(Failure(message()))
    }
}

/// Outcome of one law over a batch of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: String,
    pub cases: usize,
    /// For ordinary laws, the first counterexample. For expected failures,
    /// the counterexample that was found (its absence is the failure).
    pub counterexample: Option<String>,
    pub expected_failure: bool,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_some() == self.expected_failure
    }
}

/// A collection of law outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs `cases` cases of a law, stopping at the first failure.
    pub fn check<F>(&mut self, law: impl Into<String>, cases: usize, mut case: F)
    where
        F: FnMut(usize) -> CaseResult,
    {
        let mut counterexample = None;
        let mut run = 0;
        for i in 0..cases {
            run += 1;
            if let Err(Failure(msg)) = case(i) {
                counterexample = Some(format!("case {i}: {msg}"));
                break;
            }
        }
        self.outcomes.push(LawOutcome {
            law: law.into(),
            cases: run,
            counterexample,
            expected_failure: false,
        });
    }

    /// Runs cases until one of them produces a counterexample, which is the
    /// desired outcome for a law that is known not to hold.
    pub fn check_refuted<F>(&mut self, law: impl Into<String>, cases: usize, mut case: F)
    where
        F: FnMut(usize) -> Result<Option<String>, Failure>,
    {
        let mut counterexample = None;
        let mut run = 0;
        for i in 0..cases {
            run += 1;
            match case(i) {
                Ok(None) => {}
                Ok(Some(found)) => {
                    counterexample = Some(found);
                    break;
                }
                Err(Failure(msg)) => {
                    self.outcomes.push(LawOutcome {
                        law: format!("{} (error: {msg})", law.into()),
                        cases: run,
                        counterexample: None,
                        expected_failure: true,
                    });
                    return;
                }
            }
        }
        self.outcomes.push(LawOutcome {
            law: law.into(),
            cases: run,
            counterexample,
            expected_failure: true,
        });
    }

    /// Records an outcome computed elsewhere.
    pub fn record(&mut self, law: impl Into<String>, cases: usize, counterexample: Option<String>) {
        self.outcomes.push(LawOutcome {
            law: law.into(),
            cases,
            counterexample,
            expected_failure: false,
        });
    }

    pub fn extend(&mut self, other: LawReport) {
        self.outcomes.extend(other.outcomes);
    }

    /// Prefixes every law name, for grouping reports of several instances.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for o in &mut self.outcomes {
            o.law = format!("{prefix}: {}", o.law);
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn find(&self, law: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.law == law)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<&LawOutcome> = self.outcomes.iter().collect();
        sorted.sort_by(|a, b| a.law.cmp(&b.law));
        for o in sorted {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let note = if o.expected_failure {
                " (expected counterexample)"
            } else {
                ""
            };
            writeln!(f, "{status} {}{note} [{} cases]", o.law, o.cases)?;
            match (&o.counterexample, o.expected_failure) {
                (Some(c), _) => writeln!(f, "    counterexample: {c}")?,
                (None, true) => writeln!(f, "    no counterexample found")?,
                (None, false) => {}
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_recorded_and_stops_the_batch() {
        let mut r = LawReport::new();
        r.check("even", 10, |i| expect(i < 3, || format!("{i} too big")));
        let o = &r.outcomes[0];
        assert!(!o.passed());
        assert_eq!(o.cases, 4);
        assert_eq!(o.counterexample.as_deref(), Some("case 3: 3 too big"));
    }

    #[test]
    fn refuted_law_passes_only_with_counterexample() {
        let mut r = LawReport::new();
        r.check_refuted("found", 5, |i| Ok((i == 2).then(|| "x".to_string())));
        r.check_refuted("missing", 5, |_| Ok(None));
        assert!(r.outcomes[0].passed());
        assert!(!r.outcomes[1].passed());
    }

    #[test]
    fn rendering_is_sorted() {
        let mut r = LawReport::new();
        r.record("b", 1, None);
        r.record("a", 1, Some("boom".into()));
        let text = r.to_string();
        assert_eq!(text, "FAIL a [1 cases]\n    counterexample: boom\nPASS b [1 cases]\n");
    }
}
