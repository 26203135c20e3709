use std::fmt;

use crate::Natural;

/// One failed check: the two sides of an identity at `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub k: i64,
    pub n: i64,
    pub lhs: Natural,
    pub rhs: Natural,
}

/// Outcome of checking an identity over a rectangle of `(k, n)` values.
///
/// Every cell in the rectangle is either implicitly passed or listed once in
/// `violations`, sorted by `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_name: String,
    pub k_range: (i64, i64),
    pub n_range: (i64, i64),
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl IdentityReport {
    pub fn new(identity_name: impl Into<String>, k_range: (i64, i64), n_range: (i64, i64)) -> Self {
        IdentityReport {
            identity_name: identity_name.into(),
            k_range,
            n_range,
            checks: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one comparison.
    pub fn check(&mut self, k: i64, n: i64, lhs: Natural, rhs: Natural) {
        self.checks += 1;
        if lhs != rhs {
            self.violations.push(Violation { k, n, lhs, rhs });
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        self.violations.sort_by_key(|v| (v.k, v.n));
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {}/{} checks", self.checks, self.checks)
        } else {
            write!(
                f,
                "FAIL {} violations in {} checks",
                self.violations.len(),
                self.checks
            )
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={} lhs={} rhs={}", self.k, self.n, self.lhs, self.rhs)
    }
}
