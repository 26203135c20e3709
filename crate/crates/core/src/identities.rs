//! Binomial coefficients and checks of the identities relating consecutive
//! rows of the partial-sum table.
//!
//! The central identity, for `k >= 1` and `n >= 1`:
//!
//! ```text
//! a_k(n) = sum_{m=1..n} a_{k-1}(m) = a_{k-1}(n+2) - C(n+k, k-1)
//! ```
//!
//! Unfolding it down to row 0 gives a closed form in Fibonacci numbers and
//! binomials, see [`a_closed`].

use std::ops::RangeInclusive;

use num_traits::{CheckedSub, One, Zero};

use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::seq::{fib, PrefixTable};
use crate::{Index, Natural, Order};

/// `C(n, k)`, total over all integers: zero when `k < 0`, `n < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> Natural {
    if n < 0 || k < 0 || k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 1..=k {
        // acc holds C(n - k + i - 1, i - 1); the product is divisible by i
        acc *= (n - k + i) as u64;
        acc /= i as u64;
    }
    acc
}

fn checked_diff(k: i64, n: i64, minuend: Natural, subtrahend: Natural) -> Result<Natural> {
    minuend.checked_sub(&subtrahend).ok_or(Error::IdentityUnderflow {
        k,
        n,
        minuend,
        subtrahend,
    })
}

/// `a_{k-1}(n+2) - C(n+k, k-1)` for `k >= 1`, `n >= 1`.
pub fn theorem1_rhs(table: &mut PrefixTable, k: Order, n: Index) -> Result<Natural> {
    assert!(k >= 1, "theorem1_rhs needs k >= 1");
    let minuend = table.a(k - 1, n + 2)?;
    let ki = k as i64;
    checked_diff(ki, n, minuend, binom(n + ki, ki - 1))
}

/// Checks `sum_{m=1..n} a_{k-1}(m) = a_{k-1}(n+2) - C(n+k, k-1)` over the
/// given rectangle. The left side is summed directly from row `k - 1`.
pub fn verify_theorem1(
    table: &mut PrefixTable,
    k_range: RangeInclusive<Order>,
    n_range: RangeInclusive<usize>,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "theorem1",
        (*k_range.start() as i64, *k_range.end() as i64),
        (*n_range.start() as i64, *n_range.end() as i64),
    );
    if k_range.is_empty() || n_range.is_empty() {
        return Ok(report);
    }
    assert!(*k_range.start() >= 1, "theorem1 needs k >= 1");
    assert!(*n_range.start() >= 1, "theorem1 needs n >= 1");
    let (k_max, n_max) = (*k_range.end(), *n_range.end());
    table.ensure(k_max - 1, n_max + 2)?;

    for k in k_range {
        let prev = table.row(k - 1).expect("row ensured").to_vec();
        let mut lhs = Natural::zero();
        for (m, value) in prev.iter().enumerate().take(n_max) {
            lhs += value;
            let n = m + 1;
            if n_range.contains(&n) {
                let rhs = theorem1_rhs(table, k, n as Index)?;
                report.check(k as i64, n as i64, lhs.clone(), rhs);
            }
        }
    }
    Ok(report.finish())
}

/// `C(k+2, k) + 1`, the closed form of `a_k(3)`.
pub fn lemma_a3(k: Order) -> Natural {
    let k = k as i64;
    binom(k + 2, k) + 1u32
}

/// Checks `a_k(3) = C(k+2, k) + 1` for every `k` in range.
pub fn verify_lemma_a3(table: &mut PrefixTable, k_range: RangeInclusive<Order>) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "lemma_a3",
        (*k_range.start() as i64, *k_range.end() as i64),
        (3, 3),
    );
    if k_range.is_empty() {
        return Ok(report);
    }
    table.ensure(*k_range.end(), 3)?;
    for k in k_range {
        let lhs = table.get(k, 3).expect("cell ensured").clone();
        report.check(k as i64, 3, lhs, lemma_a3(k));
    }
    Ok(report.finish())
}

/// `a_k(n)` as `F_{n+2k} - sum_{i=1..k} C(n+2k-i, i-1)`, without building
/// any row above row 0.
pub fn a_closed(k: Order, n: Index) -> Result<Natural> {
    assert!(n >= 1, "a_closed needs n >= 1");
    let top = n + 2 * k as i64;
    let correction = (1..=k as i64).fold(Natural::zero(), |acc, i| acc + binom(top - i, i - 1));
    checked_diff(k as i64, n, fib(top)?, correction)
}

/// Checks `a_closed(k, n) = a_k(n)` over the given rectangle.
pub fn verify_closed_form(
    table: &mut PrefixTable,
    k_range: RangeInclusive<Order>,
    n_range: RangeInclusive<usize>,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "closed_form",
        (*k_range.start() as i64, *k_range.end() as i64),
        (*n_range.start() as i64, *n_range.end() as i64),
    );
    if k_range.is_empty() || n_range.is_empty() {
        return Ok(report);
    }
    table.ensure(*k_range.end(), *n_range.end())?;
    for k in k_range {
        for n in n_range.clone() {
            let lhs = a_closed(k, n as Index)?;
            let rhs = table.get(k, n as Index).expect("cell ensured").clone();
            report.check(k as i64, n as i64, lhs, rhs);
        }
    }
    Ok(report.finish())
}
