//! Counting Schreier sets: subsets `S` of `{1..n}` with `min S >= |S|`.
//!
//! `s_k(n)` counts those with `|S| >= k`. The empty set is a Schreier set
//! (the condition is vacuous), so it is counted by `s_0` and by nothing else.

use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::identities::binom;
use crate::report::IdentityReport;
use crate::seq::PrefixTable;
use crate::{Natural, Order};

/// Largest ground set [`s_enumerate`] accepts by default.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 25;

/// Ground set `{1..n}` and cardinality floor `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchreierQuery {
    pub n: u64,
    pub k: Order,
}

impl SchreierQuery {
    pub fn new(n: u64, k: Order) -> Self {
        SchreierQuery { n, k }
    }
}

/// A subset of `{1..n}`, held as a bitmask with bit `i - 1` set for element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<u64> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as u64 + 1)
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u64> {
        (0..64).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    pub fn is_schreier(self) -> bool {
        self.min().is_none_or(|m| m >= self.len() as u64)
    }
}

impl FromIterator<u64> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        SubsetMask(iter.into_iter().fold(0, |m, e| {
            assert!((1..=64).contains(&e), "element {e} out of range");
            m | 1 << (e - 1)
        }))
    }
}

/// Number of `k`-element subsets of `{1..n}` with `min S >= k`: `C(n-k+1, k)`.
pub fn count_exact_size(n: u64, k: Order) -> Natural {
    binom(n as i64 - k as i64 + 1, k as i64)
}

/// `s_k(n)` by summing [`count_exact_size`] over the admissible sizes.
///
/// Sizes above `(n + 1) / 2` contribute nothing. `n = 0` is accepted and
/// counts only the empty set.
pub fn s_formula(q: SchreierQuery) -> Natural {
    let top = q.n.div_ceil(2) as usize;
    (q.k..=top).fold(Natural::zero(), |acc, j| acc + count_exact_size(q.n, j))
}

/// `s_k(n)` by walking all `2^n` subsets, with the default ground-set limit.
pub fn s_enumerate(q: SchreierQuery) -> Result<Natural> {
    s_enumerate_with_limit(q, DEFAULT_ENUMERATION_LIMIT)
}

pub fn s_enumerate_with_limit(q: SchreierQuery, limit: u64) -> Result<Natural> {
    let hist = schreier_histogram(q.n, limit)?;
    Ok(hist.iter().skip(q.k).map(|&c| Natural::from(c)).sum())
}

/// Counts Schreier subsets of `{1..n}` by cardinality, visiting masks in
/// increasing integer order. Entry `j` is the number of size `j`.
pub fn schreier_histogram(n: u64, limit: u64) -> Result<Vec<u64>> {
    if n > limit || n >= 64 {
        return Err(Error::GroundSetTooLarge { n, limit });
    }
    let mut hist = vec![0u64; n as usize + 1];
    for bits in 0..1u64 << n {
        let s = SubsetMask(bits);
        if s.is_schreier() {
            hist[s.len()] += 1;
        }
    }
    Ok(hist)
}

/// The grid `s_k(n)` for `0 <= k <= k_max`, `1 <= n <= n_max`, one row per `k`.
pub fn s_table(k_max: Order, n_max: u64) -> Vec<Vec<Natural>> {
    (0..=k_max)
        .map(|k| (1..=n_max).map(|n| s_formula(SchreierQuery::new(n, k))).collect())
        .collect()
}

/// Checks `s_{l+1}(n) = s_l(n) - C(n-l+1, l)` over the rectangle, written
/// as `s_{l+1}(n) + C(n-l+1, l) = s_l(n)` to stay in the naturals.
pub fn verify_corollary_cs(l_range: RangeInclusive<Order>, n_range: RangeInclusive<u64>) -> IdentityReport {
    let mut report = IdentityReport::new(
        "corollary_cs",
        (*l_range.start() as i64, *l_range.end() as i64),
        (*n_range.start() as i64, *n_range.end() as i64),
    );
    for l in l_range {
        for n in n_range.clone() {
            let lhs = s_formula(SchreierQuery::new(n, l + 1)) + binom(n as i64 - l as i64 + 1, l as i64);
            let rhs = s_formula(SchreierQuery::new(n, l));
            report.check(l as i64, n as i64, lhs, rhs);
        }
    }
    report.finish()
}

/// Checks `s_k(n) = a_k(n - 2(k - 1))` over the rectangle, with `a_k(m) = 0`
/// for `m <= 0`. For `n <= enumerate_up_to` the count is also compared
/// against brute-force enumeration; those mismatches are reported with the
/// enumerated count as `rhs`.
pub fn verify_theorem2(
    table: &mut PrefixTable,
    k_range: RangeInclusive<Order>,
    n_range: RangeInclusive<u64>,
    enumerate_up_to: u64,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "theorem2",
        (*k_range.start() as i64, *k_range.end() as i64),
        (*n_range.start() as i64, *n_range.end() as i64),
    );
    if k_range.is_empty() || n_range.is_empty() {
        return Ok(report);
    }
    for n in n_range {
        let hist = if n <= enumerate_up_to {
            Some(schreier_histogram(n, enumerate_up_to)?)
        } else {
            None
        };
        for k in k_range.clone() {
            let s = s_formula(SchreierQuery::new(n, k));
            let shifted = n as i64 - 2 * (k as i64 - 1);
            let a = table.a(k, shifted)?;
            let counted = hist
                .as_ref()
                .map(|h| h.iter().skip(k).map(|&c| Natural::from(c)).sum::<Natural>());
            match counted {
                Some(counted) if s == a && counted != s => report.check(k as i64, n as i64, s, counted),
                _ => report.check(k as i64, n as i64, s, a),
            }
        }
    }
    Ok(report.finish())
}

/// Checks `s_enumerate = s_formula` for `k` in range and every `n` in range.
pub fn verify_oracle(
    k_range: RangeInclusive<Order>,
    n_range: RangeInclusive<u64>,
    limit: u64,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "oracle",
        (*k_range.start() as i64, *k_range.end() as i64),
        (*n_range.start() as i64, *n_range.end() as i64),
    );
    if *n_range.end() > limit && !n_range.is_empty() {
        return Err(Error::GroundSetTooLarge {
            n: *n_range.end(),
            limit,
        });
    }
    for n in n_range {
        let hist = schreier_histogram(n, limit)?;
        for k in k_range.clone() {
            let counted: Natural = hist.iter().skip(k).map(|&c| Natural::from(c)).sum();
            report.check(k as i64, n as i64, counted, s_formula(SchreierQuery::new(n, k)));
        }
    }
    Ok(report.finish())
}

/// `s_{k}(2k - 1) = 1` (only `{k, ..., 2k-1}`) and `s_k(2k - 2) = 0`.
pub fn staircase_holds(k: Order) -> bool {
    assert!(k >= 1);
    let k64 = k as u64;
    s_formula(SchreierQuery::new(2 * k64 - 1, k)).is_one()
        && s_formula(SchreierQuery::new(2 * k64 - 2, k)).is_zero()
}
