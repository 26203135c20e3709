//! Exact iterated partial sums of the Fibonacci sequence, and the Schreier
//! set counts they turn out to enumerate.
//!
//! Row `k` of the table `a_k(n)` is the Fibonacci sequence with the running
//! sum applied `k` times:
//!
//! ```
//! use fibsums::{a, PrefixTable};
//!
//! assert_eq!(a(5, 12), 14323u32.into());
//!
//! let mut table = PrefixTable::new();
//! assert_eq!(table.a(3, 12).unwrap(), 2462u32.into());
//! ```
//!
//! `s_k(n)` counts subsets `S` of `{1..n}` with `|S| >= k` and
//! `min S >= |S|`; it is a shifted row of the same table:
//!
//! ```
//! use fibsums::schreier::{s_formula, SchreierQuery};
//!
//! assert_eq!(s_formula(SchreierQuery::new(8, 3)), fibsums::a(3, 4));
//! ```
//!
//! All values are [`num_bigint::BigUint`]. The guide in `book/` walks
//! through the identities; its code listings run as doctests of this crate.

mod error;
pub mod identities;
pub mod render;
mod report;
pub mod schreier;
pub mod seq;

pub use error::{Error, Result};
pub use report::{IdentityReport, Violation};
pub use seq::{a, fib, partial_sums, table, PrefixTable};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;

/// Number of times the partial-sum operator is applied (table row).
pub type Order = usize;

/// 1-based sequence position. Nonpositive values are accepted where a zero
/// convention applies.
pub type Index = i64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partial-sums.md")]
    mod partial_sums {}
    #[doc = include_str!("../../../book/src/row-identity.md")]
    mod row_identity {}
    #[doc = include_str!("../../../book/src/schreier-sets.md")]
    mod schreier_sets {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
