//! Fibonacci numbers and their iterated partial sums.
//!
//! Row `k` of the triangular table holds `a_k(1), a_k(2), ...`, where row 0
//! is the Fibonacci sequence (`F_1 = F_2 = 1`) and each later row is the
//! running sum of the row above it. Columns are 1-based, rows 0-based.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Index, Natural, Order};

/// Environment variable that overrides [`DEFAULT_CELL_LIMIT`].
pub const CELL_LIMIT_ENV: &str = "FIBSUMS_MAX_CELLS";

pub const DEFAULT_CELL_LIMIT: usize = 10_000_000;

/// Reads the cell-count guard from [`CELL_LIMIT_ENV`], falling back to the
/// default when the variable is unset.
pub fn cell_limit_from_env() -> Result<usize> {
    match std::env::var(CELL_LIMIT_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| Error::InvalidLimit {
            var: CELL_LIMIT_ENV,
            value: raw,
        }),
        Err(_) => Ok(DEFAULT_CELL_LIMIT),
    }
}

/// The `n`-th Fibonacci number with `F_1 = F_2 = 1`.
pub fn fib(n: Index) -> Result<Natural> {
    if n < 1 {
        return Err(Error::Domain(n));
    }
    let (mut prev, mut cur) = (Natural::zero(), Natural::one());
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Running sums: element `j` of the output is the sum of input elements `0..=j`.
pub fn partial_sums(values: &[Natural]) -> Vec<Natural> {
    let mut acc = Natural::zero();
    values
        .iter()
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

/// `a_k(n)` computed from scratch, without a cache.
///
/// Returns 0 for `n <= 0`. Use a [`PrefixTable`] when many values are needed.
pub fn a(k: Order, n: Index) -> Natural {
    if n < 1 {
        return Natural::zero();
    }
    let len = n as usize;
    let mut row = Vec::with_capacity(len);
    push_fibonacci(&mut row, len);
    for _ in 0..k {
        let mut acc = Natural::zero();
        for cell in row.iter_mut() {
            acc += &*cell;
            *cell = acc.clone();
        }
    }
    row.pop().expect("row has n >= 1 cells")
}

fn push_fibonacci(row: &mut Vec<Natural>, len: usize) {
    while row.len() < len {
        let next = match row.len() {
            0 | 1 => Natural::one(),
            m => &row[m - 1] + &row[m - 2],
        };
        row.push(next);
    }
}

/// Builds a fully populated table for `0 <= k <= k_max`, `1 <= n <= n_max`,
/// honoring the cell limit from the environment.
pub fn table(k_max: Order, n_max: usize) -> Result<PrefixTable> {
    table_with_limit(k_max, n_max, cell_limit_from_env()?)
}

pub fn table_with_limit(k_max: Order, n_max: usize, cell_limit: usize) -> Result<PrefixTable> {
    let mut t = PrefixTable::with_cell_limit(cell_limit);
    t.ensure(k_max, n_max)?;
    Ok(t)
}

/// Memoized, append-only cache of `a_k(n)`.
///
/// Rows are filled in order, so row `k` is never longer than row `k - 1`.
/// Mutation goes through `&mut self`; share a table across threads behind a
/// lock or give each thread its own.
#[derive(Debug, Clone)]
pub struct PrefixTable {
    rows: Vec<Vec<Natural>>,
    cells: usize,
    cell_limit: usize,
}

impl Default for PrefixTable {
    fn default() -> Self {
        Self::with_cell_limit(DEFAULT_CELL_LIMIT)
    }
}

impl PrefixTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cell_limit(cell_limit: usize) -> Self {
        PrefixTable {
            rows: Vec::new(),
            cells: 0,
            cell_limit,
        }
    }

    pub fn cell_limit(&self) -> usize {
        self.cell_limit
    }

    /// Number of cached cells.
    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Largest `(k, n)` such that every cell of `[0, k] x [1, n]` is cached.
    pub fn extent(&self) -> Option<(Order, usize)> {
        let last = self.rows.last()?;
        Some((self.rows.len() - 1, last.len()))
    }

    /// Extends the cache so that all cells with `k' <= k` and `n' <= n`
    /// are present. Fails without touching the cache if that would exceed
    /// the cell limit.
    pub fn ensure(&mut self, k: Order, n: usize) -> Result<()> {
        let missing: u128 = (0..=k as u128)
            .map(|r| {
                let have = self.rows.get(r as usize).map_or(0, Vec::len);
                n.saturating_sub(have) as u128
            })
            .sum();
        if missing == 0 {
            return Ok(());
        }
        let requested = self.cells as u128 + missing;
        if requested > self.cell_limit as u128 {
            return Err(Error::TableTooLarge {
                requested,
                limit: self.cell_limit,
            });
        }

        while self.rows.len() <= k {
            self.rows.push(Vec::new());
        }
        push_fibonacci(&mut self.rows[0], n);
        for r in 1..=k {
            let (above, rest) = self.rows.split_at_mut(r);
            let prev = &above[r - 1];
            let row = &mut rest[0];
            let mut acc = row.last().cloned().unwrap_or_else(Natural::zero);
            for cell in &prev[row.len()..n.max(row.len())] {
                acc += cell;
                row.push(acc.clone());
            }
        }
        self.cells = self.rows.iter().map(Vec::len).sum();
        Ok(())
    }

    /// `a_k(n)`, extending the cache if needed. Zero for `n <= 0`.
    pub fn a(&mut self, k: Order, n: Index) -> Result<Natural> {
        if n < 1 {
            return Ok(Natural::zero());
        }
        self.ensure(k, n as usize)?;
        Ok(self.rows[k][n as usize - 1].clone())
    }

    /// Cached value of `a_k(n)`, if present.
    pub fn get(&self, k: Order, n: Index) -> Option<&Natural> {
        if n < 1 {
            return None;
        }
        self.rows.get(k)?.get(n as usize - 1)
    }

    /// The cached prefix of row `k`; index 0 holds `a_k(1)`.
    pub fn row(&self, k: Order) -> Option<&[Natural]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    /// The rectangle `[0, k_max] x [1, n_max]` as owned rows, or `None` if
    /// it is not fully cached.
    pub fn grid(&self, k_max: Order, n_max: usize) -> Option<Vec<Vec<Natural>>> {
        (0..=k_max)
            .map(|k| self.rows.get(k).and_then(|r| r.get(..n_max)).map(<[_]>::to_vec))
            .collect()
    }
}
