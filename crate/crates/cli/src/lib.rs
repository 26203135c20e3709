//! Command implementations behind the `fibsums` binary. Each returns the
//! text for standard output; `main` handles argument parsing and exit codes.

use std::fmt::Write as _;

use fibsums::identities::{verify_closed_form, verify_lemma_a3, verify_theorem1};
use fibsums::render::{bfile_rows, render_bfile, render_table, Family, RenderSpec};
use fibsums::schreier::{verify_corollary_cs, verify_oracle, verify_theorem2, DEFAULT_ENUMERATION_LIMIT};
use fibsums::{IdentityReport, Order, PrefixTable, Result};

/// Ground sets up to this size are cross-checked by enumeration in `theorem2`.
pub const THEOREM2_ENUMERATION_CAP: u64 = 20;

/// How many violations a failing report lists.
pub const MAX_LISTED_VIOLATIONS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Theorem1,
    Theorem2,
    LemmaA3,
    CorollaryCs,
    ClosedForm,
    Oracle,
}

pub fn cmd_table(spec: &RenderSpec, cell_limit: usize) -> Result<String> {
    render_table(spec, cell_limit)
}

pub fn cmd_bfile(family: Family, k: Order, n_max: usize, cell_limit: usize) -> Result<String> {
    Ok(render_bfile(&bfile_rows(family, k, n_max, cell_limit)?))
}

pub fn run_verify(which: Identity, k_max: Order, n_max: usize, cell_limit: usize) -> Result<IdentityReport> {
    let mut table = PrefixTable::with_cell_limit(cell_limit);
    let n_max64 = n_max as u64;
    match which {
        Identity::Theorem1 => verify_theorem1(&mut table, 1..=k_max, 1..=n_max),
        Identity::Theorem2 => verify_theorem2(
            &mut table,
            0..=k_max,
            1..=n_max64,
            n_max64.min(THEOREM2_ENUMERATION_CAP),
        ),
        Identity::LemmaA3 => verify_lemma_a3(&mut table, 0..=k_max),
        Identity::CorollaryCs => Ok(verify_corollary_cs(0..=k_max, 1..=n_max64)),
        Identity::ClosedForm => verify_closed_form(&mut table, 0..=k_max, 1..=n_max),
        Identity::Oracle => verify_oracle(0..=k_max, 1..=n_max64, DEFAULT_ENUMERATION_LIMIT),
    }
}

/// Summary line followed by at most [`MAX_LISTED_VIOLATIONS`] violations.
pub fn format_report(report: &IdentityReport) -> String {
    let mut out = format!("{report}\n");
    for v in report.violations.iter().take(MAX_LISTED_VIOLATIONS) {
        let _ = writeln!(out, "  {v}");
    }
    let hidden = report.violations.len().saturating_sub(MAX_LISTED_VIOLATIONS);
    if hidden > 0 {
        let _ = writeln!(out, "  ... {hidden} more");
    }
    out
}

/// Report text and whether every check passed.
pub fn cmd_verify(which: Identity, k_max: Order, n_max: usize, cell_limit: usize) -> Result<(String, bool)> {
    let report = run_verify(which, k_max, n_max, cell_limit)?;
    Ok((format_report(&report), report.passed()))
}
