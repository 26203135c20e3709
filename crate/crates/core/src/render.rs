//! Text renderings of the `a` and `s` tables and OEIS b-file rows.
//!
//! Grids are laid out as in the printed tables: a header row of `n` values,
//! then one line per `k` starting with `k`. Numbers are plain decimal.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Result;
use crate::schreier::s_table;
use crate::seq::table_with_limit;
use crate::{Natural, Order};

/// Top-left header cell.
pub const CORNER: &str = "k\\n";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Iterated partial sums `a_k(n)`.
    A,
    /// Schreier counts `s_k(n)`.
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {what} {value:?}")]
pub struct ParseChoiceError {
    what: &'static str,
    value: String,
}

impl FromStr for Family {
    type Err = ParseChoiceError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "a" => Ok(Family::A),
            "s" => Ok(Family::S),
            _ => Err(ParseChoiceError {
                what: "family",
                value: s.into(),
            }),
        }
    }
}

impl FromStr for Format {
    type Err = ParseChoiceError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(ParseChoiceError {
                what: "format",
                value: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub family: Family,
    pub k_max: Order,
    pub n_max: usize,
    pub format: Format,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            family: Family::A,
            k_max: 5,
            n_max: 12,
            format: Format::Tsv,
        }
    }
}

/// Computes the `(k_max + 1) x n_max` grid for a family, subject to the
/// cell limit.
pub fn compute_grid(
    family: Family,
    k_max: Order,
    n_max: usize,
    cell_limit: usize,
) -> Result<Vec<Vec<Natural>>> {
    match family {
        Family::A => {
            let t = table_with_limit(k_max, n_max, cell_limit)?;
            Ok(t.grid(k_max, n_max).expect("table covers the requested grid"))
        }
        Family::S => {
            let requested = (k_max as u128 + 1) * n_max as u128;
            if requested > cell_limit as u128 {
                return Err(crate::Error::TableTooLarge {
                    requested,
                    limit: cell_limit,
                });
            }
            Ok(s_table(k_max, n_max as u64))
        }
    }
}

pub fn render_table(spec: &RenderSpec, cell_limit: usize) -> Result<String> {
    let grid = compute_grid(spec.family, spec.k_max, spec.n_max, cell_limit)?;
    Ok(render_grid(&grid, spec.format))
}

/// Renders rows `k = 0, 1, ...` with columns `n = 1, 2, ...`.
pub fn render_grid(grid: &[Vec<Natural>], format: Format) -> String {
    let n_max = grid.first().map_or(0, Vec::len);
    let header = std::iter::once(CORNER.to_string()).chain((1..=n_max).map(|n| n.to_string()));
    let lines = std::iter::once(header.collect::<Vec<_>>()).chain(grid.iter().enumerate().map(|(k, row)| {
        std::iter::once(k.to_string())
            .chain(row.iter().map(Natural::to_string))
            .collect()
    }));

    let mut out = String::new();
    for (i, cells) in lines.enumerate() {
        match format {
            Format::Tsv => out.push_str(&cells.join("\t")),
            Format::Csv => out.push_str(&cells.join(",")),
            Format::Markdown => {
                let _ = write!(out, "| {} |", cells.join(" | "));
                if i == 0 {
                    out.push_str("\n|---|");
                    out.push_str(&"---:|".repeat(n_max));
                }
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct GridParseError {
    pub line: usize,
    pub message: String,
}

/// Inverse of [`render_grid`].
pub fn parse_grid(text: &str, format: Format) -> std::result::Result<Vec<Vec<Natural>>, GridParseError> {
    let err = |line: usize, message: String| GridParseError { line, message };
    let split = |line: &str| -> Vec<String> {
        match format {
            Format::Tsv => line.split('\t').map(str::to_string).collect(),
            Format::Csv => line.split(',').map(str::to_string).collect(),
            Format::Markdown => line
                .trim()
                .trim_start_matches('|')
                .trim_end_matches('|')
                .split('|')
                .map(|c| c.trim().to_string())
                .collect(),
        }
    };

    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let header = split(header);
    if header.first().map(String::as_str) != Some(CORNER) {
        return Err(err(1, format!("expected {CORNER:?} in the corner")));
    }
    let n_max = header.len() - 1;
    for (j, h) in header.iter().enumerate().skip(1) {
        if h.parse::<usize>() != Ok(j) {
            return Err(err(1, format!("expected column header {j}, found {h:?}")));
        }
    }
    if format == Format::Markdown {
        lines.next();
    }

    let mut grid = Vec::new();
    for (i, line) in lines {
        let cells = split(line);
        if cells.len() != n_max + 1 {
            return Err(err(
                i + 1,
                format!("expected {} cells, found {}", n_max + 1, cells.len()),
            ));
        }
        if cells[0].parse::<usize>() != Ok(grid.len()) {
            return Err(err(i + 1, format!("expected row label {}", grid.len())));
        }
        let row = cells[1..]
            .iter()
            .map(|c| {
                c.parse::<Natural>()
                    .map_err(|e| err(i + 1, format!("{c:?}: {e}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        grid.push(row);
    }
    Ok(grid)
}

/// One line of an OEIS b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileRow {
    pub index: u64,
    pub value: Natural,
}

impl std::fmt::Display for BFileRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.index, self.value)
    }
}

/// Row `k` of a family as b-file lines `n value` for `n = 1..=n_max`.
pub fn bfile_rows(family: Family, k: Order, n_max: usize, cell_limit: usize) -> Result<Vec<BFileRow>> {
    let row = match family {
        Family::A => {
            let t = table_with_limit(k, n_max, cell_limit)?;
            t.row(k).map(|r| r[..n_max].to_vec()).unwrap_or_default()
        }
        Family::S => {
            if n_max > cell_limit {
                return Err(crate::Error::TableTooLarge {
                    requested: n_max as u128,
                    limit: cell_limit,
                });
            }
            (1..=n_max as u64)
                .map(|n| crate::schreier::s_formula(crate::schreier::SchreierQuery::new(n, k)))
                .collect()
        }
    };
    Ok(row
        .into_iter()
        .zip(1..)
        .map(|(value, index)| BFileRow { index, value })
        .collect())
}

pub fn render_bfile(rows: &[BFileRow]) -> String {
    rows.iter().fold(String::new(), |mut out, r| {
        let _ = writeln!(out, "{r}");
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::DEFAULT_CELL_LIMIT;
    use proptest::prelude::*;

    fn nats(vs: &[u64]) -> Vec<Natural> {
        vs.iter().copied().map(Natural::from).collect()
    }

    #[test]
    fn single_cell_csv() {
        let spec = RenderSpec {
            k_max: 0,
            n_max: 1,
            format: Format::Csv,
            ..Default::default()
        };
        assert_eq!(render_table(&spec, DEFAULT_CELL_LIMIT).unwrap(), "k\\n,1\n0,1\n");
    }

    #[test]
    fn markdown_layout() {
        let md = render_grid(&[nats(&[1, 1]), nats(&[1, 2])], Format::Markdown);
        assert_eq!(
            md,
            "| k\\n | 1 | 2 |\n|---|---:|---:|\n| 0 | 1 | 1 |\n| 1 | 1 | 2 |\n"
        );
        assert_eq!(
            parse_grid(&md, Format::Markdown).unwrap(),
            vec![nats(&[1, 1]), nats(&[1, 2])]
        );
    }

    #[test]
    fn bfile_examples() {
        let rows = bfile_rows(Family::A, 1, 4, DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(render_bfile(&rows), "1 1\n2 2\n3 4\n4 7\n");
        let rows = bfile_rows(Family::S, 5, 9, DEFAULT_CELL_LIMIT).unwrap();
        assert!(render_bfile(&rows).ends_with("\n9 1\n"));
        let rows = bfile_rows(Family::A, 0, 1, DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(render_bfile(&rows), "1 1\n");
    }

    #[test]
    fn guard_applies_to_both_families() {
        assert!(compute_grid(Family::A, 9, 10, 99).is_err());
        assert!(compute_grid(Family::S, 9, 10, 99).is_err());
        assert!(bfile_rows(Family::S, 0, 100, 99).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_grid("", Format::Tsv).is_err());
        assert!(parse_grid("k\\n\t1\n0\tx\n", Format::Tsv).is_err());
        assert!(parse_grid("k\\n\t1\n0\t1\t2\n", Format::Tsv).is_err());
        assert!(parse_grid("k\\n\t2\n", Format::Tsv).is_err());
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(
            family in prop_oneof![Just(Family::A), Just(Family::S)],
            format in prop_oneof![Just(Format::Tsv), Just(Format::Csv), Just(Format::Markdown)],
            k_max in 0usize..12,
            n_max in 1usize..40,
        ) {
            let grid = compute_grid(family, k_max, n_max, DEFAULT_CELL_LIMIT).unwrap();
            let text = render_grid(&grid, format);
            prop_assert_eq!(parse_grid(&text, format).unwrap(), grid);
        }
    }
}
