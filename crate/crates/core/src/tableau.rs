//! The counting board: an augmented `n x m` array of ring elements.
//!
//! Rows are equations and the last column holds the right-hand side when the
//! tableau is a square system. A [`Tableau`] is a value: elimination steps
//! always build a successor and never touch their input.
//!
//! # File format
//!
//! ```text
//! # optional comments and blank lines
//! 3 4
//! 3 2 1 39
//! 2 3 1 34
//! 1 2 3 26
//! ```
//!
//! The first significant line holds `n m`; the next `n` significant lines hold
//! `m` signed decimal integers each.

use std::fmt::Display;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::{Integer, MultiPoly, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    step: usize,
    rhs_cols: usize,
}

/// Output flavours for [`Tableau::render`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    /// Right-aligned decimal grid, one row per line.
    Board,
    Json,
}

impl<T: Ring> Tableau<T> {
    /// Builds a step-1 tableau from rows. The right-hand-side column count is
    /// 1 when `m == n + 1` and 0 otherwise.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("tableau has no rows".into()));
        }
        let m = rows[0].len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {m}",
                i + 1,
                r.len()
            )));
        }
        if m < n {
            return Err(Error::DimensionMismatch(format!(
                "{n} rows need at least {n} columns, found {m}"
            )));
        }
        Ok(Tableau {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
            step: 1,
            rhs_cols: usize::from(m == n + 1),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Index `k` of this tableau in the sequence `T(1), T(2), ...`.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn rhs_cols(&self) -> usize {
        self.rhs_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.iter_rows().map(<[T]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Same shape and step, entries mapped into another ring.
    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Tableau<U> {
        Tableau {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            step: self.step,
            rhs_cols: self.rhs_cols,
        }
    }

    /// The next tableau in the sequence, with the given row-major entries.
    pub(crate) fn successor(&self, entries: Vec<T>) -> Tableau<T> {
        debug_assert_eq!(entries.len(), self.entries.len());
        Tableau {
            rows: self.rows,
            cols: self.cols,
            entries,
            step: self.step + 1,
            rhs_cols: self.rhs_cols,
        }
    }

    /// Zero below the diagonal.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// Zero off the diagonal of the leading `n x n` block.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.rows).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn max_size_bits(&self) -> u64 {
        self.entries.iter().map(Ring::size_bits).max().unwrap_or(0)
    }

    pub fn render_strings(&self) -> Vec<Vec<String>> {
        self.iter_rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Board => render_board(&self.render_strings()),
            RenderFormat::Json => json!({
                "step": self.step,
                "rows": self.rows,
                "cols": self.cols,
                "rhs_cols": self.rhs_cols,
                "tableau": self.render_strings(),
            })
            .to_string(),
        }
    }
}

impl Tableau<Integer> {
    /// The file-format text (`n m` header plus board) accepted by
    /// [`parse_tableau`].
    pub fn to_file_string(&self) -> String {
        format!(
            "{} {}\n{}\n",
            self.rows,
            self.cols,
            self.render(RenderFormat::Board)
        )
    }
}

/// Right-aligns each column to its widest entry.
pub fn render_board<S: AsRef<str>>(grid: &[Vec<S>]) -> String {
    let cols = grid.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| grid.iter().map(|r| r[j].as_ref().len()).max().unwrap_or(0))
        .collect();
    grid.iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{:>w$}", s.as_ref()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses the tableau file format into a step-1 integer tableau.
pub fn parse_tableau(text: &str) -> Result<Tableau<Integer>> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `n m` header".into(),
    })?;
    let dims = tokens(header)
        .map(|(col, tok)| parse_dim(tok, header_line, col))
        .collect::<Result<Vec<_>>>()?;
    let [n, m] = dims[..] else {
        return Err(Error::Parse {
            line: header_line,
            column: 1,
            message: format!("header must be `n m`, found {} fields", dims.len()),
        });
    };
    if m < n {
        return Err(Error::Parse {
            line: header_line,
            column: 1,
            message: format!("{n} rows need at least {n} columns, header says {m}"),
        });
    }

    let mut rows = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line_no, line) in lines.by_ref().take(n) {
        last_line = line_no;
        let mut row = Vec::with_capacity(m);
        for (col, tok) in tokens(line) {
            if row.len() == m {
                return Err(Error::Parse {
                    line: line_no,
                    column: col,
                    message: format!("row {} has more than {m} entries", rows.len() + 1),
                });
            }
            let value = tok.parse::<Integer>().map_err(|_| Error::Parse {
                line: line_no,
                column: col,
                message: format!("`{tok}` is not an integer"),
            })?;
            row.push(value);
        }
        if row.len() < m {
            return Err(Error::Parse {
                line: line_no,
                column: line.trim_end().len() + 1,
                message: format!("row {} has {} of {m} entries", rows.len() + 1, row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() < n {
        return Err(Error::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            column: 1,
            message: format!("unexpected content after {n} rows"),
        });
    }
    Tableau::from_rows(rows)
}

/// Whitespace-separated tokens with their one-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let tok = &tail[..len];
        let col = offset + start + 1;
        offset += start + len;
        rest = &tail[len..];
        Some((col, tok))
    })
}

fn parse_dim(tok: &str, line: usize, column: usize) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(v) if v > 0 && tok.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
        _ => Err(Error::Parse {
            line,
            column,
            message: format!("`{tok}` is not a positive dimension"),
        }),
    }
}

/// Builds the augmented `n x (n+1)` tableau `[A | b]`.
pub fn from_system<T: Ring>(coeffs: &[Vec<T>], rhs: &[T]) -> Result<Tableau<T>> {
    let n = coeffs.len();
    if rhs.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n} equations but {} right-hand sides",
            rhs.len()
        )));
    }
    if let Some((i, r)) = coeffs.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "coefficient row {} has {} entries, expected {n}",
            i + 1,
            r.len()
        )));
    }
    let rows = coeffs
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().chain(std::iter::once(b)).cloned().collect())
        .collect();
    Tableau::from_rows(rows)
}

/// Largest bit length of any entry's magnitude.
pub fn max_bit_length(t: &Tableau<Integer>) -> u64 {
    t.entries().iter().map(Integer::bits).max().unwrap_or(0)
}

/// The symbolic tableau whose entry `(i, j)` is the indeterminate `v[i,j]`.
pub fn generic_tableau(n: usize, m: usize) -> Result<Tableau<MultiPoly>> {
    if n == 0 || m < n {
        return Err(Error::DimensionMismatch(format!(
            "generic tableau needs 1 <= n <= m, got {n} x {m}"
        )));
    }
    Tableau::from_rows(
        (0..n)
            .map(|i| (0..m).map(|j| MultiPoly::var(i, j)).collect())
            .collect(),
    )
}

/// Convenience constructor for integer tableaux from small literals.
pub fn int_tableau<R: AsRef<[i64]>>(rows: &[R]) -> Result<Tableau<Integer>> {
    Tableau::from_rows(
        rows.iter()
            .map(|r| r.as_ref().iter().map(|&v| Integer::from(v)).collect())
            .collect(),
    )
}

impl<T: Ring + Display> std::fmt::Display for Tableau<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(RenderFormat::Board))
    }
}
