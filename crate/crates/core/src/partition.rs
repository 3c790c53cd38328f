//! Partitions, standard Young tableaux and the counting functions that
//! cross-check module dimensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    /// Shape with the given column lengths (which must be weakly decreasing).
    pub fn from_column_lengths(columns: &[usize]) -> Result<Self> {
        Partition::new(columns.to_vec()).map(|p| p.conjugate())
    }

    /// The two-column shape `2^m 1^(n-m)`: first column `n`, second `m`.
    pub fn two_column(n: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Partition::new(vec![1; n]);
        }
        Self::from_column_lengths(&[n, m])
    }

    /// The shape `2^i 1^(total-2i)`.
    pub fn two_column_by_pairs(i: usize, total: usize) -> Result<Self> {
        let mut parts = vec![2; i];
        parts.extend(std::iter::repeat_n(1, total.saturating_sub(2 * i)));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_columns(&self) -> usize {
        self.0[0]
    }

    pub fn conjugate(&self) -> Partition {
        Partition(
            (1..=self.0[0])
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Column lengths, i.e. the parts of the conjugate.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().0
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let cols = self.column_lengths();
        let mut hooks = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                hooks.push((len - c - 1) + (cols[c] - r - 1) + 1);
            }
        }
        hooks
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"2,2,1"`, with or without surrounding brackets.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

pub fn conjugate(shape: &Partition) -> Partition {
    shape.conjugate()
}

/// A standard Young tableau: rows and columns strictly increasing, each of
/// `1..=m` used once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let m = shape.size();
        let mut seen = vec![false; m + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > m || seen[e] {
                return Err(Error::InvalidFilling(format!(
                    "entry {e} repeated or outside 1..={m}"
                )));
            }
            seen[e] = true;
        }
        let t = Self { shape, rows };
        if !t.is_standard() {
            return Err(Error::InvalidFilling(format!("{:?} is not standard", t.rows)));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.num_columns())
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect()
    }

    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.concat()
    }
}

/// All standard tableaux of `shape`, ordered lexicographically by row
/// reading word.
pub fn syt_enumerate(shape: &Partition) -> Vec<StandardTableau> {
    fn place(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > shape.iter().sum::<usize>() {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let addable = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if addable {
                rows[r].push(next);
                place(shape, rows, next + 1, out);
                rows[r].pop();
            }
        }
    }

    let mut raw = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    place(shape.parts(), &mut rows, 1, &mut raw);
    let mut tableaux: Vec<StandardTableau> = raw
        .into_iter()
        .map(|rows| StandardTableau {
            shape: shape.clone(),
            rows,
        })
        .collect();
    tableaux.sort_by_key(StandardTableau::row_reading_word);
    tableaux
}

/// Number of standard tableaux, by the hook-length formula.
pub fn syt_count(shape: &Partition) -> u128 {
    let hooks: u128 = shape.hook_lengths().iter().map(|&h| h as u128).product();
    factorial(shape.size()) / hooks
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of fillings of `m` distinct labels into blocks of the given sizes.
pub fn multinomial(blocks: &[usize]) -> u128 {
    let mut total = 0;
    let mut acc = 1u128;
    for &b in blocks {
        total += b;
        acc *= binomial(total, b);
    }
    acc
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Irreducible constituents `2^i 1^(n+m-2i)`, `i = 0..=m`, of the two-column
/// column-tabloid module with column lengths `n >= m`, each with its dimension.
pub fn isotypic_table(n: usize, m: usize) -> Result<Vec<(Partition, u128)>> {
    if m < 1 || m > n {
        return Err(Error::OutOfRange {
            what: "m",
            value: m,
            lo: 1,
            hi: n,
        });
    }
    (0..=m)
        .map(|i| {
            let shape = Partition::two_column_by_pairs(i, n + m)?;
            let dim = syt_count(&shape);
            Ok((shape, dim))
        })
        .collect()
}
