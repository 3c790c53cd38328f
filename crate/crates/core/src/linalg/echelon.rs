//! Row reduction.
//!
//! Forward elimination runs fraction-free on primitive integer rows; the
//! back-substitution pass stays integral too, and only the final
//! normalization (pivot entry 1) produces rationals. Pivots are always the
//! smallest nonzero index, so the reduced echelon form of a subspace is
//! unique and subspace equality is a row-by-row comparison.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Ambient, ModuleVector, Rational};
use crate::error::Result;

pub(crate) type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and divides out the content.
pub(crate) fn int_row<'a>(terms: impl IntoIterator<Item = (usize, &'a Rational)>) -> IntRow {
    let terms: Vec<(usize, &Rational)> = terms.into_iter().collect();
    let lcm = terms
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row: IntRow = terms
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.numer() * (&lcm / c.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut IntRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let mut g = row
        .iter()
        .fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `ca * a - cb * b`, dropping cancelled entries.
fn combine(a: &IntRow, ca: &BigInt, b: &IntRow, cb: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map_or(usize::MAX, |e| e.0);
        let jb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ia < jb {
            out.push((ia, &a[i].1 * ca));
            i += 1;
        } else if jb < ia {
            out.push((jb, -(&b[j].1 * cb)));
            j += 1;
        } else {
            let x = &a[i].1 * ca - &b[j].1 * cb;
            if !x.is_zero() {
                out.push((ia, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Cancels `row`'s entry at `col` using `pivot`, whose leading entry sits at `col`.
fn eliminate(row: &IntRow, row_entry: &BigInt, pivot: &IntRow) -> IntRow {
    let pivot_entry = &pivot[0].1;
    let g = row_entry.gcd(pivot_entry);
    let mut out = combine(row, &(pivot_entry / &g), pivot, &(row_entry / &g));
    make_primitive(&mut out);
    out
}

/// Incremental echelon form keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub(crate) struct EchelonBuilder {
    rows: BTreeMap<usize, IntRow>,
}

impl EchelonBuilder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Returns `true` when the row was independent of those already inserted.
    pub(crate) fn insert(&mut self, mut row: IntRow) -> bool {
        make_primitive(&mut row);
        loop {
            let Some((lead, lead_entry)) = row.first() else {
                return false;
            };
            match self.rows.get(lead) {
                Some(pivot) => row = eliminate(&row, lead_entry, pivot),
                None => {
                    self.rows.insert(*lead, row);
                    return true;
                }
            }
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form, rows sorted by pivot, pivot entries 1.
    pub(crate) fn into_rref(self) -> Vec<(usize, BTreeMap<usize, Rational>)> {
        let mut rows: Vec<(usize, IntRow)> = self.rows.into_iter().collect();
        for i in (0..rows.len()).rev() {
            let (done_lo, done_hi) = rows.split_at_mut(i + 1);
            let row = &mut done_lo[i].1;
            for (q, pivot) in done_hi.iter() {
                if let Ok(pos) = row.binary_search_by_key(q, |e| e.0) {
                    let entry = row[pos].1.clone();
                    *row = eliminate(row, &entry, pivot);
                }
            }
        }
        rows.into_iter()
            .map(|(p, row)| {
                let lead = row[0].1.clone();
                let normalized = row
                    .into_iter()
                    .map(|(i, x)| (i, Rational::new(x, lead.clone())))
                    .collect();
                (p, normalized)
            })
            .collect()
    }
}

/// A subspace stored as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: Ambient,
    rows: Vec<ModuleVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: Ambient) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn from_builder(ambient: Ambient, builder: EchelonBuilder) -> Self {
        let mut rows = Vec::with_capacity(builder.rank());
        let mut pivots = Vec::with_capacity(builder.rank());
        for (p, entries) in builder.into_rref() {
            pivots.push(p);
            rows.push(ModuleVector::from_terms(ambient.clone(), entries));
        }
        Self {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient.dim() - self.dim()
    }

    pub fn rows(&self) -> &[ModuleVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot.
    pub fn reduce(&self, v: &ModuleVector) -> Result<ModuleVector> {
        v.check_ambient(&self.ambient)?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out.coeff(p);
            if !c.is_zero() {
                out.add_scaled(row, &-c);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for r in &other.rows {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The sum `self + other`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        let all: Vec<ModuleVector> = self.rows.iter().chain(&other.rows).cloned().collect();
        echelonize(&self.ambient, &all)
    }
}

/// Reduced echelon basis of the span of `vectors`.
pub fn echelonize(ambient: &Ambient, vectors: &[ModuleVector]) -> Result<Subspace> {
    let mut builder = EchelonBuilder::new();
    for v in vectors {
        v.check_ambient(ambient)?;
        builder.insert(int_row(v.iter()));
    }
    Ok(Subspace::from_builder(ambient.clone(), builder))
}

pub fn member(space: &Subspace, v: &ModuleVector) -> Result<bool> {
    space.contains(v)
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(crate::Error::AmbientMismatch {
            expected: a.ambient.clone(),
            found: b.ambient.clone(),
        });
    }
    Ok(a.pivots == b.pivots && a.rows == b.rows)
}

/// Expresses targets as combinations of a fixed generator list.
///
/// Generators are echelonized together with tracking coordinates (one per
/// generator, placed after the ambient coordinates), so every reduction step
/// records which generator combination produced it.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ambient: Ambient,
    num_generators: usize,
    rows: Vec<(usize, BTreeMap<usize, Rational>)>,
}

impl SpanSolver {
    pub fn new(ambient: &Ambient, generators: &[ModuleVector]) -> Result<Self> {
        let dim = ambient.dim();
        let one = Rational::one();
        let mut builder = EchelonBuilder::new();
        for (j, g) in generators.iter().enumerate() {
            g.check_ambient(ambient)?;
            let row = int_row(g.iter().chain(std::iter::once((dim + j, &one))));
            builder.insert(row);
        }
        let rows = builder
            .into_rref()
            .into_iter()
            .filter(|(p, _)| *p < dim)
            .collect();
        Ok(Self {
            ambient: ambient.clone(),
            num_generators: generators.len(),
            rows,
        })
    }

    /// Rank of the generator list.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coefficients `x` with `Σ x_j g_j = target`, or `None` when the target
    /// is outside the span.
    pub fn solve(&self, target: &ModuleVector) -> Result<Option<Vec<Rational>>> {
        target.check_ambient(&self.ambient)?;
        let dim = self.ambient.dim();
        let mut residual: BTreeMap<usize, Rational> = target.entries().clone();
        for (p, row) in &self.rows {
            let Some(c) = residual.get(p).cloned() else {
                continue;
            };
            for (i, x) in row {
                let e = residual.entry(*i).or_insert_with(Rational::zero);
                *e -= x * &c;
                if e.is_zero() {
                    residual.remove(i);
                }
            }
        }
        if residual.keys().any(|&i| i < dim) {
            return Ok(None);
        }
        let mut coeffs = vec![Rational::zero(); self.num_generators];
        for (i, x) in residual {
            coeffs[i - dim] = -x;
        }
        Ok(Some(coeffs))
    }
}

pub fn solve_in_span(
    generators: &[ModuleVector],
    target: &ModuleVector,
) -> Result<Option<Vec<Rational>>> {
    SpanSolver::new(target.ambient(), generators)?.solve(target)
}
