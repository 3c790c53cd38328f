//! Dual Garnir relations between adjacent columns, the single-relation
//! operators `η` / `h_c`, the three relation subspaces, and straightening into
//! the standard basis of the quotient.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::linalg::{echelonize, Ambient, LinearOperator, ModuleVector, Rational, SpanSolver, Subspace};
use crate::partition::{syt_enumerate, Partition, StandardTableau};
use crate::tabloid::{basis, canonicalize_column, ColumnTabloid, Filling};

/// Which generating set of relations to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationFamily {
    /// All `g_{c,k}(t)` for every filling `t`, column `c` and `k`.
    #[serde(rename = "full")]
    FullGarnir,
    /// Only the `k = 1` relations.
    #[serde(rename = "g1")]
    GC1Only,
    /// One `h_c([t])` per ordered tabloid and adjacent column pair.
    #[serde(rename = "eta")]
    Eta,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 3] = [
        RelationFamily::FullGarnir,
        RelationFamily::GC1Only,
        RelationFamily::Eta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationFamily::FullGarnir => "full",
            RelationFamily::GC1Only => "g1",
            RelationFamily::Eta => "eta",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" | "full-garnir" => Ok(RelationFamily::FullGarnir),
            "g1" | "gc1" => Ok(RelationFamily::GC1Only),
            "eta" => Ok(RelationFamily::Eta),
            _ => Err(Error::Parse(format!("unknown relation family {s:?} (expected full, g1 or eta)"))),
        }
    }
}

fn check_column_pair(shape: &Partition, c: usize) -> Result<()> {
    if c == 0 || c >= shape.num_columns() {
        return Err(Error::OutOfRange {
            what: "c",
            value: c,
            lo: 1,
            hi: shape.num_columns() - 1,
        });
    }
    Ok(())
}

fn add_canonical(out: &mut ModuleVector, columns: Vec<Vec<usize>>, shape: &Partition, coeff: i64) {
    let f = Filling::with_shape(shape, columns).expect("exchange preserves the shape");
    let s = canonicalize_column(&f);
    out.add_term(s.tabloid.index(), Rational::from_integer((coeff * s.sign as i64).into()));
}

/// Sum over every `k`-subset `A` of column `c` of the tabloid obtained by
/// exchanging `A` with the top `k` entries of column `c + 1`.
///
/// Moved blocks keep their internal top-to-bottom order in the cells they
/// land in. Columns are 1-based.
pub fn pi_ck(t: &Filling, c: usize, k: usize) -> Result<ModuleVector> {
    let shape = t.shape();
    check_column_pair(shape, c)?;
    let cols = t.columns();
    check_range("k", k, 1, cols[c].len())?;
    let left = &cols[c - 1];
    let top = &cols[c][..k];
    let mut out = ModuleVector::zero(Ambient::Column(shape.clone()));
    for positions in (0..left.len()).combinations(k) {
        let mut new_cols = cols.to_vec();
        for (slot, &p) in positions.iter().enumerate() {
            new_cols[c - 1][p] = top[slot];
            new_cols[c][slot] = left[p];
        }
        add_canonical(&mut out, new_cols, shape, 1);
    }
    Ok(out)
}

/// The dual Garnir relation `[t] - π_{c,k}(t)`.
pub fn g_ck(t: &Filling, c: usize, k: usize) -> Result<ModuleVector> {
    let pi = pi_ck(t, c, k)?;
    Ok(&canonicalize_column(t).to_vector() - &pi)
}

fn pi_c1_ell_filling(t: &Filling, c: usize, ell: usize) -> Result<ModuleVector> {
    let shape = t.shape();
    check_column_pair(shape, c)?;
    let cols = t.columns();
    check_range("ell", ell, 1, cols[c].len())?;
    let mut out = ModuleVector::zero(Ambient::Column(shape.clone()));
    for p in 0..cols[c - 1].len() {
        let mut new_cols = cols.to_vec();
        new_cols[c - 1][p] = cols[c][ell - 1];
        new_cols[c][ell - 1] = cols[c - 1][p];
        add_canonical(&mut out, new_cols, shape, 1);
    }
    Ok(out)
}

/// Sum of the single swaps of the `ell`-th entry of column `c + 1` with each
/// entry of column `c`.
pub fn pi_c1_ell(t: &ColumnTabloid, c: usize, ell: usize) -> Result<ModuleVector> {
    pi_c1_ell_filling(&t.to_filling(), c, ell)
}

pub fn g_c1_ell(t: &ColumnTabloid, c: usize, ell: usize) -> Result<ModuleVector> {
    Ok(&t.to_vector() - &pi_c1_ell(t, c, ell)?)
}

/// `h_c` on a single ordered tabloid.
pub fn h_c_tabloid(t: &ColumnTabloid, c: usize) -> Result<ModuleVector> {
    check_column_pair(&t.shape, c)?;
    let height = t.columns[c].len();
    let mut out = t.to_vector().scaled(&Rational::from_integer(height.into()));
    for ell in 1..=height {
        out = &out - &pi_c1_ell(t, c, ell)?;
    }
    Ok(out)
}

/// `h_c(v) = λ'_{c+1}·v − Σ_ℓ π^ℓ_{c,1}(v)`, extended linearly.
pub fn h_c(v: &ModuleVector, c: usize) -> Result<ModuleVector> {
    let Ambient::Column(shape) = v.ambient() else {
        return Err(Error::AmbientMismatch {
            expected: Ambient::Column(Partition::new(vec![1]).unwrap()),
            found: v.ambient().clone(),
        });
    };
    check_column_pair(shape, c)?;
    let mut out = ModuleVector::zero(v.ambient().clone());
    for (i, x) in v.iter() {
        out.add_scaled(&h_c_tabloid(&ColumnTabloid::from_index(shape, i), c)?, x);
    }
    Ok(out)
}

fn require_two_columns(ambient: &Ambient) -> Result<&Partition> {
    match ambient {
        Ambient::Column(shape) if shape.num_columns() == 2 => Ok(shape),
        Ambient::Column(shape) => Err(Error::NotTwoColumn(shape.clone())),
        other => Err(Error::AmbientMismatch {
            expected: Ambient::Column(Partition::two_column(1, 1).unwrap()),
            found: other.clone(),
        }),
    }
}

/// `η` on a two-column shape: `m[t] − Σ_{j ≤ m} π^j_{1,1}([t])`.
pub fn eta(v: &ModuleVector) -> Result<ModuleVector> {
    require_two_columns(v.ambient())?;
    h_c(v, 1)
}

pub fn h_operator(shape: &Partition, c: usize) -> Result<LinearOperator> {
    check_column_pair(shape, c)?;
    let ambient = Ambient::Column(shape.clone());
    LinearOperator::from_basis_images(ambient.clone(), ambient, |i| {
        h_c_tabloid(&ColumnTabloid::from_index(shape, i), c)
    })
}

pub fn eta_operator(shape: &Partition) -> Result<LinearOperator> {
    require_two_columns(&Ambient::Column(shape.clone()))?;
    h_operator(shape, 1)
}

/// Closed form of the coefficient of `v_T` in `η(v_S)` on `2^m 1^(n-m)`, where
/// `S` and `T` are the first columns: `m` on the diagonal, `(−1)^(x+y)` when
/// `S∖T = {x}` and `T∖S = {y}`, and `0` otherwise.
pub fn eta_entry_formula(m: usize, s: &[usize], t: &[usize]) -> i64 {
    let only_s: Vec<usize> = s.iter().copied().filter(|a| !t.contains(a)).collect();
    let only_t: Vec<usize> = t.iter().copied().filter(|a| !s.contains(a)).collect();
    match (only_s.as_slice(), only_t.as_slice()) {
        ([], []) => m as i64,
        ([x], [y]) => if (x + y) % 2 == 0 { 1 } else { -1 },
        _ => 0,
    }
}

/// Every `(S, T)` whose `η` entry differs from [`eta_entry_formula`], as
/// `(column index of S, row index of T, computed, formula)`.
pub fn eta_formula_mismatches(n: usize, m: usize) -> Result<Vec<(usize, usize, Rational, i64)>> {
    let shape = Partition::two_column(n, m)?;
    let op = eta_operator(&shape)?;
    let b = basis(&Ambient::Column(shape.clone()));
    let dim = b.len();
    let mut out = Vec::new();
    for col in 0..dim {
        let s = &b.word(col)[..n];
        for row in 0..dim {
            let want = eta_entry_formula(m, s, &b.word(row)[..n]);
            let got = op.entry(row, col);
            if got != Rational::from_integer(want.into()) {
                out.push((col, row, got, want));
            }
        }
    }
    Ok(out)
}

/// `t` with column `c` (1-based) rearranged so `top` comes first, the rest
/// following in increasing order.
fn with_top_block(t: &ColumnTabloid, c: usize, top: &[usize]) -> Filling {
    let mut f = t.to_filling();
    let col = &mut f.columns_mut()[c - 1];
    let rest: Vec<usize> = col.iter().copied().filter(|x| !top.contains(x)).collect();
    *col = top.iter().copied().chain(rest).collect();
    f
}

fn generators_for(t: &ColumnTabloid, family: RelationFamily) -> Result<Vec<ModuleVector>> {
    let mut out = Vec::new();
    for c in 1..t.shape.num_columns() {
        let next = &t.columns[c];
        match family {
            RelationFamily::FullGarnir => {
                // g_{c,k}(t) only depends (up to sign) on which k-subset of
                // column c+1 sits on top.
                for k in 1..=next.len() {
                    for top in next.iter().copied().combinations(k) {
                        out.push(g_ck(&with_top_block(t, c + 1, &top), c, k)?);
                    }
                }
            }
            RelationFamily::GC1Only => {
                for ell in 1..=next.len() {
                    out.push(g_c1_ell(t, c, ell)?);
                }
            }
            RelationFamily::Eta => out.push(h_c_tabloid(t, c)?),
        }
    }
    Ok(out)
}

/// Generators of a relation family, built in parallel over ordered tabloids
/// and returned in basis order.
pub fn relation_generators(shape: &Partition, family: RelationFamily) -> Result<Vec<ModuleVector>> {
    let n = basis(&Ambient::Column(shape.clone())).len();
    let per_tabloid = (0..n)
        .into_par_iter()
        .map(|i| generators_for(&ColumnTabloid::from_index(shape, i), family))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_tabloid.into_iter().flatten().collect())
}

/// Every `g_{c,k}(t)` over all `m!` fillings `t`. Exponential; meant for
/// cross-checking [`relation_space`] on small shapes.
pub fn full_garnir_generators_literal(shape: &Partition) -> Result<Vec<ModuleVector>> {
    let m = shape.size();
    let lengths = shape.column_lengths();
    let mut out = Vec::new();
    for word in (1..=m).permutations(m) {
        let mut columns = Vec::with_capacity(lengths.len());
        let mut start = 0;
        for &len in &lengths {
            columns.push(word[start..start + len].to_vec());
            start += len;
        }
        let t = Filling::with_shape(shape, columns)?;
        for c in 1..shape.num_columns() {
            for k in 1..=lengths[c] {
                out.push(g_ck(&t, c, k)?);
            }
        }
    }
    Ok(out)
}

pub fn relation_space(shape: &Partition, family: RelationFamily) -> Result<Subspace> {
    echelonize(&Ambient::Column(shape.clone()), &relation_generators(shape, family)?)
}

/// The ordered tabloid whose columns are those of a standard tableau.
pub fn standard_tabloid(t: &StandardTableau) -> ColumnTabloid {
    ColumnTabloid {
        shape: t.shape.clone(),
        columns: t.columns(),
    }
}

/// Expansion of column-tabloid vectors in the standard basis of the quotient
/// by a relation subspace.
#[derive(Clone, Debug)]
pub struct Straightener {
    shape: Partition,
    family: RelationFamily,
    standard: Vec<StandardTableau>,
    relations: Subspace,
    solver: SpanSolver,
}

impl Straightener {
    pub fn new(shape: &Partition, family: RelationFamily) -> Result<Self> {
        let relations = relation_space(shape, family)?;
        Self::with_relations(shape, family, relations)
    }

    pub fn with_relations(shape: &Partition, family: RelationFamily, relations: Subspace) -> Result<Self> {
        let ambient = Ambient::Column(shape.clone());
        if relations.ambient() != &ambient {
            return Err(Error::AmbientMismatch {
                expected: ambient,
                found: relations.ambient().clone(),
            });
        }
        let standard = syt_enumerate(shape);
        let generators: Vec<ModuleVector> = standard
            .iter()
            .map(|t| standard_tabloid(t).to_vector())
            .chain(relations.rows().iter().cloned())
            .collect();
        let solver = SpanSolver::new(&ambient, &generators)?;
        if solver.rank() != ambient.dim() || generators.len() != ambient.dim() {
            return Err(Error::Verification(format!(
                "standard tabloids of {shape} do not complement the {family} relations \
                 (rank {} of {}, {} standard + {} relations)",
                solver.rank(),
                ambient.dim(),
                standard.len(),
                relations.dim()
            )));
        }
        Ok(Self {
            shape: shape.clone(),
            family,
            standard,
            relations,
            solver,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn family(&self) -> RelationFamily {
        self.family
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn standard_tableaux(&self) -> &[StandardTableau] {
        &self.standard
    }

    /// Coefficient of every standard tableau (zeros included), in enumeration order.
    pub fn coefficients(&self, v: &ModuleVector) -> Result<Vec<Rational>> {
        let mut x = self
            .solver
            .solve(v)?
            .ok_or_else(|| Error::Verification("vector outside the ambient span".into()))?;
        x.truncate(self.standard.len());
        Ok(x)
    }

    /// Nonzero terms of the standard expansion of `v`.
    pub fn straighten(&self, v: &ModuleVector) -> Result<Vec<(StandardTableau, Rational)>> {
        Ok(self
            .standard
            .iter()
            .cloned()
            .zip(self.coefficients(v)?)
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect())
    }

    /// `v − Σ c_i [t_i]` for the computed expansion; always lies in the
    /// relation space.
    pub fn defect(&self, v: &ModuleVector, expansion: &[(StandardTableau, Rational)]) -> ModuleVector {
        let mut d = v.clone();
        for (t, c) in expansion {
            d.add_scaled(&standard_tabloid(t).to_vector(), &-c.clone());
        }
        d
    }
}

pub fn straighten(v: &ModuleVector, family: RelationFamily) -> Result<Vec<(StandardTableau, Rational)>> {
    let Ambient::Column(shape) = v.ambient() else {
        return Err(Error::AmbientMismatch {
            expected: Ambient::Column(Partition::new(vec![1]).unwrap()),
            found: v.ambient().clone(),
        });
    };
    Straightener::new(shape, family)?.straighten(v)
}
