//! Eigenvalues of `η` on the two-column column-tabloid module and their
//! attribution to the irreducible constituents `2^i 1^(n+m-2i)`.
//!
//! The module is multiplicity-free, so `η` is a scalar on each constituent.
//! The scan finds those scalars exactly; the closed form `2(m - i)` is carried
//! along as `paper_scalar` for comparison only.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::garnir::{eta, eta_operator};
use crate::linalg::{nullity_shifted, Ambient, ModuleVector, Rational};
use crate::partition::{binomial, isotypic_table, Partition};
use crate::tabloid::{act, parity_sign, ColumnTabloid, Permutation};

fn top_tabloid(n: usize, m: usize) -> Result<ColumnTabloid> {
    Ok(ColumnTabloid {
        shape: Partition::two_column(n, m)?,
        columns: vec![(1..=n).collect(), (n + 1..=n + m).collect()],
    })
}

fn check_params(n: usize, m: usize, i: usize) -> Result<()> {
    crate::error::check_range("m", m, 1, n)?;
    crate::error::check_range("i", i, 0, m)
}

/// `r_t f_t v_T` for the tableau `t` of shape `2^i 1^(n+m-2i)` with rows
/// `(j, n+j)` for `j ≤ i` and first column `1..n, n+i+1..n+m`, where `v_T`
/// has first column `1..n`.
///
/// `f_t` is the signed column sum of `t`, taken over coset representatives:
/// one permutation of the first column of `t` per choice of which `n` of its
/// entries land in the first column of `v_T`. `r_t` runs over the products of
/// the row swaps `(j, n+j)`.
pub fn rtft_vector(n: usize, m: usize, i: usize) -> Result<ModuleVector> {
    check_params(n, m, i)?;
    let v_t = top_tabloid(n, m)?.to_vector();
    let size = n + m;
    let first_col: Vec<usize> = (1..=n).chain(n + i + 1..=n + m).collect();
    let len = first_col.len();

    let mut f_v = ModuleVector::zero(v_t.ambient().clone());
    for chosen in itertools::Itertools::combinations(0..len, n) {
        // σ sends 1..n onto the chosen entries and the rest onto the others, both in order
        let arranged: Vec<usize> = chosen
            .iter()
            .copied()
            .chain((0..len).filter(|p| !chosen.contains(p)))
            .map(|p| first_col[p])
            .collect();
        let mut images: Vec<usize> = (1..=size).collect();
        for (p, &from) in first_col.iter().enumerate() {
            images[from - 1] = arranged[p];
        }
        let positions: Vec<usize> = arranged
            .iter()
            .map(|x| first_col.iter().position(|y| y == x).unwrap())
            .collect();
        let sigma = Permutation::new(images)?;
        let sign = parity_sign(&positions) as i64;
        f_v.add_scaled(&act(&sigma, &v_t)?, &Rational::from_integer(sign.into()));
    }

    let mut out = ModuleVector::zero(v_t.ambient().clone());
    let one = Rational::from_integer(1.into());
    for mask in 0u64..(1 << i) {
        let mut rho = Permutation::identity(size);
        for j in 1..=i {
            if mask & (1 << (j - 1)) != 0 {
                rho = Permutation::transposition(size, j, n + j)?.compose(&rho);
            }
        }
        out.add_scaled(&act(&rho, &f_v)?, &one);
    }
    Ok(out)
}

/// `⟨η(r_t f_t v_T), v_T⟩ / ⟨r_t f_t v_T, v_T⟩`: the scalar by which `η` acts
/// on the constituent `2^i 1^(n+m-2i)`.
pub fn eta_scalar_on_component(n: usize, m: usize, i: usize) -> Result<i64> {
    let w = rtft_vector(n, m, i)?;
    let t = top_tabloid(n, m)?.index();
    let base = w.coeff(t);
    if num_traits::Zero::is_zero(&base) {
        return Err(Error::Verification(format!("r_t f_t v_T has no v_T term for (n,m,i)=({n},{m},{i})")));
    }
    let ratio = eta(&w)?.coeff(t) / base;
    if !ratio.is_integer() {
        return Err(Error::Verification(format!("non-integer scalar {ratio} for (n,m,i)=({n},{m},{i})")));
    }
    Ok(i64::try_from(ratio.to_integer()).expect("scalar fits in i64"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Attribution {
    /// The kernel line, which must be the `2^m 1^(n-m)` constituent.
    Kernel,
    /// Multiplicity matched exactly one remaining constituent dimension.
    Dimension,
    /// Several dimensions matched; resolved by which constituent's
    /// `r_t f_t v_T` lies in the eigenspace.
    Eigenvector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumLine {
    pub eigenvalue: i64,
    pub multiplicity: usize,
    pub shape: Partition,
    /// `2(m - i)` for the attributed constituent.
    pub paper_scalar: i64,
    /// `i` in `2^i 1^(n+m-2i)`.
    pub component: usize,
    /// Scalar read off from `η(r_t f_t v_T)` for this constituent.
    pub component_scalar: i64,
    pub attributed_by: Attribution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub m: usize,
    pub lines: Vec<SpectrumLine>,
}

impl SpectrumReport {
    pub fn dim(&self) -> usize {
        binomial(self.n + self.m, self.n) as usize
    }

    /// Every failed consistency check, as a readable message.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let total: usize = self.lines.iter().map(|l| l.multiplicity).sum();
        if total != self.dim() {
            out.push(format!("multiplicities sum to {total}, expected {}", self.dim()));
        }
        let trace: i64 = self.lines.iter().map(|l| l.eigenvalue * l.multiplicity as i64).sum();
        let want = (self.m * self.dim()) as i64;
        if trace != want {
            out.push(format!("Σ eigenvalue·multiplicity = {trace}, expected m·C(n+m,n) = {want}"));
        }
        let table = isotypic_table(self.n, self.m).unwrap_or_default();
        for l in &self.lines {
            if (l.eigenvalue == 0) != (l.component == self.m) {
                out.push(format!("eigenvalue {} attributed to component {}", l.eigenvalue, l.component));
            }
            if l.component_scalar != l.eigenvalue {
                out.push(format!(
                    "component {} scalar {} differs from its eigenvalue line {}",
                    l.component, l.component_scalar, l.eigenvalue
                ));
            }
            if let Some((_, d)) = table.get(l.component) {
                if *d as usize != l.multiplicity {
                    out.push(format!("component {} has dim {d}, multiplicity {}", l.component, l.multiplicity));
                }
            }
        }
        out
    }

    pub fn kernel_dim(&self) -> usize {
        self.lines
            .iter()
            .find(|l| l.eigenvalue == 0)
            .map_or(0, |l| l.multiplicity)
    }
}

/// Scans integer shifts `|c| ≤ m + n·m` for eigenvalues of `η` and attributes
/// each eigenspace to an irreducible constituent.
pub fn eta_spectrum(n: usize, m: usize) -> Result<SpectrumReport> {
    let table = isotypic_table(n, m)?;
    let shape = Partition::two_column(n, m)?;
    let dim = Ambient::Column(shape.clone()).dim();
    let op = eta_operator(&shape)?;
    let bound = (m + n * m) as i64;
    let mut found: Vec<(i64, usize)> = (-bound..=bound)
        .into_par_iter()
        .map(|c| nullity_shifted(&op, c).map(|k| (c, k)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(_, k)| k > 0)
        .collect();
    found.sort_by_key(|l| std::cmp::Reverse(l.0));

    let total: usize = found.iter().map(|l| l.1).sum();
    if total != dim {
        return Err(Error::Attribution(format!(
            "integer eigenvalues account for {total} of {dim} dimensions"
        )));
    }

    let mut assigned = vec![false; m + 1];
    let mut lines = Vec::with_capacity(found.len());
    for &(c, mult) in &found {
        let (component, how) = if c == 0 {
            if mult as u128 != table[m].1 {
                return Err(Error::Attribution(format!(
                    "kernel has dimension {mult}, expected {} for {}",
                    table[m].1, table[m].0
                )));
            }
            (m, Attribution::Kernel)
        } else {
            let by_dim: Vec<usize> = (0..m)
                .filter(|&i| !assigned[i] && table[i].1 == mult as u128)
                .collect();
            match by_dim.as_slice() {
                [] => {
                    return Err(Error::Attribution(format!(
                        "eigenvalue {c} has multiplicity {mult}, which matches no remaining constituent"
                    )))
                }
                [i] => (*i, Attribution::Dimension),
                _ => {
                    let mut hits = Vec::new();
                    for &i in &by_dim {
                        let w = rtft_vector(n, m, i)?;
                        if eta(&w)? == w.scaled(&Rational::from_integer(c.into())) {
                            hits.push(i);
                        }
                    }
                    match hits.as_slice() {
                        [i] => (*i, Attribution::Eigenvector),
                        _ => {
                            return Err(Error::Attribution(format!(
                                "eigenvalue {c} (multiplicity {mult}) is ambiguous between components {by_dim:?}"
                            )))
                        }
                    }
                }
            }
        };
        if assigned[component] {
            return Err(Error::Attribution(format!("component {component} matched twice")));
        }
        assigned[component] = true;
        lines.push(SpectrumLine {
            eigenvalue: c,
            multiplicity: mult,
            shape: table[component].0.clone(),
            paper_scalar: 2 * (m as i64 - component as i64),
            component,
            component_scalar: eta_scalar_on_component(n, m, component)?,
            attributed_by: how,
        });
    }
    Ok(SpectrumReport { n, m, lines })
}
