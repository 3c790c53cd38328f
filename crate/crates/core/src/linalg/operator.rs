use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::echelon::{int_row, EchelonBuilder};
use super::{echelonize, Ambient, ModuleVector, Rational, Subspace};
use crate::error::{Error, Result};

/// A linear map stored column by column: `columns[j]` is the image of the
/// `j`-th domain basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    domain: Ambient,
    codomain: Ambient,
    columns: Vec<ModuleVector>,
}

impl LinearOperator {
    pub fn new(domain: Ambient, codomain: Ambient, columns: Vec<ModuleVector>) -> Result<Self> {
        if columns.len() != domain.dim() {
            return Err(Error::OutOfRange {
                what: "column count",
                value: columns.len(),
                lo: domain.dim(),
                hi: domain.dim(),
            });
        }
        for c in &columns {
            c.check_ambient(&codomain)?;
        }
        Ok(Self {
            domain,
            codomain,
            columns,
        })
    }

    /// Builds the operator from the image of each basis element, in parallel.
    pub fn from_basis_images<F>(domain: Ambient, codomain: Ambient, image: F) -> Result<Self>
    where
        F: Fn(usize) -> Result<ModuleVector> + Send + Sync,
    {
        let columns = (0..domain.dim())
            .into_par_iter()
            .map(image)
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, columns)
    }

    pub fn identity(ambient: Ambient) -> Self {
        let columns = (0..ambient.dim())
            .map(|i| ModuleVector::basis(ambient.clone(), i))
            .collect();
        Self {
            domain: ambient.clone(),
            codomain: ambient,
            columns,
        }
    }

    pub fn domain(&self) -> &Ambient {
        &self.domain
    }

    pub fn codomain(&self) -> &Ambient {
        &self.codomain
    }

    pub fn columns(&self) -> &[ModuleVector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.columns[col].coeff(row)
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn apply(&self, v: &ModuleVector) -> Result<ModuleVector> {
        v.check_ambient(&self.domain)?;
        let mut out = ModuleVector::zero(self.codomain.clone());
        for (j, c) in v.iter() {
            out.add_scaled(&self.columns[j], c);
        }
        Ok(out)
    }

    /// `self - c * Identity`.
    pub fn shifted(&self, c: &Rational) -> Result<LinearOperator> {
        if !self.is_square() {
            return Err(Error::NotSquare(format!("{} -> {}", self.domain, self.codomain)));
        }
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut col = col.clone();
                col.add_term(j, -c.clone());
                col
            })
            .collect();
        Ok(LinearOperator {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
        })
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare(format!("{} -> {}", self.domain, self.codomain)));
        }
        Ok(self
            .columns
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, col)| acc + col.coeff(j)))
    }

    /// Rows of the matrix (one per codomain coordinate), as echelon input over
    /// the domain coordinates. Only nonzero rows are produced.
    fn row_builder(&self) -> EchelonBuilder {
        let mut rows: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter() {
                rows.entry(i).or_default().push((j, x));
            }
        }
        let mut builder = EchelonBuilder::new();
        for (_, row) in rows {
            builder.insert(int_row(row));
        }
        builder
    }

    pub fn rank(&self) -> usize {
        self.row_builder().rank()
    }

    pub fn nullity(&self) -> usize {
        self.domain.dim() - self.rank()
    }

    /// Kernel, computed from the row echelon form of the matrix over the
    /// domain coordinates (cheap when the codomain is much larger).
    pub fn kernel(&self) -> Result<Subspace> {
        let rref = self.row_builder().into_rref();
        let pivots: BTreeMap<usize, &BTreeMap<usize, Rational>> =
            rref.iter().map(|(p, row)| (*p, row)).collect();
        let basis: Vec<ModuleVector> = (0..self.domain.dim())
            .filter(|f| !pivots.contains_key(f))
            .map(|f| {
                let mut v = ModuleVector::basis(self.domain.clone(), f);
                for (p, row) in &pivots {
                    if let Some(x) = row.get(&f) {
                        v.add_term(*p, -x.clone());
                    }
                }
                v
            })
            .collect();
        echelonize(&self.domain, &basis)
    }

    pub fn image(&self) -> Result<Subspace> {
        echelonize(&self.codomain, &self.columns)
    }
}

/// `dim ker(op - c·Identity)`.
pub fn nullity_shifted(op: &LinearOperator, c: i64) -> Result<usize> {
    Ok(op.shifted(&Rational::from_integer(c.into()))?.nullity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn matrix(rows: &[&[i64]]) -> LinearOperator {
        let n = rows[0].len();
        let a = Ambient::Coords(rows.len());
        let columns = (0..n)
            .map(|j| ModuleVector::from_terms(a.clone(), rows.iter().enumerate().map(|(i, r)| (i, int(r[j])))))
            .collect();
        LinearOperator::new(Ambient::Coords(n), a, columns).unwrap()
    }

    #[test]
    fn identity_nullity() {
        let id = LinearOperator::identity(Ambient::Coords(3));
        assert_eq!(nullity_shifted(&id, 1).unwrap(), 3);
        assert_eq!(nullity_shifted(&id, 0).unwrap(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = matrix(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel().unwrap();
        assert_eq!(k.dim(), 2);
        for v in k.rows() {
            assert!(m.apply(v).unwrap().is_zero());
        }
        assert_eq!(m.rank() + k.dim(), 4);
        assert_eq!(m.image().unwrap().dim(), 2);
    }

    #[test]
    fn shifted_requires_square() {
        let m = matrix(&[&[1, 2]]);
        assert!(m.shifted(&int(1)).is_err());
        assert!(m.trace().is_err());
    }
}
