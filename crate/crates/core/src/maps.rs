//! Row polytabloids and the surjection `α: [t] ↦ ε_t` from column tabloids
//! onto the Specht module inside the row-tabloid module.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{Ambient, LinearOperator, ModuleVector, Rational, Subspace};
use crate::partition::Partition;
use crate::tabloid::{basis, parity_sign, ColumnTabloid, Filling};

/// Every rearrangement of `col` together with the sign of the rearrangement.
fn signed_arrangements(col: &[usize]) -> Vec<(Vec<usize>, i64)> {
    (0..col.len())
        .permutations(col.len())
        .map(|idx| {
            let sign = parity_sign(&idx) as i64;
            (idx.into_iter().map(|i| col[i]).collect(), sign)
        })
        .collect()
}

/// `ε_t = Σ_{β ∈ C_t} sgn(β) {βt}`.
pub fn polytabloid(t: &Filling) -> ModuleVector {
    let shape = t.shape();
    let ambient = Ambient::Row(shape.clone());
    let rows_basis = basis(&ambient);
    let row_lengths = shape.parts();
    let mut acc: HashMap<usize, i64> = HashMap::new();
    let mut word = Vec::with_capacity(shape.size());
    for combo in t
        .columns()
        .iter()
        .map(|c| signed_arrangements(c))
        .multi_cartesian_product()
    {
        let sign: i64 = combo.iter().map(|(_, s)| s).product();
        word.clear();
        for (r, &len) in row_lengths.iter().enumerate() {
            let start = word.len();
            word.extend((0..len).map(|c| combo[c].0[r]));
            word[start..].sort_unstable();
        }
        let idx = rows_basis.index_of(&word).expect("row-sorted word is a basis word");
        *acc.entry(idx).or_insert(0) += sign;
    }
    ModuleVector::from_terms(
        ambient,
        acc.into_iter().map(|(i, c)| (i, Rational::from_integer(c.into()))),
    )
}

fn column_shape(v: &ModuleVector) -> Result<&Partition> {
    match v.ambient() {
        Ambient::Column(s) => Ok(s),
        other => Err(Error::AmbientMismatch {
            expected: Ambient::Column(Partition::new(vec![1]).unwrap()),
            found: other.clone(),
        }),
    }
}

/// `α` extended linearly from `[t] ↦ ε_t`.
pub fn alpha(v: &ModuleVector) -> Result<ModuleVector> {
    let shape = column_shape(v)?;
    let mut out = ModuleVector::zero(Ambient::Row(shape.clone()));
    for (i, c) in v.iter() {
        let t = ColumnTabloid::from_index(shape, i);
        out.add_scaled(&polytabloid(&t.to_filling()), c);
    }
    Ok(out)
}

pub fn alpha_operator(shape: &Partition) -> Result<LinearOperator> {
    LinearOperator::from_basis_images(
        Ambient::Column(shape.clone()),
        Ambient::Row(shape.clone()),
        |i| Ok(polytabloid(&ColumnTabloid::from_index(shape, i).to_filling())),
    )
}

pub fn kernel_alpha(shape: &Partition) -> Result<Subspace> {
    alpha_operator(shape)?.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::syt_count;
    use crate::tabloid::{canonicalize_column, RowTabloid};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row(shape: &Partition, rows: &[&[usize]]) -> ModuleVector {
        let t = RowTabloid {
            shape: shape.clone(),
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        };
        ModuleVector::basis(Ambient::Row(shape.clone()), t.index())
    }

    #[test]
    fn polytabloid_of_21() {
        let shape = p(&[2, 1]);
        let t = Filling::new(vec![vec![1, 2], vec![3]]).unwrap();
        let want = &row(&shape, &[&[1, 3], &[2]]) - &row(&shape, &[&[2, 3], &[1]]);
        assert_eq!(polytabloid(&t), want);
    }

    #[test]
    fn polytabloid_single_column_and_row() {
        let t = Filling::new(vec![vec![2, 1, 3]]).unwrap();
        let e = polytabloid(&t);
        assert_eq!(e.len(), 6);
        let t = Filling::new(vec![vec![2], vec![1], vec![3]]).unwrap();
        let e = polytabloid(&t);
        assert_eq!(e, row(&p(&[3]), &[&[1, 2, 3]]));
    }

    #[test]
    fn alpha_kills_the_21_relation() {
        let v = |cols: Vec<Vec<usize>>| canonicalize_column(&Filling::new(cols).unwrap()).to_vector();
        let rel = &(&v(vec![vec![1, 2], vec![3]]) - &v(vec![vec![1, 3], vec![2]])) + &v(vec![vec![2, 3], vec![1]]);
        assert!(alpha(&rel).unwrap().is_zero());
        let t = v(vec![vec![1, 3], vec![2]]);
        assert_eq!(alpha(&t).unwrap(), polytabloid(&Filling::new(vec![vec![1, 3], vec![2]]).unwrap()));
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(kernel_alpha(&p(&[2, 1])).unwrap().dim(), 1);
        assert_eq!(kernel_alpha(&p(&[1, 1, 1])).unwrap().dim(), 0);
        assert_eq!(kernel_alpha(&p(&[2, 2, 1])).unwrap().dim(), 5);
        for shape in [p(&[3, 2, 1]), p(&[3, 1]), p(&[2, 2, 2, 1])] {
            let op = alpha_operator(&shape).unwrap();
            assert_eq!(op.rank() as u128, syt_count(&shape));
        }
    }
}
