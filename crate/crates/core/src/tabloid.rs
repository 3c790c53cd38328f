//! Column tabloids (antisymmetric within columns), row tabloids, their
//! canonical bases, and the action of the symmetric group.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Ambient, ModuleVector, Rational};
use crate::partition::Partition;

/// A permutation of `1..=m`, stored as its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={m}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            images: (1..=m).collect(),
        }
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        crate::error::check_range("transposition label", a.max(b), 1, m)?;
        crate::error::check_range("transposition label", a.min(b), 1, m)?;
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (1..=m).collect();
        images.shuffle(rng);
        Self { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i8 {
        parity_sign(&self.images)
    }
}

/// Sign of the permutation that sorts `seq` (entries distinct).
pub(crate) fn parity_sign(seq: &[usize]) -> i8 {
    let inversions = seq
        .iter()
        .enumerate()
        .map(|(i, a)| seq[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
pub(crate) fn sort_with_sign(seq: &mut [usize]) -> i8 {
    let s = parity_sign(seq);
    seq.sort_unstable();
    s
}

/// An arbitrary numbering of a Young diagram by `1..=m`, stored column-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
        let shape = Partition::from_column_lengths(&lengths)
            .map_err(|_| Error::InvalidFilling(format!("column lengths {lengths:?} do not form a diagram")))?;
        let m = shape.size();
        let mut seen = vec![false; m + 1];
        for &e in columns.iter().flatten() {
            if e == 0 || e > m {
                return Err(Error::InvalidFilling(format!("entry {e} outside 1..={m}")));
            }
            if seen[e] {
                return Err(Error::InvalidFilling(format!("duplicate entry {e}")));
            }
            seen[e] = true;
        }
        Ok(Self { shape, columns })
    }

    /// Checks the filling has the expected shape.
    pub fn with_shape(shape: &Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let f = Filling::new(columns)?;
        if &f.shape != shape {
            return Err(Error::InvalidFilling(format!("expected shape {shape}, got {}", f.shape)));
        }
        Ok(f)
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Filling::new(columns)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub(crate) fn columns_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.columns
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| self.columns[c][r]).collect())
            .collect()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `σt`: every entry `e` replaced by `σ(e)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Filling> {
        if sigma.size() != self.size() {
            return Err(Error::OutOfRange {
                what: "permutation size",
                value: sigma.size(),
                lo: self.size(),
                hi: self.size(),
            });
        }
        Ok(Filling {
            shape: self.shape.clone(),
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|&e| sigma.apply(e)).collect())
                .collect(),
        })
    }
}

/// A column tabloid in its ordered representative: every column increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnTabloid {
    pub shape: Partition,
    pub columns: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTabloid {
    pub sign: i8,
    #[serde(flatten)]
    pub tabloid: ColumnTabloid,
}

/// A row tabloid, represented with each row increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowTabloid {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

/// Sorts every column and records the sign of the column permutation used.
pub fn canonicalize_column(f: &Filling) -> SignedTabloid {
    let mut sign = 1;
    let columns = f
        .columns
        .iter()
        .map(|col| {
            let mut col = col.clone();
            sign *= sort_with_sign(&mut col);
            col
        })
        .collect();
    SignedTabloid {
        sign,
        tabloid: ColumnTabloid {
            shape: f.shape.clone(),
            columns,
        },
    }
}

pub fn canonicalize_row(f: &Filling) -> RowTabloid {
    let rows = f
        .rows()
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r
        })
        .collect();
    RowTabloid {
        shape: f.shape.clone(),
        rows,
    }
}

impl ColumnTabloid {
    pub fn to_filling(&self) -> Filling {
        Filling {
            shape: self.shape.clone(),
            columns: self.columns.clone(),
        }
    }

    pub fn index(&self) -> usize {
        basis(&Ambient::Column(self.shape.clone()))
            .index_of(&self.columns.concat())
            .expect("ordered tabloid is always in the basis")
    }

    pub fn from_index(shape: &Partition, index: usize) -> ColumnTabloid {
        let b = basis(&Ambient::Column(shape.clone()));
        ColumnTabloid {
            shape: shape.clone(),
            columns: b.blocks(index),
        }
    }

    pub fn to_vector(&self) -> ModuleVector {
        ModuleVector::basis(Ambient::Column(self.shape.clone()), self.index())
    }
}

impl SignedTabloid {
    pub fn to_vector(&self) -> ModuleVector {
        let mut v = ModuleVector::zero(Ambient::Column(self.tabloid.shape.clone()));
        v.add_term(self.tabloid.index(), Rational::from_integer(self.sign.into()));
        v
    }
}

impl RowTabloid {
    pub fn index(&self) -> usize {
        basis(&Ambient::Row(self.shape.clone()))
            .index_of(&self.rows.concat())
            .expect("sorted row tabloid is always in the basis")
    }

    pub fn from_index(shape: &Partition, index: usize) -> RowTabloid {
        let b = basis(&Ambient::Row(shape.clone()));
        RowTabloid {
            shape: shape.clone(),
            rows: b.blocks(index),
        }
    }
}

/// Ordered basis of a tabloid module: each element is a reading word split
/// into increasing blocks (columns for column tabloids, rows for row tabloids),
/// sorted lexicographically by the word.
#[derive(Debug)]
pub struct Basis {
    block_sizes: Vec<usize>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Basis {
    fn build(block_sizes: Vec<usize>) -> Basis {
        fn rec(remaining: &[usize], sizes: &[usize], word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some((&size, rest)) = sizes.split_first() else {
                out.push(word.clone());
                return;
            };
            for block in remaining.iter().copied().combinations(size) {
                let left: Vec<usize> = remaining.iter().copied().filter(|x| !block.contains(x)).collect();
                let len = word.len();
                word.extend(&block);
                rec(&left, rest, word, out);
                word.truncate(len);
            }
        }
        let m: usize = block_sizes.iter().sum();
        let labels: Vec<usize> = (1..=m).collect();
        let mut words = Vec::new();
        rec(&labels, &block_sizes, &mut Vec::with_capacity(m), &mut words);
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Basis {
            block_sizes,
            words,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn word(&self, index: usize) -> &[usize] {
        &self.words[index]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn blocks(&self, index: usize) -> Vec<Vec<usize>> {
        split_blocks(&self.words[index], &self.block_sizes)
    }
}

fn split_blocks(word: &[usize], sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        out.push(word[start..start + s].to_vec());
        start += s;
    }
    out
}

/// Cached basis for a column or row tabloid module.
///
/// # Panics
/// On [`Ambient::Coords`], which has no tabloid basis.
pub fn basis(ambient: &Ambient) -> Arc<Basis> {
    static CACHE: OnceLock<RwLock<HashMap<Ambient, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(ambient) {
        return b.clone();
    }
    let sizes = match ambient {
        Ambient::Column(s) => s.column_lengths(),
        Ambient::Row(s) => s.parts().to_vec(),
        Ambient::Coords(_) => panic!("coordinate space has no tabloid basis"),
    };
    let built = Arc::new(Basis::build(sizes));
    cache
        .write()
        .unwrap()
        .entry(ambient.clone())
        .or_insert(built)
        .clone()
}

pub fn column_basis(shape: &Partition) -> Vec<ColumnTabloid> {
    let b = basis(&Ambient::Column(shape.clone()));
    (0..b.len())
        .map(|i| ColumnTabloid {
            shape: shape.clone(),
            columns: b.blocks(i),
        })
        .collect()
}

pub fn row_basis(shape: &Partition) -> Vec<RowTabloid> {
    let b = basis(&Ambient::Row(shape.clone()));
    (0..b.len())
        .map(|i| RowTabloid {
            shape: shape.clone(),
            rows: b.blocks(i),
        })
        .collect()
}

/// `σ·v`, re-canonicalized; for column tabloids the sorting sign is absorbed
/// into the coefficient.
pub fn act(sigma: &Permutation, v: &ModuleVector) -> Result<ModuleVector> {
    let (signed, shape) = match v.ambient() {
        Ambient::Column(s) => (true, s),
        Ambient::Row(s) => (false, s),
        Ambient::Coords(_) => {
            return Err(Error::InvalidFilling("coordinate vectors carry no labels".into()))
        }
    };
    if sigma.size() != shape.size() {
        return Err(Error::OutOfRange {
            what: "permutation size",
            value: sigma.size(),
            lo: shape.size(),
            hi: shape.size(),
        });
    }
    let b = basis(v.ambient());
    let mut out = ModuleVector::zero(v.ambient().clone());
    for (i, c) in v.iter() {
        let mut sign = 1;
        let mut word = Vec::with_capacity(shape.size());
        for block in b.blocks(i) {
            let mut block: Vec<usize> = block.into_iter().map(|e| sigma.apply(e)).collect();
            let s = sort_with_sign(&mut block);
            if signed {
                sign *= s;
            }
            word.extend(block);
        }
        let j = b.index_of(&word).expect("relabelled word is a basis word");
        out.add_term(j, if sign == 1 { c.clone() } else { -c.clone() });
    }
    Ok(out)
}

/// Coefficient of the ordered tabloid `t` in `v`.
pub fn coeff(v: &ModuleVector, t: &ColumnTabloid) -> Result<Rational> {
    v.check_ambient(&Ambient::Column(t.shape.clone()))?;
    Ok(v.coeff(t.index()))
}
