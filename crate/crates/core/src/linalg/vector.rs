use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Ambient, Rational};
use crate::error::{Error, Result};

/// Sparse exact linear combination of basis elements of an [`Ambient`].
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    ambient: Ambient,
    entries: BTreeMap<usize, Rational>,
}

impl ModuleVector {
    pub fn zero(ambient: Ambient) -> Self {
        Self {
            ambient,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(ambient: Ambient, index: usize) -> Self {
        let mut v = Self::zero(ambient);
        v.add_term(index, Rational::from_integer(1.into()));
        v
    }

    pub fn from_terms(ambient: Ambient, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v = Self::zero(ambient);
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.entries.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, c)| (i, c))
    }

    pub(crate) fn entries(&self) -> &BTreeMap<usize, Rational> {
        &self.entries
    }

    pub fn add_term(&mut self, index: usize, c: Rational) {
        debug_assert!(index < self.ambient.dim());
        if c.is_zero() {
            return;
        }
        match self.entries.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn check_same_ambient(&self, other: &ModuleVector) -> Result<()> {
        self.check_ambient(&other.ambient)
    }

    pub fn check_ambient(&self, ambient: &Ambient) -> Result<()> {
        if &self.ambient != ambient {
            return Err(Error::AmbientMismatch {
                expected: ambient.clone(),
                found: self.ambient.clone(),
            });
        }
        Ok(())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Rational) {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.entries {
            self.add_term(i, x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.ambient.clone());
        }
        ModuleVector {
            ambient: self.ambient.clone(),
            entries: self.entries.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    /// Same coefficients, reinterpreted over another basis of equal dimension.
    pub fn with_ambient(self, ambient: Ambient) -> ModuleVector {
        assert_eq!(self.ambient.dim(), ambient.dim());
        ModuleVector {
            ambient,
            entries: self.entries,
        }
    }
}

impl Add<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;

    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::from_integer(1.into()));
        out
    }
}

impl Sub<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;

    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::from_integer((-1).into()));
        out
    }
}

impl Add for ModuleVector {
    type Output = ModuleVector;

    fn add(self, rhs: ModuleVector) -> ModuleVector {
        &self + &rhs
    }
}

impl Sub for ModuleVector {
    type Output = ModuleVector;

    fn sub(self, rhs: ModuleVector) -> ModuleVector {
        &self - &rhs
    }
}

impl Neg for &ModuleVector {
    type Output = ModuleVector;

    fn neg(self) -> ModuleVector {
        self.scaled(&Rational::from_integer((-1).into()))
    }
}

impl Neg for ModuleVector {
    type Output = ModuleVector;

    fn neg(self) -> ModuleVector {
        -&self
    }
}

impl Mul<&Rational> for &ModuleVector {
    type Output = ModuleVector;

    fn mul(self, c: &Rational) -> ModuleVector {
        self.scaled(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn arithmetic_keeps_sparsity() {
        let a = Ambient::Coords(3);
        let x = ModuleVector::from_terms(a.clone(), [(0, int(1)), (2, int(2))]);
        let y = ModuleVector::from_terms(a.clone(), [(0, int(-1)), (1, int(5))]);
        let s = &x + &y;
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(0), int(0));
        assert!((&x - &x).is_zero());
        assert!(x.scaled(&int(0)).is_zero());
        assert_eq!((-&y).coeff(1), int(-5));
    }

    #[test]
    fn ambient_checks() {
        let x = ModuleVector::zero(Ambient::Coords(2));
        let y = ModuleVector::zero(Ambient::Coords(3));
        assert!(x.check_same_ambient(&y).is_err());
        assert!(x.check_same_ambient(&x).is_ok());
    }
}
