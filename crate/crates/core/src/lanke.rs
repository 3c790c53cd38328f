//! Comb brackets `[[x_1,…,x_n], y_1,…,y_{n-1}]` of the multilinear free LAnKe
//! component on `2n - 1` generators, and the Jacobi defect `φ`.
//!
//! Brackets are stored through `Ω`: the bracket with sorted slots `x`, `y` is
//! the ordered column tabloid of shape `2^{n-1} 1` with columns `x` and `y`.
//! Every vector here therefore lives in `Ambient::Column(2^{n-1} 1)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::garnir::{eta, eta_operator, g_ck, standard_tabloid};
use crate::linalg::{echelonize, subspace_equal, Ambient, ModuleVector, Rational, SpanSolver, Subspace};
use crate::maps::{alpha, kernel_alpha, polytabloid};
use crate::partition::{catalan, syt_enumerate, Partition};
use crate::tabloid::{act, canonicalize_column, column_basis, sort_with_sign, ColumnTabloid, Filling, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CombBracket {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedBracket {
    #[serde(flatten)]
    pub bracket: CombBracket,
    pub sign: i8,
}

pub fn lanke_shape(n: usize) -> Result<Partition> {
    check_range("n", n, 2, usize::MAX)?;
    Partition::two_column(n, n - 1)
}

pub fn lanke_ambient(n: usize) -> Result<Ambient> {
    Ok(Ambient::Column(lanke_shape(n)?))
}

/// `n` for a vector space of comb brackets, or an error if `ambient` is not one.
pub fn bracket_arity(ambient: &Ambient) -> Result<usize> {
    if let Ambient::Column(shape) = ambient {
        let cols = shape.column_lengths();
        if cols.len() == 2 && cols[0] >= 2 && cols[1] + 1 == cols[0] {
            return Ok(cols[0]);
        }
    }
    Err(Error::InvalidBracket(format!("{ambient} is not a comb-bracket space")))
}

/// Sorts both slots; the sign is the product of the two sorting signs.
pub fn canonicalize_bracket(x: &[usize], y: &[usize]) -> Result<SignedBracket> {
    let n = x.len();
    if n < 2 || y.len() + 1 != n {
        return Err(Error::InvalidBracket(format!(
            "inner bracket needs n ≥ 2 labels and the outer slots n - 1, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let mut seen = vec![false; 2 * n - 1];
    for &a in x.iter().chain(y) {
        if a == 0 || a > 2 * n - 1 || std::mem::replace(&mut seen[a - 1], true) {
            return Err(Error::InvalidBracket(format!(
                "labels {x:?} | {y:?} are not a permutation of 1..={}",
                2 * n - 1
            )));
        }
    }
    let (mut x, mut y) = (x.to_vec(), y.to_vec());
    let sign = sort_with_sign(&mut x) * sort_with_sign(&mut y);
    Ok(SignedBracket {
        bracket: CombBracket { x, y },
        sign,
    })
}

impl CombBracket {
    pub fn n(&self) -> usize {
        self.x.len()
    }

    fn tabloid(&self) -> ColumnTabloid {
        ColumnTabloid {
            shape: Partition::two_column(self.x.len(), self.y.len()).expect("valid bracket"),
            columns: vec![self.x.clone(), self.y.clone()],
        }
    }

    pub fn index(&self) -> usize {
        self.tabloid().index()
    }

    pub fn from_index(n: usize, index: usize) -> Result<CombBracket> {
        let shape = lanke_shape(n)?;
        let mut cols = ColumnTabloid::from_index(&shape, index).columns.into_iter();
        Ok(CombBracket {
            x: cols.next().unwrap(),
            y: cols.next().unwrap(),
        })
    }

    /// `x_j < y_j` for every `j ≤ n - 1`.
    pub fn is_standard(&self) -> bool {
        self.x.iter().zip(&self.y).all(|(a, b)| a < b)
    }

    pub fn to_vector(&self) -> ModuleVector {
        self.tabloid().to_vector()
    }
}

pub fn is_standard(b: &SignedBracket) -> bool {
    b.bracket.is_standard()
}

/// `Ω`: the signed column tabloid with columns `x` and `y`.
pub fn omega(b: &SignedBracket) -> ModuleVector {
    b.bracket
        .to_vector()
        .scaled(&Rational::from_integer(b.sign.into()))
}

pub fn brackets(n: usize) -> Result<Vec<CombBracket>> {
    let shape = lanke_shape(n)?;
    Ok(column_basis(&shape)
        .into_iter()
        .map(|t| {
            let mut cols = t.columns.into_iter();
            CombBracket {
                x: cols.next().unwrap(),
                y: cols.next().unwrap(),
            }
        })
        .collect())
}

/// Standard brackets in the order of the standard tableaux of `2^{n-1} 1`.
pub fn standard_brackets(n: usize) -> Result<Vec<CombBracket>> {
    let shape = lanke_shape(n)?;
    Ok(syt_enumerate(&shape)
        .iter()
        .map(|t| {
            let mut cols = standard_tabloid(t).columns.into_iter();
            CombBracket {
                x: cols.next().unwrap(),
                y: cols.next().unwrap(),
            }
        })
        .collect())
}

/// `φ(b) = b − Σ_i (−1)^{n−i} [[y_1,…,y_{n−1}, x_i], x_1,…,x̂_i,…,x_n]`.
pub fn phi_bracket(b: &CombBracket) -> ModuleVector {
    let n = b.n();
    let mut out = b.to_vector();
    for i in 1..=n {
        let mut inner = b.y.clone();
        inner.push(b.x[i - 1]);
        let outer: Vec<usize> = b.x.iter().enumerate().filter(|&(j, _)| j != i - 1).map(|(_, &a)| a).collect();
        let term = canonicalize_bracket(&inner, &outer).expect("relabelled bracket stays valid");
        let sign = if (n - i).is_multiple_of(2) { -1 } else { 1 } * term.sign as i64;
        out.add_term(term.bracket.index(), Rational::from_integer(sign.into()));
    }
    out
}

pub fn phi(v: &ModuleVector) -> Result<ModuleVector> {
    let n = bracket_arity(v.ambient())?;
    let mut out = ModuleVector::zero(v.ambient().clone());
    for (i, c) in v.iter() {
        out.add_scaled(&phi_bracket(&CombBracket::from_index(n, i)?), c);
    }
    Ok(out)
}

pub fn phi_images(n: usize) -> Result<Vec<ModuleVector>> {
    Ok(brackets(n)?.par_iter().map(phi_bracket).collect())
}

pub fn image_phi(n: usize) -> Result<Subspace> {
    echelonize(&lanke_ambient(n)?, &phi_images(n)?)
}

/// `Ψ̃ = α ∘ Ω`, landing in the row-tabloid module of `2^{n-1} 1`.
pub fn psi_tilde(b: &SignedBracket) -> Result<ModuleVector> {
    alpha(&omega(b))
}

/// Expansion of bracket vectors in standard brackets modulo `im φ`.
#[derive(Clone, Debug)]
pub struct BracketStraightener {
    n: usize,
    standard: Vec<CombBracket>,
    image: Subspace,
    solver: SpanSolver,
}

impl BracketStraightener {
    pub fn new(n: usize) -> Result<Self> {
        let ambient = lanke_ambient(n)?;
        let standard = standard_brackets(n)?;
        let image = image_phi(n)?;
        let gens: Vec<ModuleVector> = standard
            .iter()
            .map(CombBracket::to_vector)
            .chain(image.rows().iter().cloned())
            .collect();
        let solver = SpanSolver::new(&ambient, &gens)?;
        if solver.rank() != ambient.dim() || gens.len() != ambient.dim() {
            return Err(Error::Verification(format!(
                "standard brackets do not complement im φ for n = {n} ({} standard, im φ of dim {}, ambient {})",
                standard.len(),
                image.dim(),
                ambient.dim()
            )));
        }
        Ok(Self {
            n,
            standard,
            image,
            solver,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn standard(&self) -> &[CombBracket] {
        &self.standard
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn straighten(&self, v: &ModuleVector) -> Result<Vec<(CombBracket, Rational)>> {
        v.check_ambient(self.image.ambient())?;
        let x = self
            .solver
            .solve(v)?
            .ok_or_else(|| Error::Verification("bracket vector outside the ambient span".into()))?;
        let out: Vec<_> = self
            .standard
            .iter()
            .cloned()
            .zip(x)
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect();
        let mut defect = v.clone();
        for (b, c) in &out {
            defect.add_scaled(&b.to_vector(), &-c.clone());
        }
        if !self.image.contains(&defect)? {
            return Err(Error::Verification("straightening defect is not in im φ".into()));
        }
        Ok(out)
    }
}

pub fn straighten_bracket(v: &ModuleVector) -> Result<Vec<(CombBracket, Rational)>> {
    BracketStraightener::new(bracket_arity(v.ambient())?)?.straighten(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assertion: &'static str,
    pub vector: Option<ModuleVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalankeReport {
    pub n: usize,
    pub ambient: usize,
    pub quotient: usize,
    pub catalan: u128,
    pub im_eta_eq_im_phi: bool,
    pub standard_basis_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl CatalankeReport {
    pub fn ok(&self) -> bool {
        self.quotient as u128 == self.catalan && self.im_eta_eq_im_phi && self.standard_basis_ok
    }
}

fn first_outside(space: &Subspace, vs: &[ModuleVector]) -> Result<Option<ModuleVector>> {
    for v in vs {
        if !space.contains(v)? {
            return Ok(Some(v.clone()));
        }
    }
    Ok(None)
}

/// `im η = im φ`, `dim V/im φ = catalan(n)`, and the standard brackets form a
/// basis of the quotient. Failed assertions carry a witness vector when one
/// exists.
pub fn catalanke_verify(n: usize) -> Result<CatalankeReport> {
    let ambient = lanke_ambient(n)?;
    let shape = lanke_shape(n)?;
    let im_phi = image_phi(n)?;
    let im_eta = eta_operator(&shape)?.image()?;
    let mut witnesses = Vec::new();

    let im_eta_eq_im_phi = subspace_equal(&im_phi, &im_eta)?;
    if !im_eta_eq_im_phi {
        let w = match first_outside(&im_phi, im_eta.rows())? {
            Some(w) => Some(w),
            None => first_outside(&im_eta, im_phi.rows())?,
        };
        witnesses.push(Witness {
            assertion: "im_eta_eq_im_phi",
            vector: w,
        });
    }

    let standard = standard_brackets(n)?;
    let count_ok = standard.len() as u128 == catalan(n);
    let mut span = im_phi.clone();
    let mut dependent = None;
    for b in &standard {
        let v = b.to_vector();
        if span.contains(&v)? {
            dependent = Some(v);
            break;
        }
        span = span.join(&echelonize(&ambient, &[v])?)?;
    }
    let standard_basis_ok = count_ok && dependent.is_none() && span.dim() == ambient.dim();
    if !standard_basis_ok {
        witnesses.push(Witness {
            assertion: "standard_basis_ok",
            vector: dependent,
        });
    }

    Ok(CatalankeReport {
        n,
        ambient: ambient.dim(),
        quotient: im_phi.codim(),
        catalan: catalan(n),
        im_eta_eq_im_phi,
        standard_basis_ok,
        witnesses,
    })
}

/// `im φ = ker α` inside the column-tabloid module of `2^{n-1} 1`.
pub fn image_phi_is_kernel_alpha(n: usize) -> Result<bool> {
    subspace_equal(&image_phi(n)?, &kernel_alpha(&lanke_shape(n)?)?)
}

/// `Ω(φ(b)) = g_{1,n−1}(Ω(b))` for every basis bracket.
pub fn jacobi_garnir_bridge(n: usize) -> Result<bool> {
    let all = brackets(n)?;
    all.par_iter()
        .map(|b| Ok(phi_bracket(b) == g_ck(&b.tabloid().to_filling(), 1, n - 1)?))
        .try_reduce(|| true, |a, b| Ok(a && b))
}

/// `Ψ̃(φ(b)) = 0` for every basis bracket.
pub fn psi_phi_vanishes(n: usize) -> Result<bool> {
    let all = brackets(n)?;
    all.par_iter()
        .map(|b| Ok(alpha(&phi_bracket(b))?.is_zero()))
        .try_reduce(|| true, |a, b| Ok(a && b))
}

fn eqneta_holds(v_t: &ModuleVector, v_r: &[ModuleVector]) -> Result<bool> {
    let mut rhs = phi(v_t)?;
    for (i, r) in v_r.iter().enumerate() {
        let s = if i % 2 == 0 { 1 } else { -1 };
        rhs.add_scaled(&phi(r)?, &Rational::from_integer(s.into()));
    }
    Ok(eta(v_t)? == -rhs)
}

/// `η(v_T) = −(φ(v_T) + Σ_i (−1)^{i−1} φ(v_{R_i}))` with
/// `v_T = [[1..n], n+1..2n−1]` and `v_{R_i} = [[i, n+1..2n−1], 1..î..n]`,
/// checked as given and after one seeded random relabelling.
pub fn eqneta_check(n: usize) -> Result<bool> {
    lanke_shape(n)?;
    let tail: Vec<usize> = (n + 1..2 * n).collect();
    let v_t = canonicalize_bracket(&(1..=n).collect::<Vec<_>>(), &tail).map(|b| omega(&b))?;
    let v_r = (1..=n)
        .map(|i| {
            let x: Vec<usize> = std::iter::once(i).chain(tail.iter().copied()).collect();
            let y: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
            canonicalize_bracket(&x, &y).map(|b| omega(&b))
        })
        .collect::<Result<Vec<_>>>()?;
    if !eqneta_holds(&v_t, &v_r)? {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
    let sigma = Permutation::random(2 * n - 1, &mut rng);
    let v_r = v_r.iter().map(|v| act(&sigma, v)).collect::<Result<Vec<_>>>()?;
    eqneta_holds(&act(&sigma, &v_t)?, &v_r)
}

/// `ε_u = Σ_i (−1)^{n−i} ε_{s_i}` for `u` with columns `1..n` and
/// `n+1..2n−1`, where `s_i` has columns `(n+1,…,2n−1, i)` and `1..î..n`.
pub fn appendix_identity_check(n: usize) -> Result<bool> {
    lanke_shape(n)?;
    let x: Vec<usize> = (1..=n).collect();
    let y: Vec<usize> = (n + 1..2 * n).collect();
    let lhs = polytabloid(&Filling::new(vec![x.clone(), y.clone()])?);
    let mut rhs = ModuleVector::zero(lhs.ambient().clone());
    for i in 1..=n {
        let mut first = y.clone();
        first.push(i);
        let second: Vec<usize> = x.iter().copied().filter(|&j| j != i).collect();
        let s = if (n - i).is_multiple_of(2) { 1 } else { -1 };
        rhs.add_scaled(&polytabloid(&Filling::new(vec![first, second])?), &Rational::from_integer(s.into()));
    }
    Ok(lhs == rhs)
}

/// `Ω` applied to an arbitrary filling of `2^{n-1} 1`, for relabelling checks.
pub fn omega_filling(f: &Filling) -> Result<ModuleVector> {
    bracket_arity(&Ambient::Column(f.shape().clone()))?;
    Ok(canonicalize_column(f).to_vector())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn b(x: &[usize], y: &[usize]) -> CombBracket {
        CombBracket {
            x: x.to_vec(),
            y: y.to_vec(),
        }
    }

    #[test]
    fn canonicalize_examples() {
        let s = canonicalize_bracket(&[1, 3, 2], &[4, 5]).unwrap();
        assert_eq!((s.sign, s.bracket.clone()), (-1, b(&[1, 2, 3], &[4, 5])));
        assert_eq!(canonicalize_bracket(&[1, 2, 3], &[5, 4]).unwrap().sign, -1);
        let s = canonicalize_bracket(&[3, 1], &[2]).unwrap();
        assert_eq!((s.sign, s.bracket), (-1, b(&[1, 3], &[2])));
        assert!(canonicalize_bracket(&[1, 1], &[2]).is_err());
        assert!(canonicalize_bracket(&[1, 2], &[4]).is_err());
        assert!(canonicalize_bracket(&[1, 2, 3], &[4]).is_err());
        assert!(canonicalize_bracket(&[1], &[]).is_err());
    }

    #[test]
    fn omega_examples() {
        let s = canonicalize_bracket(&[1, 3, 2], &[5, 4]).unwrap();
        assert_eq!(omega(&s), b(&[1, 2, 3], &[4, 5]).to_vector());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"x":[1,2,3],"y":[4,5],"sign":1}"#);
    }

    #[test]
    fn phi_n2() {
        let want = &(&b(&[1, 2], &[3]).to_vector() - &b(&[1, 3], &[2]).to_vector()) + &b(&[2, 3], &[1]).to_vector();
        assert_eq!(phi_bracket(&b(&[1, 2], &[3])), want);
        let zero = ModuleVector::zero(lanke_ambient(2).unwrap());
        assert!(phi(&zero).unwrap().is_zero());
    }

    #[test]
    fn standard_examples() {
        assert!(b(&[1, 2, 4], &[3, 5]).is_standard());
        assert!(!b(&[1, 4, 5], &[2, 3]).is_standard());
        for n in 2..=5 {
            let all = brackets(n).unwrap();
            let std_all: Vec<_> = all.iter().filter(|b| b.is_standard()).cloned().collect();
            let mut listed = standard_brackets(n).unwrap();
            listed.sort();
            assert_eq!(std_all, listed);
            assert_eq!(listed.len() as u128, catalan(n));
        }
    }

    #[test]
    fn straighten_examples() {
        let s = BracketStraightener::new(2).unwrap();
        let got = s.straighten(&b(&[2, 3], &[1]).to_vector()).unwrap();
        let mut got: Vec<_> = got.into_iter().collect();
        got.sort();
        assert_eq!(got, vec![(b(&[1, 2], &[3]), r(-1)), (b(&[1, 3], &[2]), r(1))]);
        let std = b(&[1, 2, 4], &[3, 5]);
        let s3 = BracketStraightener::new(3).unwrap();
        assert_eq!(s3.straighten(&std.to_vector()).unwrap(), vec![(std, r(1))]);
        assert!(s3.straighten(&phi_bracket(&b(&[2, 4, 5], &[1, 3]))).unwrap().is_empty());
    }

    #[test]
    fn catalanke_small() {
        for (n, amb, q) in [(2, 3, 2), (3, 10, 5), (4, 35, 14)] {
            let rep = catalanke_verify(n).unwrap();
            assert_eq!((rep.ambient, rep.quotient), (amb, q));
            assert!(rep.ok() && rep.witnesses.is_empty());
            assert!(image_phi_is_kernel_alpha(n).unwrap());
        }
    }

    #[test]
    fn identities() {
        for n in 2..=4 {
            assert!(jacobi_garnir_bridge(n).unwrap());
            assert!(eqneta_check(n).unwrap());
            assert!(appendix_identity_check(n).unwrap());
            assert!(psi_phi_vanishes(n).unwrap());
        }
    }

    #[test]
    fn psi_tilde_n2() {
        let s = canonicalize_bracket(&[1, 2], &[3]).unwrap();
        let want = polytabloid(&Filling::new(vec![vec![1, 2], vec![3]]).unwrap());
        assert_eq!(psi_tilde(&s).unwrap(), want);
    }
}
