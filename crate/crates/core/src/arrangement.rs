//! Concrete hyperplane arrangements with multiplicities, general-position
//! tests and projective standardization.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::multiplicity::Multiplicity;
use crate::orbifold::OrbifoldType;
use crate::rational::Rational;

/// Scales a covector to primitive integer entries with the first nonzero
/// entry positive. Returns `None` for the zero covector.
pub fn normalize_covector(v: &[Rational]) -> Option<Vec<Rational>> {
    let first = v.iter().position(|x| !x.is_zero())?;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if ints[first].is_negative() {
        g = -g;
    }
    Some(ints.into_iter().map(|x| Rational::from(x / &g)).collect())
}

/// `k` hyperplanes of `ℙⁿ` given by covectors in homogeneous coordinates,
/// each carrying a multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementOrbifold {
    n: u32,
    hyperplanes: Vec<Vec<Rational>>,
    mults: Vec<Multiplicity>,
}

impl ArrangementOrbifold {
    pub fn new(n: u32, hyperplanes: Vec<Vec<Rational>>, mults: Vec<Multiplicity>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if hyperplanes.len() != mults.len() {
            return Err(Error::WrongCount { expected: hyperplanes.len(), got: mults.len() });
        }
        let dim = n as usize + 1;
        let hyperplanes = hyperplanes
            .iter()
            .enumerate()
            .map(|(i, h)| {
                if h.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: h.len() });
                }
                normalize_covector(h).ok_or(Error::ZeroCovector(i))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ArrangementOrbifold { n, hyperplanes, mults })
    }

    /// The coordinate hyperplanes `X_j = 0` followed by `X_0 + ⋯ + X_n = 0`.
    pub fn standard(n: u32, mults: Vec<Multiplicity>) -> Result<Self> {
        let dim = n as usize + 1;
        let mut hs: Vec<Vec<Rational>> = linalg::identity(dim);
        hs.push(vec![Rational::one(); dim]);
        ArrangementOrbifold::new(n, hs, mults)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn hyperplanes(&self) -> &[Vec<Rational>] {
        &self.hyperplanes
    }

    pub fn mults(&self) -> &[Multiplicity] {
        &self.mults
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Forgets the geometry.
    pub fn orbifold_type(&self) -> OrbifoldType {
        OrbifoldType::new(self.n, self.mults.clone()).expect("n >= 1 checked at construction")
    }

    /// Same multiplicities with every covector transformed by `h`.
    pub fn transformed(&self, h: &Homography) -> Result<Self> {
        let hs = self.hyperplanes.iter().map(|l| h.apply_covector(l)).collect::<Result<Vec<_>>>()?;
        ArrangementOrbifold::new(self.n, hs, self.mults.clone())
    }
}

/// Every `(n+1)`-subset of covectors is independent; for `k <= n+1` the
/// covectors themselves are independent.
pub fn is_general_position(a: &ArrangementOrbifold) -> bool {
    let dim = a.n as usize + 1;
    if a.len() <= dim {
        return linalg::rank(&a.hyperplanes.to_vec()) == a.len();
    }
    a.hyperplanes
        .iter()
        .combinations(dim)
        .all(|sub| !linalg::determinant(&sub.into_iter().cloned().collect()).is_zero())
}

/// An invertible projective change of coordinates acting on points by
/// `x ↦ M x` and on covectors by `ℓ ↦ ℓ M⁻¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Homography {
    matrix: Matrix,
}

impl Homography {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: matrix.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n) });
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Homography { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Homography { matrix: linalg::identity(dim) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn inverse(&self) -> Homography {
        Homography { matrix: linalg::inverse(&self.matrix).expect("homography is invertible") }
    }

    pub fn compose(&self, other: &Homography) -> Homography {
        Homography { matrix: linalg::mat_mul(&self.matrix, &other.matrix) }
    }

    pub fn apply_point(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        if p.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: p.len() });
        }
        Ok(linalg::mat_vec(&self.matrix, p))
    }

    pub fn apply_covector(&self, l: &[Rational]) -> Result<Vec<Rational>> {
        if l.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: l.len() });
        }
        Ok(linalg::vec_mat(l, &self.inverse().matrix))
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.matrix.iter().map(|r| r.iter().map(Rational::to_f64).collect()).collect()
    }
}

/// Moves an `(n+2)`-arrangement in general position to the coordinate
/// hyperplanes plus `X_0 + ⋯ + X_n = 0`.
///
/// Writes `ℓ_{n+1} = Σ λ_j ℓ_j`; the homography has rows `λ_j ℓ_j`.
pub fn standardize(a: &ArrangementOrbifold) -> Result<(Homography, ArrangementOrbifold)> {
    let dim = a.n as usize + 1;
    if a.len() != dim + 1 {
        return Err(Error::WrongCount { expected: dim + 1, got: a.len() });
    }
    if !is_general_position(a) {
        return Err(Error::NotGeneralPosition);
    }
    let basis: Matrix = a.hyperplanes[..dim].to_vec();
    let lambda = linalg::solve(&linalg::transpose(&basis), &a.hyperplanes[dim])?;
    debug_assert!(lambda.iter().all(|l| !l.is_zero()));
    let rows: Matrix = basis
        .iter()
        .zip(&lambda)
        .map(|(row, l)| row.iter().map(|x| x * l).collect())
        .collect();
    let h = Homography::new(rows)?;
    let image = a.transformed(&h)?;
    Ok((h, image))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|row| row.iter().map(|&x| Rational::from(x)).collect()).collect()
    }

    fn mults(k: usize) -> Vec<Multiplicity> {
        (0..k).map(|i| Multiplicity::integer(i as u64 + 2).unwrap()).collect()
    }

    #[test]
    fn normalization() {
        let v = vec![Rational::zero(), Rational::new(-2, 3), Rational::new(4, 9)];
        assert_eq!(normalize_covector(&v).unwrap(), r(&[&[0, 3, -2]])[0]);
        assert!(normalize_covector(&[Rational::zero(), Rational::zero()]).is_none());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            ArrangementOrbifold::new(2, r(&[&[0, 0, 0]]), mults(1)).unwrap_err(),
            Error::ZeroCovector(0)
        );
        assert!(ArrangementOrbifold::new(2, r(&[&[1, 0]]), mults(1)).is_err());
        assert!(ArrangementOrbifold::new(2, r(&[&[1, 0, 0]]), mults(2)).is_err());
    }

    #[test]
    fn general_position_examples() {
        let a = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), mults(4)).unwrap();
        assert!(is_general_position(&a));
        let b = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]), mults(4)).unwrap();
        assert!(!is_general_position(&b));
        let c = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[2, 0, 0]]), mults(2)).unwrap();
        assert!(!is_general_position(&c));
    }

    #[test]
    fn standard_is_fixed() {
        let a = ArrangementOrbifold::standard(3, mults(5)).unwrap();
        let (h, img) = standardize(&a).unwrap();
        assert_eq!(h, Homography::identity(4));
        assert_eq!(img, a);
    }

    #[test]
    fn scaled_first_row() {
        // ℓ_3 = 2ℓ_0 + ℓ_1 + ℓ_2
        let a = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[2, 1, 1]]), mults(4)).unwrap();
        let (h, img) = standardize(&a).unwrap();
        assert_eq!(h.matrix(), &r(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(img, ArrangementOrbifold::standard(2, mults(4)).unwrap());
        assert_eq!(img.mults(), a.mults());
    }

    #[test]
    fn standardize_errors() {
        let a = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), mults(3)).unwrap();
        assert_eq!(standardize(&a).unwrap_err(), Error::WrongCount { expected: 4, got: 3 });
        let b = ArrangementOrbifold::new(2, r(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]), mults(4)).unwrap();
        assert_eq!(standardize(&b).unwrap_err(), Error::NotGeneralPosition);
    }
}
