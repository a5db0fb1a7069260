//! Orbifold types `(ℙⁿ | Δ)` with Δ supported on hyperplanes in general
//! position, and their sign classification.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiplicity::Multiplicity;
use crate::rational::Rational;

/// Dimension `n` plus the multiplicities of the boundary hyperplanes,
/// always kept sorted (finite values ascending, `∞` last).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrbifoldType {
    n: u32,
    mults: Vec<Multiplicity>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Classification {
    Fano,
    TrivialCanonical,
    GeneralType,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Fano => "Fano",
            Classification::TrivialCanonical => "TrivialCanonical",
            Classification::GeneralType => "GeneralType",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl OrbifoldType {
    pub fn new(n: u32, mut mults: Vec<Multiplicity>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        mults.sort();
        Ok(OrbifoldType { n, mults })
    }

    /// Convenience constructor for integral types.
    pub fn integral(n: u32, mults: &[u64]) -> Result<Self> {
        let mults = mults
            .iter()
            .map(|&m| Multiplicity::integer(m))
            .collect::<Result<Vec<_>>>()?;
        OrbifoldType::new(n, mults)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mults(&self) -> &[Multiplicity] {
        &self.mults
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// The multiplicities as integers, if every one is a finite integer.
    pub fn integer_mults(&self) -> Option<Vec<u64>> {
        self.mults.iter().map(Multiplicity::as_integer).collect()
    }

    /// `Σ 1/m_j`, with `1/∞ = 0`.
    pub fn reciprocal_sum(&self) -> Rational {
        self.mults.iter().map(Multiplicity::reciprocal).sum()
    }

    /// Type with the multiplicity at sorted position `index` removed, living
    /// on `ℙ^{n-1}`.
    pub fn drop_index(&self, index: usize) -> Result<Self> {
        if index >= self.mults.len() {
            return Err(Error::IndexOutOfRange { index, len: self.mults.len() });
        }
        if self.n < 2 {
            return Err(Error::UnsupportedDimension(self.n));
        }
        let mut mults = self.mults.clone();
        mults.remove(index);
        OrbifoldType::new(self.n - 1, mults)
    }
}

impl fmt::Display for OrbifoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{} (", self.n)?;
        for (i, m) in self.mults.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// Degree of `K + Δ` in hyperplane units: `-(n+1) + Σ (1 - 1/m_j)`.
pub fn canonical_degree(t: &OrbifoldType) -> Rational {
    let boundary: Rational = t.mults.iter().map(Multiplicity::coefficient).sum();
    boundary - Rational::from(t.n + 1)
}

pub fn classify(t: &OrbifoldType) -> Classification {
    match canonical_degree(t).signum() {
        std::cmp::Ordering::Less => Classification::Fano,
        std::cmp::Ordering::Equal => Classification::TrivialCanonical,
        std::cmp::Ordering::Greater => Classification::GeneralType,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::parse_list;
    use proptest::prelude::*;

    fn ty(n: u32, s: &str) -> OrbifoldType {
        OrbifoldType::new(n, parse_list(s).unwrap()).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(canonical_degree(&ty(2, "2,3,7,41")), Rational::new(-1, 1722));
        assert_eq!(canonical_degree(&ty(3, "")), Rational::from(-4i64));
        assert_eq!(canonical_degree(&ty(2, "2,3,7,42")), Rational::zero());
        // ∞ contributes exactly 1
        assert_eq!(canonical_degree(&ty(1, "inf,inf")), Rational::zero());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&ty(2, "2,3,7,41")), Classification::Fano);
        assert_eq!(classify(&ty(3, "2,3,7,43,1805")), Classification::Fano);
        assert_eq!(classify(&ty(2, "2,3,7,42")), Classification::TrivialCanonical);
        assert_eq!(classify(&ty(2, "2,3,7,43")), Classification::GeneralType);
    }

    #[test]
    fn constructor_sorts() {
        let t = ty(2, "inf,7,2,3");
        assert_eq!(t.to_string(), "P^2 (2,3,7,inf)");
        assert!(OrbifoldType::new(0, vec![]).is_err());
    }

    #[test]
    fn multiplicity_one_is_inert() {
        assert_eq!(canonical_degree(&ty(2, "1,2,3,7,42")), canonical_degree(&ty(2, "2,3,7,42")));
    }

    proptest! {
        #[test]
        fn fano_iff_reciprocal_sum(n in 1u32..5, ms in proptest::collection::vec(1u64..60, 0..8)) {
            let t = OrbifoldType::integral(n, &ms).unwrap();
            let k = Rational::from(ms.len() as u64);
            let threshold = k - Rational::from(n + 1);
            prop_assert_eq!(classify(&t) == Classification::Fano, t.reciprocal_sum() > threshold);
        }

        #[test]
        fn degree_strictly_increasing(n in 1u32..5, ms in proptest::collection::vec(1u64..60, 1..7), idx in 0usize..7, bump in 1u64..20) {
            let idx = idx % ms.len();
            let t = OrbifoldType::integral(n, &ms).unwrap();
            let mut ms2 = ms.clone();
            ms2[idx] += bump;
            let t2 = OrbifoldType::integral(n, &ms2).unwrap();
            prop_assert!(canonical_degree(&t2) > canonical_degree(&t));
        }
    }
}
