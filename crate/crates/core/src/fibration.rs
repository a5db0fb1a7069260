//! Orbifold base of a fibration and local generators of the orbifold
//! symmetric differentials.

use std::collections::HashSet;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::multiplicity::Multiplicity;
use crate::rational::Rational;

/// One prime component `D_k` of `f*(E)`: its multiplicity `t` in the
/// pullback and its own boundary multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberComponentData {
    pub t: u64,
    pub m_delta: Multiplicity,
}

impl FiberComponentData {
    pub fn new(t: u64, m_delta: Multiplicity) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("fiber multiplicity t must be >= 1".into()));
        }
        Ok(FiberComponentData { t, m_delta })
    }
}

/// A prime divisor `E` of the base with the non-exceptional components
/// lying over it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaseDivisorRecord {
    pub label: String,
    pub components: Vec<FiberComponentData>,
}

impl BaseDivisorRecord {
    pub fn new(label: impl Into<String>, components: Vec<FiberComponentData>) -> Result<Self> {
        let label = label.into();
        if components.is_empty() {
            return Err(Error::InvalidArgument(format!("divisor {label:?} has no components")));
        }
        Ok(BaseDivisorRecord { label, components })
    }
}

/// `inf_k t_k · m_Δ(D_k)`.
pub fn base_multiplicity(r: &BaseDivisorRecord) -> Multiplicity {
    r.components
        .iter()
        .map(|c| c.m_delta.scale(c.t))
        .min()
        .expect("records have components")
}

/// Coefficients `1 - 1/m(f, E)` of the orbifold base; divisors with
/// multiplicity one are dropped.
pub fn orbifold_base(records: &[BaseDivisorRecord]) -> Result<Vec<(String, Rational)>> {
    let mut seen = HashSet::new();
    for r in records {
        if !seen.insert(r.label.as_str()) {
            return Err(Error::DuplicateLabel(r.label.clone()));
        }
    }
    Ok(records
        .iter()
        .map(|r| (r.label.clone(), base_multiplicity(r).coefficient()))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymDiffGenerator {
    /// `N = (N_1, …, N_n)` with `Σ N_j = m`.
    pub exponents: Vec<u64>,
    /// `(⌊a_1 N_1⌋, …, ⌊a_n N_n⌋)`, the powers of `x_j` in the denominator.
    pub denominators: Vec<u64>,
}

fn check_coefficients(a: &[Rational]) -> Result<()> {
    match a.iter().find(|x| x.is_negative() || *x > &Rational::one()) {
        Some(bad) => Err(Error::CoefficientOutOfRange(bad.to_string())),
        None => Ok(()),
    }
}

fn floor_mul(a: &Rational, k: u64) -> u64 {
    (a * &Rational::from(k)).floor().to_u64().expect("nonnegative")
}

/// Local generators `dx^{(N)}` of the orbifold `S^m Ω¹` for a boundary with
/// coefficients `a_j` along the coordinate hyperplanes, in descending
/// lexicographic order of `N`.
pub fn symdiff_generators(a: &[Rational], m: u64) -> Result<Vec<SymDiffGenerator>> {
    check_coefficients(a)?;
    fn rec(a: &[Rational], left: u64, cur: &mut Vec<u64>, out: &mut Vec<SymDiffGenerator>) {
        if cur.len() + 1 == a.len() {
            cur.push(left);
            out.push(SymDiffGenerator {
                exponents: cur.clone(),
                denominators: cur.iter().zip(a).map(|(&nj, aj)| floor_mul(aj, nj)).collect(),
            });
            cur.pop();
            return;
        }
        for nj in (0..=left).rev() {
            cur.push(nj);
            rec(a, left - nj, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if a.is_empty() {
        if m == 0 {
            out.push(SymDiffGenerator { exponents: vec![], denominators: vec![] });
        }
        return Ok(out);
    }
    rec(a, m, &mut Vec::with_capacity(a.len()), &mut out);
    Ok(out)
}

/// `(⌊a_1 m⌋, …, ⌊a_n m⌋)`: the denominator exponents of the single
/// generator of `m(K_X + Δ)`.
pub fn canonical_power_exponents(a: &[Rational], m: u64) -> Result<Vec<u64>> {
    check_coefficients(a)?;
    Ok(a.iter().map(|aj| floor_mul(aj, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(t: u64, m: &str) -> FiberComponentData {
        FiberComponentData::new(t, m.parse().unwrap()).unwrap()
    }

    fn rec(label: &str, cs: Vec<FiberComponentData>) -> BaseDivisorRecord {
        BaseDivisorRecord::new(label, cs).unwrap()
    }

    #[test]
    fn base_multiplicity_examples() {
        assert_eq!(base_multiplicity(&rec("E", vec![comp(2, "1"), comp(3, "1")])).to_string(), "2");
        assert_eq!(base_multiplicity(&rec("E", vec![comp(2, "3"), comp(5, "1")])).to_string(), "5");
        assert_eq!(base_multiplicity(&rec("E", vec![comp(1, "1")])).to_string(), "1");
        assert_eq!(base_multiplicity(&rec("E", vec![comp(3, "inf"), comp(4, "inf")])).to_string(), "inf");
        assert_eq!(base_multiplicity(&rec("E", vec![comp(3, "inf"), comp(4, "5/2")])).to_string(), "10");
    }

    #[test]
    fn orbifold_base_examples() {
        let out = orbifold_base(&[
            rec("A", vec![comp(2, "1")]),
            rec("B", vec![comp(1, "1"), comp(7, "1")]),
            rec("C", vec![comp(1, "inf")]),
        ])
        .unwrap();
        assert_eq!(out, vec![("A".to_string(), Rational::new(1, 2)), ("C".to_string(), Rational::one())]);
        assert_eq!(
            orbifold_base(&[rec("A", vec![comp(2, "1")]), rec("A", vec![comp(3, "1")])]).unwrap_err(),
            Error::DuplicateLabel("A".into())
        );
        assert!(BaseDivisorRecord::new("E", vec![]).is_err());
        assert!(FiberComponentData::new(0, Multiplicity::one()).is_err());
    }

    #[test]
    fn symdiff_examples() {
        let a = [Rational::new(1, 2), Rational::zero()];
        let g = symdiff_generators(&a, 2).unwrap();
        let pairs: Vec<(Vec<u64>, Vec<u64>)> = g.into_iter().map(|g| (g.exponents, g.denominators)).collect();
        assert_eq!(
            pairs,
            vec![(vec![2, 0], vec![1, 0]), (vec![1, 1], vec![0, 0]), (vec![0, 2], vec![0, 0])]
        );
        let zeros = symdiff_generators(&vec![Rational::zero(); 3], 4).unwrap();
        assert!(zeros.iter().all(|g| g.denominators.iter().all(|&d| d == 0)));
        let ones = symdiff_generators(&vec![Rational::one(); 3], 4).unwrap();
        assert!(ones.iter().all(|g| g.denominators == g.exponents));
        assert!(symdiff_generators(&[Rational::new(3, 2)], 1).is_err());
    }

    #[test]
    fn canonical_exponents() {
        assert_eq!(canonical_power_exponents(&[Rational::new(1, 2)], 4).unwrap(), vec![2]);
        assert_eq!(canonical_power_exponents(&[Rational::new(2, 3), Rational::new(1, 2)], 6).unwrap(), vec![4, 3]);
        // m(1 - 1/m_j) rounded down, for integral multiplicities
        for mj in 2..9u64 {
            for m in 1..30u64 {
                let a = Multiplicity::integer(mj).unwrap().coefficient();
                let e = canonical_power_exponents(&[a], m).unwrap()[0];
                assert_eq!(e, m - m.div_ceil(mj));
            }
        }
    }
}
