//! Unit-fraction combinatorics: Sylvester-type extensions, the bound `B_N`
//! on sums of `N` unit fractions below one, and maximal Fano tails.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::{unit_fraction_sum, Rational};

/// Largest `N` accepted by [`compute_bound_bn`] without an explicit limit.
pub const DEFAULT_SEARCH_LIMIT: usize = 5;

/// A nondecreasing tuple of integers `>= 2`, read as `Σ 1/a_j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UnitFractionTuple {
    terms: Vec<u64>,
}

impl UnitFractionTuple {
    pub fn new(mut terms: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = terms.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidArgument(format!("unit fraction denominator {bad} < 2")));
        }
        terms.sort_unstable();
        Ok(UnitFractionTuple { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum(&self) -> Rational {
        unit_fraction_sum(&self.terms)
    }
}

impl From<UnitFractionTuple> for Vec<u64> {
    fn from(t: UnitFractionTuple) -> Self {
        t.terms
    }
}

/// Returns `b` when `s = 1 - 1/b` with `b >= 2` integral.
pub fn deficit_denominator(s: &Rational) -> Option<BigInt> {
    let deficit = Rational::one() - s;
    if !deficit.is_positive() || !deficit.numer().is_one() {
        return None;
    }
    let b = deficit.denom().clone();
    (b >= BigInt::from(2)).then_some(b)
}

/// Appends `steps` terms: first `b + 1`, then keeps `b ← b(b+1)` and
/// appends `b + 1`, so that `Σ = 1 - 1/b` after every step.
pub fn sylvester_extend(t: &UnitFractionTuple, steps: usize) -> Result<UnitFractionTuple> {
    let sum = t.sum();
    let mut b = deficit_denominator(&sum)
        .ok_or_else(|| Error::NotDeficitForm(sum.to_string()))?
        .to_u64()
        .ok_or(Error::Overflow)?;
    let mut terms = t.terms.clone();
    for _ in 0..steps {
        let next = b.checked_add(1).ok_or(Error::Overflow)?;
        terms.push(next);
        b = b.checked_mul(next).ok_or(Error::Overflow)?;
    }
    Ok(UnitFractionTuple { terms })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FanoTail {
    /// Largest admissible last term.
    Max(u64),
    /// The prefix already sums to at least one; every tail works.
    Unbounded,
    /// Not even the smallest allowed tail pushes the sum above one.
    NoTail,
}

/// Largest `m >= max(last, 2)` with `Σ_prefix + 1/m > 1`.
pub fn max_fano_tail(prefix: &UnitFractionTuple) -> FanoTail {
    let sum = prefix.sum();
    if sum >= Rational::one() {
        return FanoTail::Unbounded;
    }
    let floor_m = prefix.terms.last().copied().unwrap_or(2).max(2);
    // need 1/m > d, i.e. m < 1/d
    let inv = (Rational::one() - sum).recip();
    let mut m = inv.floor();
    if inv.is_integer() {
        m -= 1;
    }
    match m.to_u64() {
        Some(m) if m >= floor_m => FanoTail::Max(m),
        Some(_) => FanoTail::NoTail,
        None => FanoTail::Max(u64::MAX),
    }
}

/// Smallest integer `a` with `s + 1/a < 1`, for `s < 1`.
fn min_term_below_one(s: &Rational) -> u64 {
    let inv = (Rational::one() - s).recip();
    (inv.floor() + BigInt::one()).to_u64().expect("term fits in u64")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundSearch {
    pub bound: Rational,
    pub maximizer: UnitFractionTuple,
}

/// `B_N = max { Σ 1/a_j : 2 <= a_1 <= ⋯ <= a_N, Σ < 1 }`.
pub fn compute_bound_bn(n: usize) -> Result<Rational> {
    Ok(bound_bn_search(n, DEFAULT_SEARCH_LIMIT)?.bound)
}

/// Branch-and-bound search for `B_N`.
///
/// The last term is always the smallest admissible one, which is at most
/// `1 + 1/(1 - partial sum)`; an interior term `a` with `r` terms still to
/// place can contribute at most `r/a`, which prunes every `a` once
/// `S + r/a <= best`. The leftmost branch is the greedy tuple, so `best` is
/// positive before any pruning decision.
pub fn bound_bn_search(n: usize, limit: usize) -> Result<BoundSearch> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if n > limit {
        return Err(Error::SearchLimitExceeded { requested: n, limit });
    }
    struct State {
        best: Rational,
        best_terms: Vec<u64>,
    }
    fn rec(prefix: &mut Vec<u64>, sum: &Rational, remaining: usize, st: &mut State) {
        let prev = prefix.last().copied().unwrap_or(2);
        let lo = min_term_below_one(sum).max(prev);
        if remaining == 1 {
            let total = sum + &Rational::new(1, lo as i64);
            if total > st.best {
                st.best = total;
                prefix.push(lo);
                st.best_terms = prefix.clone();
                prefix.pop();
            }
            return;
        }
        let r = Rational::from(remaining as u64);
        let mut a = lo;
        loop {
            let optimistic = sum + &(&r / &Rational::from(a));
            if optimistic <= st.best {
                break;
            }
            prefix.push(a);
            let s2 = sum + &Rational::new(1, a as i64);
            rec(prefix, &s2, remaining - 1, st);
            prefix.pop();
            a += 1;
        }
    }
    let mut st = State { best: Rational::zero(), best_terms: Vec::new() };
    rec(&mut Vec::with_capacity(n), &Rational::zero(), n, &mut st);
    Ok(BoundSearch { bound: st.best, maximizer: UnitFractionTuple { terms: st.best_terms } })
}

/// All nondecreasing `N`-tuples with terms in `[2, cap]` and `Σ 1/a_j < 1`,
/// in lexicographic order.
pub fn subunit_prefixes(n: usize, cap: u64) -> Vec<UnitFractionTuple> {
    fn rec(prefix: &mut Vec<u64>, sum: &Rational, remaining: usize, cap: u64, out: &mut Vec<UnitFractionTuple>) {
        if remaining == 0 {
            out.push(UnitFractionTuple { terms: prefix.clone() });
            return;
        }
        let prev = prefix.last().copied().unwrap_or(2);
        let lo = min_term_below_one(sum).max(prev);
        for a in lo..=cap {
            prefix.push(a);
            let s2 = sum + &Rational::new(1, a as i64);
            rec(prefix, &s2, remaining - 1, cap, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(UnitFractionTuple { terms: Vec::new() });
        return out;
    }
    rec(&mut Vec::with_capacity(n), &Rational::zero(), n, cap, &mut out);
    out
}

/// All nondecreasing `N`-tuples with terms in `[2, cap]` and `Σ 1/a_j >= 1`,
/// in lexicographic order. On `ℙⁿ` with `N = n+2` these are the Fano and
/// trivial-canonical types.
pub fn superunit_tuples(n: usize, cap: u64) -> Vec<UnitFractionTuple> {
    fn rec(prefix: &mut Vec<u64>, sum: &Rational, remaining: usize, cap: u64, out: &mut Vec<UnitFractionTuple>) {
        if remaining == 0 {
            if sum >= &Rational::one() {
                out.push(UnitFractionTuple { terms: prefix.clone() });
            }
            return;
        }
        let lo = prefix.last().copied().unwrap_or(2);
        for a in lo..=cap {
            // the remaining terms are all at most 1/a
            if sum + &Rational::new(remaining as i64, a as i64) < Rational::one() {
                break;
            }
            prefix.push(a);
            let s2 = sum + &Rational::new(1, a as i64);
            rec(prefix, &s2, remaining - 1, cap, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::with_capacity(n), &Rational::zero(), n, cap, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(t: &[u64]) -> UnitFractionTuple {
        UnitFractionTuple::new(t.to_vec()).unwrap()
    }

    /// Brute force over `[2, cap]^N`, independent of the pruned recursion.
    fn brute_subunit(n: usize, cap: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = vec![2u64; n];
        'outer: loop {
            if cur.windows(2).all(|w| w[0] <= w[1]) && unit_fraction_sum(&cur) < Rational::one() {
                out.push(cur.clone());
            }
            for i in (0..n).rev() {
                if cur[i] < cap {
                    cur[i] += 1;
                    for j in i + 1..n {
                        cur[j] = 2;
                    }
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    #[test]
    fn sylvester_sequences() {
        assert_eq!(sylvester_extend(&u(&[2]), 4).unwrap().terms(), [2, 3, 7, 43, 1807]);
        assert_eq!(sylvester_extend(&u(&[3, 3]), 3).unwrap().terms(), [3, 3, 4, 13, 157]);
        assert_eq!(sylvester_extend(&u(&[4, 4, 4]), 3).unwrap().terms(), [4, 4, 4, 5, 21, 421]);
    }

    #[test]
    fn sylvester_errors() {
        assert!(matches!(sylvester_extend(&u(&[3]), 1), Err(Error::NotDeficitForm(_))));
        assert!(matches!(sylvester_extend(&u(&[]), 1), Err(Error::NotDeficitForm(_))));
        assert!(matches!(sylvester_extend(&u(&[2, 2]), 1), Err(Error::NotDeficitForm(_))));
        assert_eq!(sylvester_extend(&u(&[2]), 9).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn tails() {
        assert_eq!(max_fano_tail(&u(&[3, 3, 4, 13])), FanoTail::Max(155));
        assert_eq!(max_fano_tail(&u(&[2, 3, 7, 43])), FanoTail::Max(1805));
        assert_eq!(max_fano_tail(&u(&[2, 2])), FanoTail::Unbounded);
        assert_eq!(max_fano_tail(&u(&[2, 3, 7, 42])), FanoTail::Unbounded);
        // 1/3 + 1/3 needs m < 3 but the tuple forces m >= 3
        assert_eq!(max_fano_tail(&u(&[3, 3])), FanoTail::NoTail);
        assert_eq!(max_fano_tail(&u(&[])), FanoTail::NoTail);
    }

    #[test]
    fn bound_small_n() {
        assert_eq!(compute_bound_bn(1).unwrap(), Rational::new(1, 2));
        assert_eq!(compute_bound_bn(2).unwrap(), Rational::new(5, 6));
        assert_eq!(compute_bound_bn(3).unwrap(), Rational::new(41, 42));
        assert_eq!(bound_bn_search(3, 5).unwrap().maximizer.terms(), [2, 3, 7]);
        assert_eq!(compute_bound_bn(6).unwrap_err(), Error::SearchLimitExceeded { requested: 6, limit: 5 });
        assert!(compute_bound_bn(0).is_err());
    }

    #[test]
    fn bound_matches_brute_force() {
        for n in 1..=3 {
            let brute = brute_subunit(n, 50).into_iter().map(|t| unit_fraction_sum(&t)).max().unwrap();
            assert_eq!(compute_bound_bn(n).unwrap(), brute);
        }
    }

    #[test]
    fn superunit_matches_brute_force() {
        for (n, cap) in [(1, 5), (3, 12), (4, 9), (5, 7)] {
            let got: Vec<Vec<u64>> = superunit_tuples(n, cap).into_iter().map(Into::into).collect();
            let mut all = Vec::new();
            let mut cur = vec![2u64; n];
            'outer: loop {
                if cur.windows(2).all(|w| w[0] <= w[1]) && unit_fraction_sum(&cur) >= Rational::one() {
                    all.push(cur.clone());
                }
                for i in (0..n).rev() {
                    if cur[i] < cap {
                        cur[i] += 1;
                        cur[i + 1..].iter_mut().for_each(|x| *x = 2);
                        continue 'outer;
                    }
                }
                break;
            }
            assert_eq!(got, all, "n={n} cap={cap}");
        }
        assert!(superunit_tuples(0, 5).is_empty());
    }

    #[test]
    fn subunit_examples() {
        let got: Vec<Vec<u64>> = subunit_prefixes(1, 4).into_iter().map(Into::into).collect();
        assert_eq!(got, vec![vec![2], vec![3], vec![4]]);
        let got: Vec<Vec<u64>> = subunit_prefixes(2, 4).into_iter().map(Into::into).collect();
        assert_eq!(got, brute_subunit(2, 4));
        assert!(subunit_prefixes(3, 7).iter().any(|t| t.terms() == [2, 3, 7]));
        for (n, cap) in [(2, 12), (3, 15), (4, 9)] {
            let got: Vec<Vec<u64>> = subunit_prefixes(n, cap).into_iter().map(Into::into).collect();
            assert_eq!(got, brute_subunit(n, cap), "n={n} cap={cap}");
        }
    }
}
