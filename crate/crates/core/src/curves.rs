//! Orbifold rational and elliptic curves (actual and virtual), the
//! uniruledness decision cascade for hyperplane types, and the census of
//! exceptional Fano types on `ℙ³`.

use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::enumfrac::{max_fano_tail, FanoTail, UnitFractionTuple};
use crate::error::{Error, Result};
use crate::multiplicity::{ExtRational, Multiplicity};
use crate::orbifold::{classify, Classification, OrbifoldType};
use crate::rational::{unit_fraction_sum, Rational};

/// The boundary components met by a curve at one point `a ∈ C`, with
/// contact orders `t_{j,a}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContactRecord {
    pub point_id: String,
    pub contacts: Vec<(usize, u64)>,
}

impl ContactRecord {
    pub fn new(point_id: impl Into<String>, contacts: Vec<(usize, u64)>) -> Result<Self> {
        let point_id = point_id.into();
        if contacts.is_empty() {
            return Err(Error::InvalidContact(point_id, "no contacts"));
        }
        if contacts.iter().any(|&(_, t)| t == 0) {
            return Err(Error::InvalidContact(point_id, "contact order must be positive"));
        }
        let mut seen = HashSet::new();
        if !contacts.iter().all(|(j, _)| seen.insert(*j)) {
            return Err(Error::InvalidContact(point_id, "repeated divisor index"));
        }
        Ok(ContactRecord { point_id, contacts })
    }
}

/// A smooth projective curve of given genus together with its contacts
/// with the boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedCurve {
    genus: u32,
    records: Vec<ContactRecord>,
}

impl MarkedCurve {
    pub fn new(genus: u32, records: Vec<ContactRecord>) -> Result<Self> {
        let mut seen = HashSet::new();
        for r in &records {
            if !seen.insert(r.point_id.as_str()) {
                return Err(Error::InvalidContact(r.point_id.clone(), "duplicate point id"));
            }
        }
        Ok(MarkedCurve { genus, records })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn records(&self) -> &[ContactRecord] {
        &self.records
    }
}

/// The orbifold divisor `Δ_g` induced on a curve. Virtual multiplicities
/// `m/t` may be smaller than one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveOrbifoldDivisor {
    pub genus: u32,
    pub points: Vec<(String, ExtRational)>,
}

impl CurveOrbifoldDivisor {
    /// `deg(K_C + Δ_g) = 2g - 2 + Σ (1 - 1/m)`.
    pub fn degree(&self) -> Rational {
        let base = Rational::from(2 * i64::from(self.genus) - 2);
        self.points.iter().fold(base, |acc, (_, m)| acc + m.coefficient())
    }

    /// True when every point has multiplicity exactly one.
    pub fn is_trivial(&self) -> bool {
        self.points.iter().all(|(_, m)| m.finite().is_some_and(Rational::is_one))
    }
}

/// Per point, the max over touched components of `max(1, m_j/t)` (or of
/// `m_j/t` when `virtual_` is set).
pub fn delta_g(c: &MarkedCurve, t: &OrbifoldType, virtual_: bool) -> Result<CurveOrbifoldDivisor> {
    let one = ExtRational::Finite(Rational::one());
    let points = c
        .records
        .iter()
        .map(|rec| {
            let mut best: Option<ExtRational> = None;
            for &(j, order) in &rec.contacts {
                let m = t.mults().get(j).ok_or(Error::IndexOutOfRange { index: j, len: t.len() })?;
                let mut v = m.value().div_int(order);
                if !virtual_ && v < one {
                    v = one.clone();
                }
                best = Some(match best {
                    Some(b) if b >= v => b,
                    _ => v,
                });
            }
            Ok((rec.point_id.clone(), best.expect("records have contacts")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveOrbifoldDivisor { genus: c.genus, points })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CurveKind {
    DeltaRational,
    DeltaElliptic,
    Neither,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::DeltaRational => "DeltaRational",
            CurveKind::DeltaElliptic => "DeltaElliptic",
            CurveKind::Neither => "Neither",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveKindReport {
    pub kind: CurveKind,
    pub degree: Rational,
    pub divisor: CurveOrbifoldDivisor,
}

/// Classifies a marked curve by the sign of `deg(K_C + Δ_g)`. Rational
/// curves must have genus 0; elliptic ones genus 0 or 1.
pub fn curve_kind(c: &MarkedCurve, t: &OrbifoldType, virtual_: bool) -> Result<CurveKindReport> {
    let divisor = delta_g(c, t, virtual_)?;
    let degree = divisor.degree();
    let kind = match degree.signum() {
        std::cmp::Ordering::Less if c.genus == 0 => CurveKind::DeltaRational,
        std::cmp::Ordering::Equal if c.genus <= 1 => CurveKind::DeltaElliptic,
        _ => CurveKind::Neither,
    };
    Ok(CurveKindReport { kind, degree, divisor })
}

/// The rational normal curve of degree `n` meeting each of the `n+2`
/// hyperplanes in a single point with contact order `n`.
pub fn rnc_curve(t: &OrbifoldType) -> Result<MarkedCurve> {
    let n = t.n() as usize;
    if t.len() != n + 2 {
        return Err(Error::WrongCount { expected: n + 2, got: t.len() });
    }
    let records = (0..n + 2)
        .map(|i| ContactRecord::new(format!("a{i}"), vec![(i, n as u64)]))
        .collect::<Result<Vec<_>>>()?;
    MarkedCurve::new(0, records)
}

/// `Σ 1/max(m_j, n) > 1`: the rational normal curve is an actual (not just
/// virtual) orbifold rational curve.
pub fn rnc_actual_check(t: &OrbifoldType) -> Result<bool> {
    let n = t.n() as usize;
    if t.len() != n + 2 {
        return Err(Error::WrongCount { expected: n + 2, got: t.len() });
    }
    let floor = Rational::from(t.n());
    let mut sum = Rational::zero();
    for m in t.mults() {
        let v = m.finite().ok_or(Error::InfiniteMultiplicity)?;
        let star = if v < &floor { &floor } else { v };
        sum += star.recip();
    }
    Ok(sum > Rational::one())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Method {
    FewHyperplanes,
    PencilInduction,
    RationalNormalCurve,
    TangentConic,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FewHyperplanes => "FewHyperplanes",
            Method::PencilInduction => "PencilInduction",
            Method::RationalNormalCurve => "RationalNormalCurve",
            Method::TangentConic => "TangentConic",
        }
    }
}

/// `Exceptional` means only that none of the available constructions
/// applies.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum UniruledVerdict {
    NotFano,
    Provable(Method),
    Exceptional,
}

impl UniruledVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            UniruledVerdict::NotFano => "NotFano",
            UniruledVerdict::Provable(_) => "Provable",
            UniruledVerdict::Exceptional => "Exceptional",
        }
    }

    pub fn method(&self) -> Option<Method> {
        match self {
            UniruledVerdict::Provable(m) => Some(*m),
            _ => None,
        }
    }
}

impl fmt::Display for UniruledVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniruledVerdict::Provable(m) => write!(f, "Provable({})", m.as_str()),
            other => f.write_str(other.status()),
        }
    }
}

/// Decision cascade: Fano check, lines through the common intersection
/// (`k <= n+1`), tangent conics (`n = 2`), pencil through `H_n ∩ H_{n+1}`
/// with the second-largest multiplicity omitted, then the rational normal
/// curve criterion.
pub fn uniruledness_verdict(t: &OrbifoldType) -> Result<UniruledVerdict> {
    for m in t.mults() {
        match m.as_integer() {
            Some(v) if v >= 2 => {}
            _ => return Err(Error::UnsupportedMultiplicity(m.to_string())),
        }
    }
    if t.n() < 2 {
        return Err(Error::UnsupportedDimension(t.n()));
    }
    Ok(verdict_unchecked(t))
}

fn verdict_unchecked(t: &OrbifoldType) -> UniruledVerdict {
    if classify(t) != Classification::Fano {
        return UniruledVerdict::NotFano;
    }
    let n = t.n() as usize;
    let k = t.len();
    if k <= n + 1 {
        return UniruledVerdict::Provable(Method::FewHyperplanes);
    }
    if k != n + 2 {
        return UniruledVerdict::Exceptional;
    }
    if n == 2 {
        return UniruledVerdict::Provable(Method::TangentConic);
    }
    let without_n: Rational = t
        .mults()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != n)
        .map(|(_, m)| m.reciprocal())
        .sum();
    if without_n > Rational::one() {
        let slice = t.drop_index(n).expect("index n < n+2");
        if matches!(verdict_unchecked(&slice), UniruledVerdict::Provable(_)) {
            return UniruledVerdict::Provable(Method::PencilInduction);
        }
    }
    if rnc_actual_check(t).expect("finite, k = n+2") {
        return UniruledVerdict::Provable(Method::RationalNormalCurve);
    }
    UniruledVerdict::Exceptional
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExceptionalFamily {
    pub prefix: [u64; 4],
    /// Every `m_4 >= min_tail` gives an exceptional type.
    pub min_tail: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExceptionalCensus {
    /// Exceptional types whose first four reciprocals sum below one.
    pub sporadic: Vec<OrbifoldType>,
    /// Prefixes with reciprocal sum `>= 1` over four entries.
    pub families: Vec<ExceptionalFamily>,
}

fn p3(ms: [u64; 5]) -> OrbifoldType {
    OrbifoldType::integral(3, &ms).expect("valid integral type")
}

fn is_exceptional(ms: [u64; 5]) -> bool {
    verdict_unchecked(&p3(ms)) == UniruledVerdict::Exceptional
}

/// First `m4` in `[lo, hi]` whose type is exceptional, assuming the
/// exceptional tails of `prefix` within that range are upward closed.
fn first_exceptional_tail(prefix: [u64; 4], lo: u64, hi: u64) -> Option<u64> {
    let with = |m4: u64| is_exceptional([prefix[0], prefix[1], prefix[2], prefix[3], m4]);
    if lo > hi || !with(hi) {
        return None;
    }
    let (mut a, mut b) = (lo, hi);
    while a < b {
        let mid = a + (b - a) / 2;
        if with(mid) {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    Some(a)
}

fn ceil_u64(r: &Rational) -> u64 {
    r.ceil().to_u64().expect("bound fits in u64")
}

/// Largest integer strictly below `r`.
fn below(r: &Rational) -> u64 {
    let f = r.floor();
    let f = if r.is_integer() { f - 1 } else { f };
    f.to_u64().unwrap_or(0)
}

/// Every exceptional Fano type `(m_0, …, m_4)` on `ℙ³`.
///
/// Exceptional types need `Σ_{j<3} 1/m_j < 1` (otherwise the pencil
/// condition holds) and, being Fano with `m_4 >= m_3`, `Σ_{j<3} 1/m_j +
/// 2/m_3 > 1`; these bound the first four entries. For a prefix with
/// `Σ_{j<=3} 1/m_j < 1` the Fano condition bounds `m_4` (sporadic case);
/// otherwise every large `m_4` works and the family's least tail is
/// recorded. Within each prefix the pencil and normal-curve conditions are
/// monotone in `m_4`, so exceptional tails form an interval located by
/// bisection on the verdict.
pub fn enumerate_exceptional_p3() -> ExceptionalCensus {
    let one = Rational::one();
    let mut sporadic = Vec::new();
    let mut families = Vec::new();
    // Fano with 5 terms: 5/m0 > 1
    for m0 in 2..5u64 {
        let s0 = unit_fraction_sum(&[m0]);
        for m1 in m0..=below(&(Rational::from(4u64) / (&one - &s0))) {
            let s1 = unit_fraction_sum(&[m0, m1]);
            if s1 >= one {
                continue;
            }
            let m2_lo = m1.max(below(&(&one - &s1).recip()) + 1);
            for m2 in m2_lo..=below(&(Rational::from(3u64) / (&one - &s1))) {
                let s2 = unit_fraction_sum(&[m0, m1, m2]);
                if s2 >= one {
                    continue;
                }
                for m3 in m2..=below(&(Rational::from(2u64) / (&one - &s2))) {
                    let prefix = [m0, m1, m2, m3];
                    let s3 = unit_fraction_sum(&prefix);
                    if s3 < one {
                        let FanoTail::Max(hi) =
                            max_fano_tail(&UnitFractionTuple::new(prefix.to_vec()).expect("terms >= 2"))
                        else {
                            continue;
                        };
                        if let Some(lo) = first_exceptional_tail(prefix, m3, hi) {
                            sporadic.extend((lo..=hi).map(|m4| p3([m0, m1, m2, m3, m4])));
                        }
                    } else {
                        // Limits as m4 → ∞ of the two failing conditions.
                        let star: Rational = prefix.iter().map(|&m| Rational::new(1, m.max(3) as i64)).sum();
                        if star >= one {
                            continue;
                        }
                        let hi = ceil_u64(&(&one - &s2).recip())
                            .max(ceil_u64(&(&one - &star).recip()))
                            .max(m3)
                            .max(3);
                        if let Some(min_tail) = first_exceptional_tail(prefix, m3, hi) {
                            families.push(ExceptionalFamily { prefix, min_tail });
                        }
                    }
                }
            }
        }
    }
    ExceptionalCensus { sporadic, families }
}

impl ExceptionalCensus {
    /// Membership test for an arbitrary `ℙ³` type.
    pub fn contains(&self, t: &OrbifoldType) -> bool {
        let Some(ms) = t.integer_mults() else { return false };
        if t.n() != 3 || ms.len() != 5 {
            return false;
        }
        if self.families.iter().any(|f| f.prefix == ms[..4] && ms[4] >= f.min_tail) {
            return true;
        }
        self.sporadic.binary_search(t).is_ok()
    }
}

/// Heuristic dimension count for `Δ`-nice rational curves of degree `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NiceFamilyDimension {
    /// `-(K_X + Δ)·C = (n+1)d - d·Σ(1 - 1/m_j)`, net of reparametrizations.
    pub expected: Rational,
    /// Number of contact conditions `Δ·C = d·Σ(1 - 1/m_j)`.
    pub conditions: Rational,
}

pub fn expected_nice_family_dimension(t: &OrbifoldType, d: u64) -> Result<NiceFamilyDimension> {
    let n = t.n() as usize;
    if t.len() > n + 2 {
        return Err(Error::WrongCount { expected: n + 2, got: t.len() });
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    for m in t.mults() {
        let v = m.as_integer().ok_or_else(|| Error::UnsupportedMultiplicity(m.to_string()))?;
        if d % v != 0 {
            return Err(Error::DivisibilityViolation { mult: v.to_string(), degree: d });
        }
    }
    let dd = Rational::from(d);
    let boundary: Rational = t.mults().iter().map(Multiplicity::coefficient).sum();
    let conditions = &dd * &boundary;
    let expected = &dd * &Rational::from(t.n() + 1) - &conditions;
    Ok(NiceFamilyDimension { expected, conditions })
}
