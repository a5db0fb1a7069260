//! Orbifold pairs `(ℙⁿ | Δ)` supported on hyperplane arrangements.
//!
//! * [`orbifold`] and [`arrangement`]: exact types, Fano / Calabi–Yau /
//!   general type classification, general position and standardization.
//! * [`enumfrac`]: unit-fraction sequences and bounds.
//! * [`curves`]: orbifold rational and elliptic curves, the uniruledness
//!   cascade and the census of exceptional types on `ℙ³`.
//! * [`rnc`]: numerical construction of rational normal curves meeting
//!   `n+2` hyperplanes in single points.
//! * [`fibration`]: orbifold bases of fibrations and symmetric differential
//!   generators.

pub mod arrangement;
pub mod curves;
pub mod enumfrac;
pub mod error;
pub mod fibration;
pub mod linalg;
pub mod multiplicity;
pub mod orbifold;
pub mod rational;
pub mod rnc;

pub use arrangement::{is_general_position, standardize, ArrangementOrbifold, Homography};
pub use curves::{
    curve_kind, delta_g, enumerate_exceptional_p3, expected_nice_family_dimension, rnc_actual_check, rnc_curve,
    uniruledness_verdict, ContactRecord, CurveKind, CurveOrbifoldDivisor, ExceptionalCensus, ExceptionalFamily,
    MarkedCurve, Method, UniruledVerdict,
};
pub use enumfrac::{
    compute_bound_bn, max_fano_tail, subunit_prefixes, superunit_tuples, sylvester_extend, FanoTail, UnitFractionTuple,
};
pub use error::{Error, Result};
pub use fibration::{base_multiplicity, orbifold_base, BaseDivisorRecord, FiberComponentData};
pub use multiplicity::{ExtRational, Multiplicity};
pub use orbifold::{canonical_degree, classify, Classification, OrbifoldType};
pub use rational::Rational;
pub use rnc::{solve_rnc, verify_rnc, RncSolution, SolverConfig};
