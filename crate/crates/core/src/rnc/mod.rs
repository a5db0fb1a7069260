//! Numerical construction of rational normal curves of degree `n` on `ℙⁿ`
//! through a given point, meeting each of `n+2` hyperplanes in general
//! position in a single point.

mod phi;
mod solver;
mod verify;

pub use phi::{hierarchical_seed, log_derivative_jacobian, phi_jacobian, phi_map, scaled_log_jacobian};
pub use solver::{solve_rnc, solve_rnc_rational, SolverConfig};
pub use verify::{low_order_residual, power_polynomial, verify_rnc, RncSolution, VerificationReport};
