//! Random vector norms of Hermitian and general square complex matrices.
//!
//! For an i.i.d. random vector X with distribution given by a
//! [`distributions::DistributionSpec`] and a Hermitian matrix A with
//! eigenvalue vector λ(A), the random vector norm is
//!
//! ```text
//! ‖A‖_{X,d} = ( E |⟨X, λ(A)⟩|^d )^{1/d}
//! ```
//!
//! and its complexification to arbitrary square Z is
//!
//! ```text
//! ⦀Z⦀_{X,d} = ( (2π·C(d,d/2))^{-1} ∮ ‖e^{it}Z + e^{-it}Z*‖_{X,d}^d dt )^{1/d}.
//! ```
//!
//! Modules:
//! - [`linalg`]: dense complex matrices, Jacobi eigensolver, char poly, trace words
//! - [`partitions`]: integer partitions of d with the coefficients z_π, y_π
//! - [`distributions`]: distribution families (moments, cumulants, MGF, sampling)
//! - [`symfun`]: truncated power series, CHS/power-sum/Bell polynomials, ₁F₁
//! - [`hnorm`]: the Hermitian norm by every pathway (partition sum, Bell, MGF,
//!   Monte Carlo, closed forms)
//! - [`cxnorm`]: complexified norm via trace polynomials and quadrature
//! - [`chs`]: complete-homogeneous-symmetric norm specializations
//! - [`majorization`]: majorization, HLP transport, Birkhoff decomposition
//! - [`bounds`]: norm-comparison inequalities and submultiplicativity scalars
//! - [`montecarlo`]: the seeded stochastic oracle
//! - [`verify`]: property suites shared by the CLI and the acceptance tests

pub mod bounds;
pub mod chs;
pub mod cxnorm;
pub mod distributions;
pub mod error;
pub mod hnorm;
pub mod io;
pub mod linalg;
pub mod majorization;
pub mod montecarlo;
pub mod partitions;
pub mod rng;
pub mod symfun;
pub mod verify;

pub use error::Error;
