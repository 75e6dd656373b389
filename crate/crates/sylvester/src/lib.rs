//! Exact closed forms for the restricted partition function W(s, d^m).
//!
//! W(s, d^m) counts the ways to write s as a non-negative integer
//! combination of the parts d_1 … d_m. This crate computes it exactly, two
//! independent ways:
//!
//! * as a sum of Sylvester waves — quasi-polynomials built from Bernoulli
//!   and generalized Euler polynomials of higher order with periodic
//!   coefficients living in cyclotomic fields ([`waves`]);
//! * by dynamic programming over the defining recursion ([`oracle`]),
//!   which serves as the ground truth for everything the closed forms
//!   produce.
//!
//! All arithmetic is exact: arbitrary-precision rationals, polynomials over
//! them, and power-basis cyclotomic field elements. A floating-point path
//! exists only for the trigonometric extension of waves to real arguments.
//!
//! On top of the partition machinery, [`molien`] counts homogeneous
//! invariants of finite groups from the rational form of their Molien
//! series by convolution with W.

pub mod bernoulli;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod frobenius;
pub mod molien;
pub mod oracle;
pub mod partset;
pub mod poly;
pub mod rational;
pub mod waves;

pub use error::{Error, Result};
pub use partset::{make_partset, natural_set, PartSet};
pub use poly::RatPoly;
pub use rational::Rational;
pub use waves::{
    eval_exact, eval_real, partition_quasipoly, polynomial_wave, two_prime_closed_form, wave,
    wave_recursion_residual, QuasiPoly, WaveComponent, WaveDecomposition,
};
