//! Exact computation in Clifford/Weyl superalgebras and in the twisted
//! generalized Weyl (TGW) algebras obtained from monomial maps given by an
//! integer matrix.
//!
//! The crate is organised bottom-up:
//!
//! - [`signature`]: the sign variant and parity vector of an ambient algebra.
//! - [`superweyl`]: normal-ordered arithmetic in `A_{p|q}^±`.
//! - [`basering`]: the commutative degree-zero ring `R_{p|q}^±` and its
//!   automorphisms.
//! - [`tgwdatum`]: validation of a matrix, the derived TGW datum, the
//!   consistency equations and the representation `φ`.
//! - [`support`]: graded support via pattern-avoiding compositions, a brute
//!   force oracle and injectivity diagnostics.
//! - [`lattice`]: rank and integer kernel of a matrix.
//! - [`liesuper`]: differential-operator realizations of `gl(p|q)` and the
//!   orthosymplectic families, with relation residuals.
//! - [`io`]: the JSON matrix file format shared by the command line tool.

pub mod basering;
pub mod error;
pub mod io;
pub mod lattice;
pub mod liesuper;
pub mod signature;
pub mod support;
pub mod superweyl;
pub mod tgwdatum;

mod rational;

pub use basering::{AutomorphismExponents, BaseRingElement};
pub use error::{Error, Result};
pub use rational::{parse_rational, render_rational, Rational};
pub use signature::{Parity, Sign, Signature};
pub use superweyl::{Generator, SuperElement, SuperMonomial};
pub use tgwdatum::{GammaMatrix, GradedElement, Letter, TgwDatum, ValidatedGamma};
