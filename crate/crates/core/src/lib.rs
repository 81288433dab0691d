//! Exact computer algebra for classical and quantum Schubert polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over `Z` in the variable
//!   families `x`, `y`, `z` and `q`, with determinants and divided differences.
//! * [`perm`]: permutations, codes, shapes, flags, pattern classes and
//!   reduced words.
//! * [`classical`]: Schubert and double Schubert polynomials, symmetric
//!   functions and expansion in the Schubert basis.
//! * [`quantum`]: quantum elementary and complete functions, quantum (double)
//!   Schubert polynomials, the quantization map and the determinantal
//!   formulas built on them.
//! * [`verify`]: exhaustive identity suites producing structured reports.
//! * [`cli`]: the `qsk` command line front end.

pub mod classical;
pub mod cli;
pub mod error;
pub mod perm;
pub mod poly;
pub mod quantum;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Composition, Flag, Partition, PermClass, Permutation, SkewShape};
pub use poly::{Family, Monomial, Polynomial, Variable};
