//! Exact verification of q-series determinant, Pfaffian and Askey-Wilson
//! identities over the Gaussian rationals.
//!
//! The crate is `no_std` with `alloc`. It has no IO and no threads; the
//! companion `qdet-lab` crate adds parallel suites, report files and the CLI.
//!
//! Layers, bottom up:
//! - [`exactnum`]: the scalar field `Q(i)`.
//! - [`qseries`]: Pochhammer symbols and terminating hypergeometric series.
//! - [`orthopoly`]: Askey-Wilson and related families, each with independent
//!   evaluation paths.
//! - [`exactlinalg`]: determinants, Pfaffians and submatrices.
//! - [`identitylab`]: matrix builders, the parameter sampler and the registry
//!   of identity checks.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod exactlinalg;
pub mod exactnum;
pub mod identitylab;
pub mod orthopoly;
pub mod qseries;

pub use error::{ArithError, EvalError, MatrixError, ParseError};
pub use exactlinalg::{DetMethod, ExactMatrix};
pub use exactnum::{GaussianRational, Invertible};
