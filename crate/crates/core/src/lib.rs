//! Exact verification of finite Rogers-Ramanujan and Andrews-Gordon
//! polynomial identities, their shifted (Garrett-Ismail-Stanton type)
//! variants, the Andrews-Santos polynomials, and the q-series limits.
//!
//! Every identity is checked as an exact equality of Laurent polynomials or
//! as coefficient agreement of truncated q-series. Results are collected in
//! [`report::VerificationReport`] values.

pub mod agcore;
pub mod cli;
pub mod error;
pub mod paths;
pub mod qalgebra;
pub mod report;
pub mod rrpoly;
pub mod santos;
pub mod series;

pub use error::{Error, Result};
pub use qalgebra::{LaurentPoly, RationalQ, TruncatedLaurentSeries};
