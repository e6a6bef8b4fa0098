//! Exact construction of smooth projective curves whose rational points are a
//! prescribed finite set.
//!
//! Given a finite set `S` of rational points in the affine plane or in
//! projective n-space, this crate builds a superelliptic model
//! `y^d = f(x)` (or a glued system of such models inside `P^n`) together
//! with a self-contained certificate recording every algebraic side
//! condition the construction relies on. A bounded-height point search
//! acts as an independent desk-scale oracle for the "no other points"
//! claim.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, never floating point.

pub mod arith;
pub mod certificate;
pub mod config;
pub mod construct;
pub mod error;
pub mod newton;
pub mod oracle;
pub mod poly;
pub mod projective;

pub use config::EffortConfig;
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
