//! Exact computations with rank-2 Drinfeld `F_q[T]`-modules over finite
//! fields: Frobenius characteristic polynomials, supersingularity and
//! endomorphism-order data, and isogeny-class censuses checked against
//! closed-form counts.

pub mod census;
pub mod classify;
pub mod drinfeld;
pub mod error;
pub mod exec;
pub mod ff;
pub mod frobenius;
mod linalg;
pub mod ore;
pub mod poly;

pub use census::{CensusOptions, CensusReport};
pub use classify::{ClassificationReport, EndRingKind, Verdict};
pub use drinfeld::DrinfeldModule;
pub use error::{Error, Result};
pub use exec::Execution;
pub use ff::{Extension, Field, FieldElement};
pub use frobenius::CharPoly;
pub use ore::OrePoly;
pub use poly::Poly;
