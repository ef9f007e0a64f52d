//! Rigorous bounds for class numbers of curves over finite fields.
//!
//! The main bound comes from a truncated explicit formula for `log h`
//! ([`explicit`]); [`classical`] holds the earlier bounds it is compared
//! against, and [`zeta`] provides exact ground truth for testing.

pub mod arith;
pub mod classical;
pub mod curve;
pub mod error;
pub mod explicit;
pub mod fixtures;
pub mod interval;
pub mod profile;
pub mod report;
pub mod reproduce;
pub mod zeta;

pub use curve::{estimate_points, validate_profile, CurveProfile, FillPolicy, PointEstimates};
pub use error::{Error, Result};
pub use interval::Interval;
pub use report::{BoundReport, BoundSide};
pub use zeta::ZetaData;
