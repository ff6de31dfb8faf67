//! Exact model of an indexed locally convex cone that is barreled but not
//! upper-barreled.
//!
//! The cone `P` consists of positive rationals tagged with a positive integer
//! index, a neutral element `0_0` and an absorbing element `inf_inf`. Sums of
//! members with different indices collapse to `inf_inf`, and the neighborhood
//! radius of an index-`j` member scales with `j`. The crate provides:
//!
//! * [`scalar`]: exact nonnegative rationals and `[0, +inf]`;
//! * [`laws`]: a seeded law checker for cones, preorders and neighborhood systems;
//! * [`indexed`]: the cone `P`, its subcones `Q_j` and the map `Q_j -> [0, +inf]`;
//! * [`dual`]: the dual functionals of `P` and their polars;
//! * [`barrel`]: the barrels `B_j`, `B` and the sets `u~`, with constructive
//!   witnesses for barrel conditions, barreledness and the failure of
//!   upper-barreledness;
//! * [`suite`]: named verification suites and their reports.

pub mod barrel;
pub mod dual;
pub mod indexed;
pub mod instances;
pub mod laws;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod suite;

pub use barrel::BarrelSpec;
pub use dual::DualFunctional;
pub use indexed::PElem;
pub use report::{LawReport, Violation};
pub use sample::{SampleConfig, Sampler};
pub use scalar::{ExtScalar, Scalar};
pub use suite::{SuiteName, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pair is a member of the barrel: {0}")]
    Member(String),
    #[error("uncovered case: {0}")]
    UncoveredCase(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
