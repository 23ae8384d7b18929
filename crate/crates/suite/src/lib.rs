//! Acceptance criteria for `schurkit`, run as the `acceptance` test target.
//!
//! The checks themselves live in [`schurkit::verify`]; this crate only
//! drives them with the weight bound used for acceptance.

pub use schurkit::verify::{run_all, run_criterion, CriterionReport};

/// Weight bound for the acceptance run.
pub const MAX_WEIGHT: usize = 8;
