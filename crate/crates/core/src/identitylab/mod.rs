//! Structured matrix builders, the non-degenerate sampler, the registry of
//! identity checks and the runner that turns them into reports.
//!
//! Verification is randomized exact identity testing: both sides of every
//! identity are rational functions of bounded degree, so exact agreement at
//! independent random points gives overwhelming, but not certified,
//! confidence.

pub mod builders;
pub mod checks;
pub mod params;
pub mod registry;
pub mod report;

pub use checks::Comparison;
pub use params::{ParamPoint, Slots};
pub use registry::{lookup, CheckSpec, Mode, REGISTRY};
pub use report::{
    plan, run_check, run_suite, run_trial, select, CheckResult, Job, Report, Status, Summary, UsageError,
};
