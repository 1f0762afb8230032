//! The minor identities and root-location criteria as executable checks.

mod interlace;
mod minors;
mod pattern;
mod sturm;

pub use interlace::{interlace_verdict, InterlaceReport, Verdict};
pub use minors::{
    corner_entry_formula, defect_check, minor_identity_check, subset_sum_minor, DefectReport,
    IdentityReport, MinorCheck,
};
pub use pattern::{classify_pattern, Pattern, SignPattern};
pub use sturm::{
    cauchy_bound, count_real_roots, isolate_roots, sturm_chain, RootInterval, SturmChain,
};
