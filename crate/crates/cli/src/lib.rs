//! Script runner for construction scripts.

pub mod report;
pub mod run;
pub mod script;
pub mod value;

pub use report::{Outcome, Report};
pub use run::{Options, RunError, Runner};
pub use script::{parse_script, Script};
