//! File formats, reports, random audits and the command dispatcher behind
//! the `cleanideal` binary.

pub mod audit;
pub mod commands;
pub mod format;
pub mod report;

pub use cleanideal_core as core;
