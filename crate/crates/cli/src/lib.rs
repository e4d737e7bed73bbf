//! Command-line frontend for the election-score toolkit: the `.elx` and
//! `.graph` file formats, score/winner/check commands, reduction-instance
//! forging with verifiable claim sidecars, and the self-test harness.

pub mod claims;
pub mod commands;
pub mod formats;
pub mod generators;
pub mod report;
pub mod selftest;
