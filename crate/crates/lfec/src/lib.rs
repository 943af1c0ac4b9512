//! File formats, reports and the command-line driver built on
//! [`lfec_core`].

pub mod cli;
pub mod format;
pub mod report;
pub mod solve;

pub use format::{parse_col, parse_pg, serialize_col, serialize_pg, ParseError};
