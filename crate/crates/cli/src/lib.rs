//! File formats and report rendering for the `gelab` command-line tool.

pub mod input;
pub mod output;
