//! File formats, corpus tooling and the command line for `cyclex-core`.

pub mod cli;
pub mod corpus;
pub mod formats;

pub use cyclex_core as core;
