//! Command-line front end for `rotschur`: argument definitions, text and
//! JSON formats, verification suites and the verb dispatcher.

pub mod args;
pub mod format;
pub mod run;
pub mod suites;

pub use args::Cli;
pub use run::{run, Status};
