//! Front end over the equipartition kernels: argument surface,
//! rendering, and the acceptance suite. The binary in `main.rs` is a
//! thin shell around [`run::execute`] so that tests can drive full
//! invocations in-process and compare bytes.

pub mod acceptance;
pub mod args;
pub mod run;

pub use args::{Args, Command, Format};
pub use run::{execute, RunError};
