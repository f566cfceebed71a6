//! Library behind the `flagcode` binary: argument surface, the worked
//! reference codes, output rendering, and the named verification suites.

pub mod args;
pub mod commands;
pub mod fixtures;
pub mod render;
pub mod sampling;
pub mod verify;

pub use commands::{run, ExitStatus};
