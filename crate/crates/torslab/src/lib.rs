//! Input formats, reports and the command-line driver for `torslab-core`.
//!
//! * [`input`]: the quiver-spec text format and preset names.
//! * [`parallel`]: exhaustive enumerations split across threads.
//! * [`report`]: text, JSON and DOT renderings.
//! * [`cli`]: argument parsing and command dispatch.

pub mod cli;
pub mod input;
pub mod parallel;
pub mod report;
