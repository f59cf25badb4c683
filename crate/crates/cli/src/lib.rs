//! Command-line front end for `combinatoria-core`.
//!
//! Subcommands: `enumerate`, `decode`, `forms`, `table`, `verify`. Success output goes to
//! stdout, diagnostics to stderr. Exit codes are stable across commands:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 1    | a verification check failed               |
//! | 2    | usage or syntax error                     |
//! | 3    | semantic error (membership, range, overlap) |

pub mod app;
pub mod render;
pub mod universe_spec;
pub mod verify;

pub use app::{run, ExitCode};
pub use universe_spec::UniverseSpec;
