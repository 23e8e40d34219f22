//! Command-line front end: the fixture file format, text and DOT reports,
//! and the `modgoldie` command.

mod cli;
pub mod dot;
pub mod fixture;
pub mod report;

pub use cli::{run, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
pub use fixture::{
    load_fixture, parse_fixture, parse_fixture_file, parse_submodule, render_fixture_file,
    FixtureError, FixtureFile, ModuleSpec, RingSpec, FORMAT_VERSION,
};
