//! JSON schemas, report documents, built-in examples, and job dispatch for
//! the `equiseries` command-line tool.

pub mod examples;
pub mod report;
pub mod run;
pub mod schema;
pub mod value;

pub use report::{render_table, Report};
pub use run::{run, CommandKind, ExampleSpec, HilbertMode, JobSpec, OutputFormat, RunOutcome};
