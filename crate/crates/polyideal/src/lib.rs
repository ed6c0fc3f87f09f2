//! Command line and JSON-over-HTTP front end for `polyideal-core`: the
//! cell encoding, job requests and responses, and the service router.

pub mod encoding;
pub mod job;
pub mod server;

pub use encoding::{parse_encoding, render_braces, render_json, ParseError};
pub use job::{run_command, Command, JobRequest, JobResponse};
