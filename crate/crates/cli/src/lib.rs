//! Space files, command dispatch and reports for `logchern-core`.

pub mod commands;
pub mod document;
pub mod error;
pub mod poly_expr;
pub mod report;

pub use commands::{load_space, Command, Context, Registry};
pub use document::{build_model, parse_space, serialize, Model, SpaceFile};
pub use error::{CliError, Code, ParseError};
pub use report::{emit_json, emit_text, parse_json, Report, TextOptions};
