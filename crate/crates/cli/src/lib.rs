//! Library surface of the batch front end, kept separate from the binary
//! so the commands, ingestion, and self-check suite are directly testable.

pub mod check;
pub mod commands;
pub mod request;
pub mod table;

pub use check::{run_check, CheckReport};
pub use commands::{cmd_curve, cmd_strain, cmd_stress, CommandOutput};
pub use request::{load_request, parse_family_flag, BatchRequest, Entry, IngestError, Overrides};
pub use table::{Cell, NumberFormat, Table};
