//! Command-line front end, file formats and invariant suites for
//! `torsionlab-core`.

pub use torsionlab_core as core;

pub mod app;
pub mod error;
pub mod golden;
pub mod latex;
pub mod schema;
pub mod serial;
pub mod table;
pub mod verify;
