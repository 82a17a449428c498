//! Library surface of the command-line tool: argument handling, the
//! on-disk cache and the reference-value replay suites. The binary in
//! `main.rs` is a thin wrapper so that integration tests can drive the
//! same code paths directly.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod verify;
