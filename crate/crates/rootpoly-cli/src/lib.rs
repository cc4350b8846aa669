//! Companion crate to `rootpoly`: file formats, corpus generation, reports
//! and the command implementations behind the `rootpoly` binary.

pub mod commands;
pub mod corpus;
pub mod formats;
pub mod report;
