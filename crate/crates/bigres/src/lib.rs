//! Std companion to `bigres-core`: exact verification oracle over prime
//! fields, JSON serialization, and plain-text rendering for the CLI.

pub mod field;
pub mod json;
pub mod oracle;
pub mod render;
