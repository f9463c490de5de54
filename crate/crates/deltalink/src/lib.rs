//! File formats, the shipped catalog and evidence, table and graph
//! rendering, and the `deltalink` command line on top of `deltalink-core`.

pub mod cli;
pub mod data;
pub mod figures;
pub mod render;

pub use deltalink_core as core;
