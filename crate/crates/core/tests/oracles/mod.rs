//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

pub mod alexander;
pub mod clasp;
pub mod walk;
