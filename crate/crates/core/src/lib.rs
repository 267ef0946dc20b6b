#![allow(clippy::needless_range_loop)]
pub mod cli;
pub mod constructions;
pub mod error;
pub mod factorization;
pub mod fpgroups;
pub mod invariants;
pub mod mcg;
pub mod relators;
pub mod surface;
pub mod words;

pub use error::{Error, Result};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "monodromy/1";
