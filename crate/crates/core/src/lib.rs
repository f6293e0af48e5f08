//! Binomial edge ideals of simple graphs: combinatorial Gröbner bases,
//! Stanley–Reisner invariants of the initial ideal, F-pure thresholds and
//! Fedder-criterion certificates, plus a classification harness over small
//! connected graphs.

pub mod error;
pub mod field;
pub mod graph;
pub mod poly;
pub mod bei;
pub mod sr;
pub mod harness;

pub use error::{Error, Result};
