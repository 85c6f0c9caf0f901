//! Combinatorics and exact algebra for classifying Harish-Chandra modules
//! supported on nilpotent orbit closures.

pub mod error;
pub mod finite_group;
pub mod partition;
pub mod pin;
pub mod slices;
pub mod ab_diagram;
pub mod classify;
pub mod roots;
pub mod exceptional;

pub use error::{Error, Result};
pub use partition::Partition;
