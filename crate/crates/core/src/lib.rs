//! Alternating sign trapezoids, one-row column strict shifted plane
//! partitions, and the weight-preserving bijections between them.

pub mod algebra;
pub mod arrays;
pub mod bijection;
pub mod enumeration;
pub mod paths;
pub mod repro;
pub mod verify;
