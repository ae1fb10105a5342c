//! Bridge insertion between disjoint geometric trees.
//!
//! The crate computes optimal single bridges (exact and greedy 2-approximate),
//! optimal twin bridges, and k-tree forest connections, and materializes the
//! hardness reductions around them (One-in-Three SAT to complementary
//! orthogonal vectors to one-bridge, SAT to 3-SUM/k-SUM, and vertex cover to
//! reducing distances between pairs) as verifiable instance generators.

pub mod bench;
pub mod bridge;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod io;
pub mod length;
pub mod reductions;
pub mod report;
pub mod twin;

pub use error::{Error, Result};
pub use length::{Backend, Length};
