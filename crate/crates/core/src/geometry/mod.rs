//! Exact geometric and tree-metric primitives shared by every solver.

pub mod graph;
pub mod planar;
pub mod point;
pub mod table;
pub mod tree;

pub use graph::Graph;
pub use planar::{validate_planar, PlanarGraph};
pub use point::{euclidean_distance, segments_cross, segments_intersect, Point};
pub use table::{tree_diameter, DistanceTable};
pub use tree::{Edge, WeightedTree};
