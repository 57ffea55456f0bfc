//! Permutation groups, graphs and finite geometries for testing distance
//! transitivity, geodesic transitivity and antipodal covers.

pub mod cover;
pub mod drg;
pub mod error;
pub mod families;
pub mod geom;
pub mod graph;
pub mod group;
pub mod perm;
pub mod report;
pub mod transitivity;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::PermGroup;
pub use perm::Permutation;
