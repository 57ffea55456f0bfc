//! Finite fields, formed spaces and their point geometries.

pub mod actions;
pub mod classify;
pub mod field;
pub mod formulas;
pub mod linalg;
pub mod space;
pub mod tables;
pub mod witness;

pub use classify::{class_sizes, geometric_orbital_graph, suborbit_of, Classification, Classifier};
pub use field::{Elem, Field};
pub use space::{enumerate_points, FormKind, FormedSpace, OrthogonalType, PointSet, SpaceSpec};
pub use tables::verify_field_tables;
pub use witness::verify_witnesses;
