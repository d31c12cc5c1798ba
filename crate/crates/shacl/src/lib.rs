//! A SHACL Core validator over `dqa-rdf` graphs.

pub mod engine;
pub mod error;
pub mod model;
pub mod parse;
pub mod render;
pub mod report;

pub use engine::{compile_pattern, shape_key, validate, Validator};
pub use error::ShapeError;
pub use model::{Constraint, Path, Shape, Target};
pub use parse::{parse_path, parse_shape, parse_shapes};
pub use render::{encode_path, encode_shape, shapes_to_graph, shapes_to_turtle};
pub use report::{ShapeSummary, ValidationReport, ValidationResult};
