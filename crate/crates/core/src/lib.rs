//! Shape catalog, graph profiling, shape instantiation and data-quality
//! measures.

pub mod catalog;
pub mod config;
pub mod enrich;
pub mod error;
pub mod instantiate;
pub mod manifest;
pub mod measures;
pub mod pipeline;
pub mod profile;

pub use catalog::{catalog, lookup, Artifact, MeasureKind, ShapeTemplate, Source, ValueKind};
pub use config::Config;
pub use enrich::{enrich, EnrichmentReport};
pub use error::{ConfigError, InstantiateError};
pub use instantiate::{instantiate, plan, render_template, BindingValue, Bindings, InstantiatedShape, Plan};
pub use measures::{compute_all, compute_binary, compute_composite, compute_ratio, MeasureRecord};
pub use pipeline::{run, Assessment, Inputs};
pub use profile::{profile, ProfileSummary};
