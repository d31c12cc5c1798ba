//! The whole assessment: enrich, profile, plan, validate, measure.

use dqa_rdf::vocab::{dcat, rdf, void};
use dqa_rdf::{Graph, Term};
use dqa_shacl::{validate, ValidationReport};

use crate::catalog::Artifact;
use crate::config::Config;
use crate::enrich::{enrich, EnrichmentReport};
use crate::error::InstantiateError;
use crate::instantiate::{plan, Plan};
use crate::measures::{compute_all, MeasureRecord};
use crate::profile::{profile, ProfileSummary};

/// Loaded input graphs.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub data: Graph,
    /// Ontologies and vocabularies.
    pub schemas: Vec<Graph>,
    pub metadata: Option<Graph>,
}

#[derive(Clone, Debug)]
pub struct Assessment {
    pub enrichment: EnrichmentReport,
    pub profile: ProfileSummary,
    pub plan: Plan,
    pub report: ValidationReport,
    pub measures: Vec<MeasureRecord>,
}

/// True when `g` describes a dataset with VoID or DCAT.
pub fn describes_dataset(g: &Graph) -> bool {
    [void::DATASET, dcat::DATASET]
        .iter()
        .any(|c| !g.subjects(rdf::TYPE, &Term::iri(c)).is_empty())
}

pub fn run(inputs: &Inputs, cfg: &Config) -> Result<Assessment, InstantiateError> {
    let (enriched, enrichment) = enrich(&inputs.data, &inputs.schemas);
    let (schema, _) = enrich(&Graph::new(), &inputs.schemas);
    let metadata = match &inputs.metadata {
        Some(m) => Some(m),
        None if describes_dataset(&inputs.data) => Some(&inputs.data),
        None => None,
    };
    let profile = profile(&inputs.data, &enriched, &schema, metadata, cfg);
    log::info!(
        "profiled {} triples, {} entities",
        profile.triple_count,
        profile.entity_count
    );
    let plan = plan(&profile, cfg, metadata.is_some(), !inputs.schemas.is_empty())?;
    log::info!("instantiated {} shapes", plan.shapes.len());
    for e in &plan.skipped {
        log::debug!("skipped {}: {}", e.template, e.reason);
    }
    let mut reports = vec![validate(&enriched, &plan.shapes_for(Artifact::DataGraph))];
    if let Some(m) = metadata {
        reports.push(validate(m, &plan.shapes_for(Artifact::MetadataGraph)));
    }
    if !inputs.schemas.is_empty() {
        reports.push(validate(&schema, &plan.shapes_for(Artifact::SchemaGraph)));
    }
    let report = ValidationReport::merge(reports);
    for e in &report.errors {
        log::warn!("{e}");
    }
    let measures = compute_all(&report, &plan.shapes, &profile);
    Ok(Assessment {
        enrichment,
        profile,
        plan,
        report,
        measures,
    })
}
