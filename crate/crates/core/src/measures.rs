//! Data-quality measures derived from validation outcomes.

use std::collections::{BTreeMap, BTreeSet};

use dqa_rdf::vocab::void;
use dqa_rdf::Term;
use dqa_shacl::{Path, ValidationReport, ValidationResult};
use serde::Serialize;

use crate::catalog::{lookup, Denominator, MeasureKind};
use crate::instantiate::InstantiatedShape;
use crate::profile::ProfileSummary;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct MeasureRecord {
    pub group: String,
    pub dimension: String,
    pub metric_id: String,
    pub measure_kind: MeasureKind,
    pub shape_ids: Vec<String>,
    pub violations: usize,
    pub denominator: Option<usize>,
    pub raw_violation_ratio: Option<f64>,
    pub conformance_score: Option<f64>,
    pub applicable: bool,
}

/// Ratio outcome.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioScore {
    pub raw: Option<f64>,
    pub conformance: Option<f64>,
    pub applicable: bool,
}

/// 1 when there are no violations, 0 otherwise.
pub fn compute_binary(violations: usize) -> f64 {
    if violations == 0 {
        1.0
    } else {
        0.0
    }
}

pub fn compute_ratio(violations: usize, denominator: usize) -> RatioScore {
    if denominator == 0 {
        return RatioScore {
            raw: None,
            conformance: None,
            applicable: false,
        };
    }
    let raw = violations as f64 / denominator as f64;
    RatioScore {
        raw: Some(raw),
        conformance: Some(1.0 - raw),
        applicable: true,
    }
}

/// Per-unit scores (1 for zero violations) and their mean; `None` for an
/// empty list.
pub fn compute_composite(units: &[(String, usize)]) -> (Vec<(String, f64)>, Option<f64>) {
    let scores: Vec<(String, f64)> = units.iter().map(|(id, v)| (id.clone(), compute_binary(*v))).collect();
    if scores.is_empty() {
        return (scores, None);
    }
    let mean = scores.iter().map(|(_, s)| s).sum::<f64>() / scores.len() as f64;
    (scores, Some(mean))
}

fn population(d: Denominator, p: &ProfileSummary) -> BTreeSet<Term> {
    let iris = |s: &BTreeSet<String>| s.iter().map(|i| Term::iri(i)).collect();
    match d {
        Denominator::Entities => p.entities.clone(),
        Denominator::EntitiesWithInterlink => p.entities_with_interlink_set.clone(),
        Denominator::EntitiesWithLabel => p.entities_with_label_set.clone(),
        Denominator::EntitiesWithDescription => p.entities_with_description_set.clone(),
        Denominator::SchemaClasses => iris(&p.declared.schema_classes),
        Denominator::SchemaProperties => iris(&p.declared.schema_properties),
    }
}

/// Metric id of a result of the combined dataset-metadata shape.
fn split_metric(r: &ValidationResult) -> &'static str {
    match &r.result_path {
        Some(Path::Predicate(t)) if t.iri_str() == Some(void::EXAMPLE_RESOURCE) => "U2",
        Some(Path::Predicate(t)) if t.iri_str() == Some(void::VOCABULARY) => "U5",
        _ => "U3a",
    }
}

/// One record per metric with at least one planned shape, ordered by
/// (group, dimension, metric id).
pub fn compute_all(report: &ValidationReport, plan: &[InstantiatedShape], profile: &ProfileSummary) -> Vec<MeasureRecord> {
    let mut by_shape: BTreeMap<&str, Vec<&ValidationResult>> = BTreeMap::new();
    for r in &report.results {
        by_shape.entry(r.source_shape_id.as_str()).or_default().push(r);
    }
    let results = |id: &str| by_shape.get(id).map(Vec::as_slice).unwrap_or(&[]);

    let mut groups: BTreeMap<&str, Vec<&InstantiatedShape>> = BTreeMap::new();
    for s in plan {
        groups.entry(s.template_id).or_default().push(s);
    }

    let mut out = Vec::new();
    for (tid, shapes) in groups {
        let t = lookup(tid).expect("planned shapes come from the catalog");
        let shape_ids: Vec<String> = shapes.iter().map(|s| s.shape_id.clone()).collect();
        let record = |metric: &str| MeasureRecord {
            group: t.group.into(),
            dimension: t.dimension.into(),
            metric_id: metric.into(),
            measure_kind: t.kind,
            shape_ids: shape_ids.clone(),
            violations: 0,
            denominator: None,
            raw_violation_ratio: None,
            conformance_score: None,
            applicable: true,
        };
        match t.kind {
            MeasureKind::ReportOnly => {}
            MeasureKind::Binary if tid == "U2U3U5" => {
                let mut counts: BTreeMap<&str, usize> = [("U2", 0), ("U3a", 0), ("U5", 0)].into_iter().collect();
                for s in &shapes {
                    for r in results(&s.shape_id) {
                        *counts.get_mut(split_metric(r)).unwrap() += 1;
                    }
                }
                for (m, v) in counts {
                    let mut rec = record(m);
                    rec.violations = v;
                    rec.conformance_score = Some(compute_binary(v));
                    out.push(rec);
                }
            }
            MeasureKind::Binary => {
                let v: usize = shapes.iter().map(|s| results(&s.shape_id).len()).sum();
                let mut rec = record(tid);
                rec.violations = v;
                rec.conformance_score = Some(compute_binary(v));
                out.push(rec);
            }
            MeasureKind::Ratio => {
                let pop = population(t.denominator.expect("ratio templates name a denominator"), profile);
                let failing: BTreeSet<&Term> = shapes
                    .iter()
                    .flat_map(|s| results(&s.shape_id))
                    .map(|r| &r.focus_node)
                    .filter(|f| pop.contains(*f))
                    .collect();
                let score = compute_ratio(failing.len(), pop.len());
                let mut rec = record(tid);
                rec.violations = failing.len();
                rec.denominator = Some(pop.len());
                rec.raw_violation_ratio = score.raw;
                rec.conformance_score = score.conformance;
                rec.applicable = score.applicable;
                out.push(rec);
            }
            MeasureKind::Composite => {
                let mut units: BTreeMap<&str, usize> = BTreeMap::new();
                let mut total = 0;
                for s in &shapes {
                    let n = results(&s.shape_id).len();
                    total += n;
                    *units.entry(s.unit.as_str()).or_default() += n;
                }
                let list: Vec<(String, usize)> = units.into_iter().map(|(u, n)| (u.to_string(), n)).collect();
                let (scores, mean) = compute_composite(&list);
                let failing = scores.iter().filter(|(_, s)| *s == 0.0).count();
                let mut rec = record(tid);
                rec.violations = total;
                rec.denominator = Some(scores.len());
                rec.raw_violation_ratio = mean.map(|_| failing as f64 / scores.len() as f64);
                rec.conformance_score = mean;
                rec.applicable = mean.is_some();
                out.push(rec);
            }
        }
    }
    out.sort_by(|a, b| (&a.group, &a.dimension, &a.metric_id).cmp(&(&b.group, &b.dimension, &b.metric_id)));
    out
}
