//! Validation results and their serializations.

use std::collections::BTreeMap;

use dqa_rdf::vocab::{rdf, sh};
use dqa_rdf::{write_turtle, Graph, Term};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::ShapeError;
use crate::model::Path;
use crate::render::encode_path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationResult {
    pub focus_node: Term,
    pub result_path: Option<Path>,
    pub value: Option<Term>,
    /// The shape that produced the result; may be nested inside the root.
    pub source_shape: Term,
    /// Key of the root shape that was being validated.
    pub source_shape_id: String,
    pub source_component: String,
    pub message: String,
}

impl ValidationResult {
    pub(crate) fn sort_key(&self) -> (String, String, String, String, String, String) {
        (
            self.source_shape_id.clone(),
            self.focus_node.to_ntriples(),
            self.source_component.clone(),
            self.result_path.as_ref().map(|p| p.to_string()).unwrap_or_default(),
            self.value.as_ref().map(Term::to_ntriples).unwrap_or_default(),
            self.source_shape.to_ntriples(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "focusNode": self.focus_node.to_ntriples(),
            "resultPath": self.result_path.as_ref().map(|p| p.to_string()),
            "value": self.value.as_ref().map(Term::to_ntriples),
            "sourceShape": self.source_shape_id,
            "sourceComponent": self.source_component,
            "message": self.message,
        })
    }
}

/// Per root shape counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ShapeSummary {
    pub focus_nodes: usize,
    pub results: usize,
    pub failing_focus_nodes: usize,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub conforms: bool,
    pub results: Vec<ValidationResult>,
    /// Keyed by root shape key; only shapes that compiled appear here.
    pub shapes: BTreeMap<String, ShapeSummary>,
    pub errors: Vec<ShapeError>,
}

impl ValidationReport {
    /// Combines reports from separate validation runs into one ordered report.
    pub fn merge(reports: impl IntoIterator<Item = ValidationReport>) -> ValidationReport {
        let mut out = ValidationReport::default();
        for r in reports {
            out.results.extend(r.results);
            out.errors.extend(r.errors);
            for (k, v) in r.shapes {
                let e = out.shapes.entry(k).or_default();
                e.focus_nodes += v.focus_nodes;
                e.results += v.results;
                e.failing_focus_nodes += v.failing_focus_nodes;
            }
        }
        out.results.sort_by_cached_key(|r| r.sort_key());
        out.errors.sort_by(|a, b| a.shape().cmp(b.shape()));
        out.conforms = out.results.is_empty();
        out
    }

    pub fn results_for<'a>(&'a self, shape_key: &'a str) -> impl Iterator<Item = &'a ValidationResult> + 'a {
        self.results.iter().filter(move |r| r.source_shape_id == shape_key)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conforms": self.conforms,
            "resultCount": self.results.len(),
            "results": self.results.iter().map(ValidationResult::to_json).collect::<Vec<_>>(),
            "shapes": self.shapes,
            "errors": self.errors.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new();
        for (p, ns) in [("sh", sh::NS), ("rdf", rdf::NS)] {
            g.set_prefix(p, ns);
        }
        let report = Term::blank("report");
        g.add(report.clone(), rdf::TYPE, Term::iri(sh::VALIDATION_REPORT));
        g.add(report.clone(), sh::CONFORMS, Term::boolean(self.conforms));
        for (i, r) in self.results.iter().enumerate() {
            let node = Term::blank(&format!("r{i}"));
            g.add(report.clone(), sh::RESULT, node.clone());
            g.add(node.clone(), rdf::TYPE, Term::iri(sh::VALIDATION_RESULT));
            g.add(node.clone(), sh::FOCUS_NODE, r.focus_node.clone());
            if let Some(p) = &r.result_path {
                let pt = encode_path(&mut g, p);
                g.add(node.clone(), sh::RESULT_PATH, pt.clone());
            }
            if let Some(v) = &r.value {
                g.add(node.clone(), sh::VALUE, v.clone());
            }
            g.add(node.clone(), sh::SOURCE_SHAPE, r.source_shape.clone());
            g.add(node.clone(), sh::SOURCE_CONSTRAINT_COMPONENT, Term::iri(&r.source_component));
            g.add(node.clone(), sh::RESULT_SEVERITY, Term::iri(sh::VIOLATION));
            g.add(node.clone(), sh::RESULT_MESSAGE, Term::string(&r.message));
        }
        g
    }

    pub fn to_turtle(&self) -> String {
        write_turtle(&self.to_graph())
    }
}
