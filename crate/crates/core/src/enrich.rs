//! Materializes class, property and named-individual typings so filtering
//! shapes can tell schema terms from entities.

use std::collections::BTreeSet;

use dqa_rdf::vocab::{owl, rdf, rdfs};
use dqa_rdf::{write_ntriples, Graph, Term};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct EnrichmentReport {
    pub added_class_typings: usize,
    pub added_property_typings: usize,
    pub added_named_individual_typings: usize,
    pub merged_schema_triples: usize,
}

impl EnrichmentReport {
    pub fn total(&self) -> usize {
        self.added_class_typings
            + self.added_property_typings
            + self.added_named_individual_typings
            + self.merged_schema_triples
    }
}

/// Types promoted to `rdfs:Class`.
pub const CLASS_TYPES: &[&str] = &[owl::CLASS, owl::DEPRECATED_CLASS, rdfs::DATATYPE];

/// Types promoted to `rdf:Property`.
pub const PROPERTY_TYPES: &[&str] = &[
    owl::DATATYPE_PROPERTY,
    owl::OBJECT_PROPERTY,
    owl::ANNOTATION_PROPERTY,
    owl::FUNCTIONAL_PROPERTY,
    owl::INVERSE_FUNCTIONAL_PROPERTY,
    owl::TRANSITIVE_PROPERTY,
    owl::SYMMETRIC_PROPERTY,
    owl::ASYMMETRIC_PROPERTY,
    owl::REFLEXIVE_PROPERTY,
    owl::IRREFLEXIVE_PROPERTY,
    owl::ONTOLOGY_PROPERTY,
    owl::DEPRECATED_PROPERTY,
];

/// Blank-node scope for a schema graph: a digest of its sorted N-Triples.
fn scope(g: &Graph) -> String {
    let mut lines: Vec<&str> = Vec::new();
    let nt = write_ntriples(g);
    lines.extend(nt.lines());
    lines.sort_unstable();
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    format!("s{}x", &hex::encode(h.finalize())[..12])
}

fn typed_any(g: &Graph, types: &[&str]) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    for ty in types {
        out.extend(g.subjects(rdf::TYPE, &Term::iri(ty)));
    }
    out
}

/// Classes declared in a schema graph.
fn declared_classes(g: &Graph) -> BTreeSet<Term> {
    let mut s = typed_any(g, CLASS_TYPES);
    s.extend(g.subjects(rdf::TYPE, &Term::iri(rdfs::CLASS)));
    s
}

/// Merges the schema graphs into the data graph and adds the typing triples.
pub fn enrich(data: &Graph, schemas: &[Graph]) -> (Graph, EnrichmentReport) {
    let mut g = data.clone();
    let mut report = EnrichmentReport::default();
    let scopes: Vec<String> = schemas.iter().map(scope).collect();
    for (s, sc) in schemas.iter().zip(&scopes) {
        report.merged_schema_triples += g.merge_scoped(s, sc);
    }

    let class = Term::iri(rdfs::CLASS);
    for t in typed_any(&g, CLASS_TYPES) {
        report.added_class_typings += usize::from(g.add(t, rdf::TYPE, class.clone()));
    }

    let property = Term::iri(rdf::PROPERTY);
    let mut props = typed_any(&g, PROPERTY_TYPES);
    props.extend(g.subjects_with(rdfs::DOMAIN));
    props.extend(g.subjects_with(rdfs::RANGE));
    for t in props {
        report.added_property_typings += usize::from(g.add(t, rdf::TYPE, property.clone()));
    }

    let mut schema_classes = BTreeSet::new();
    for s in schemas {
        schema_classes.extend(declared_classes(s));
    }
    let ni = Term::iri(owl::NAMED_INDIVIDUAL);
    for (s, sc) in schemas.iter().zip(&scopes) {
        for t in s.match_sorted(None, Some(&Term::iri(rdf::TYPE)), None) {
            if !schema_classes.contains(&t.object) {
                continue;
            }
            let subj = match &t.subject {
                Term::BlankNode(b) => Term::blank(&format!("{sc}{}", b.label())),
                other => other.clone(),
            };
            if g.has(&subj, rdf::TYPE, &class) || g.has(&subj, rdf::TYPE, &property) {
                continue;
            }
            report.added_named_individual_typings += usize::from(g.add(subj, rdf::TYPE, ni.clone()));
        }
    }
    (g, report)
}
