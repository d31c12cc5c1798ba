//! Statistics and declaration inventories that drive instantiation and
//! measure denominators.

use std::collections::{BTreeMap, BTreeSet};

use dqa_rdf::vocab::{dcat, owl, rdf, rdfs, void, xsd};
use dqa_rdf::{Graph, Term};
use serde::Serialize;

use crate::config::Config;

/// Declared domain of a property.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainKind {
    Thing,
    Class(String),
}

/// Classified declared range of a property.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeKind {
    Datatype(String),
    Class(String),
    LiteralAny,
    ResourceAny,
    ThingAny,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Declared {
    pub inverse_functional: BTreeSet<String>,
    pub functional: BTreeSet<String>,
    pub irreflexive: BTreeSet<String>,
    pub asymmetric: BTreeSet<String>,
    pub datatype_properties: BTreeSet<String>,
    pub object_properties: BTreeSet<String>,
    pub deprecated_classes: BTreeSet<String>,
    pub deprecated_properties: BTreeSet<String>,
    /// Stored once per unordered pair, smaller IRI first.
    pub disjoint_pairs: BTreeSet<(String, String)>,
    pub schema_classes: BTreeSet<String>,
    pub schema_properties: BTreeSet<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct MetadataInfo {
    pub void_dataset: bool,
    pub dcat_dataset: bool,
    pub uri_regex_patterns: Vec<String>,
    pub uri_spaces: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ProfileSummary {
    #[serde(skip)]
    pub entities: BTreeSet<Term>,
    #[serde(skip)]
    pub entities_with_label_set: BTreeSet<Term>,
    #[serde(skip)]
    pub entities_with_description_set: BTreeSet<Term>,
    #[serde(skip)]
    pub entities_with_interlink_set: BTreeSet<Term>,
    pub entity_count: usize,
    pub triple_count: usize,
    pub entities_with_label: usize,
    pub entities_with_description: usize,
    pub entities_with_interlink: usize,
    pub used_classes: BTreeSet<String>,
    pub used_properties: BTreeSet<String>,
    pub subjects_per_property: BTreeMap<String, usize>,
    pub datatype_range_properties: BTreeMap<String, BTreeSet<String>>,
    pub domain_properties: BTreeMap<String, BTreeSet<DomainKind>>,
    pub range_properties: BTreeMap<String, BTreeSet<RangeKind>>,
    pub declared: Declared,
    pub metadata: MetadataInfo,
}

fn iris_typed(g: &Graph, ty: &str) -> BTreeSet<String> {
    g.subjects(rdf::TYPE, &Term::iri(ty))
        .into_iter()
        .filter_map(|t| t.iri_str().map(str::to_string))
        .collect()
}

fn is_datatype(schema: &Graph, iri: &str) -> bool {
    iri.starts_with(xsd::NS)
        || iri == rdf::LANG_STRING
        || iri == rdf::HTML
        || iri == rdf::XML_LITERAL
        || schema.has(&Term::iri(iri), rdf::TYPE, &Term::iri(rdfs::DATATYPE))
}

/// Profiles a data graph.
///
/// `raw` is the data graph as loaded, `enriched` the enriched data graph,
/// `schema` the enriched union of the schema graphs.
pub fn profile(raw: &Graph, enriched: &Graph, schema: &Graph, metadata: Option<&Graph>, cfg: &Config) -> ProfileSummary {
    let mut p = ProfileSummary {
        triple_count: raw.len(),
        ..Default::default()
    };

    let excluded = [rdfs::CLASS, rdf::PROPERTY, owl::NAMED_INDIVIDUAL].map(Term::iri);
    for s in raw.subjects_with(&cfg.type_property) {
        if excluded.iter().any(|c| enriched.has(&s, rdf::TYPE, c)) {
            continue;
        }
        p.entities.insert(s);
    }
    for e in &p.entities {
        if enriched.object(e, &cfg.label_property).is_some() {
            p.entities_with_label_set.insert(e.clone());
        }
        if enriched.object(e, &cfg.comment_property).is_some() {
            p.entities_with_description_set.insert(e.clone());
        }
        if enriched.object(e, &cfg.sameas_property).is_some() {
            p.entities_with_interlink_set.insert(e.clone());
        }
    }
    p.entity_count = p.entities.len();
    p.entities_with_label = p.entities_with_label_set.len();
    p.entities_with_description = p.entities_with_description_set.len();
    p.entities_with_interlink = p.entities_with_interlink_set.len();

    p.used_classes = raw
        .objects_of(&cfg.type_property)
        .into_iter()
        .filter_map(|t| t.iri_str().map(str::to_string))
        .collect();
    for pid in raw.predicates() {
        let prop = raw.term(pid).iri_str().expect("predicate is an IRI").to_string();
        let n = raw.subjects_with(&prop).len();
        p.used_properties.insert(prop.clone());
        p.subjects_per_property.insert(prop, n);
    }

    let d = &mut p.declared;
    d.schema_classes = iris_typed(schema, rdfs::CLASS);
    d.schema_properties = iris_typed(schema, rdf::PROPERTY);
    d.inverse_functional = iris_typed(schema, owl::INVERSE_FUNCTIONAL_PROPERTY);
    d.functional = iris_typed(schema, owl::FUNCTIONAL_PROPERTY);
    d.irreflexive = iris_typed(schema, owl::IRREFLEXIVE_PROPERTY);
    d.asymmetric = iris_typed(schema, owl::ASYMMETRIC_PROPERTY);
    d.datatype_properties = iris_typed(schema, owl::DATATYPE_PROPERTY);
    d.object_properties = iris_typed(schema, owl::OBJECT_PROPERTY);
    d.deprecated_classes = iris_typed(schema, owl::DEPRECATED_CLASS);
    d.deprecated_properties = iris_typed(schema, owl::DEPRECATED_PROPERTY);
    let yes = Term::boolean(true);
    for s in schema.subjects(owl::DEPRECATED, &yes) {
        if let Some(i) = s.iri_str() {
            if d.schema_classes.contains(i) {
                d.deprecated_classes.insert(i.to_string());
            }
            if d.schema_properties.contains(i) {
                d.deprecated_properties.insert(i.to_string());
            }
        }
    }
    for t in schema.match_sorted(None, Some(&Term::iri(owl::DISJOINT_WITH)), None) {
        if let (Some(a), Some(b)) = (t.subject.iri_str(), t.object.iri_str()) {
            if a != b {
                let pair = if a < b { (a, b) } else { (b, a) };
                d.disjoint_pairs.insert((pair.0.to_string(), pair.1.to_string()));
            }
        }
    }

    for t in schema.match_sorted(None, Some(&Term::iri(rdfs::DOMAIN)), None) {
        let (Some(prop), Some(dom)) = (t.subject.iri_str(), t.object.iri_str()) else {
            continue;
        };
        let kind = if dom == owl::THING || dom == rdfs::RESOURCE {
            DomainKind::Thing
        } else {
            DomainKind::Class(dom.to_string())
        };
        p.domain_properties.entry(prop.to_string()).or_default().insert(kind);
    }
    for t in schema.match_sorted(None, Some(&Term::iri(rdfs::RANGE)), None) {
        let (Some(prop), Some(range)) = (t.subject.iri_str(), t.object.iri_str()) else {
            continue;
        };
        let kind = if range == rdfs::LITERAL {
            RangeKind::LiteralAny
        } else if range == rdfs::RESOURCE {
            RangeKind::ResourceAny
        } else if range == owl::THING {
            RangeKind::ThingAny
        } else if is_datatype(schema, range) {
            p.datatype_range_properties
                .entry(prop.to_string())
                .or_default()
                .insert(range.to_string());
            RangeKind::Datatype(range.to_string())
        } else {
            RangeKind::Class(range.to_string())
        };
        p.range_properties.entry(prop.to_string()).or_default().insert(kind);
    }

    if let Some(m) = metadata {
        p.metadata.void_dataset = !m.subjects(rdf::TYPE, &Term::iri(void::DATASET)).is_empty();
        p.metadata.dcat_dataset = !m.subjects(rdf::TYPE, &Term::iri(dcat::DATASET)).is_empty();
        let lexicals = |prop: &str| -> Vec<String> {
            let set: BTreeSet<String> = m
                .objects_of(prop)
                .into_iter()
                .map(|t| match &t {
                    Term::Literal(l) => l.lexical().to_string(),
                    other => other.iri_str().unwrap_or_default().to_string(),
                })
                .filter(|s| !s.is_empty())
                .collect();
            set.into_iter().collect()
        };
        p.metadata.uri_regex_patterns = lexicals(void::URI_REGEX_PATTERN);
        p.metadata.uri_spaces = lexicals(void::URI_SPACE);
    }
    p
}
