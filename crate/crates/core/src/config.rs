//! Run configuration, read from a JSON document.

use std::collections::BTreeMap;
use std::path::Path;

use dqa_rdf::vocab::{owl, rdf, rdfs, schema, skos, xsd, STANDARD_PREFIXES};
use dqa_rdf::{parse_turtle, Term};
use serde::Deserialize;
use serde_json::Value;

use crate::catalog::{lookup, ValueKind};
use crate::error::ConfigError;
use crate::instantiate::{BindingValue, Bindings};

const KEYS: &[&str] = &[
    "type-property",
    "label-property",
    "comment-property",
    "sameas-property",
    "dataset-base-iri",
    "uri-length-threshold",
    "enabled-shape-overrides",
    "domain-knowledge",
    "prefixes",
];

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct RawConfig {
    type_property: Option<String>,
    label_property: Option<String>,
    comment_property: Option<String>,
    sameas_property: Option<String>,
    dataset_base_iri: Option<String>,
    uri_length_threshold: Option<i64>,
    #[serde(default)]
    enabled_shape_overrides: BTreeMap<String, bool>,
    #[serde(default)]
    domain_knowledge: BTreeMap<String, Vec<BTreeMap<String, Value>>>,
    #[serde(default)]
    prefixes: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub type_property: String,
    pub label_property: String,
    pub comment_property: String,
    pub sameas_property: String,
    pub dataset_base_iri: Option<String>,
    pub uri_length_threshold: u32,
    pub enabled_shape_overrides: BTreeMap<String, bool>,
    /// Bindings for manual templates, keyed by template id.
    pub domain_knowledge: BTreeMap<String, Vec<Bindings>>,
    pub prefixes: BTreeMap<String, String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            type_property: rdf::TYPE.to_string(),
            label_property: rdfs::LABEL.to_string(),
            comment_property: rdfs::COMMENT.to_string(),
            sameas_property: owl::SAME_AS.to_string(),
            dataset_base_iri: None,
            uri_length_threshold: 80,
            enabled_shape_overrides: BTreeMap::new(),
            domain_knowledge: BTreeMap::new(),
            prefixes: default_prefixes(),
        }
    }
}

fn default_prefixes() -> BTreeMap<String, String> {
    let mut m: BTreeMap<String, String> = STANDARD_PREFIXES
        .iter()
        .map(|(p, ns)| (p.to_string(), ns.to_string()))
        .collect();
    m.insert("skos".into(), skos::NS.into());
    m.insert("schema".into(), schema::NS.into());
    m
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Config::from_json(&text)
    }

    /// Parses a config document. Whitespace-only input yields the defaults.
    pub fn from_json(text: &str) -> Result<Config, ConfigError> {
        if text.trim().is_empty() {
            return Ok(Config::default());
        }
        let v: Value = serde_json::from_str(text).map_err(|e| ConfigError::Malformed(e.to_string()))?;
        let obj = v
            .as_object()
            .ok_or_else(|| ConfigError::Malformed("top level must be an object".into()))?;
        if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
            return Err(ConfigError::UnknownKey(k.clone()));
        }
        let raw: RawConfig = serde_json::from_value(v).map_err(|e| ConfigError::Malformed(e.to_string()))?;
        Config::from_raw(raw)
    }

    fn from_raw(raw: RawConfig) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (p, ns) in raw.prefixes {
            cfg.prefixes.insert(p, ns);
        }
        let prefixes = cfg.prefixes.clone();
        let iri_field = |key: &str, v: Option<String>, slot: &mut String| -> Result<(), ConfigError> {
            if let Some(s) = v {
                *slot = expand_iri(&s, &prefixes).map_err(|message| ConfigError::Invalid {
                    key: key.into(),
                    message,
                })?;
            }
            Ok(())
        };
        iri_field("type-property", raw.type_property, &mut cfg.type_property)?;
        iri_field("label-property", raw.label_property, &mut cfg.label_property)?;
        iri_field("comment-property", raw.comment_property, &mut cfg.comment_property)?;
        iri_field("sameas-property", raw.sameas_property, &mut cfg.sameas_property)?;
        if let Some(s) = raw.dataset_base_iri {
            let mut iri = String::new();
            iri_field("dataset-base-iri", Some(s), &mut iri)?;
            cfg.dataset_base_iri = Some(iri);
        }
        if let Some(n) = raw.uri_length_threshold {
            if n <= 0 || n > u32::MAX as i64 {
                return Err(ConfigError::Invalid {
                    key: "uri-length-threshold".into(),
                    message: format!("must be a positive integer, got {n}"),
                });
            }
            cfg.uri_length_threshold = n as u32;
        }
        for id in raw.enabled_shape_overrides.keys() {
            if lookup(id).is_none() {
                return Err(ConfigError::Invalid {
                    key: "enabled-shape-overrides".into(),
                    message: format!("unknown template {id}"),
                });
            }
        }
        cfg.enabled_shape_overrides = raw.enabled_shape_overrides;
        for (id, blocks) in raw.domain_knowledge {
            let t = lookup(&id).ok_or_else(|| ConfigError::Invalid {
                key: "domain-knowledge".into(),
                message: format!("unknown template {id}"),
            })?;
            let specs = t.placeholders();
            let mut out = Vec::new();
            for block in blocks {
                let mut b = Bindings::new();
                for (name, value) in block {
                    let spec = specs.iter().find(|s| s.name == name).ok_or_else(|| ConfigError::Invalid {
                        key: format!("domain-knowledge.{id}"),
                        message: format!("template {id} has no placeholder {name}"),
                    })?;
                    let bv = binding_from_json(&value, spec.kind, &cfg.prefixes).map_err(|message| {
                        ConfigError::Invalid {
                            key: format!("domain-knowledge.{id}.{name}"),
                            message,
                        }
                    })?;
                    b.insert(&name, bv);
                }
                out.push(b);
            }
            cfg.domain_knowledge.insert(id, out);
        }
        Ok(cfg)
    }

    pub fn is_enabled(&self, id: &str, default: bool) -> bool {
        self.enabled_shape_overrides.get(id).copied().unwrap_or(default)
    }
}

fn looks_absolute(s: &str) -> bool {
    match s.split_once(':') {
        Some((scheme, _)) => {
            !scheme.is_empty()
                && scheme.starts_with(|c: char| c.is_ascii_alphabetic())
                && scheme.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        }
        None => false,
    }
}

/// Expands a CURIE, `<iri>` or absolute IRI.
pub fn expand_iri(s: &str, prefixes: &BTreeMap<String, String>) -> Result<String, String> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
        return if looks_absolute(inner) {
            Ok(inner.to_string())
        } else {
            Err(format!("not an absolute IRI: {s}"))
        };
    }
    if let Some((p, local)) = s.split_once(':') {
        if let Some(ns) = prefixes.get(p) {
            return Ok(format!("{ns}{local}"));
        }
    }
    if looks_absolute(s) && !s.contains(char::is_whitespace) {
        return Ok(s.to_string());
    }
    Err(format!("not an IRI: {s}"))
}

/// Parses a single Turtle term, resolving prefixed names.
pub fn parse_term(s: &str, prefixes: &BTreeMap<String, String>) -> Result<Term, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty term".into());
    }
    let first = s.chars().next().unwrap();
    let turtle_like = matches!(first, '<' | '"' | '\'' | '_' | '+' | '-')
        || first.is_ascii_digit()
        || s == "true"
        || s == "false";
    if !turtle_like {
        return expand_iri(s, prefixes).map(|i| Term::iri(&i));
    }
    let mut doc = String::new();
    for (p, ns) in prefixes {
        doc.push_str(&format!("@prefix {p}: <{ns}> .\n"));
    }
    doc.push_str(&format!("<urn:dqa:s> <urn:dqa:p> {s} .\n"));
    let g = parse_turtle(&doc, None).map_err(|e| format!("cannot parse term {s}: {e}"))?;
    if g.len() != 1 {
        return Err(format!("not a single term: {s}"));
    }
    let t = g.iter().next().unwrap().object;
    if t.is_blank() {
        return Err(format!("blank nodes cannot be bound: {s}"));
    }
    Ok(t)
}

fn scalar_term(v: &Value, kind: ValueKind, prefixes: &BTreeMap<String, String>) -> Result<Term, String> {
    match v {
        Value::Bool(b) => Ok(Term::boolean(*b)),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Term::integer(i))
            } else {
                Ok(Term::typed(&n.to_string(), xsd::DECIMAL))
            }
        }
        Value::String(s) => match parse_term(s, prefixes) {
            Ok(t) => Ok(t),
            Err(e) => match kind {
                ValueKind::Date if dqa_rdf::xsd::lexical_ok(xsd::DATE, s) => Ok(Term::typed(s, xsd::DATE)),
                ValueKind::Iri => Err(e),
                _ if !s.contains(':') => Ok(Term::string(s)),
                _ => Err(e),
            },
        },
        other => Err(format!("unsupported value {other}")),
    }
}

/// Converts a JSON value to a binding of the given kind. Kind checking
/// happens at instantiation.
pub fn binding_from_json(
    v: &Value,
    kind: ValueKind,
    prefixes: &BTreeMap<String, String>,
) -> Result<BindingValue, String> {
    match kind {
        ValueKind::Regex => match v {
            Value::String(s) => Ok(BindingValue::Text(s.clone())),
            _ => Err("expected a string".into()),
        },
        ValueKind::TermList => {
            let items: Vec<&Value> = match v {
                Value::Array(a) => a.iter().collect(),
                other => vec![other],
            };
            items
                .into_iter()
                .map(|x| scalar_term(x, kind, prefixes))
                .collect::<Result<Vec<_>, _>>()
                .map(BindingValue::List)
        }
        _ => scalar_term(v, kind, prefixes).map(BindingValue::Term),
    }
}
