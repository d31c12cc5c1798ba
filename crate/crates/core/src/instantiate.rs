//! Binding templates to concrete shapes and planning the shapes of a run.

use std::collections::{BTreeMap, BTreeSet};

use dqa_rdf::vocab::{dcat, foaf, owl, rdf, rdfs, void, xsd, STANDARD_PREFIXES};
use dqa_rdf::{Term, write_turtle};
use dqa_shacl::{shapes_to_graph, Constraint as C, Path, Shape};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::catalog::{
    body_placeholders, catalog, placeholder_iri, placeholder_name, scan_text_placeholders, Artifact, MeasureKind,
    ShapeTemplate, Source, ValueKind, Variant, SHAPE_NS,
};
use crate::config::Config;
use crate::error::InstantiateError;
use crate::profile::{DomainKind, ProfileSummary, RangeKind};

/// The value bound to one placeholder.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BindingValue {
    Term(Term),
    List(Vec<Term>),
    /// Text spliced into a pattern string.
    Text(String),
}

impl BindingValue {
    fn describe(&self) -> String {
        match self {
            BindingValue::Term(t) => t.to_ntriples(),
            BindingValue::List(ts) => {
                let items: Vec<String> = ts.iter().map(Term::to_ntriples).collect();
                format!("({})", items.join(" "))
            }
            BindingValue::Text(s) => serde_json::to_string(s).expect("string serializes"),
        }
    }
}

impl From<Term> for BindingValue {
    fn from(t: Term) -> Self {
        BindingValue::Term(t)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bindings(BTreeMap<String, BindingValue>);

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn insert(&mut self, name: &str, v: BindingValue) {
        self.0.insert(name.to_string(), v);
    }

    pub fn with(mut self, name: &str, v: impl Into<BindingValue>) -> Self {
        self.insert(name, v.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&BindingValue> {
        self.0.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One `NAME=value` line per binding, sorted by name.
    pub fn canonical(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.0 {
            s.push_str(k);
            s.push('=');
            s.push_str(&v.describe());
            s.push('\n');
        }
        s
    }

    /// Binds every placeholder of `t` to itself, which renders the template
    /// body unchanged.
    pub fn identity(t: &ShapeTemplate) -> Bindings {
        let mut b = Bindings::new();
        for p in t.placeholders() {
            let v = match p.kind {
                ValueKind::Regex => BindingValue::Text(p.name.to_string()),
                ValueKind::TermList => BindingValue::List(vec![Term::iri(&placeholder_iri(p.name))]),
                _ => BindingValue::Term(Term::iri(&placeholder_iri(p.name))),
            };
            b.insert(p.name, v);
        }
        b
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: serde_json::Map<String, serde_json::Value> = self
            .0
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.describe())))
            .collect();
        serde_json::Value::Object(m)
    }
}

/// A fully bound shape ready for validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantiatedShape {
    pub shape_id: String,
    pub template_id: &'static str,
    pub variant: &'static str,
    pub bindings: Bindings,
    pub artifact: Artifact,
    /// Aggregation unit for composite measures.
    pub unit: String,
    pub shape: Shape,
}

/// A template that produced no shapes, and why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkipEntry {
    pub template: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct Plan {
    pub shapes: Vec<InstantiatedShape>,
    pub skipped: Vec<SkipEntry>,
}

impl Plan {
    /// The run log: one line per skipped template.
    pub fn run_log(&self) -> String {
        let mut s = String::new();
        for e in &self.skipped {
            s.push_str(&format!("skipped {}: {}\n", e.template, e.reason));
        }
        s
    }

    pub fn shapes_for(&self, artifact: Artifact) -> Vec<Shape> {
        self.shapes
            .iter()
            .filter(|s| s.artifact == artifact)
            .map(|s| s.shape.clone())
            .collect()
    }
}

fn is_integer_type(dt: &str) -> bool {
    matches!(
        dt.strip_prefix(xsd::NS),
        Some(
            "integer"
                | "int"
                | "long"
                | "short"
                | "byte"
                | "nonNegativeInteger"
                | "positiveInteger"
                | "nonPositiveInteger"
                | "negativeInteger"
                | "unsignedLong"
                | "unsignedInt"
                | "unsignedShort"
                | "unsignedByte"
        )
    )
}

fn kind_matches(kind: ValueKind, v: &BindingValue) -> bool {
    match (kind, v) {
        (ValueKind::Iri, BindingValue::Term(t)) => t.is_iri(),
        (ValueKind::Literal, BindingValue::Term(t)) => t.is_literal(),
        (ValueKind::Integer, BindingValue::Term(Term::Literal(l))) => is_integer_type(l.datatype().as_str()),
        (ValueKind::Date, BindingValue::Term(Term::Literal(l))) => {
            matches!(l.datatype().as_str(), xsd::DATE | xsd::DATE_TIME)
        }
        (ValueKind::Regex, BindingValue::Text(_)) => true,
        (ValueKind::TermList, BindingValue::List(_)) => true,
        (ValueKind::Term, BindingValue::Term(t)) => !t.is_blank(),
        _ => false,
    }
}

/// Picks the first variant whose required placeholders are all bound and
/// which knows every bound name.
pub fn select_variant<'t>(t: &'t ShapeTemplate, b: &Bindings) -> Result<&'t Variant, InstantiateError> {
    for v in &t.variants {
        let known: BTreeSet<&str> = v.placeholders.iter().map(|p| p.name).collect();
        let covered = v.placeholders.iter().all(|p| p.optional || b.get(p.name).is_some());
        if covered && b.names().all(|n| known.contains(n)) {
            return Ok(v);
        }
    }
    let all: BTreeSet<&str> = t.placeholders().iter().map(|p| p.name).collect();
    if let Some(n) = b.names().find(|n| !all.contains(n)) {
        return Err(InstantiateError::Unknown {
            template: t.id.into(),
            placeholder: n.into(),
        });
    }
    let missing = t.variants[0]
        .placeholders
        .iter()
        .find(|p| !p.optional && b.get(p.name).is_none())
        .map(|p| p.name)
        .unwrap_or("?");
    Err(InstantiateError::Missing {
        template: t.id.into(),
        placeholder: missing.into(),
    })
}

fn check_bindings(t: &ShapeTemplate, v: &Variant, b: &Bindings, kinds: bool) -> Result<(), InstantiateError> {
    for p in &v.placeholders {
        match b.get(p.name) {
            None if p.optional => {}
            None => {
                return Err(InstantiateError::Missing {
                    template: t.id.into(),
                    placeholder: p.name.into(),
                })
            }
            Some(val) if kinds && !kind_matches(p.kind, val) => {
                return Err(InstantiateError::WrongKind {
                    template: t.id.into(),
                    placeholder: p.name.into(),
                    expected: p.kind.as_str(),
                    got: val.describe(),
                })
            }
            Some(_) => {}
        }
    }
    for n in b.names() {
        if !v.placeholders.iter().any(|p| p.name == n) {
            return Err(InstantiateError::Unknown {
                template: t.id.into(),
                placeholder: n.into(),
            });
        }
    }
    Ok(())
}

/// Removes `sh:or` members mentioning any of `names`.
fn prune(s: &Shape, names: &BTreeSet<String>) -> Shape {
    let mut out = s.clone();
    out.constraints = s
        .constraints
        .iter()
        .map(|c| match c {
            C::Or(ms) => C::Or(
                ms.iter()
                    .filter(|m| body_placeholders(m).is_disjoint(names))
                    .map(|m| prune(m, names))
                    .collect(),
            ),
            C::And(ms) => C::And(ms.iter().map(|m| prune(m, names)).collect()),
            C::Not(x) => C::Not(Box::new(prune(x, names))),
            C::Node(x) => C::Node(Box::new(prune(x, names))),
            C::Property(x) => C::Property(Box::new(prune(x, names))),
            C::Qualified { shape, min, max } => C::Qualified {
                shape: Box::new(prune(shape, names)),
                min: min.clone(),
                max: max.clone(),
            },
            c => c.clone(),
        })
        .collect();
    out
}

struct Subst<'a> {
    template: &'a str,
    b: &'a Bindings,
    text_names: Vec<&'static str>,
    err: Option<InstantiateError>,
}

impl Subst<'_> {
    fn term(&mut self, t: &Term) -> Term {
        let Some(name) = placeholder_name(t) else {
            return t.clone();
        };
        match self.b.get(name) {
            Some(BindingValue::Term(v)) => v.clone(),
            Some(other) => {
                self.fail(InstantiateError::WrongKind {
                    template: self.template.into(),
                    placeholder: name.into(),
                    expected: "single term",
                    got: other.describe(),
                });
                t.clone()
            }
            None => {
                self.fail(InstantiateError::Missing {
                    template: self.template.into(),
                    placeholder: name.into(),
                });
                t.clone()
            }
        }
    }

    fn fail(&mut self, e: InstantiateError) {
        if self.err.is_none() {
            self.err = Some(e);
        }
    }

    fn list(&mut self, items: &[Term]) -> Vec<Term> {
        let mut out = Vec::new();
        for t in items {
            match placeholder_name(t).and_then(|n| self.b.get(n)) {
                Some(BindingValue::List(vs)) => out.extend(vs.iter().cloned()),
                _ => out.push(self.term(t)),
            }
        }
        out
    }

    fn text(&mut self, lexical: &str) -> String {
        let mut out = String::new();
        let mut last = 0;
        for (start, end, name) in scan_text_placeholders(lexical, &self.text_names) {
            out.push_str(&lexical[last..start]);
            match self.b.get(name) {
                Some(BindingValue::Text(s)) => out.push_str(s),
                Some(other) => {
                    let got = other.describe();
                    self.fail(InstantiateError::WrongKind {
                        template: self.template.into(),
                        placeholder: name.into(),
                        expected: ValueKind::Regex.as_str(),
                        got,
                    });
                }
                None => self.fail(InstantiateError::Missing {
                    template: self.template.into(),
                    placeholder: name.into(),
                }),
            }
            last = end;
        }
        out.push_str(&lexical[last..]);
        out
    }

    fn path(&mut self, p: &Path) -> Path {
        p.map_terms(&mut |t| self.term(t))
    }

    /// Expands a member whose path is a list placeholder into one member per item.
    fn members(&mut self, ms: &[Shape]) -> Vec<Shape> {
        let mut out = Vec::new();
        for m in ms {
            if let Some(Path::Predicate(t)) = &m.path {
                if let Some(BindingValue::List(items)) = placeholder_name(t).and_then(|n| self.b.get(n)) {
                    let mut bare = m.clone();
                    bare.path = None;
                    let bare = self.shape(&bare);
                    for item in items.clone() {
                        let mut copy = bare.clone();
                        copy.path = Some(Path::Predicate(item));
                        out.push(copy);
                    }
                    continue;
                }
            }
            out.push(self.shape(m));
        }
        out
    }

    fn shape(&mut self, s: &Shape) -> Shape {
        let mut out = Shape {
            id: s.id.clone(),
            targets: Vec::new(),
            path: s.path.as_ref().map(|p| self.path(p)),
            constraints: Vec::new(),
            deactivated: s.deactivated,
            message: s.message.clone(),
        };
        let shell = Shape {
            targets: s.targets.clone(),
            ..Shape::node()
        };
        out.targets = shell.map_terms(&mut |t| self.term(t)).targets;
        for c in &s.constraints {
            let c2 = match c {
                C::In(ts) => C::In(self.list(ts)),
                C::LanguageIn(ts) => C::LanguageIn(self.list(ts)),
                C::Pattern { pattern, flags } => {
                    let pattern = match pattern.as_literal() {
                        Some(l) => Term::string(&self.text(l.lexical())),
                        None => self.term(pattern),
                    };
                    C::Pattern {
                        pattern,
                        flags: flags.as_ref().map(|f| self.term(f)),
                    }
                }
                C::Or(ms) => C::Or(self.members(ms)),
                C::And(ms) => C::And(self.members(ms)),
                C::Not(x) => C::Not(Box::new(self.shape(x))),
                C::Node(x) => C::Node(Box::new(self.shape(x))),
                C::Property(x) => C::Property(Box::new(self.shape(x))),
                C::Qualified { shape, min, max } => C::Qualified {
                    shape: Box::new(self.shape(shape)),
                    min: min.as_ref().map(|t| self.term(t)),
                    max: max.as_ref().map(|t| self.term(t)),
                },
                other => other.map_terms(&mut |t| self.term(t)),
            };
            out.constraints.push(c2);
        }
        out
    }
}

fn bind(t: &ShapeTemplate, v: &Variant, body: &Shape, b: &Bindings) -> Result<Shape, InstantiateError> {
    let unbound: BTreeSet<String> = v
        .placeholders
        .iter()
        .filter(|p| p.optional && b.get(p.name).is_none())
        .map(|p| p.name.to_string())
        .collect();
    let body = if unbound.is_empty() { body.clone() } else { prune(body, &unbound) };
    let text_names = v
        .placeholders
        .iter()
        .filter(|p| p.kind == ValueKind::Regex)
        .map(|p| p.name)
        .collect();
    let mut s = Subst {
        template: t.id,
        b,
        text_names,
        err: None,
    };
    let out = s.shape(&body);
    match s.err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Renders every variant of `t` covered by `b` as Turtle. Values are not
/// kind-checked, so identity bindings reproduce the template body.
pub fn render_template(t: &ShapeTemplate, b: &Bindings) -> Result<String, InstantiateError> {
    let mut shapes = Vec::new();
    let mut first_err = None;
    for v in &t.variants {
        match check_bindings(t, v, &restrict(b, v), false) {
            Ok(()) => shapes.push(bind(t, v, &v.body, &restrict(b, v))?),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    if shapes.is_empty() {
        return Err(first_err.expect("templates have variants"));
    }
    let mut g = shapes_to_graph(&shapes);
    for (p, ns) in STANDARD_PREFIXES {
        g.set_prefix(p, ns);
    }
    g.set_prefix("ph", crate::catalog::PLACEHOLDER_NS);
    g.set_prefix("dqa", SHAPE_NS);
    Ok(write_turtle(&g))
}

fn restrict(b: &Bindings, v: &Variant) -> Bindings {
    let mut out = Bindings::new();
    for p in &v.placeholders {
        if let Some(x) = b.get(p.name) {
            out.insert(p.name, x.clone());
        }
    }
    out
}

/// Instantiates `t` with the variant chosen by [`select_variant`] and the
/// default configuration.
pub fn instantiate(t: &ShapeTemplate, b: &Bindings) -> Result<InstantiatedShape, InstantiateError> {
    let v = select_variant(t, b)?;
    instantiate_variant(t, v.name, b, &Config::default(), false)
}

fn digest(variant: &str, b: &Bindings) -> String {
    let mut h = Sha256::new();
    h.update(variant.as_bytes());
    h.update(b"\n");
    h.update(b.canonical().as_bytes());
    hex::encode(h.finalize())[..16].to_string()
}

fn is_entity_filter_member(s: &Shape) -> bool {
    s.path == Some(Path::pred(rdf::TYPE))
        && s.constraints.len() == 1
        && matches!(&s.constraints[0], C::HasValue(t)
            if [rdfs::CLASS, rdf::PROPERTY, owl::NAMED_INDIVIDUAL].contains(&t.iri_str().unwrap_or("")))
}

/// Applies the configured property choices to a template body. The entity
/// filter alternatives keep `rdf:type`, which enrichment materializes.
fn configure(s: &Shape, f: &dyn Fn(&Term) -> Term) -> Shape {
    if is_entity_filter_member(s) {
        return s.clone();
    }
    let mut out = s.clone();
    let shell = Shape {
        targets: s.targets.clone(),
        ..Shape::node()
    };
    out.targets = shell.map_terms(&mut |t| f(t)).targets;
    out.path = s.path.as_ref().map(|p| p.map_terms(&mut |t| f(t)));
    out.constraints = s
        .constraints
        .iter()
        .map(|c| match c {
            C::Or(ms) => C::Or(ms.iter().map(|m| configure(m, f)).collect()),
            C::And(ms) => C::And(ms.iter().map(|m| configure(m, f)).collect()),
            C::Not(x) => C::Not(Box::new(configure(x, f))),
            C::Node(x) => C::Node(Box::new(configure(x, f))),
            C::Property(x) => C::Property(Box::new(configure(x, f))),
            C::Qualified { shape, min, max } => C::Qualified {
                shape: Box::new(configure(shape, f)),
                min: min.clone(),
                max: max.clone(),
            },
            c => c.map_terms(&mut |t| f(t)),
        })
        .collect();
    out
}

/// Instantiates a named variant. `dcat` switches dataset-level shapes to
/// DCAT terms for metadata described only with DCAT.
pub fn instantiate_variant(
    t: &ShapeTemplate,
    variant: &str,
    b: &Bindings,
    cfg: &Config,
    dcat_mode: bool,
) -> Result<InstantiatedShape, InstantiateError> {
    let v = t.variant(variant).ok_or_else(|| InstantiateError::NoVariant {
        template: t.id.into(),
        variant: variant.into(),
    })?;
    check_bindings(t, v, b, true)?;
    let body = if t.artifact == Artifact::SchemaGraph {
        v.body.clone()
    } else {
        let map = |x: &Term| -> Term {
            let Some(i) = x.iri_str() else {
                return x.clone();
            };
            let r = match i {
                rdf::TYPE => cfg.type_property.as_str(),
                rdfs::LABEL => cfg.label_property.as_str(),
                rdfs::COMMENT => cfg.comment_property.as_str(),
                owl::SAME_AS => cfg.sameas_property.as_str(),
                void::DATASET if dcat_mode => dcat::DATASET,
                foaf::HOMEPAGE if dcat_mode => dcat::LANDING_PAGE,
                other => other,
            };
            if r == i {
                x.clone()
            } else {
                Term::iri(r)
            }
        };
        configure(&v.body, &map)
    };
    let mut shape = bind(t, v, &body, b)?;
    let d = digest(v.name, b);
    let shape_id = format!("{SHAPE_NS}{}-{d}", t.id);
    shape.id = Term::iri(&shape_id);
    let unit = match t.id {
        "CN1" => {
            let mut pair: Vec<String> = ["CLASS_URI", "DISJOINT_CLASS_URI"]
                .iter()
                .filter_map(|n| b.get(n).map(BindingValue::describe))
                .collect();
            pair.sort();
            format!("CN1 {}", pair.join(" "))
        }
        "CN9a" | "CN9b" => format!(
            "{} {}",
            t.id,
            b.get("PROPERTY_URI").map(BindingValue::describe).unwrap_or_default()
        ),
        _ => shape_id.clone(),
    };
    Ok(InstantiatedShape {
        shape_id,
        template_id: t.id,
        variant: v.name,
        bindings: b.clone(),
        artifact: t.artifact,
        unit,
        shape,
    })
}

/// Escapes an IRI for literal use inside a regular expression.
pub fn regex_escape(s: &str) -> String {
    fancy_regex::escape(s).into_owned()
}

/// Shapes from the catalog for one run, with a log of skipped templates.
pub fn plan(
    profile: &ProfileSummary,
    cfg: &Config,
    have_metadata: bool,
    have_schema: bool,
) -> Result<Plan, InstantiateError> {
    let mut plan = Plan::default();
    let dcat_mode = profile.metadata.dcat_dataset && !profile.metadata.void_dataset;
    let used_props = &profile.used_properties;
    let used = |p: &String| used_props.contains(p);
    for t in catalog() {
        let mut skip = |reason: &str| {
            plan.skipped.push(SkipEntry {
                template: t.id.into(),
                reason: reason.into(),
            })
        };
        let manual = t.source == Source::ManualDomainKnowledge;
        let has_dk = cfg.domain_knowledge.get(t.id).is_some_and(|v| !v.is_empty());
        let enabled = if manual {
            cfg.is_enabled(t.id, has_dk)
        } else {
            cfg.is_enabled(t.id, t.enabled_by_default)
        };
        if !enabled {
            skip(if manual && !has_dk { "no bindings in config" } else { "disabled" });
            continue;
        }
        if t.artifact == Artifact::MetadataGraph && !have_metadata {
            skip("no metadata graph");
            continue;
        }
        if t.artifact == Artifact::SchemaGraph && !have_schema {
            skip("no schema graph");
            continue;
        }

        let mut jobs: Vec<(&'static str, Bindings)> = Vec::new();
        let one = |name: &str, value: &str| Bindings::new().with(name, Term::iri(value));
        if manual {
            if has_dk {
                for b in &cfg.domain_knowledge[t.id] {
                    jobs.push((select_variant(t, b)?.name, b.clone()));
                }
            } else if t.placeholders().is_empty() {
                jobs.push(("default", Bindings::new()));
            } else {
                skip("no bindings in config");
                continue;
            }
        } else {
            match t.id {
                "RC1a" => jobs.push((
                    "default",
                    Bindings::new().with("LENGTH_VALUE", Term::integer(cfg.uri_length_threshold as i64)),
                )),
                "I2" => {
                    let base = cfg
                        .dataset_base_iri
                        .clone()
                        .or_else(|| profile.metadata.uri_spaces.first().cloned());
                    match base {
                        Some(base) => jobs.push((
                            "default",
                            Bindings::new().with("DATASET_URI", BindingValue::Text(regex_escape(&base))),
                        )),
                        None => {
                            skip("no dataset base IRI");
                            continue;
                        }
                    }
                }
                "U3b" => {
                    let b = if let Some(p) = profile.metadata.uri_regex_patterns.first() {
                        Bindings::new().with("URI_REGEX_PATTERN", BindingValue::Text(p.trim_start_matches('^').into()))
                    } else if let Some(s) = profile.metadata.uri_spaces.first() {
                        Bindings::new().with("URI_SPACE", BindingValue::Text(regex_escape(s)))
                    } else {
                        skip("no void:uriRegexPattern or void:uriSpace in metadata");
                        continue;
                    };
                    jobs.push(("default", b));
                }
                "SV3" => {
                    for (p, dts) in &profile.datatype_range_properties {
                        if used(p) {
                            for dt in dts {
                                jobs.push((
                                    "default",
                                    one("PROPERTY_URI", p).with("DATATYPE_URI", Term::iri(dt)),
                                ));
                            }
                        }
                    }
                }
                "CN1" => {
                    for (a, b) in &profile.declared.disjoint_pairs {
                        if profile.used_classes.contains(a) && profile.used_classes.contains(b) {
                            jobs.push(("default", one("CLASS_URI", a).with("DISJOINT_CLASS_URI", Term::iri(b))));
                            jobs.push(("default", one("CLASS_URI", b).with("DISJOINT_CLASS_URI", Term::iri(a))));
                        }
                    }
                }
                "CN2a" => {
                    for p in &profile.declared.schema_properties {
                        jobs.push(("default", one("PROPERTY_URI", p)));
                    }
                }
                "CN2b" | "CP1" => {
                    for c in &profile.declared.schema_classes {
                        jobs.push(("default", one("CLASS_URI", c)));
                    }
                }
                "CN3a" | "CN3b" | "CN5" | "CN10a" | "CN10b" | "CN10c" => {
                    let d = &profile.declared;
                    let set = match t.id {
                        "CN3a" => &d.datatype_properties,
                        "CN3b" => &d.object_properties,
                        "CN5" => &d.inverse_functional,
                        "CN10a" => &d.irreflexive,
                        "CN10b" => &d.functional,
                        _ => &d.asymmetric,
                    };
                    for p in set.iter().filter(|p| used(p)) {
                        jobs.push(("default", one("PROPERTY_URI", p)));
                    }
                }
                "CN4a" => {
                    if !profile.declared.deprecated_classes.is_empty() {
                        let list = profile.declared.deprecated_classes.iter().map(|c| Term::iri(c)).collect();
                        jobs.push(("default", Bindings::new().with("CLASSES_LIST", BindingValue::List(list))));
                    }
                }
                "CN4b" => {
                    for p in &profile.declared.deprecated_properties {
                        jobs.push(("default", one("PROPERTY_URI", p)));
                    }
                }
                "CN9a" => {
                    for (p, doms) in profile.domain_properties.iter().filter(|(p, _)| used(p)) {
                        for d in doms {
                            jobs.push(match d {
                                DomainKind::Thing => ("thing", one("PROPERTY_URI", p)),
                                DomainKind::Class(c) => ("class", one("PROPERTY_URI", p).with("CLASS", Term::iri(c))),
                            });
                        }
                    }
                }
                "CN9b" => {
                    for (p, ranges) in profile.range_properties.iter().filter(|(p, _)| used(p)) {
                        for r in ranges {
                            jobs.push(match r {
                                RangeKind::Datatype(d) => {
                                    ("datatype", one("PROPERTY_URI", p).with("DATATYPE", Term::iri(d)))
                                }
                                RangeKind::Class(c) => ("class", one("PROPERTY_URI", p).with("CLASS", Term::iri(c))),
                                RangeKind::LiteralAny => ("literal", one("PROPERTY_URI", p)),
                                RangeKind::ResourceAny => ("resource", one("PROPERTY_URI", p)),
                                RangeKind::ThingAny => ("thing", one("PROPERTY_URI", p)),
                            });
                        }
                    }
                }
                "ITP1b" | "ITP3b" => {
                    for p in used_props {
                        jobs.push(("default", one("PROPERTY_URI", p)));
                    }
                }
                "ITP3a" => {
                    for c in &profile.used_classes {
                        jobs.push(("default", one("CLASS_URI", c)));
                    }
                }
                _ => {
                    debug_assert!(t.placeholders().is_empty(), "{} needs a binding rule", t.id);
                    jobs.push(("default", Bindings::new()));
                }
            }
        }
        if jobs.is_empty() {
            skip("nothing to instantiate");
            continue;
        }
        let mut shapes = Vec::with_capacity(jobs.len());
        for (variant, b) in jobs {
            shapes.push(instantiate_variant(t, variant, &b, cfg, dcat_mode)?);
        }
        shapes.sort_by(|a, b| a.shape_id.cmp(&b.shape_id));
        shapes.dedup_by(|a, b| a.shape_id == b.shape_id);
        plan.shapes.extend(shapes);
    }
    plan.shapes.sort_by(|a, b| (a.template_id, &a.shape_id).cmp(&(b.template_id, &b.shape_id)));
    plan.skipped.sort_by(|a, b| a.template.cmp(&b.template));
    Ok(plan)
}

/// The measure kind of a planned shape's template.
pub fn kind_of(s: &InstantiatedShape) -> MeasureKind {
    crate::catalog::lookup(s.template_id).map_or(MeasureKind::ReportOnly, |t| t.kind)
}
