//! The registry of shape templates and their measure metadata.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use dqa_rdf::vocab::{dcat, dcterms, foaf, owl, prov, rdf, rdfs, sec, sh, void, xsd};
use dqa_rdf::Term;
use dqa_shacl::{Constraint as C, Path, Shape, Target};
use serde::Serialize;

/// Namespace of placeholder IRIs inside template bodies.
pub const PLACEHOLDER_NS: &str = "urn:dqa:placeholder:";
/// Namespace of template and instantiated shape IRIs.
pub const SHAPE_NS: &str = "urn:dqa:shape:";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Artifact {
    DataGraph,
    MetadataGraph,
    SchemaGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureKind {
    Binary,
    Ratio,
    Composite,
    ReportOnly,
}

impl MeasureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MeasureKind::Binary => "binary",
            MeasureKind::Ratio => "ratio",
            MeasureKind::Composite => "composite",
            MeasureKind::ReportOnly => "report-only",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    AutomaticProfile,
    AutomaticConfig,
    ManualDomainKnowledge,
}

/// Population a ratio measure divides by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Denominator {
    Entities,
    EntitiesWithInterlink,
    EntitiesWithLabel,
    EntitiesWithDescription,
    SchemaClasses,
    SchemaProperties,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    Iri,
    Literal,
    Integer,
    Date,
    Regex,
    TermList,
    /// Any RDF term.
    Term,
}

impl ValueKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueKind::Iri => "iri",
            ValueKind::Literal => "literal",
            ValueKind::Integer => "integer",
            ValueKind::Date => "date",
            ValueKind::Regex => "regex",
            ValueKind::TermList => "term-list",
            ValueKind::Term => "term",
        }
    }
}

/// Placeholder names and their value kinds.
pub const PLACEHOLDERS: &[(&str, ValueKind)] = &[
    ("PROPERTY_URI", ValueKind::Iri),
    ("PROPERTY_URI_1", ValueKind::Iri),
    ("PROPERTY_URI_2", ValueKind::Iri),
    ("CLASS_URI", ValueKind::Iri),
    ("DISJOINT_CLASS_URI", ValueKind::Iri),
    ("ENTITY_URI", ValueKind::Iri),
    ("DATASET_URI", ValueKind::Regex),
    ("DATATYPE_URI", ValueKind::Iri),
    ("DATATYPE", ValueKind::Iri),
    ("CLASS", ValueKind::Iri),
    ("LENGTH_VALUE", ValueKind::Integer),
    ("DATE_RANGE_MIN_BOUND", ValueKind::Date),
    ("MIN_VALUE", ValueKind::Literal),
    ("MAX_VALUE", ValueKind::Literal),
    ("COUNT", ValueKind::Integer),
    ("RDF_TERM", ValueKind::Term),
    ("PATTERN", ValueKind::Regex),
    ("CLASSES_LIST", ValueKind::TermList),
    ("LIST_ALLOWED_VALUES", ValueKind::TermList),
    ("LIST_TRUSTED_PROVIDERS", ValueKind::TermList),
    ("LIST_TRUSTED_CONTRIBUTORS", ValueKind::TermList),
    ("LIST_TRUSTED_AUTHORS", ValueKind::TermList),
    ("REQUIRED_LANGUAGES", ValueKind::TermList),
    ("URI_REGEX_PATTERN", ValueKind::Regex),
    ("URI_SPACE", ValueKind::Regex),
    ("ANTECEDENT_PROPERTIES", ValueKind::TermList),
    ("CONSEQUENT_PROPERTIES", ValueKind::TermList),
];

pub fn value_kind(name: &str) -> Option<ValueKind> {
    PLACEHOLDERS.iter().find(|(n, _)| *n == name).map(|(_, k)| *k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaceholderSpec {
    pub name: &'static str,
    pub kind: ValueKind,
    /// Optional placeholders prune the `sh:or` member that mentions them when unbound.
    pub optional: bool,
}

#[derive(Clone, Debug)]
pub struct Variant {
    pub name: &'static str,
    pub placeholders: Vec<PlaceholderSpec>,
    pub body: Shape,
}

#[derive(Clone, Debug)]
pub struct ShapeTemplate {
    pub id: &'static str,
    pub group: &'static str,
    pub dimension: &'static str,
    pub caption: &'static str,
    pub artifact: Artifact,
    pub kind: MeasureKind,
    pub source: Source,
    pub enabled_by_default: bool,
    pub denominator: Option<Denominator>,
    pub variants: Vec<Variant>,
}

impl ShapeTemplate {
    /// Union of the placeholders of all variants, in first-seen order.
    pub fn placeholders(&self) -> Vec<PlaceholderSpec> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.variants {
            for p in &v.placeholders {
                if seen.insert(p.name) {
                    out.push(p.clone());
                }
            }
        }
        out
    }

    pub fn variant(&self, name: &str) -> Option<&Variant> {
        self.variants.iter().find(|v| v.name == name)
    }

    pub fn is_manual(&self) -> bool {
        self.source == Source::ManualDomainKnowledge
    }
}

pub fn placeholder_iri(name: &str) -> String {
    format!("{PLACEHOLDER_NS}{name}")
}

/// The placeholder name of a placeholder IRI term.
pub fn placeholder_name(t: &Term) -> Option<&str> {
    t.iri_str().and_then(|s| s.strip_prefix(PLACEHOLDER_NS))
}

/// All 64 templates, in catalog order.
pub fn catalog() -> &'static [ShapeTemplate] {
    static CATALOG: OnceLock<Vec<ShapeTemplate>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn lookup(id: &str) -> Option<&'static ShapeTemplate> {
    catalog().iter().find(|t| t.id == id)
}

// ------------------------------------------------------------------ builders

fn ph(name: &str) -> Term {
    Term::iri(&placeholder_iri(name))
}

fn iri(s: &str) -> Term {
    Term::iri(s)
}

fn p(s: &str) -> Path {
    Path::pred(s)
}

fn root(id: &str) -> Shape {
    Shape::named(iri(&format!("{SHAPE_NS}{id}")))
}

fn prop(path: Path) -> Shape {
    Shape::property(path)
}

fn node() -> Shape {
    Shape::node()
}

fn int(n: i64) -> Term {
    Term::integer(n)
}

fn has_type(c: &str) -> Shape {
    prop(p(rdf::TYPE)).with(C::HasValue(iri(c)))
}

/// The filter excluding classes, properties and named individuals, with
/// `check` as the last alternative.
fn entity_or(check: Shape) -> C {
    C::Or(vec![
        has_type(rdfs::CLASS),
        has_type(rdf::PROPERTY),
        has_type(owl::NAMED_INDIVIDUAL),
        check,
    ])
}

fn entities(id: &str) -> Shape {
    root(id).target(Target::SubjectsOf(iri(rdf::TYPE)))
}

fn datasets(id: &str) -> Shape {
    root(id).target(Target::Class(iri(void::DATASET)))
}

fn spec(name: &'static str) -> PlaceholderSpec {
    PlaceholderSpec {
        name,
        kind: value_kind(name).expect("known placeholder"),
        optional: false,
    }
}

fn optional(name: &'static str) -> PlaceholderSpec {
    PlaceholderSpec {
        optional: true,
        ..spec(name)
    }
}

struct T {
    id: &'static str,
    group: &'static str,
    dimension: &'static str,
    caption: &'static str,
    artifact: Artifact,
    kind: MeasureKind,
    source: Source,
    enabled: bool,
    denominator: Option<Denominator>,
}

impl T {
    fn one(self, placeholders: &[&'static str], body: Shape) -> ShapeTemplate {
        self.variants(vec![("default", placeholders.iter().map(|n| spec(n)).collect(), body)])
    }

    fn variants(self, vs: Vec<(&'static str, Vec<PlaceholderSpec>, Shape)>) -> ShapeTemplate {
        ShapeTemplate {
            id: self.id,
            group: self.group,
            dimension: self.dimension,
            caption: self.caption,
            artifact: self.artifact,
            kind: self.kind,
            source: self.source,
            enabled_by_default: self.enabled,
            denominator: self.denominator,
            variants: vs
                .into_iter()
                .map(|(name, placeholders, body)| Variant {
                    name,
                    placeholders,
                    body,
                })
                .collect(),
        }
    }
}

const ACC: &str = "Accessibility";
const INT: &str = "Intrinsic";
const CTX: &str = "Contextual";
const REP: &str = "Representational";

use Artifact::*;
use Denominator as D;
use MeasureKind::*;
use Source::*;

#[allow(clippy::too_many_arguments)]
fn t(
    id: &'static str,
    group: &'static str,
    dimension: &'static str,
    caption: &'static str,
    artifact: Artifact,
    kind: MeasureKind,
    source: Source,
    enabled: bool,
    denominator: Option<Denominator>,
) -> T {
    T {
        id,
        group,
        dimension,
        caption,
        artifact,
        kind,
        source,
        enabled,
        denominator,
    }
}

fn auto(
    id: &'static str,
    group: &'static str,
    dimension: &'static str,
    caption: &'static str,
    artifact: Artifact,
    kind: MeasureKind,
    source: Source,
    denominator: Option<Denominator>,
) -> T {
    t(id, group, dimension, caption, artifact, kind, source, true, denominator)
}

fn manual(
    id: &'static str,
    group: &'static str,
    dimension: &'static str,
    caption: &'static str,
    artifact: Artifact,
    kind: MeasureKind,
    denominator: Option<Denominator>,
) -> T {
    t(id, group, dimension, caption, artifact, kind, ManualDomainKnowledge, false, denominator)
}

fn disabled(
    id: &'static str,
    group: &'static str,
    dimension: &'static str,
    caption: &'static str,
    artifact: Artifact,
    kind: MeasureKind,
    denominator: Option<Denominator>,
) -> T {
    t(id, group, dimension, caption, artifact, kind, AutomaticConfig, false, denominator)
}

/// Property shape over PROPERTY_URI targeted at its subjects.
fn subjects_of_property(id: &str, inner: Shape) -> Shape {
    root(id)
        .target(Target::SubjectsOf(ph("PROPERTY_URI")))
        .with(C::Property(Box::new(inner)))
}

fn build() -> Vec<ShapeTemplate> {
    let mut v = Vec::new();

    // ---------------------------------------------------------- Accessibility
    v.push(
        auto("A2", ACC, "Availability", "Availability - RDF Dump", MetadataGraph, Binary, AutomaticConfig, None).one(
            &[],
            datasets("A2").with(C::Or(vec![
                prop(p(void::DATA_DUMP)).with(C::MinCount(int(1))),
                prop(Path::Sequence(vec![p(dcat::DISTRIBUTION_PROP), p(dcat::DOWNLOAD_URL)])).with(C::MinCount(int(1))),
            ])),
        ),
    );
    v.push(
        auto("L1", ACC, "Licensing", "Licensing - Machine-readable license", MetadataGraph, Binary, AutomaticConfig, None)
            .one(
                &[],
                datasets("L1").with(C::Property(Box::new(
                    prop(p(dcterms::LICENSE))
                        .with(C::Class(iri(dcterms::LICENSE_DOCUMENT)))
                        .with(C::MinCount(int(1))),
                ))),
            ),
    );
    v.push(
        manual("I1M4a", ACC, "Interlinking", "Interlinking - Open sameAs chains", DataGraph, ReportOnly, None).one(
            &["ENTITY_URI"],
            root("I1M4a")
                .target(Target::Node(ph("ENTITY_URI")))
                .with(C::Property(Box::new(
                    prop(Path::OneOrMore(Box::new(p(owl::SAME_AS)))).with(C::HasValue(ph("ENTITY_URI"))),
                ))),
        ),
    );
    v.push(
        disabled("I1M4b", ACC, "Interlinking", "Interlinking - Open sameAs pairs", DataGraph, ReportOnly, None).one(
            &[],
            root("I1M4b")
                .target(Target::SubjectsOf(iri(owl::SAME_AS)))
                .with(C::Property(Box::new(
                    prop(Path::inverse(p(owl::SAME_AS))).with(C::Equals(iri(owl::SAME_AS))),
                ))),
        ),
    );
    v.push(
        auto(
            "I2",
            ACC,
            "Interlinking",
            "Interlinking - External URIs",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::EntitiesWithInterlink),
        )
        .one(
            &["DATASET_URI"],
            root("I2")
                .target(Target::SubjectsOf(iri(owl::SAME_AS)))
                .with(C::Property(Box::new(prop(p(owl::SAME_AS)).with(C::Pattern {
                    pattern: Term::string("^(?!DATASET_URI)"),
                    flags: None,
                })))),
        ),
    );
    v.push(
        disabled("S1a", ACC, "Security", "Security - Digital Signatures", DataGraph, Binary, None).one(
            &[],
            root("S1a")
                .target(Target::Node(iri(sec::DATA_INTEGRITY_PROOF)))
                .with(C::Property(Box::new(prop(Path::inverse(p(rdf::TYPE))).with(C::MinCount(int(1)))))),
        ),
    );
    v.push(
        disabled("S1b", ACC, "Security", "Security - Digital Signature properties", DataGraph, Binary, None).one(
            &[],
            root("S1b")
                .target(Target::Class(iri(sec::DATA_INTEGRITY_PROOF)))
                .with(C::Property(Box::new(
                    prop(p(sec::PROOF_PURPOSE)).with(C::MinCount(int(1))).with(C::In(vec![
                        iri(sec::ASSERTION_METHOD),
                        iri(sec::AUTHENTICATION),
                        iri(sec::KEY_AGREEMENT),
                        iri(sec::CAPABILITY_INVOCATION),
                        iri(sec::CAPABILITY_DELEGATION),
                    ])),
                )))
                .with(C::Property(Box::new(
                    prop(p(sec::CRYPTOSUITE))
                        .with(C::Datatype(iri(sec::CRYPTOSUITE_STRING)))
                        .with(C::MinCount(int(1))),
                )))
                .with(C::Property(Box::new(
                    prop(p(sec::PROOF_VALUE)).with(C::Datatype(iri(xsd::STRING))).with(C::MinCount(int(1))),
                ))),
        ),
    );
    v.push(
        auto("S2", ACC, "Security", "Security - Authenticity of the dataset", MetadataGraph, Binary, AutomaticConfig, None)
            .one(
                &[],
                datasets("S2")
                    .with(C::Or(vec![
                        prop(p(dcterms::CONTRIBUTOR)).with(C::MinCount(int(1))),
                        prop(p(dcterms::CREATOR)).with(C::MinCount(int(1))),
                        prop(p(dcterms::PUBLISHER)).with(C::MinCount(int(1))),
                    ]))
                    .with(C::Or(vec![
                        prop(p(dcterms::SOURCE)).with(C::MinCount(int(1))),
                        prop(p(dcterms::PROVENANCE)).with(C::MinCount(int(1))),
                    ])),
            ),
    );
    v.push(
        auto(
            "P1",
            ACC,
            "Performance",
            "Performance - Use of Hash URIs in Entities",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(
            &[],
            entities("P1").with(entity_or(node().with(C::Pattern {
                pattern: Term::string("^[^#]*$"),
                flags: None,
            }))),
        ),
    );

    // ---------------------------------------------------------- Intrinsic
    const SV: &str = "Syntactic Validity";
    v.push(manual("SV2A1a", INT, SV, "Syntactic Validity - Range of allowed values", DataGraph, Composite, None).one(
        &["PROPERTY_URI", "MIN_VALUE", "MAX_VALUE"],
        subjects_of_property(
            "SV2A1a",
            prop(Path::Predicate(ph("PROPERTY_URI")))
                .with(C::MinInclusive(ph("MIN_VALUE")))
                .with(C::MaxInclusive(ph("MAX_VALUE"))),
        ),
    ));
    v.push(
        manual("SV2A1b", INT, SV, "Syntactic Validity - Allowed values (at least one value)", DataGraph, Composite, None)
            .one(
                &["PROPERTY_URI", "RDF_TERM"],
                subjects_of_property(
                    "SV2A1b",
                    prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::HasValue(ph("RDF_TERM"))),
                ),
            ),
    );
    v.push(manual("SV2A1c", INT, SV, "List of allowed values", DataGraph, Composite, None).one(
        &["PROPERTY_URI", "LIST_ALLOWED_VALUES"],
        subjects_of_property(
            "SV2A1c",
            prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::In(vec![ph("LIST_ALLOWED_VALUES")])),
        ),
    ));
    v.push(manual("SV2A2", INT, SV, "Syntactic Validity - Syntactic rules", DataGraph, Composite, None).one(
        &["PROPERTY_URI", "PATTERN"],
        subjects_of_property(
            "SV2A2",
            prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::Pattern {
                pattern: Term::string("PATTERN"),
                flags: None,
            }),
        ),
    ));
    v.push(manual("SV2A3", INT, SV, "Syntactic Validity - VoID RDF pattern", MetadataGraph, Binary, None).one(
        &[],
        datasets("SV2A3").with(C::Property(Box::new(
            prop(p(foaf::HOMEPAGE)).with(C::MinCount(int(1))).with(C::Datatype(iri(xsd::STRING))),
        ))),
    ));
    v.push(
        auto("SV3", INT, SV, "Syntactic Validity - Malformed literal", DataGraph, Composite, AutomaticProfile, None).one(
            &["PROPERTY_URI", "DATATYPE_URI"],
            subjects_of_property(
                "SV3",
                prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::Datatype(ph("DATATYPE_URI"))),
            ),
        ),
    );

    const SA: &str = "Semantic Accuracy";
    v.push(manual("SA2A2", INT, SA, "Semantic Accuracy - Inaccurate values", DataGraph, Composite, None).one(
        &["PROPERTY_URI_1", "PROPERTY_URI_2"],
        root("SA2A2")
            .target(Target::SubjectsOf(ph("PROPERTY_URI_1")))
            .with(C::Property(Box::new(
                prop(Path::Predicate(ph("PROPERTY_URI_1"))).with(C::Equals(ph("PROPERTY_URI_2"))),
            ))),
    ));
    v.push(manual("SA3a", INT, SA, "Semantic Accuracy - No inaccurate annotations", DataGraph, Composite, None).one(
        &["ENTITY_URI", "LIST_ALLOWED_VALUES"],
        root("SA3a")
            .target(Target::Node(ph("ENTITY_URI")))
            .with(C::Property(Box::new(prop(p(rdfs::LABEL)).with(C::In(vec![ph("LIST_ALLOWED_VALUES")]))))),
    ));
    v.push(manual("SA3b", INT, SA, "Semantic Accuracy - No inaccurate classifications", DataGraph, Composite, None).one(
        &["ENTITY_URI", "LIST_ALLOWED_VALUES"],
        root("SA3b")
            .target(Target::Node(ph("ENTITY_URI")))
            .with(C::Property(Box::new(prop(p(rdf::TYPE)).with(C::In(vec![ph("LIST_ALLOWED_VALUES")]))))),
    ));

    const CN: &str = "Consistency";
    v.push(
        auto("CN1", INT, CN, "Consistency - Entities in disjoint classes", DataGraph, Composite, AutomaticProfile, None).one(
            &["CLASS_URI", "DISJOINT_CLASS_URI"],
            root("CN1")
                .target(Target::Class(ph("CLASS_URI")))
                .with(C::Not(Box::new(node().with(C::Class(ph("DISJOINT_CLASS_URI")))))),
        ),
    );
    v.push(
        auto("CN2a", INT, CN, "Consistency - No misplaced properties", DataGraph, Composite, AutomaticProfile, None).one(
            &["PROPERTY_URI"],
            root("CN2a")
                .target(Target::Node(ph("PROPERTY_URI")))
                .with(C::Property(Box::new(prop(Path::inverse(p(rdf::TYPE))).with(C::MaxCount(int(0)))))),
        ),
    );
    v.push(
        auto("CN2b", INT, CN, "Consistency - No misplaced classes", DataGraph, Composite, AutomaticProfile, None).one(
            &["CLASS_URI"],
            entities("CN2b").with(entity_or(prop(Path::Predicate(ph("CLASS_URI"))).with(C::MaxCount(int(0))))),
        ),
    );
    v.push(
        auto(
            "CN3a",
            INT,
            CN,
            "Consistency - No misuse of Datatype properties",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            subjects_of_property(
                "CN3a",
                prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::NodeKind(iri(sh::LITERAL))),
            ),
        ),
    );
    v.push(
        auto("CN3b", INT, CN, "Consistency - No misuse of Object properties", DataGraph, Composite, AutomaticProfile, None)
            .one(
                &["PROPERTY_URI"],
                subjects_of_property(
                    "CN3b",
                    prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::NodeKind(iri(sh::BLANK_NODE_OR_IRI))),
                ),
            ),
    );
    v.push(
        auto("CN4a", INT, CN, "Consistency - Usage of deprecated classes", DataGraph, Binary, AutomaticProfile, None).one(
            &["CLASSES_LIST"],
            entities("CN4a").with(entity_or(
                prop(p(rdf::TYPE)).with(C::Not(Box::new(node().with(C::In(vec![ph("CLASSES_LIST")]))))),
            )),
        ),
    );
    v.push(
        auto("CN4b", INT, CN, "Consistency - Usage of deprecated properties", DataGraph, Composite, AutomaticProfile, None)
            .one(
                &["PROPERTY_URI"],
                entities("CN4b")
                    .with(entity_or(prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::MaxCount(int(0))))),
            ),
    );
    v.push(
        auto(
            "CN5",
            INT,
            CN,
            "Consistency - Uniqueness of inverse functional properties",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            root("CN5")
                .target(Target::ObjectsOf(ph("PROPERTY_URI")))
                .with(C::Property(Box::new(
                    prop(Path::inverse(Path::Predicate(ph("PROPERTY_URI")))).with(C::MaxCount(int(1))),
                ))),
        ),
    );
    v.push(manual("CN7", INT, CN, "Consistency - Negative dependencies", DataGraph, Composite, None).one(
        &["CLASS_URI", "ANTECEDENT_PROPERTIES", "CONSEQUENT_PROPERTIES"],
        root("CN7").target(Target::Class(ph("CLASS_URI"))).with(C::Or(vec![
            node().with(C::Or(vec![
                prop(Path::Predicate(ph("ANTECEDENT_PROPERTIES"))).with(C::MaxCount(int(0))),
            ])),
            node().with(C::And(vec![
                prop(Path::Predicate(ph("CONSEQUENT_PROPERTIES"))).with(C::MaxCount(int(0))),
            ])),
        ])),
    ));
    v.push(
        auto("CN9a", INT, CN, "Consistency - Correct domain", DataGraph, Composite, AutomaticProfile, None).variants(vec![
            (
                "class",
                vec![spec("PROPERTY_URI"), spec("CLASS")],
                root("CN9a-class")
                    .target(Target::SubjectsOf(ph("PROPERTY_URI")))
                    .with(C::Class(ph("CLASS"))),
            ),
            (
                "thing",
                vec![spec("PROPERTY_URI")],
                root("CN9a-thing")
                    .target(Target::SubjectsOf(ph("PROPERTY_URI")))
                    .with(C::NodeKind(iri(sh::BLANK_NODE_OR_IRI))),
            ),
        ]),
    );
    let range = |name: &str, c: C| {
        subjects_of_property(&format!("CN9b-{name}"), prop(Path::Predicate(ph("PROPERTY_URI"))).with(c))
    };
    v.push(
        auto("CN9b", INT, CN, "Consistency - Correct range", DataGraph, Composite, AutomaticProfile, None).variants(vec![
            (
                "datatype",
                vec![spec("PROPERTY_URI"), spec("DATATYPE")],
                range("datatype", C::Datatype(ph("DATATYPE"))),
            ),
            ("class", vec![spec("PROPERTY_URI"), spec("CLASS")], range("class", C::Class(ph("CLASS")))),
            ("thing", vec![spec("PROPERTY_URI")], range("thing", C::NodeKind(iri(sh::BLANK_NODE_OR_IRI)))),
            ("literal", vec![spec("PROPERTY_URI")], range("literal", C::NodeKind(iri(sh::LITERAL)))),
            (
                "resource",
                vec![spec("PROPERTY_URI")],
                range(
                    "resource",
                    C::Or(vec![
                        node().with(C::NodeKind(iri(sh::BLANK_NODE_OR_IRI))),
                        node().with(C::NodeKind(iri(sh::LITERAL))),
                    ]),
                ),
            ),
        ]),
    );
    v.push(
        auto(
            "CN10a",
            INT,
            CN,
            "Consistency - No inconsistent values (Irreflexive property)",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            root("CN10a")
                .target(Target::SubjectsOf(ph("PROPERTY_URI")))
                .with(C::Disjoint(ph("PROPERTY_URI"))),
        ),
    );
    v.push(
        auto(
            "CN10b",
            INT,
            CN,
            "Consistency - No inconsistent values (Functional property)",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            subjects_of_property("CN10b", prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::MaxCount(int(1)))),
        ),
    );
    v.push(
        auto(
            "CN10c",
            INT,
            CN,
            "Consistency - No inconsistent values (Asymmetric property)",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            subjects_of_property(
                "CN10c",
                prop(Path::inverse(Path::Predicate(ph("PROPERTY_URI")))).with(C::Disjoint(ph("PROPERTY_URI"))),
            ),
        ),
    );

    v.push(manual("CS2", INT, "Conciseness", "Extensional conciseness - Uniqueness rule", DataGraph, Composite, None).one(
        &["PROPERTY_URI"],
        root("CS2")
            .target(Target::ObjectsOf(ph("PROPERTY_URI")))
            .with(C::Property(Box::new(
                prop(Path::inverse(Path::Predicate(ph("PROPERTY_URI")))).with(C::MaxCount(int(1))),
            ))),
    ));

    const CP: &str = "Completeness";
    v.push(
        auto(
            "CP1",
            INT,
            CP,
            "Completeness - Schema completeness (Class usage)",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["CLASS_URI"],
            root("CP1")
                .target(Target::Node(ph("CLASS_URI")))
                .with(C::Property(Box::new(
                    prop(Path::inverse(p(rdf::TYPE))).with(C::MinCount(int(1))).with(C::Qualified {
                        shape: Box::new(node().with(C::Node(Box::new(
                            Shape::named(iri(&format!("{SHAPE_NS}NotNamedIndividualShape"))).with(C::Property(
                                Box::new(
                                    prop(p(rdf::TYPE)).with(C::Not(Box::new(
                                        node().with(C::HasValue(iri(owl::NAMED_INDIVIDUAL))),
                                    ))),
                                ),
                            )),
                        )))),
                        min: Some(int(1)),
                        max: None,
                    }),
                ))),
        ),
    );
    v.push(manual("CP2", INT, CP, "Completeness - Property completeness", DataGraph, Composite, None).one(
        &["PROPERTY_URI", "COUNT"],
        subjects_of_property("CP2", prop(Path::Predicate(ph("PROPERTY_URI"))).with(C::MinCount(ph("COUNT")))),
    ));
    v.push(
        manual("CP3a", INT, CP, "Completeness - Population completeness (Property approach)", DataGraph, Composite, None)
            .one(
                &["ENTITY_URI", "PROPERTY_URI", "COUNT", "LIST_ALLOWED_VALUES"],
                root("CP3a")
                    .target(Target::Node(ph("ENTITY_URI")))
                    .with(C::Property(Box::new(
                        prop(Path::Predicate(ph("PROPERTY_URI")))
                            .with(C::MinCount(ph("COUNT")))
                            .with(C::MaxCount(ph("COUNT")))
                            .with(C::In(vec![ph("LIST_ALLOWED_VALUES")])),
                    ))),
            ),
    );
    v.push(
        manual("CP3b", INT, CP, "Completeness - Population completeness (Class approach)", DataGraph, Composite, None).one(
            &["CLASS_URI", "COUNT", "LIST_ALLOWED_VALUES"],
            root("CP3b")
                .target(Target::Node(ph("CLASS_URI")))
                .with(C::Property(Box::new(
                    prop(Path::inverse(p(rdf::TYPE)))
                        .with(C::MinCount(ph("COUNT")))
                        .with(C::MaxCount(ph("COUNT")))
                        .with(C::In(vec![ph("LIST_ALLOWED_VALUES")])),
                ))),
        ),
    );
    v.push(
        auto(
            "CP4",
            INT,
            CP,
            "Completeness - Interlinking completeness",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(&[], entities("CP4").with(entity_or(prop(p(owl::SAME_AS)).with(C::MinCount(int(1)))))),
    );

    // ---------------------------------------------------------- Contextual
    v.push(manual("R2", CTX, "Relevancy", "Relevancy - Coverage", DataGraph, Composite, None).one(
        &["CLASS_URI", "PROPERTY_URI_1", "PROPERTY_URI_2"],
        root("R2")
            .target(Target::Class(ph("CLASS_URI")))
            .with(C::Property(Box::new(
                prop(Path::Predicate(ph("PROPERTY_URI_1"))).with(C::MinCount(int(1))).with(C::MaxCount(int(1))),
            )))
            .with(C::Property(Box::new(
                prop(Path::Predicate(ph("PROPERTY_URI_2"))).with(C::MinCount(int(1))).with(C::MaxCount(int(1))),
            ))),
    ));
    const U: &str = "Understandability";
    v.push(
        auto(
            "U1a",
            CTX,
            U,
            "Understandability - Human-readable labels in entities",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(&[], entities("U1a").with(entity_or(prop(p(rdfs::LABEL)).with(C::MinCount(int(1)))))),
    );
    v.push(
        auto(
            "U1b",
            CTX,
            U,
            "Understandability - Human-readable labels in Classes",
            SchemaGraph,
            Ratio,
            AutomaticConfig,
            Some(D::SchemaClasses),
        )
        .one(
            &[],
            root("U1b")
                .target(Target::Class(iri(rdfs::CLASS)))
                .with(C::Property(Box::new(prop(p(rdfs::LABEL)).with(C::MinCount(int(1)))))),
        ),
    );
    v.push(
        auto(
            "U1c",
            CTX,
            U,
            "Understandability - Human-readable labels in Properties",
            SchemaGraph,
            Ratio,
            AutomaticConfig,
            Some(D::SchemaProperties),
        )
        .one(
            &[],
            root("U1c")
                .target(Target::Class(iri(rdf::PROPERTY)))
                .with(C::Property(Box::new(prop(p(rdfs::LABEL)).with(C::MinCount(int(1)))))),
        ),
    );
    v.push(
        auto("U1d", CTX, U, "Understandability - Dataset metadata", MetadataGraph, Binary, AutomaticConfig, None).one(
            &[],
            datasets("U1d")
                .with(C::Property(Box::new(
                    prop(p(dcterms::TITLE)).with(C::MinCount(int(1))).with(C::NodeKind(iri(sh::LITERAL))),
                )))
                .with(C::Property(Box::new(
                    prop(p(dcterms::DESCRIPTION)).with(C::MinCount(int(1))).with(C::NodeKind(iri(sh::LITERAL))),
                )))
                .with(C::Property(Box::new(
                    prop(p(foaf::HOMEPAGE)).with(C::MinCount(int(1))).with(C::Class(iri(foaf::DOCUMENT))),
                ))),
        ),
    );
    v.push(
        auto("U2U3U5", CTX, U, "Understandability - Dataset metadata", MetadataGraph, Binary, AutomaticConfig, None).one(
            &[],
            datasets("U2U3U5")
                .with(C::Property(Box::new(prop(p(void::EXAMPLE_RESOURCE)).with(C::MinCount(int(1))))))
                .with(C::Property(Box::new(prop(p(void::VOCABULARY)).with(C::MinCount(int(1))))))
                .with(C::Or(vec![
                    prop(p(void::URI_REGEX_PATTERN)).with(C::MinCount(int(1))),
                    prop(p(void::URI_SPACE)).with(C::MinCount(int(1))).with(C::NodeKind(iri(sh::LITERAL))),
                ])),
        ),
    );
    v.push(
        auto(
            "U3b",
            CTX,
            U,
            "Understandability - URI regex or namespace compliance for entities",
            DataGraph,
            Ratio,
            AutomaticProfile,
            Some(D::Entities),
        )
        .variants(vec![(
            "default",
            vec![optional("URI_REGEX_PATTERN"), optional("URI_SPACE")],
            entities("U3b").with(C::Or(vec![
                has_type(rdfs::CLASS),
                has_type(rdf::PROPERTY),
                has_type(owl::NAMED_INDIVIDUAL),
                node().with(C::Pattern {
                    pattern: Term::string("^URI_REGEX_PATTERN"),
                    flags: None,
                }),
                node().with(C::Pattern {
                    pattern: Term::string("^URI_SPACE"),
                    flags: None,
                }),
            ])),
        )]),
    );
    const TW: &str = "Trustworthiness";
    const TRUSTVALUE: &str = "http://example.org/trustvalue";
    v.push(
        disabled("TW2", CTX, TW, "Trustworthiness - Trust values in entities", DataGraph, Ratio, Some(D::Entities)).one(
            &[],
            entities("TW2").with(entity_or(prop(p(TRUSTVALUE)).with(C::MinCount(int(1))))),
        ),
    );
    v.push(
        manual("TW5a", CTX, TW, "Trustworthiness - Trusted contributors and providers", MetadataGraph, Binary, None).one(
            &["LIST_TRUSTED_PROVIDERS", "LIST_TRUSTED_CONTRIBUTORS"],
            datasets("TW5a")
                .with(C::Property(Box::new(
                    prop(p(dcterms::PROVIDER)).with(C::In(vec![ph("LIST_TRUSTED_PROVIDERS")])),
                )))
                .with(C::Property(Box::new(
                    prop(p(dcterms::CONTRIBUTOR)).with(C::In(vec![ph("LIST_TRUSTED_CONTRIBUTORS")])),
                ))),
        ),
    );
    v.push(
        disabled("TW5b", CTX, TW, "Trustworthiness - Level of trust of the publisher", MetadataGraph, Binary, None).one(
            &[],
            root("TW5b")
                .target(Target::ObjectsOf(iri(dcterms::PUBLISHER)))
                .with(C::Property(Box::new(
                    prop(p(TRUSTVALUE))
                        .with(C::MinCount(int(1)))
                        .with(C::MinInclusive(int(1)))
                        .with(C::MaxInclusive(int(9)))
                        .with(C::Datatype(iri(xsd::INTEGER))),
                ))),
        ),
    );
    v.push(
        manual("TW6", CTX, TW, "Trustworthiness - Trust through association", DataGraph, Ratio, Some(D::Entities)).one(
            &["LIST_TRUSTED_AUTHORS"],
            entities("TW6").with(entity_or(
                prop(p(prov::WAS_ATTRIBUTED_TO))
                    .with(C::In(vec![ph("LIST_TRUSTED_AUTHORS")]))
                    .with(C::MinCount(int(1))),
            )),
        ),
    );
    const TI: &str = "Timeliness";
    v.push(manual("T1", CTX, TI, "Timeliness - Outdated entities", DataGraph, Ratio, Some(D::Entities)).one(
        &["DATE_RANGE_MIN_BOUND"],
        entities("T1").with(entity_or(prop(p(dcterms::DATE)).with(C::MinInclusive(ph("DATE_RANGE_MIN_BOUND"))))),
    ));
    v.push(manual("T2", CTX, TI, "Timeliness - Outdated dataset", MetadataGraph, Binary, None).one(
        &["DATE_RANGE_MIN_BOUND"],
        datasets("T2").with(C::Property(Box::new(
            prop(p(dcterms::MODIFIED)).with(C::MinInclusive(ph("DATE_RANGE_MIN_BOUND"))),
        ))),
    ));

    // ---------------------------------------------------------- Representational
    const RC: &str = "Representational Conciseness";
    v.push(
        auto(
            "RC1a",
            REP,
            RC,
            "Representational conciseness - Short URIs",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(&["LENGTH_VALUE"], entities("RC1a").with(entity_or(node().with(C::MaxLength(ph("LENGTH_VALUE")))))),
    );
    v.push(
        auto(
            "RC1b",
            REP,
            RC,
            "Representational conciseness - Parameters in URIs",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(
            &[],
            entities("RC1b").with(entity_or(node().with(C::Not(Box::new(node().with(C::Pattern {
                pattern: Term::string("\\?.+=.*"),
                flags: None,
            })))))),
        ),
    );
    v.push(
        auto(
            "RC2",
            REP,
            RC,
            "Representational conciseness - Use of prolix RDF features",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(
            &[],
            entities("RC2").with(entity_or(node().with(C::Not(Box::new(node().with(C::Or(
                [rdf::STATEMENT, rdf::LIST, rdf::SEQ, rdf::BAG, rdf::ALT]
                    .iter()
                    .map(|c| node().with(C::Class(iri(c))))
                    .collect(),
            ))))))),
        ),
    );
    v.push(manual("ITO1", REP, "Interoperability", "Interoperability - Re-use of existing terms", DataGraph, Composite, None).one(
        &["CLASS_URI", "PROPERTY_URI_1", "PROPERTY_URI_2"],
        root("ITO1")
            .target(Target::Class(ph("CLASS_URI")))
            .with(C::Property(Box::new(prop(Path::Predicate(ph("PROPERTY_URI_1"))).with(C::MinCount(int(1))))))
            .with(C::Property(Box::new(prop(Path::Predicate(ph("PROPERTY_URI_2"))).with(C::MinCount(int(1)))))),
    ));
    const V: &str = "Versatility";
    v.push(
        auto("V1", REP, V, "Versatility - Serialization formats VoID", MetadataGraph, Binary, AutomaticConfig, None).one(
            &[],
            datasets("V1").with(C::Property(Box::new(
                prop(p(void::FEATURE)).with(C::MinCount(int(1))).with(C::MaxCount(int(5))).with(C::In(
                    ["N3", "N-Triples", "RDF_XML", "RDFa", "Turtle"]
                        .iter()
                        .map(|f| iri(&format!("http://www.w3.org/ns/formats/{f}")))
                        .collect(),
                )),
            ))),
        ),
    );
    v.push(
        auto(
            "V2a",
            REP,
            V,
            "Versatility - Languages in entities labels",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::EntitiesWithLabel),
        )
        .one(
            &[],
            root("V2a")
                .target(Target::SubjectsOf(iri(rdfs::LABEL)))
                .with(entity_or(prop(p(rdfs::LABEL)).with(C::Datatype(iri(rdf::LANG_STRING))))),
        ),
    );
    v.push(
        auto(
            "V2b",
            REP,
            V,
            "Versatility - Languages in entities descriptions",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::EntitiesWithDescription),
        )
        .one(
            &[],
            root("V2b")
                .target(Target::SubjectsOf(iri(rdfs::COMMENT)))
                .with(entity_or(prop(p(rdfs::COMMENT)).with(C::Datatype(iri(rdf::LANG_STRING))))),
        ),
    );
    v.push(
        manual(
            "V2c",
            REP,
            V,
            "Versatility - Languages in labels of entities (Extension)",
            DataGraph,
            Ratio,
            Some(D::EntitiesWithLabel),
        )
        .one(
            &["REQUIRED_LANGUAGES"],
            root("V2c").target(Target::SubjectsOf(iri(rdfs::LABEL))).with(entity_or(
                prop(p(rdfs::LABEL))
                    .with(C::Datatype(iri(rdf::LANG_STRING)))
                    .with(C::LanguageIn(vec![ph("REQUIRED_LANGUAGES")]))
                    .with(C::UniqueLang(Term::boolean(true))),
            )),
        ),
    );
    const ITP: &str = "Interpretability";
    v.push(
        auto(
            "ITP1a",
            REP,
            ITP,
            "Interpretability - Use of self-descriptive formats",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(&[], entities("ITP1a").with(entity_or(node().with(C::NodeKind(iri(sh::IRI)))))),
    );
    v.push(
        auto(
            "ITP1b",
            REP,
            ITP,
            "Interpretability - Use of self-descriptive formats (properties)",
            DataGraph,
            Composite,
            AutomaticProfile,
            None,
        )
        .one(
            &["PROPERTY_URI"],
            root("ITP1b")
                .target(Target::ObjectsOf(ph("PROPERTY_URI")))
                .with(C::NodeKind(iri(sh::IRI))),
        ),
    );
    v.push(
        auto("ITP3a", REP, ITP, "Interpretability - Undefined classes", SchemaGraph, Composite, AutomaticProfile, None).one(
            &["CLASS_URI"],
            root("ITP3a")
                .target(Target::Node(ph("CLASS_URI")))
                .with(C::Property(Box::new(
                    prop(p(rdf::TYPE)).with(C::HasValue(iri(rdfs::CLASS))).with(C::MinCount(int(1))),
                ))),
        ),
    );
    v.push(
        auto("ITP3b", REP, ITP, "Interpretability - Undefined properties", SchemaGraph, Composite, AutomaticProfile, None)
            .one(
                &["PROPERTY_URI"],
                root("ITP3b")
                    .target(Target::Node(ph("PROPERTY_URI")))
                    .with(C::Property(Box::new(
                        prop(p(rdf::TYPE)).with(C::HasValue(iri(rdf::PROPERTY))).with(C::MinCount(int(1))),
                    ))),
            ),
    );
    v.push(
        auto(
            "ITP4",
            REP,
            ITP,
            "Interpretability - Usage of blank nodes",
            DataGraph,
            Ratio,
            AutomaticConfig,
            Some(D::Entities),
        )
        .one(
            &[],
            entities("ITP4").with(entity_or(node().with(C::Not(Box::new(
                node().with(C::NodeKind(iri(sh::BLANK_NODE))),
            ))))),
        ),
    );
    v
}

/// Placeholder names mentioned by a shape body: placeholder IRIs anywhere,
/// plus text placeholders spelled inside `sh:pattern` strings.
pub fn body_placeholders(body: &Shape) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    body.for_each_term(&mut |t| {
        if let Some(n) = placeholder_name(t) {
            out.insert(n.to_string());
        }
    });
    collect_text_placeholders(body, &mut out);
    out
}

fn collect_text_placeholders(s: &Shape, out: &mut BTreeSet<String>) {
    for c in &s.constraints {
        if let C::Pattern { pattern, .. } = c {
            if let Some(l) = pattern.as_literal() {
                for (_, _, name) in scan_text_placeholders(l.lexical(), &text_placeholder_names()) {
                    out.insert(name.to_string());
                }
            }
        }
    }
    for child in s.children() {
        collect_text_placeholders(child, out);
    }
}

/// Names of placeholders that are spelled as text inside patterns.
pub fn text_placeholder_names() -> Vec<&'static str> {
    PLACEHOLDERS
        .iter()
        .filter(|(_, k)| *k == ValueKind::Regex)
        .map(|(n, _)| *n)
        .collect()
}

/// Finds non-overlapping occurrences of `names` in `text`, trying longer
/// names first at each position. Returns (start, end, name) triples.
pub fn scan_text_placeholders<'n>(text: &str, names: &[&'n str]) -> Vec<(usize, usize, &'n str)> {
    let mut sorted: Vec<&'n str> = names.to_vec();
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < text.len() {
        if !text.is_char_boundary(i) {
            i += 1;
            continue;
        }
        for n in &sorted {
            if text[i..].starts_with(n) {
                out.push((i, i + n.len(), *n));
                i += n.len();
                continue 'outer;
            }
        }
        i += 1;
    }
    out
}
