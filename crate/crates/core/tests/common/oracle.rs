//! Direct-scan reference computations for every enabled automatic metric.
//! Works from the input graphs alone, under the default configuration.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use dqa_rdf::{Graph, Term};

const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
const OWL: &str = "http://www.w3.org/2002/07/owl#";
const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
const VOID: &str = "http://rdfs.org/ns/void#";
const DCT: &str = "http://purl.org/dc/terms/";
const FOAF: &str = "http://xmlns.com/foaf/0.1/";
const DCAT: &str = "http://www.w3.org/ns/dcat#";

fn n(ns: &str, local: &str) -> String {
    format!("{ns}{local}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub violations: Option<usize>,
    pub denominator: Option<usize>,
    pub score: Option<f64>,
    pub applicable: bool,
}

fn binary(v: usize) -> Expected {
    Expected {
        violations: Some(v),
        denominator: None,
        score: Some(if v == 0 { 1.0 } else { 0.0 }),
        applicable: true,
    }
}

fn ratio(failing: usize, pop: usize) -> Expected {
    Expected {
        violations: Some(failing),
        denominator: Some(pop),
        score: (pop > 0).then(|| 1.0 - failing as f64 / pop as f64),
        applicable: pop > 0,
    }
}

fn composite(units: &[bool]) -> Option<Expected> {
    if units.is_empty() {
        return None;
    }
    let ok = units.iter().filter(|f| !**f).count();
    Some(Expected {
        violations: None,
        denominator: Some(units.len()),
        score: Some(ok as f64 / units.len() as f64),
        applicable: true,
    })
}

struct World<'a> {
    data: &'a Graph,
    schemas: &'a [Graph],
    union: Graph,
    schema_union: Graph,
    schema_declared: BTreeSet<Term>,
}

impl World<'_> {
    fn typed(&self, g: &Graph, x: &Term, ty: &str) -> bool {
        g.has(x, &n(RDF, "type"), &Term::iri(ty))
    }

    fn class_in(&self, g: &Graph, x: &Term) -> bool {
        [n(RDFS, "Class"), n(OWL, "Class"), n(OWL, "DeprecatedClass"), n(RDFS, "Datatype")]
            .iter()
            .any(|c| self.typed(g, x, c))
    }

    fn prop_in(&self, g: &Graph, x: &Term) -> bool {
        let owl_props = [
            "DatatypeProperty",
            "ObjectProperty",
            "AnnotationProperty",
            "FunctionalProperty",
            "InverseFunctionalProperty",
            "TransitiveProperty",
            "SymmetricProperty",
            "AsymmetricProperty",
            "ReflexiveProperty",
            "IrreflexiveProperty",
            "OntologyProperty",
            "DeprecatedProperty",
        ];
        self.typed(g, x, &n(RDF, "Property"))
            || owl_props.iter().any(|p| self.typed(g, x, &n(OWL, p)))
            || !g.objects(x, &n(RDFS, "domain")).is_empty()
            || !g.objects(x, &n(RDFS, "range")).is_empty()
    }

    fn is_class(&self, x: &Term) -> bool {
        self.class_in(&self.union, x)
    }

    fn is_prop(&self, x: &Term) -> bool {
        self.prop_in(&self.union, x)
    }

    fn is_ni(&self, x: &Term) -> bool {
        if self.typed(&self.union, x, &n(OWL, "NamedIndividual")) {
            return true;
        }
        if self.is_class(x) || self.is_prop(x) {
            return false;
        }
        self.schemas
            .iter()
            .any(|s| s.objects(x, &n(RDF, "type")).iter().any(|c| self.schema_declared.contains(c)))
    }

    fn filtered(&self, x: &Term) -> bool {
        self.is_class(x) || self.is_prop(x) || self.is_ni(x)
    }

    fn instance_of(&self, g: &Graph, x: &Term, class: &str) -> bool {
        if x.is_literal() {
            return false;
        }
        let target = Term::iri(class);
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<Term> = g.objects(x, &n(RDF, "type")).into();
        while let Some(c) = queue.pop_front() {
            if c == target {
                return true;
            }
            if seen.insert(c.clone()) {
                queue.extend(g.objects(&c, &n(RDFS, "subClassOf")));
            }
        }
        false
    }

    fn values(&self, s: &Term, p: &str) -> Vec<Term> {
        self.union.objects(s, p)
    }

    fn pairs(&self, p: &str) -> Vec<(Term, Term)> {
        self.union
            .iter()
            .filter(|t| t.predicate.as_str() == p)
            .map(|t| (t.subject, t.object))
            .collect()
    }
}

fn lexical(t: &Term) -> Option<String> {
    match t {
        Term::Iri(i) => Some(i.as_str().to_string()),
        Term::Literal(l) => Some(l.lexical().to_string()),
        Term::BlankNode(_) => None,
    }
}

fn has_datatype(t: &Term, dt: &str) -> bool {
    t.as_literal().is_some_and(|l| l.datatype().as_str() == dt)
}

fn iris(set: impl IntoIterator<Item = Term>) -> BTreeSet<String> {
    set.into_iter().filter_map(|t| t.iri_str().map(str::to_string)).collect()
}

/// Expected measures keyed by metric id. `base` is the configured dataset
/// base IRI, if any.
pub fn expected(data: &Graph, schemas: &[Graph], metadata: Option<&Graph>, base: Option<&str>) -> BTreeMap<String, Expected> {
    let mut union = data.clone();
    let mut schema_union = Graph::new();
    let mut schema_declared = BTreeSet::new();
    for s in schemas {
        union.merge(s);
        schema_union.merge(s);
    }
    let mut w = World {
        data,
        schemas,
        union,
        schema_union,
        schema_declared: BTreeSet::new(),
    };
    for s in schemas {
        for t in s.iter() {
            if t.predicate.as_str() == n(RDF, "type") && (w.class_in(s, &t.subject) || t.object == Term::iri(&n(RDFS, "Class"))) {
                schema_declared.insert(t.subject.clone());
            }
        }
    }
    w.schema_declared = schema_declared;
    let w = w;
    let ty = n(RDF, "type");
    let label = n(RDFS, "label");
    let comment = n(RDFS, "comment");
    let same = n(OWL, "sameAs");

    let entities: BTreeSet<Term> = w
        .data
        .subjects_with(&ty)
        .into_iter()
        .filter(|s| !w.filtered(s))
        .collect();
    let focus_all: BTreeSet<Term> = w
        .union
        .subjects_with(&ty)
        .into_iter()
        .filter(|s| !w.filtered(s))
        .collect();
    let used_classes = iris(w.data.objects_of(&ty));
    let used_props: BTreeSet<String> = w.data.iter().map(|t| t.predicate.as_str().to_string()).collect();

    let su = &w.schema_union;
    let schema_subjects: BTreeSet<Term> = su.iter().map(|t| t.subject).collect();
    let schema_classes: BTreeSet<String> = iris(schema_subjects.iter().filter(|x| w.class_in(su, x) || w.typed(su, x, &n(RDFS, "Class"))).cloned());
    let schema_props: BTreeSet<String> = iris(schema_subjects.iter().filter(|x| w.prop_in(su, x)).cloned());
    let typed_schema = |c: &str| -> BTreeSet<String> { iris(su.subjects(&ty, &Term::iri(&n(OWL, c)))) };
    let deprecated_true: BTreeSet<String> = iris(su.subjects(&n(OWL, "deprecated"), &Term::typed("true", &n(XSD, "boolean"))));
    let mut deprecated_classes = typed_schema("DeprecatedClass");
    deprecated_classes.extend(deprecated_true.iter().filter(|x| schema_classes.contains(*x)).cloned());
    let mut deprecated_props = typed_schema("DeprecatedProperty");
    deprecated_props.extend(deprecated_true.iter().filter(|x| schema_props.contains(*x)).cloned());
    let used = |set: BTreeSet<String>| -> Vec<String> { set.into_iter().filter(|p| used_props.contains(p)).collect() };

    let mut out = BTreeMap::new();
    let mut put = |id: &str, e: Option<Expected>| {
        if let Some(e) = e {
            out.insert(id.to_string(), e);
        }
    };
    let entity_ratio = |pop: &BTreeSet<Term>, fail: &dyn Fn(&Term) -> bool| ratio(pop.iter().filter(|x| fail(x)).count(), pop.len());

    // Entity-level ratios.
    let iri_of = |x: &Term| x.iri_str().map(str::to_string);
    put("P1", Some(entity_ratio(&entities, &|x| iri_of(x).is_none_or(|i| i.contains('#')))));
    put("CP4", Some(entity_ratio(&entities, &|x| w.values(x, &same).is_empty())));
    put("U1a", Some(entity_ratio(&entities, &|x| w.values(x, &label).is_empty())));
    put("RC1a", Some(entity_ratio(&entities, &|x| iri_of(x).is_none_or(|i| i.chars().count() > 80))));
    let query = regex::Regex::new(r"\?.+=.*").unwrap();
    put("RC1b", Some(entity_ratio(&entities, &|x| iri_of(x).is_some_and(|i| query.is_match(&i)))));
    let reif = ["Statement", "List", "Seq", "Bag", "Alt"].map(|c| n(RDF, c));
    put("RC2", Some(entity_ratio(&entities, &|x| reif.iter().any(|c| w.instance_of(&w.union, x, c)))));
    put("ITP1a", Some(entity_ratio(&entities, &|x| !x.is_iri())));
    put("ITP4", Some(entity_ratio(&entities, &|x| x.is_blank())));
    let lang = n(RDF, "langString");
    let with = |p: &str| -> BTreeSet<Term> { entities.iter().filter(|x| !w.values(x, p).is_empty()).cloned().collect() };
    put("V2a", Some(entity_ratio(&with(&label), &|x| w.values(x, &label).iter().any(|v| !has_datatype(v, &lang)))));
    put("V2b", Some(entity_ratio(&with(&comment), &|x| w.values(x, &comment).iter().any(|v| !has_datatype(v, &lang)))));

    let meta_lexicals = |m: &Graph, p: &str| -> Vec<String> {
        let s: BTreeSet<String> = m.objects_of(&n(VOID, p)).iter().filter_map(lexical).filter(|s| !s.is_empty()).collect();
        s.into_iter().collect()
    };
    let spaces = metadata.map(|m| meta_lexicals(m, "uriSpace")).unwrap_or_default();
    let patterns = metadata.map(|m| meta_lexicals(m, "uriRegexPattern")).unwrap_or_default();
    if let Some(b) = base.map(str::to_string).or_else(|| spaces.first().cloned()) {
        put(
            "I2",
            Some(entity_ratio(&with(&same), &|x| {
                w.values(x, &same).iter().any(|v| lexical(v).is_none_or(|s| s.starts_with(&b)))
            })),
        );
    }
    if let Some(p) = patterns.first() {
        let re = regex::Regex::new(&format!("^{}", p.trim_start_matches('^'))).unwrap();
        put("U3b", Some(entity_ratio(&entities, &|x| iri_of(x).is_none_or(|i| !re.is_match(&i)))));
    } else if let Some(s) = spaces.first() {
        put("U3b", Some(entity_ratio(&entities, &|x| iri_of(x).is_none_or(|i| !i.starts_with(s.as_str())))));
    }

    if !schemas.is_empty() {
        // Data-graph composites driven by schema declarations.
        let mut dt_ranges: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        let mut ranges: BTreeMap<String, BTreeSet<(u8, String)>> = BTreeMap::new();
        let is_datatype = |r: &str| {
            r.starts_with(XSD)
                || [n(RDF, "langString"), n(RDF, "HTML"), n(RDF, "XMLLiteral")].iter().any(|d| d == r)
                || w.typed(su, &Term::iri(r), &n(RDFS, "Datatype"))
        };
        for t in su.iter().filter(|t| t.predicate.as_str() == n(RDFS, "range")) {
            let (Some(p), Some(r)) = (t.subject.iri_str(), t.object.iri_str()) else { continue };
            let kind = if r == n(RDFS, "Literal") {
                (0, String::new())
            } else if r == n(RDFS, "Resource") {
                (1, String::new())
            } else if r == n(OWL, "Thing") {
                (2, String::new())
            } else if is_datatype(r) {
                dt_ranges.entry(p.into()).or_default().insert(r.into());
                (3, r.to_string())
            } else {
                (4, r.to_string())
            };
            ranges.entry(p.into()).or_default().insert(kind);
        }
        let mut domains: BTreeMap<String, BTreeSet<Option<String>>> = BTreeMap::new();
        for t in su.iter().filter(|t| t.predicate.as_str() == n(RDFS, "domain")) {
            let (Some(p), Some(d)) = (t.subject.iri_str(), t.object.iri_str()) else { continue };
            let kind = (d != n(OWL, "Thing") && d != n(RDFS, "Resource")).then(|| d.to_string());
            domains.entry(p.into()).or_default().insert(kind);
        }

        let mut units = Vec::new();
        for (p, dts) in dt_ranges.iter().filter(|(p, _)| used_props.contains(*p)) {
            for dt in dts {
                units.push(w.pairs(p).iter().any(|(_, v)| !has_datatype(v, dt)));
            }
        }
        put("SV3", composite(&units));

        let mut disjoint = BTreeSet::new();
        for t in su.iter().filter(|t| t.predicate.as_str() == n(OWL, "disjointWith")) {
            let (Some(a), Some(b)) = (t.subject.iri_str(), t.object.iri_str()) else { continue };
            if a != b {
                disjoint.insert(if a < b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) });
            }
        }
        let nodes: BTreeSet<Term> = w.union.iter().flat_map(|t| [t.subject, t.object]).collect();
        let units: Vec<bool> = disjoint
            .iter()
            .filter(|(a, b)| used_classes.contains(a) && used_classes.contains(b))
            .map(|(a, b)| nodes.iter().any(|x| w.instance_of(&w.union, x, a) && w.instance_of(&w.union, x, b)))
            .collect();
        put("CN1", composite(&units));

        let units: Vec<bool> = schema_props.iter().map(|p| !w.union.subjects(&ty, &Term::iri(p)).is_empty()).collect();
        put("CN2a", composite(&units));
        let units: Vec<bool> = schema_classes
            .iter()
            .map(|c| focus_all.iter().any(|x| !w.values(x, c).is_empty()))
            .collect();
        put("CN2b", composite(&units));

        let units: Vec<bool> = used(typed_schema("DatatypeProperty")).iter().map(|p| w.pairs(p).iter().any(|(_, v)| !v.is_literal())).collect();
        put("CN3a", composite(&units));
        let units: Vec<bool> = used(typed_schema("ObjectProperty")).iter().map(|p| w.pairs(p).iter().any(|(_, v)| v.is_literal())).collect();
        put("CN3b", composite(&units));

        if !deprecated_classes.is_empty() {
            let v = focus_all
                .iter()
                .filter(|x| w.values(x, &ty).iter().any(|c| c.iri_str().is_some_and(|c| deprecated_classes.contains(c))))
                .count();
            put("CN4a", Some(binary(v)));
        }
        let units: Vec<bool> = deprecated_props.iter().map(|p| focus_all.iter().any(|x| !w.values(x, p).is_empty())).collect();
        put("CN4b", composite(&units));

        let units: Vec<bool> = used(typed_schema("InverseFunctionalProperty"))
            .iter()
            .map(|p| {
                let mut by_object: BTreeMap<Term, BTreeSet<Term>> = BTreeMap::new();
                for (s, o) in w.pairs(p) {
                    by_object.entry(o).or_default().insert(s);
                }
                by_object.values().any(|s| s.len() > 1)
            })
            .collect();
        put("CN5", composite(&units));

        let units: Vec<bool> = domains
            .iter()
            .filter(|(p, _)| used_props.contains(*p))
            .map(|(p, ds)| {
                w.pairs(p).iter().any(|(s, _)| {
                    ds.iter().any(|d| match d {
                        Some(c) => !w.instance_of(&w.union, s, c),
                        None => s.is_literal(),
                    })
                })
            })
            .collect();
        put("CN9a", composite(&units));
        let units: Vec<bool> = ranges
            .iter()
            .filter(|(p, _)| used_props.contains(*p))
            .map(|(p, rs)| {
                w.pairs(p).iter().any(|(_, v)| {
                    rs.iter().any(|(k, r)| match k {
                        0 => !v.is_literal(),
                        1 => false,
                        2 => v.is_literal(),
                        3 => !has_datatype(v, r),
                        _ => !w.instance_of(&w.union, v, r),
                    })
                })
            })
            .collect();
        put("CN9b", composite(&units));

        let units: Vec<bool> = used(typed_schema("IrreflexiveProperty")).iter().map(|p| w.pairs(p).iter().any(|(s, o)| s == o)).collect();
        put("CN10a", composite(&units));
        let units: Vec<bool> = used(typed_schema("FunctionalProperty"))
            .iter()
            .map(|p| {
                let mut count: BTreeMap<Term, usize> = BTreeMap::new();
                for (s, _) in w.pairs(p) {
                    *count.entry(s).or_default() += 1;
                }
                count.values().any(|c| *c > 1)
            })
            .collect();
        put("CN10b", composite(&units));
        let units: Vec<bool> = used(typed_schema("AsymmetricProperty"))
            .iter()
            .map(|p| {
                let pairs: BTreeSet<(Term, Term)> = w.pairs(p).into_iter().collect();
                pairs.iter().any(|(s, o)| pairs.contains(&(o.clone(), s.clone())))
            })
            .collect();
        put("CN10c", composite(&units));

        let ni = Term::iri(&n(OWL, "NamedIndividual"));
        let units: Vec<bool> = schema_classes
            .iter()
            .map(|c| {
                !w.union
                    .subjects(&ty, &Term::iri(c))
                    .iter()
                    .any(|x| !(w.is_ni(x) || w.union.has(x, &ty, &ni)))
            })
            .collect();
        put("CP1", composite(&units));

        // Schema-graph checks.
        let schema_class = |c: &str| {
            let t = Term::iri(c);
            w.class_in(su, &t) || w.typed(su, &t, &n(RDFS, "Class"))
        };
        let units: Vec<bool> = used_classes.iter().map(|c| !schema_class(c)).collect();
        put("ITP3a", composite(&units));
        let units: Vec<bool> = used_props.iter().map(|p| !w.prop_in(su, &Term::iri(p))).collect();
        put("ITP3b", composite(&units));
        let unlabeled = |set: &BTreeSet<String>| set.iter().filter(|x| su.objects(&Term::iri(x), &label).is_empty()).count();
        put("U1b", Some(ratio(unlabeled(&schema_classes), schema_classes.len())));
        put("U1c", Some(ratio(unlabeled(&schema_props), schema_props.len())));
    }

    let units: Vec<bool> = used_props.iter().map(|p| w.pairs(p).iter().any(|(_, v)| !v.is_iri())).collect();
    put("ITP1b", composite(&units));

    if let Some(m) = metadata {
        let has_void = !m.subjects(&ty, &Term::iri(&n(VOID, "Dataset"))).is_empty();
        let dataset_class = if has_void { n(VOID, "Dataset") } else { n(DCAT, "Dataset") };
        let homepage = if has_void { n(FOAF, "homepage") } else { n(DCAT, "landingPage") };
        let subjects: BTreeSet<Term> = m.iter().flat_map(|t| [t.subject, t.object]).collect();
        let datasets: Vec<Term> = subjects.into_iter().filter(|x| w.instance_of(m, x, &dataset_class)).collect();
        let vals = |d: &Term, p: String| m.objects(d, &p);
        let count_where = |f: &dyn Fn(&Term) -> usize| datasets.iter().map(f).sum::<usize>();
        let dist_dl = |d: &Term| {
            vals(d, n(DCAT, "distribution"))
                .iter()
                .any(|x| !m.objects(x, &n(DCAT, "downloadURL")).is_empty())
        };
        put("A2", Some(binary(count_where(&|d| usize::from(vals(d, n(VOID, "dataDump")).is_empty() && !dist_dl(d))))));
        put(
            "L1",
            Some(binary(count_where(&|d| {
                let ls = vals(d, n(DCT, "license"));
                if ls.is_empty() {
                    1
                } else {
                    ls.iter().filter(|l| !w.instance_of(m, l, &n(DCT, "LicenseDocument"))).count()
                }
            }))),
        );
        let none = |d: &Term, ps: &[&str]| ps.iter().all(|p| vals(d, n(DCT, p)).is_empty());
        put(
            "S2",
            Some(binary(count_where(&|d| {
                usize::from(none(d, &["contributor", "creator", "publisher"])) + usize::from(none(d, &["source", "provenance"]))
            }))),
        );
        put(
            "U1d",
            Some(binary(count_where(&|d| {
                let lit = |p: &str| {
                    let vs = vals(d, n(DCT, p));
                    if vs.is_empty() {
                        1
                    } else {
                        vs.iter().filter(|v| !v.is_literal()).count()
                    }
                };
                let hp = vals(d, homepage.clone());
                let hp_bad = if hp.is_empty() {
                    1
                } else {
                    hp.iter().filter(|v| !w.instance_of(m, v, &n(FOAF, "Document"))).count()
                };
                lit("title") + lit("description") + hp_bad
            }))),
        );
        put("U2", Some(binary(count_where(&|d| usize::from(vals(d, n(VOID, "exampleResource")).is_empty())))));
        put("U5", Some(binary(count_where(&|d| usize::from(vals(d, n(VOID, "vocabulary")).is_empty())))));
        put(
            "U3a",
            Some(binary(count_where(&|d| {
                let space = vals(d, n(VOID, "uriSpace"));
                let ok = !vals(d, n(VOID, "uriRegexPattern")).is_empty() || (!space.is_empty() && space.iter().all(Term::is_literal));
                usize::from(!ok)
            }))),
        );
        let formats: BTreeSet<Term> = ["N3", "N-Triples", "RDF_XML", "RDFa", "Turtle"]
            .iter()
            .map(|f| Term::iri(&format!("http://www.w3.org/ns/formats/{f}")))
            .collect();
        put(
            "V1",
            Some(binary(count_where(&|d| {
                let fs = vals(d, n(VOID, "feature"));
                usize::from(fs.is_empty()) + usize::from(fs.len() > 5) + fs.iter().filter(|f| !formats.contains(f)).count()
            }))),
        );
    }
    out
}
