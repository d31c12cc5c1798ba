use std::collections::BTreeSet;

use dqa_core::catalog::lookup;
use dqa_core::instantiate::{instantiate_variant, regex_escape};
use dqa_core::profile::ProfileSummary;
use dqa_core::{instantiate, plan, BindingValue, Bindings, Config, InstantiateError};
use dqa_rdf::vocab::{rdf, xsd};
use dqa_rdf::{Graph, Term};
use dqa_shacl::{validate, Constraint, Shape, Target};
use proptest::prelude::*;

fn ex(local: &str) -> Term {
    Term::iri(&format!("http://example.org/{local}"))
}

fn templates(p: &dqa_core::Plan) -> BTreeSet<&str> {
    p.shapes.iter().map(|s| s.template_id).collect()
}

fn find<'a>(s: &'a Shape, f: &dyn Fn(&Constraint) -> bool) -> Option<&'a Constraint> {
    for c in &s.constraints {
        if f(c) {
            return Some(c);
        }
        let nested: Vec<&Shape> = match c {
            Constraint::Or(ms) | Constraint::And(ms) => ms.iter().collect(),
            Constraint::Not(x) | Constraint::Node(x) | Constraint::Property(x) => vec![&**x],
            _ => vec![],
        };
        for m in nested {
            if let Some(hit) = find(m, f) {
                return Some(hit);
            }
        }
    }
    None
}

fn pattern_of(s: &Shape) -> String {
    match find(s, &|c| matches!(c, Constraint::Pattern { .. })) {
        Some(Constraint::Pattern { pattern, .. }) => pattern.as_literal().unwrap().lexical().to_string(),
        _ => panic!("no pattern"),
    }
}

#[test]
fn empty_profile_plan() {
    let p = plan(&ProfileSummary::default(), &Config::default(), false, false).unwrap();
    let want: BTreeSet<&str> = ["P1", "CP4", "U1a", "RC1a", "RC1b", "RC2", "ITP1a", "ITP4", "V2a", "V2b"]
        .into_iter()
        .collect();
    assert_eq!(templates(&p), want);
    let log = p.run_log();
    assert!(log.contains("skipped I2: no dataset base IRI"), "{log}");
    assert!(log.lines().any(|l| l.starts_with("skipped U3b:")), "{log}");
    for s in &p.shapes {
        assert!(s.shape_id.starts_with(&format!("urn:dqa:shape:{}-", s.template_id)));
    }
}

#[test]
fn inverse_functional_properties_give_cn5_instances() {
    let mut prof = ProfileSummary::default();
    for p in ["http://example.org/isbn", "http://example.org/id", "http://example.org/unused"] {
        prof.declared.inverse_functional.insert(p.into());
    }
    prof.used_properties.insert("http://example.org/isbn".into());
    prof.used_properties.insert("http://example.org/id".into());
    let p = plan(&prof, &Config::default(), false, true).unwrap();
    assert_eq!(p.shapes.iter().filter(|s| s.template_id == "CN5").count(), 2);
}

#[test]
fn plan_is_deterministic() {
    let mut prof = ProfileSummary::default();
    prof.used_properties.extend(["http://example.org/a".to_string(), "http://example.org/b".to_string()]);
    let a = plan(&prof, &Config::default(), true, true).unwrap();
    let b = plan(&prof, &Config::default(), true, true).unwrap();
    let ids = |p: &dqa_core::Plan| p.shapes.iter().map(|s| s.shape_id.clone()).collect::<Vec<_>>();
    assert_eq!(ids(&a), ids(&b));
}

#[test]
fn cn5_binds_property() {
    let t = lookup("CN5").unwrap();
    let s = instantiate(t, &Bindings::new().with("PROPERTY_URI", ex("isbn"))).unwrap();
    assert_eq!(s.shape.targets, vec![Target::ObjectsOf(ex("isbn"))]);
    assert_eq!(s.template_id, "CN5");
}

#[test]
fn i2_pattern_is_escaped_base() {
    let t = lookup("I2").unwrap();
    let b = Bindings::new().with("DATASET_URI", BindingValue::Text(regex_escape("http://ex.org/")));
    let s = instantiate(t, &b).unwrap();
    assert_eq!(pattern_of(&s.shape), r"^(?!http://ex\.org/)");
}

#[test]
fn i2_from_config_base() {
    let cfg = Config::from_json(r#"{"dataset-base-iri": "http://ex.org/"}"#).unwrap();
    let p = plan(&ProfileSummary::default(), &cfg, false, false).unwrap();
    let i2 = p.shapes.iter().find(|s| s.template_id == "I2").unwrap();
    assert_eq!(pattern_of(&i2.shape), r"^(?!http://ex\.org/)");
}

proptest! {
    #[test]
    fn escaped_negative_lookahead_matches_iff_outside(
        base in "[a-z]{1,6}://[a-z.+*?()\\[\\]{}|^$#&-]{0,12}/?",
        tail in "[a-z./#?+*()-]{0,8}",
        other in "[a-z:/.#?+*()-]{0,20}",
    ) {
        let re = fancy_regex::Regex::new(&format!("^(?!{})", regex_escape(&base))).unwrap();
        let inside = format!("{base}{tail}");
        prop_assert!(!re.is_match(&inside).unwrap());
        prop_assert_eq!(re.is_match(&other).unwrap(), !other.starts_with(&base));
    }
}

#[test]
fn t1_date_goes_to_min_inclusive() {
    let t = lookup("T1").unwrap();
    let date = Term::typed("2020-01-01", xsd::DATE);
    let s = instantiate(t, &Bindings::new().with("DATE_RANGE_MIN_BOUND", date.clone())).unwrap();
    let hit = find(&s.shape, &|c| matches!(c, Constraint::MinInclusive(_)));
    assert_eq!(hit, Some(&Constraint::MinInclusive(date)));
}

#[test]
fn cn1_targets_first_class_and_negates_second() {
    let t = lookup("CN1").unwrap();
    let b = Bindings::new().with("CLASS_URI", ex("A")).with("DISJOINT_CLASS_URI", ex("B"));
    let s = instantiate(t, &b).unwrap();
    assert_eq!(s.shape.targets, vec![Target::Class(ex("A"))]);
    let not = s.shape.constraints.iter().find_map(|c| match c {
        Constraint::Not(x) => Some(x),
        _ => None,
    });
    assert_eq!(not.unwrap().constraints, vec![Constraint::Class(ex("B"))]);
}

#[test]
fn wrong_kind_is_rejected() {
    let t = lookup("CN5").unwrap();
    let err = instantiate(t, &Bindings::new().with("PROPERTY_URI", Term::integer(3))).unwrap_err();
    assert!(matches!(err, InstantiateError::WrongKind { ref placeholder, .. } if placeholder == "PROPERTY_URI"));
}

#[test]
fn missing_and_unknown_placeholders() {
    let t = lookup("CN5").unwrap();
    assert!(matches!(instantiate(t, &Bindings::new()), Err(InstantiateError::Missing { .. })));
    let b = Bindings::new().with("PROPERTY_URI", ex("p")).with("BOGUS", ex("q"));
    assert!(matches!(instantiate(t, &b), Err(InstantiateError::Unknown { .. })));
}

#[test]
fn cn7_expands_list_members() {
    let t = lookup("CN7").unwrap();
    let b = Bindings::new()
        .with("CLASS_URI", ex("Person"))
        .with("ANTECEDENT_PROPERTIES", BindingValue::List(vec![ex("a1"), ex("a2")]))
        .with("CONSEQUENT_PROPERTIES", BindingValue::List(vec![ex("c1")]));
    let s = instantiate(t, &b).unwrap();
    let mut g = Graph::new();
    g.add(ex("p"), rdf::TYPE, ex("Person"));
    for prop in ["a1", "a2", "c1"] {
        g.add(ex("p"), &format!("http://example.org/{prop}"), Term::integer(1));
    }
    g.add(ex("q"), rdf::TYPE, ex("Person"));
    g.add(ex("q"), "http://example.org/a1", Term::integer(1));
    g.add(ex("q"), "http://example.org/a2", Term::integer(1));
    g.add(ex("r"), rdf::TYPE, ex("Person"));
    g.add(ex("r"), "http://example.org/a1", Term::integer(1));
    g.add(ex("r"), "http://example.org/c1", Term::integer(1));
    let r = validate(&g, &[s.shape]);
    let focus: Vec<&Term> = r.results.iter().map(|r| &r.focus_node).collect();
    assert_eq!(focus, vec![&ex("p")]);
}

#[test]
fn label_property_rewrites_shapes() {
    let cfg = Config::from_json(r#"{"label-property": "skos:prefLabel"}"#).unwrap();
    let t = lookup("U1a").unwrap();
    let s = instantiate_variant(t, "default", &Bindings::new(), &cfg, false).unwrap();
    let mut g = Graph::new();
    g.add(ex("a"), rdf::TYPE, ex("T"));
    g.add(ex("a"), "http://www.w3.org/2004/02/skos/core#prefLabel", Term::string("a"));
    g.add(ex("b"), rdf::TYPE, ex("T"));
    g.add(ex("b"), "http://www.w3.org/2000/01/rdf-schema#label", Term::string("b"));
    let r = validate(&g, &[s.shape]);
    let focus: Vec<&Term> = r.results.iter().map(|r| &r.focus_node).collect();
    assert_eq!(focus, vec![&ex("b")]);
}

#[test]
fn manual_templates_need_bindings() {
    let cfg = Config::from_json(
        r#"{"prefixes": {"ex": "http://example.org/"},
            "domain-knowledge": {"T1": [{"DATE_RANGE_MIN_BOUND": "2020-01-01"}]}}"#,
    )
    .unwrap();
    let p = plan(&ProfileSummary::default(), &cfg, false, false).unwrap();
    assert!(templates(&p).contains("T1"));
    let none = plan(&ProfileSummary::default(), &Config::default(), false, false).unwrap();
    assert!(!templates(&none).contains("T1"));
}
