use chrono::NaiveDate;
use dqa_rdf::vocab::xsd;
use dqa_rdf::{literal_is_ill_typed, parse_ntriples, parse_turtle, write_ntriples, write_turtle, Graph, Term};
use proptest::prelude::*;

fn arb_iri() -> impl Strategy<Value = Term> {
    prop_oneof![
        "[a-e]{1,3}".prop_map(|s| Term::iri(&format!("http://ex.org/{s}"))),
        "[a-c]{1,2}".prop_map(|s| Term::iri(&format!("http://other.org/ns#{s}"))),
        "[a-c]{1,2}".prop_map(|s| Term::iri(&format!("http://ex.org/caf\u{e9}/{s}.x"))),
    ]
}

fn arb_literal() -> impl Strategy<Value = Term> {
    prop_oneof![
        any::<String>().prop_map(|s| Term::string(&s)),
        any::<i64>().prop_map(Term::integer),
        ("[a-z]{0,6}", "[a-z]{2}(-[a-z0-9]{2,3})?")
            .prop_map(|(s, l)| Term::Literal(dqa_rdf::Literal::lang(s, &l))),
        ("-?[0-9]{1,4}\\.[0-9]{1,3}").prop_map(|s| Term::typed(&s, xsd::DECIMAL)),
        any::<bool>().prop_map(Term::boolean),
        "[a-z\"\\\\\n\t]{0,5}".prop_map(|s| Term::typed(&s, "http://ex.org/dt")),
    ]
}

fn arb_subject() -> impl Strategy<Value = Term> {
    prop_oneof![3 => arb_iri(), 1 => (0u8..4).prop_map(|i| Term::blank(&format!("n{i}")))]
}

fn arb_object() -> impl Strategy<Value = Term> {
    prop_oneof![2 => arb_subject(), 2 => arb_literal()]
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec((arb_subject(), arb_iri(), arb_object()), 0..40).prop_map(|ts| {
        let mut g = Graph::new();
        g.set_prefix("ex", "http://ex.org/");
        for (s, p, o) in ts {
            g.add(s, p.iri_str().unwrap(), o);
        }
        g
    })
}

/// Graph isomorphism is not needed: compare with blank nodes replaced by a
/// placeholder, plus equal triple counts.
fn shape(g: &Graph) -> Vec<String> {
    let mut v: Vec<String> = g
        .iter()
        .map(|t| {
            let f = |x: &Term| if x.is_blank() { "_".to_string() } else { x.to_string() };
            format!("{} {} {}", f(&t.subject), t.predicate, f(&t.object))
        })
        .collect();
    v.sort();
    v
}

proptest! {
    #[test]
    fn turtle_round_trip(g in arb_graph()) {
        let text = write_turtle(&g);
        let back = parse_turtle(&text, None).unwrap();
        prop_assert_eq!(back.len(), g.len(), "{}", text);
        prop_assert_eq!(shape(&back), shape(&g));
    }

    #[test]
    fn ntriples_round_trip(g in arb_graph()) {
        let text = write_ntriples(&g);
        let back = parse_ntriples(&text).unwrap();
        prop_assert_eq!(back.len(), g.len());
        prop_assert_eq!(shape(&back), shape(&g));
        prop_assert_eq!(write_ntriples(&back).len(), text.len());
    }

    #[test]
    fn index_matches_scan(g in arb_graph(), s in prop::option::of(arb_subject()),
                          p in prop::option::of(arb_iri()), o in prop::option::of(arb_object())) {
        let mut got: Vec<String> = g.match_pattern(s.as_ref(), p.as_ref(), o.as_ref())
            .iter().map(|t| t.to_ntriples()).collect();
        got.sort();
        let mut want: Vec<String> = g.iter()
            .filter(|t| s.as_ref().is_none_or(|x| *x == t.subject))
            .filter(|t| p.as_ref().is_none_or(|x| x.iri_str() == Some(t.predicate.as_str())))
            .filter(|t| o.as_ref().is_none_or(|x| *x == t.object))
            .map(|t| t.to_ntriples()).collect();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn sorted_match_is_sorted(g in arb_graph()) {
        let v: Vec<String> = g.match_sorted(None, None, None).iter().map(|t| t.to_ntriples()).collect();
        let mut w = v.clone();
        w.sort();
        prop_assert_eq!(v, w);
    }

    #[test]
    fn canonical_integers_are_well_typed(v in any::<i64>()) {
        prop_assert!(!literal_is_ill_typed(&Term::integer(v)));
        if (i32::MIN as i64..=i32::MAX as i64).contains(&v) {
            prop_assert!(!literal_is_ill_typed(&Term::typed(&v.to_string(), xsd::INT)));
        }
    }

    #[test]
    fn canonical_doubles_are_well_typed(v in any::<f64>()) {
        let lex = if v.is_nan() { "NaN".to_string() }
            else if v.is_infinite() { if v > 0.0 { "INF".into() } else { "-INF".into() } }
            else { format!("{:E}", v) };
        prop_assert!(!literal_is_ill_typed(&Term::typed(&lex, xsd::DOUBLE)), "{}", lex);
    }

    #[test]
    fn canonical_decimals_are_well_typed(i in any::<i32>(), f in 0u32..1000) {
        let lex = format!("{}.{}", i, f);
        prop_assert!(!literal_is_ill_typed(&Term::typed(&lex, xsd::DECIMAL)));
    }

    #[test]
    fn canonical_booleans_are_well_typed(b in any::<bool>()) {
        prop_assert!(!literal_is_ill_typed(&Term::boolean(b)));
    }

    /// Independent oracle: chrono's calendar decides which y-m-d triples exist.
    #[test]
    fn date_validity_matches_chrono(y in 1i32..9999, m in 0u32..14, d in 0u32..33) {
        let lex = format!("{:04}-{:02}-{:02}", y, m, d);
        let valid = NaiveDate::from_ymd_opt(y, m, d).is_some();
        prop_assert_eq!(!literal_is_ill_typed(&Term::typed(&lex, xsd::DATE)), valid, "{}", lex);
    }

    #[test]
    fn canonical_datetimes_are_well_typed(secs in 0i64..253_402_300_799) {
        let dt = chrono::DateTime::from_timestamp(secs, 0).unwrap();
        let lex = dt.format("%Y-%m-%dT%H:%M:%SZ").to_string();
        prop_assert!(!literal_is_ill_typed(&Term::typed(&lex, xsd::DATE_TIME)), "{}", lex);
        prop_assert!(!literal_is_ill_typed(&Term::typed(&lex[..10], xsd::DATE)));
    }
}

#[test]
fn spec_examples() {
    assert!(literal_is_ill_typed(&Term::typed("abc", xsd::INTEGER)));
    assert!(!literal_is_ill_typed(&Term::typed("42", xsd::INTEGER)));
    assert!(literal_is_ill_typed(&Term::typed("2024-13-40", xsd::DATE)));

    let g = dqa_rdf::load_graph(&b""[..], dqa_rdf::Format::Turtle, None).unwrap();
    assert_eq!(g.len(), 0);
}

#[test]
fn same_as_match_against_scan() {
    let doc = r#"
        @prefix ex: <http://ex.org/> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        ex:a a ex:T ; owl:sameAs ex:b ; ex:p 1 .
        ex:b a ex:T ; owl:sameAs ex:c ; ex:p 2 .
        ex:c a ex:U ; ex:q "x" , "y" ; ex:r ex:a .
    "#;
    let g = parse_turtle(doc, None).unwrap();
    assert_eq!(g.len(), 10);
    let same = Term::iri(dqa_rdf::vocab::owl::SAME_AS);
    let n = g.iter().filter(|t| t.predicate.as_str() == dqa_rdf::vocab::owl::SAME_AS).count();
    assert_eq!(n, 2);
    assert_eq!(g.match_pattern(None, Some(&same), None).len(), n);
    let ty = Term::iri(dqa_rdf::vocab::rdf::TYPE);
    assert_eq!(g.match_pattern(None, Some(&ty), None).len(), 3);
}
