//! Runner for the SHACL Core conformance manifests.

use std::fs;
use std::path::{Path as FsPath, PathBuf};

use dqa_rdf::vocab::{rdf, sh};
use dqa_rdf::{parse_turtle, Graph, Term};
use dqa_shacl::{parse_path, parse_shapes, validate, ShapeError, ValidationReport};

const MF: &str = "http://www.w3.org/2001/sw/DataAccess/tests/test-manifest#";
const SHT: &str = "http://www.w3.org/ns/shacl-test#";

#[derive(Debug, Default)]
pub struct SuiteOutcome {
    pub passed: Vec<String>,
    pub failed: Vec<(String, String)>,
    pub excluded: Vec<(String, String)>,
}

impl SuiteOutcome {
    pub fn supported(&self) -> usize {
        self.passed.len() + self.failed.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Expected {
    focus: Term,
    path: Option<String>,
    value: Option<Term>,
    source: Term,
    component: Term,
}

fn files(dir: &FsPath, out: &mut Vec<PathBuf>) {
    let mut entries: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort();
    for p in entries {
        if p.is_dir() {
            files(&p, out);
        } else if p.extension().is_some_and(|e| e == "ttl") {
            out.push(p);
        }
    }
}

fn load(path: &FsPath) -> Graph {
    let src = fs::read_to_string(path).unwrap();
    let base = format!("file://{}", path.display());
    parse_turtle(&src, Some(&base)).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn graph_for(iri: &Term, here: &FsPath, here_graph: &Graph) -> Graph {
    let iri = iri.iri_str().expect("graph reference is an IRI");
    let path = PathBuf::from(iri.strip_prefix("file://").expect("file IRI"));
    if path == here {
        here_graph.clone()
    } else {
        load(&path)
    }
}

fn term_matches(expected: &Term, actual: &Term) -> bool {
    expected.is_blank() || expected == actual
}

fn matches(e: &Expected, r: &dqa_shacl::ValidationResult) -> bool {
    term_matches(&e.focus, &r.focus_node)
        && term_matches(&e.source, &r.source_shape)
        && e.component.iri_str() == Some(r.source_component.as_str())
        && match (&e.value, &r.value) {
            (None, None) => true,
            (Some(a), Some(b)) => term_matches(a, b),
            _ => false,
        }
        && match (&e.path, &r.result_path) {
            (None, None) => true,
            (Some(a), Some(b)) => *a == b.to_string(),
            _ => false,
        }
}

fn compare(expected_conforms: bool, expected: &[Expected], report: &ValidationReport) -> Result<(), String> {
    if expected_conforms != report.conforms {
        return Err(format!("conforms: expected {expected_conforms}, got {}", report.conforms));
    }
    if expected.len() != report.results.len() {
        return Err(format!(
            "expected {} results, got {}: {:#?}",
            expected.len(),
            report.results.len(),
            report.results
        ));
    }
    // bipartite matching; blank wildcards can make greedy assignment fail
    let mut owner: Vec<Option<usize>> = vec![None; report.results.len()];
    fn augment(
        e: usize,
        expected: &[Expected],
        report: &ValidationReport,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for (i, r) in report.results.iter().enumerate() {
            if seen[i] || !matches(&expected[e], r) {
                continue;
            }
            seen[i] = true;
            if owner[i].is_none_or(|o| augment(o, expected, report, seen, owner)) {
                owner[i] = Some(e);
                return true;
            }
        }
        false
    }
    for e in 0..expected.len() {
        let mut seen = vec![false; report.results.len()];
        if !augment(e, expected, report, &mut seen, &mut owner) {
            return Err(format!("no result matches {:?}; got {:#?}", expected[e], report.results));
        }
    }
    Ok(())
}

fn run_case(file: &FsPath, g: &Graph, case: &Term) -> Result<Result<(), String>, ShapeError> {
    let action = g.object(case, &format!("{MF}action")).expect("mf:action");
    let data = graph_for(&g.object(&action, &format!("{SHT}dataGraph")).unwrap(), file, g);
    let shapes_graph = graph_for(&g.object(&action, &format!("{SHT}shapesGraph")).unwrap(), file, g);
    let shapes = parse_shapes(&shapes_graph)?;
    let report = validate(&data, &shapes);
    if let Some(err) = report.errors.first() {
        return Err(err.clone());
    }

    let result = g.object(case, &format!("{MF}result")).expect("mf:result");
    let conforms = g
        .object(&result, sh::CONFORMS)
        .and_then(|t| t.as_literal().map(|l| l.lexical() == "true"))
        .expect("sh:conforms");
    let expected: Vec<Expected> = g
        .objects(&result, sh::RESULT)
        .iter()
        .map(|r| Expected {
            focus: g.object(r, sh::FOCUS_NODE).expect("focus"),
            path: g
                .object(r, sh::RESULT_PATH)
                .map(|p| parse_path(g, &p).expect("expected path").to_string()),
            value: g.object(r, sh::VALUE),
            source: g.object(r, sh::SOURCE_SHAPE).expect("source shape"),
            component: g.object(r, sh::SOURCE_CONSTRAINT_COMPONENT).expect("component"),
        })
        .collect();
    Ok(compare(conforms, &expected, &report))
}

pub fn run_suite(root: &FsPath) -> SuiteOutcome {
    let mut all = Vec::new();
    files(root, &mut all);
    let mut out = SuiteOutcome::default();
    for file in all {
        let g = load(&file);
        let validate_ty = Term::iri(&format!("{SHT}Validate"));
        let mut cases = g.subjects(rdf::TYPE, &validate_ty);
        cases.sort_by_cached_key(Term::to_ntriples);
        for case in cases {
            let name = case.iri_str().unwrap_or("?").rsplit('/').take(2).collect::<Vec<_>>();
            let name = format!("{}/{}", name.get(1).unwrap_or(&""), name[0]);
            match run_case(&file, &g, &case) {
                Ok(Ok(())) => out.passed.push(name),
                Ok(Err(why)) => out.failed.push((name, why)),
                Err(e @ ShapeError::Unsupported { .. }) => out.excluded.push((name, e.to_string())),
                Err(e) => out.failed.push((name, e.to_string())),
            }
        }
    }
    out
}
