//! Writes shape trees back into RDF.

use dqa_rdf::vocab::{rdf, sh, STANDARD_PREFIXES};
use dqa_rdf::{Graph, Term};

use crate::model::{Constraint, Path, Shape, Target};

/// Encodes shapes as a shapes graph. IRI-identified shapes keep their IRI and
/// get an `rdf:type`; anonymous ones become fresh blank nodes.
pub fn shapes_to_graph(shapes: &[Shape]) -> Graph {
    let mut g = Graph::new();
    for s in shapes {
        encode_shape(&mut g, s);
    }
    g
}

/// Renders shapes as Turtle with the standard prefixes plus `extra`.
pub fn shapes_to_turtle(shapes: &[Shape], extra: &[(&str, &str)]) -> String {
    let mut g = shapes_to_graph(shapes);
    for (p, ns) in STANDARD_PREFIXES.iter().chain(extra) {
        g.set_prefix(p, ns);
    }
    dqa_rdf::write_turtle(&g)
}

fn add(g: &mut Graph, s: &Term, p: &str, o: Term) {
    g.add(s.clone(), p, o);
}

fn encode_list(g: &mut Graph, items: &[Term]) -> Term {
    let mut head = Term::iri(rdf::NIL);
    for item in items.iter().rev() {
        let node = Term::BlankNode(g.fresh_blank());
        add(g, &node, rdf::FIRST, item.clone());
        add(g, &node, rdf::REST, head);
        head = node;
    }
    head
}

pub fn encode_path(g: &mut Graph, p: &Path) -> Term {
    match p {
        Path::Predicate(t) => t.clone(),
        Path::Sequence(ps) => {
            let items: Vec<Term> = ps.iter().map(|p| encode_path(g, p)).collect();
            encode_list(g, &items)
        }
        Path::Alternative(ps) => {
            let items: Vec<Term> = ps.iter().map(|p| encode_path(g, p)).collect();
            let list = encode_list(g, &items);
            let b = Term::BlankNode(g.fresh_blank());
            add(g, &b, sh::ALTERNATIVE_PATH, list);
            b
        }
        Path::Inverse(i) | Path::ZeroOrMore(i) | Path::OneOrMore(i) | Path::ZeroOrOne(i) => {
            let pred = match p {
                Path::Inverse(_) => sh::INVERSE_PATH,
                Path::ZeroOrMore(_) => sh::ZERO_OR_MORE_PATH,
                Path::OneOrMore(_) => sh::ONE_OR_MORE_PATH,
                _ => sh::ZERO_OR_ONE_PATH,
            };
            let inner = encode_path(g, i);
            let b = Term::BlankNode(g.fresh_blank());
            add(g, &b, pred, inner);
            b
        }
    }
}

pub fn encode_shape(g: &mut Graph, s: &Shape) -> Term {
    let node = if s.id.is_blank() {
        Term::BlankNode(g.fresh_blank())
    } else {
        s.id.clone()
    };
    if !s.id.is_blank() {
        let ty = if s.path.is_some() { sh::PROPERTY_SHAPE } else { sh::NODE_SHAPE };
        add(g, &node, rdf::TYPE, Term::iri(ty));
    }
    for t in &s.targets {
        let (p, v) = match t {
            Target::Class(v) => (sh::TARGET_CLASS, v),
            Target::Node(v) => (sh::TARGET_NODE, v),
            Target::SubjectsOf(v) => (sh::TARGET_SUBJECTS_OF, v),
            Target::ObjectsOf(v) => (sh::TARGET_OBJECTS_OF, v),
        };
        add(g, &node, p, v.clone());
    }
    if let Some(p) = &s.path {
        let pt = encode_path(g, p);
        add(g, &node, sh::PATH, pt);
    }
    if s.deactivated {
        add(g, &node, sh::DEACTIVATED, Term::boolean(true));
    }
    if let Some(m) = &s.message {
        add(g, &node, sh::MESSAGE, Term::string(m));
    }
    for c in &s.constraints {
        use Constraint::*;
        let (p, v) = match c {
            MinCount(v) => (sh::MIN_COUNT, v.clone()),
            MaxCount(v) => (sh::MAX_COUNT, v.clone()),
            Class(v) => (sh::CLASS, v.clone()),
            Datatype(v) => (sh::DATATYPE, v.clone()),
            NodeKind(v) => (sh::NODE_KIND, v.clone()),
            HasValue(v) => (sh::HAS_VALUE, v.clone()),
            MinInclusive(v) => (sh::MIN_INCLUSIVE, v.clone()),
            MaxInclusive(v) => (sh::MAX_INCLUSIVE, v.clone()),
            MinExclusive(v) => (sh::MIN_EXCLUSIVE, v.clone()),
            MaxExclusive(v) => (sh::MAX_EXCLUSIVE, v.clone()),
            MinLength(v) => (sh::MIN_LENGTH, v.clone()),
            MaxLength(v) => (sh::MAX_LENGTH, v.clone()),
            UniqueLang(v) => (sh::UNIQUE_LANG, v.clone()),
            Equals(v) => (sh::EQUALS, v.clone()),
            Disjoint(v) => (sh::DISJOINT, v.clone()),
            In(vs) => (sh::IN, encode_list(g, vs)),
            LanguageIn(vs) => (sh::LANGUAGE_IN, encode_list(g, vs)),
            Pattern { pattern, flags } => {
                if let Some(f) = flags {
                    add(g, &node, sh::FLAGS, f.clone());
                }
                (sh::PATTERN, pattern.clone())
            }
            Not(inner) => (sh::NOT, encode_shape(g, inner)),
            Node(inner) => (sh::NODE, encode_shape(g, inner)),
            Property(inner) => (sh::PROPERTY, encode_shape(g, inner)),
            And(ss) | Or(ss) => {
                let items: Vec<Term> = ss.iter().map(|s| encode_shape(g, s)).collect();
                let list = encode_list(g, &items);
                (if matches!(c, And(_)) { sh::AND } else { sh::OR }, list)
            }
            Qualified { shape, min, max } => {
                if let Some(m) = min {
                    add(g, &node, sh::QUALIFIED_MIN_COUNT, m.clone());
                }
                if let Some(m) = max {
                    add(g, &node, sh::QUALIFIED_MAX_COUNT, m.clone());
                }
                (sh::QUALIFIED_VALUE_SHAPE, encode_shape(g, shape))
            }
        };
        add(g, &node, p, v);
    }
    node
}
