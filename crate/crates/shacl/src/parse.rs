//! Reads shape trees out of a shapes graph.

use std::collections::BTreeSet;

use dqa_rdf::vocab::{rdf, rdfs, sh, xsd};
use dqa_rdf::{Graph, Term};

use crate::error::ShapeError;
use crate::model::{Constraint, Path, Shape, Target};

const UNSUPPORTED: &[&str] = &[
    sh::XONE,
    sh::CLOSED,
    sh::IGNORED_PROPERTIES,
    sh::LESS_THAN,
    sh::LESS_THAN_OR_EQUALS,
    sh::SPARQL,
    "http://www.w3.org/ns/shacl#target",
    "http://www.w3.org/ns/shacl#rule",
];

const TARGET_PREDICATES: &[&str] = &[
    sh::TARGET_CLASS,
    sh::TARGET_NODE,
    sh::TARGET_SUBJECTS_OF,
    sh::TARGET_OBJECTS_OF,
];

/// Parses every shape with at least one target, in N-Triples order of the
/// shape nodes. Shapes referenced from those are inlined into the trees.
pub fn parse_shapes(g: &Graph) -> Result<Vec<Shape>, ShapeError> {
    let mut roots: BTreeSet<(String, Term)> = BTreeSet::new();
    for p in TARGET_PREDICATES {
        for s in g.subjects_with(p) {
            roots.insert((s.to_ntriples(), s));
        }
    }
    for ty in [sh::NODE_SHAPE, sh::PROPERTY_SHAPE] {
        for s in g.subjects(rdf::TYPE, &Term::iri(ty)) {
            if g.has(&s, rdf::TYPE, &Term::iri(rdfs::CLASS)) {
                roots.insert((s.to_ntriples(), s));
            }
        }
    }
    roots
        .into_iter()
        .map(|(_, s)| parse_shape(g, &s))
        .collect()
}

/// Parses the shape rooted at `node`.
pub fn parse_shape(g: &Graph, node: &Term) -> Result<Shape, ShapeError> {
    Reader { g, stack: Vec::new() }.shape(node)
}

struct Reader<'g> {
    g: &'g Graph,
    stack: Vec<Term>,
}

fn bool_true(t: &Term) -> bool {
    t.as_literal()
        .map_or(false, |l| l.datatype().as_str() == xsd::BOOLEAN && matches!(l.lexical(), "true" | "1"))
}

impl<'g> Reader<'g> {
    fn shape(&mut self, node: &Term) -> Result<Shape, ShapeError> {
        if self.stack.contains(node) {
            return Err(ShapeError::Recursive {
                shape: node.to_string(),
            });
        }
        self.stack.push(node.clone());
        let r = self.shape_inner(node);
        self.stack.pop();
        r
    }

    fn err(&self, node: &Term, msg: impl Into<String>) -> ShapeError {
        ShapeError::malformed(node, msg)
    }

    fn single(&self, node: &Term, p: &str) -> Result<Option<Term>, ShapeError> {
        let mut v = self.g.objects(node, p);
        match v.len() {
            0 => Ok(None),
            1 => Ok(v.pop()),
            _ => Err(self.err(node, format!("more than one value for <{p}>"))),
        }
    }

    fn list(&self, node: &Term, head: &Term, what: &str) -> Result<Vec<Term>, ShapeError> {
        self.g
            .list(head)
            .ok_or_else(|| self.err(node, format!("{what} expects a well-formed RDF list")))
    }

    fn shape_inner(&mut self, node: &Term) -> Result<Shape, ShapeError> {
        let g = self.g;
        for p in UNSUPPORTED {
            if !g.objects(node, p).is_empty() {
                return Err(ShapeError::Unsupported {
                    shape: node.to_string(),
                    feature: p.rsplit(['#', '/']).next().unwrap_or(p).to_string(),
                });
            }
        }
        for v in g.objects(node, sh::QUALIFIED_VALUE_SHAPES_DISJOINT) {
            if bool_true(&v) {
                return Err(ShapeError::Unsupported {
                    shape: node.to_string(),
                    feature: "qualifiedValueShapesDisjoint".into(),
                });
            }
        }
        for v in g.objects(node, sh::SEVERITY) {
            if v.iri_str() != Some(sh::VIOLATION) {
                return Err(ShapeError::Unsupported {
                    shape: node.to_string(),
                    feature: "severity".into(),
                });
            }
        }

        let mut shape = Shape::named(node.clone());
        for t in g.objects(node, sh::TARGET_CLASS) {
            shape.targets.push(Target::Class(t));
        }
        if g.has(node, rdf::TYPE, &Term::iri(rdfs::CLASS))
            && (g.has(node, rdf::TYPE, &Term::iri(sh::NODE_SHAPE)) || g.has(node, rdf::TYPE, &Term::iri(sh::PROPERTY_SHAPE)))
        {
            shape.targets.push(Target::Class(node.clone()));
        }
        for t in g.objects(node, sh::TARGET_NODE) {
            shape.targets.push(Target::Node(t));
        }
        for t in g.objects(node, sh::TARGET_SUBJECTS_OF) {
            shape.targets.push(Target::SubjectsOf(t));
        }
        for t in g.objects(node, sh::TARGET_OBJECTS_OF) {
            shape.targets.push(Target::ObjectsOf(t));
        }
        shape.targets.sort();

        if let Some(p) = self.single(node, sh::PATH)? {
            shape.path = Some(self.path(node, &p, 0)?);
        }
        shape.deactivated = g.objects(node, sh::DEACTIVATED).iter().any(bool_true);
        let mut msgs = g.objects(node, sh::MESSAGE);
        msgs.sort();
        shape.message = msgs
            .iter()
            .filter_map(Term::as_literal)
            .find(|l| l.language().map_or(true, |t| t == "en"))
            .map(|l| l.lexical().to_string());

        let mut cs = Vec::new();
        let simple: &[(&str, fn(Term) -> Constraint)] = &[
            (sh::MIN_COUNT, Constraint::MinCount),
            (sh::MAX_COUNT, Constraint::MaxCount),
            (sh::CLASS, Constraint::Class),
            (sh::DATATYPE, Constraint::Datatype),
            (sh::NODE_KIND, Constraint::NodeKind),
            (sh::HAS_VALUE, Constraint::HasValue),
            (sh::MIN_INCLUSIVE, Constraint::MinInclusive),
            (sh::MAX_INCLUSIVE, Constraint::MaxInclusive),
            (sh::MIN_EXCLUSIVE, Constraint::MinExclusive),
            (sh::MAX_EXCLUSIVE, Constraint::MaxExclusive),
            (sh::MIN_LENGTH, Constraint::MinLength),
            (sh::MAX_LENGTH, Constraint::MaxLength),
            (sh::UNIQUE_LANG, Constraint::UniqueLang),
            (sh::EQUALS, Constraint::Equals),
            (sh::DISJOINT, Constraint::Disjoint),
        ];
        for (p, make) in simple {
            for v in g.objects(node, p) {
                cs.push(make(v));
            }
        }
        for v in g.objects(node, sh::IN) {
            cs.push(Constraint::In(self.list(node, &v, "sh:in")?));
        }
        for v in g.objects(node, sh::LANGUAGE_IN) {
            cs.push(Constraint::LanguageIn(self.list(node, &v, "sh:languageIn")?));
        }
        let flags = self.single(node, sh::FLAGS)?;
        for v in g.objects(node, sh::PATTERN) {
            cs.push(Constraint::Pattern {
                pattern: v,
                flags: flags.clone(),
            });
        }
        for v in g.objects(node, sh::NOT) {
            cs.push(Constraint::Not(Box::new(self.shape(&v)?)));
        }
        for v in g.objects(node, sh::NODE) {
            cs.push(Constraint::Node(Box::new(self.shape(&v)?)));
        }
        for v in g.objects(node, sh::PROPERTY) {
            let s = self.shape(&v)?;
            if s.path.is_none() {
                return Err(self.err(&v, "property shape without sh:path"));
            }
            cs.push(Constraint::Property(Box::new(s)));
        }
        for (p, is_and) in [(sh::AND, true), (sh::OR, false)] {
            for v in g.objects(node, p) {
                let members = self.list(node, &v, if is_and { "sh:and" } else { "sh:or" })?;
                let shapes = members.iter().map(|m| self.shape(m)).collect::<Result<Vec<_>, _>>()?;
                cs.push(if is_and { Constraint::And(shapes) } else { Constraint::Or(shapes) });
            }
        }
        let qmin = self.single(node, sh::QUALIFIED_MIN_COUNT)?;
        let qmax = self.single(node, sh::QUALIFIED_MAX_COUNT)?;
        let qshapes = g.objects(node, sh::QUALIFIED_VALUE_SHAPE);
        if qshapes.is_empty() && (qmin.is_some() || qmax.is_some()) {
            return Err(self.err(node, "qualified count without sh:qualifiedValueShape"));
        }
        for v in qshapes {
            cs.push(Constraint::Qualified {
                shape: Box::new(self.shape(&v)?),
                min: qmin.clone(),
                max: qmax.clone(),
            });
        }
        shape.constraints = cs;
        Ok(shape)
    }

    fn path(&self, shape: &Term, p: &Term, depth: usize) -> Result<Path, ShapeError> {
        if depth > 64 {
            return Err(self.err(shape, "path nesting too deep or cyclic"));
        }
        let g = self.g;
        match p {
            Term::Iri(_) => Ok(Path::Predicate(p.clone())),
            Term::Literal(_) => Err(self.err(shape, "a literal is not a path")),
            Term::BlankNode(_) => {
                if !g.objects(p, rdf::FIRST).is_empty() {
                    let items = self.list(shape, p, "sequence path")?;
                    if items.len() < 2 {
                        return Err(self.err(shape, "sequence path needs at least two members"));
                    }
                    let parts = items
                        .iter()
                        .map(|i| self.path(shape, i, depth + 1))
                        .collect::<Result<Vec<_>, _>>()?;
                    return Ok(Path::Sequence(parts));
                }
                if let Some(i) = self.single(p, sh::INVERSE_PATH)? {
                    return Ok(Path::Inverse(Box::new(self.path(shape, &i, depth + 1)?)));
                }
                if let Some(a) = self.single(p, sh::ALTERNATIVE_PATH)? {
                    let items = self.list(shape, &a, "alternative path")?;
                    if items.len() < 2 {
                        return Err(self.err(shape, "alternative path needs at least two members"));
                    }
                    let parts = items
                        .iter()
                        .map(|i| self.path(shape, i, depth + 1))
                        .collect::<Result<Vec<_>, _>>()?;
                    return Ok(Path::Alternative(parts));
                }
                type Wrap = fn(Box<Path>) -> Path;
                for (pred, wrap) in [
                    (sh::ZERO_OR_MORE_PATH, Path::ZeroOrMore as Wrap),
                    (sh::ONE_OR_MORE_PATH, Path::OneOrMore as Wrap),
                    (sh::ZERO_OR_ONE_PATH, Path::ZeroOrOne as Wrap),
                ] {
                    if let Some(i) = self.single(p, pred)? {
                        return Ok(wrap(Box::new(self.path(shape, &i, depth + 1)?)));
                    }
                }
                Err(self.err(shape, format!("unrecognised path node {p}")))
            }
        }
    }
}

/// Parses a path node outside the context of a shape (e.g. a report's
/// `sh:resultPath`).
pub fn parse_path(g: &Graph, node: &Term) -> Result<Path, ShapeError> {
    Reader { g, stack: Vec::new() }.path(node, node, 0)
}
