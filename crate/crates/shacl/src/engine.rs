//! Shape compilation and evaluation over an indexed graph.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use dqa_rdf::vocab::{rdf, rdfs, sh, xsd};
use dqa_rdf::{literal_is_ill_typed, Graph, Literal, Term, TermId};
use fancy_regex::Regex;
use rayon::prelude::*;

use crate::error::ShapeError;
use crate::model::{Constraint, Path, Shape, Target};
use crate::report::{ShapeSummary, ValidationReport, ValidationResult};

type Id = TermId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NodeKind {
    Iri,
    Blank,
    Literal,
    BlankOrIri,
    BlankOrLiteral,
    IriOrLiteral,
}

impl NodeKind {
    fn from_iri(s: &str) -> Option<NodeKind> {
        Some(match s {
            sh::IRI => NodeKind::Iri,
            sh::BLANK_NODE => NodeKind::Blank,
            sh::LITERAL => NodeKind::Literal,
            sh::BLANK_NODE_OR_IRI => NodeKind::BlankOrIri,
            sh::BLANK_NODE_OR_LITERAL => NodeKind::BlankOrLiteral,
            sh::IRI_OR_LITERAL => NodeKind::IriOrLiteral,
            _ => return None,
        })
    }

    fn accepts(self, t: &Term) -> bool {
        match t {
            Term::Iri(_) => matches!(self, NodeKind::Iri | NodeKind::BlankOrIri | NodeKind::IriOrLiteral),
            Term::BlankNode(_) => matches!(self, NodeKind::Blank | NodeKind::BlankOrIri | NodeKind::BlankOrLiteral),
            Term::Literal(_) => matches!(self, NodeKind::Literal | NodeKind::BlankOrLiteral | NodeKind::IriOrLiteral),
        }
    }
}

enum CPath {
    Pred(Id),
    Inv(Box<CPath>),
    Seq(Vec<CPath>),
    Alt(Vec<CPath>),
    ZeroOrMore(Box<CPath>),
    OneOrMore(Box<CPath>),
    ZeroOrOne(Box<CPath>),
}

enum Cmp {
    MinInclusive,
    MaxInclusive,
    MinExclusive,
    MaxExclusive,
}

enum CCon {
    MinCount(usize),
    MaxCount(usize),
    Class(Id),
    Datatype(String),
    NodeKind(NodeKind),
    HasValue(Id),
    In(HashSet<Id>),
    Pattern(Regex),
    Range(Cmp, Literal, &'static str),
    MinLength(usize),
    MaxLength(usize),
    LanguageIn(Vec<String>),
    UniqueLang,
    Equals(Id),
    Disjoint(Id),
    Not(Box<CShape>),
    And(Vec<CShape>),
    Or(Vec<CShape>),
    Node(Box<CShape>),
    Property(Box<CShape>),
    QualifiedMin(Box<CShape>, usize),
    QualifiedMax(Box<CShape>, usize),
}

struct CShape {
    node: Term,
    path: Option<(CPath, Path)>,
    constraints: Vec<CCon>,
    deactivated: bool,
    message: Option<String>,
}

struct Root {
    key: String,
    targets: Vec<Target>,
    shape: CShape,
}

/// Validation context over one data graph. Terms mentioned by shapes but
/// absent from the graph get ids above the graph's term range, so index
/// lookups on them find nothing.
pub struct Validator<'g> {
    g: &'g Graph,
    extras: Vec<Term>,
    extra_ids: HashMap<Term, Id>,
    rdf_type: Id,
    sub_class_of: Id,
    supers: RwLock<HashMap<Id, Arc<HashSet<Id>>>>,
    targets: RwLock<HashMap<Target, Arc<Vec<Id>>>>,
}

/// The report key of a root shape: its IRI, or its N-Triples form when blank.
pub fn shape_key(s: &Shape) -> String {
    s.id.iri_str().map(str::to_string).unwrap_or_else(|| s.id.to_ntriples())
}

/// Validates `g` against `shapes`. Shapes that fail to compile are skipped
/// and listed in the report's `errors`.
pub fn validate(g: &Graph, shapes: &[Shape]) -> ValidationReport {
    let mut v = Validator::new(g);
    v.validate(shapes)
}

struct Sink<'a> {
    collect: bool,
    failed: bool,
    out: Vec<Raw<'a>>,
}

struct Raw<'a> {
    focus: Id,
    value: Option<Id>,
    shape: &'a CShape,
    component: &'static str,
}

impl<'a> Sink<'a> {
    fn new(collect: bool) -> Self {
        Sink {
            collect,
            failed: false,
            out: Vec::new(),
        }
    }

    fn push(&mut self, shape: &'a CShape, focus: Id, value: Option<Id>, component: &'static str) {
        self.failed = true;
        if self.collect {
            self.out.push(Raw {
                focus,
                value,
                shape,
                component,
            });
        }
    }

    fn stop(&self) -> bool {
        self.failed && !self.collect
    }
}

fn lit_usize(t: &Term) -> Option<usize> {
    let l = t.as_literal()?;
    if l.language().is_some() {
        return None;
    }
    l.lexical().parse::<usize>().ok()
}

fn lit_bool(t: &Term) -> Option<bool> {
    let l = t.as_literal()?;
    if l.datatype().as_str() != xsd::BOOLEAN {
        return None;
    }
    match l.lexical() {
        "true" | "1" => Some(true),
        "false" | "0" => Some(false),
        _ => None,
    }
}

fn lang_matches(tag: &str, range: &str) -> bool {
    if range == "*" {
        return !tag.is_empty();
    }
    let (tag, range) = (tag.to_ascii_lowercase(), range.to_ascii_lowercase());
    tag == range || (tag.starts_with(&range) && tag.as_bytes().get(range.len()) == Some(&b'-'))
}

/// Builds a regex from a SHACL pattern and flags string.
pub fn compile_pattern(pattern: &str, flags: &str) -> Result<Regex, String> {
    let mut prefix = String::new();
    let mut literal = false;
    for f in flags.chars() {
        match f {
            'i' | 'm' | 's' | 'x' => prefix.push(f),
            'q' => literal = true,
            other => return Err(format!("unsupported regex flag '{other}'")),
        }
    }
    let body = if literal {
        fancy_regex::escape(pattern).into_owned()
    } else {
        pattern.to_string()
    };
    let full = if prefix.is_empty() { body } else { format!("(?{prefix}){body}") };
    Regex::new(&full).map_err(|e| format!("invalid pattern {pattern:?}: {e}"))
}

impl<'g> Validator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let mut v = Validator {
            g,
            extras: Vec::new(),
            extra_ids: HashMap::new(),
            rdf_type: TermId(0),
            sub_class_of: TermId(0),
            supers: RwLock::new(HashMap::new()),
            targets: RwLock::new(HashMap::new()),
        };
        v.rdf_type = v.resolve(&Term::iri(rdf::TYPE));
        v.sub_class_of = v.resolve(&Term::iri(rdfs::SUB_CLASS_OF));
        v
    }

    fn resolve(&mut self, t: &Term) -> Id {
        if let Some(id) = self.g.id(t) {
            return id;
        }
        if let Some(&id) = self.extra_ids.get(t) {
            return id;
        }
        let id = TermId((self.g.term_count() + self.extras.len()) as u32);
        self.extras.push(t.clone());
        self.extra_ids.insert(t.clone(), id);
        id
    }

    fn term(&self, id: Id) -> &Term {
        let n = self.g.term_count();
        if (id.0 as usize) < n {
            self.g.term(id)
        } else {
            &self.extras[id.0 as usize - n]
        }
    }

    pub fn validate(&mut self, shapes: &[Shape]) -> ValidationReport {
        let mut roots = Vec::new();
        let mut errors = Vec::new();
        for s in shapes {
            for t in &s.targets {
                if let Target::Node(n) = t {
                    self.resolve(n);
                }
            }
            match self.compile(s, 0) {
                Ok(shape) => roots.push(Root {
                    key: shape_key(s),
                    targets: s.targets.clone(),
                    shape,
                }),
                Err(e) => errors.push(e),
            }
        }
        let this = &*self;
        let per_root: Vec<(usize, Vec<Raw<'_>>)> = roots
            .par_iter()
            .map(|r| {
                if r.shape.deactivated {
                    return (0, Vec::new());
                }
                let focus = this.focus_nodes(&r.targets);
                let mut sink = Sink::new(true);
                for &f in focus.iter() {
                    this.eval(&r.shape, f, &mut sink);
                }
                (focus.len(), sink.out)
            })
            .collect();

        let mut summary = BTreeMap::new();
        let mut results = Vec::new();
        for (root, (nfocus, raws)) in roots.iter().zip(per_root) {
            let entry = summary.entry(root.key.clone()).or_insert(ShapeSummary::default());
            entry.focus_nodes += nfocus;
            entry.results += raws.len();
            let mut focus_set = BTreeSet::new();
            for r in raws {
                focus_set.insert(r.focus);
                results.push(self.materialize(&root.key, r));
            }
            entry.failing_focus_nodes += focus_set.len();
        }
        results.sort_by_cached_key(|r| r.sort_key());
        errors.sort_by(|a, b| a.shape().cmp(b.shape()));
        ValidationReport {
            conforms: results.is_empty(),
            results,
            shapes: summary,
            errors,
        }
    }

    fn materialize(&self, root: &str, r: Raw<'_>) -> ValidationResult {
        let focus = self.term(r.focus).clone();
        let value = r.value.map(|v| self.term(v).clone());
        let path = r.shape.path.as_ref().map(|(_, p)| p.clone());
        let message = r
            .shape
            .message
            .clone()
            .unwrap_or_else(|| default_message(r.component, value.as_ref(), path.as_ref()));
        ValidationResult {
            focus_node: focus,
            result_path: path,
            value,
            source_shape: r.shape.node.clone(),
            source_shape_id: root.to_string(),
            source_component: r.component.to_string(),
            message,
        }
    }

    // ---------------------------------------------------------------- compile

    fn compile(&mut self, s: &Shape, depth: usize) -> Result<CShape, ShapeError> {
        if depth > 64 {
            return Err(ShapeError::Recursive { shape: s.id.to_string() });
        }
        let bad = |msg: String| ShapeError::malformed(&s.id, msg);
        let path = match &s.path {
            Some(p) => Some((self.compile_path(s, p)?, p.clone())),
            None => None,
        };
        let mut cs = Vec::new();
        for c in &s.constraints {
            use Constraint as C;
            let cc = match c {
                C::MinCount(t) => CCon::MinCount(lit_usize(t).ok_or_else(|| bad(format!("sh:minCount expects a non-negative integer, found {t}")))?),
                C::MaxCount(t) => CCon::MaxCount(lit_usize(t).ok_or_else(|| bad(format!("sh:maxCount expects a non-negative integer, found {t}")))?),
                C::MinLength(t) => CCon::MinLength(lit_usize(t).ok_or_else(|| bad(format!("sh:minLength expects a non-negative integer, found {t}")))?),
                C::MaxLength(t) => CCon::MaxLength(lit_usize(t).ok_or_else(|| bad(format!("sh:maxLength expects a non-negative integer, found {t}")))?),
                C::Class(t) => {
                    if t.is_literal() {
                        return Err(bad(format!("sh:class expects an IRI, found {t}")));
                    }
                    CCon::Class(self.resolve(t))
                }
                C::Datatype(t) => match t.iri_str() {
                    Some(i) => CCon::Datatype(i.to_string()),
                    None => return Err(bad(format!("sh:datatype expects an IRI, found {t}"))),
                },
                C::NodeKind(t) => match t.iri_str().and_then(NodeKind::from_iri) {
                    Some(k) => CCon::NodeKind(k),
                    None => return Err(bad(format!("sh:nodeKind expects a node kind, found {t}"))),
                },
                C::HasValue(t) => CCon::HasValue(self.resolve(t)),
                C::In(ts) => CCon::In(ts.iter().map(|t| self.resolve(t)).collect()),
                C::Pattern { pattern, flags } => {
                    let pat = pattern
                        .as_literal()
                        .ok_or_else(|| bad(format!("sh:pattern expects a string, found {pattern}")))?;
                    let fl = match flags {
                        Some(f) => f
                            .as_literal()
                            .ok_or_else(|| bad(format!("sh:flags expects a string, found {f}")))?
                            .lexical()
                            .to_string(),
                        None => String::new(),
                    };
                    CCon::Pattern(compile_pattern(pat.lexical(), &fl).map_err(bad)?)
                }
                C::MinInclusive(t) | C::MaxInclusive(t) | C::MinExclusive(t) | C::MaxExclusive(t) => {
                    let lit = t
                        .as_literal()
                        .ok_or_else(|| bad(format!("range constraint expects a literal, found {t}")))?
                        .clone();
                    let (cmp, comp) = match c {
                        C::MinInclusive(_) => (Cmp::MinInclusive, sh::MIN_INCLUSIVE_COMPONENT),
                        C::MaxInclusive(_) => (Cmp::MaxInclusive, sh::MAX_INCLUSIVE_COMPONENT),
                        C::MinExclusive(_) => (Cmp::MinExclusive, sh::MIN_EXCLUSIVE_COMPONENT),
                        _ => (Cmp::MaxExclusive, sh::MAX_EXCLUSIVE_COMPONENT),
                    };
                    CCon::Range(cmp, lit, comp)
                }
                C::LanguageIn(ts) => CCon::LanguageIn(
                    ts.iter()
                        .map(|t| {
                            t.as_literal()
                                .map(|l| l.lexical().to_string())
                                .ok_or_else(|| bad(format!("sh:languageIn expects strings, found {t}")))
                        })
                        .collect::<Result<_, _>>()?,
                ),
                C::UniqueLang(t) => match lit_bool(t) {
                    Some(true) if t.as_literal().is_some_and(|l| l.lexical() == "true") => CCon::UniqueLang,
                    Some(_) => continue,
                    None => return Err(bad(format!("sh:uniqueLang expects a boolean, found {t}"))),
                },
                C::Equals(t) | C::Disjoint(t) => {
                    if !t.is_iri() {
                        return Err(bad(format!("expected a property IRI, found {t}")));
                    }
                    let id = self.resolve(t);
                    if matches!(c, C::Equals(_)) {
                        CCon::Equals(id)
                    } else {
                        CCon::Disjoint(id)
                    }
                }
                C::Not(x) => CCon::Not(Box::new(self.compile(x, depth + 1)?)),
                C::Node(x) => CCon::Node(Box::new(self.compile(x, depth + 1)?)),
                C::Property(x) => {
                    if x.path.is_none() {
                        return Err(bad("sh:property value has no sh:path".into()));
                    }
                    CCon::Property(Box::new(self.compile(x, depth + 1)?))
                }
                C::And(xs) => CCon::And(xs.iter().map(|x| self.compile(x, depth + 1)).collect::<Result<_, _>>()?),
                C::Or(xs) => CCon::Or(xs.iter().map(|x| self.compile(x, depth + 1)).collect::<Result<_, _>>()?),
                C::Qualified { shape, min, max } => {
                    if min.is_none() && max.is_none() {
                        return Err(bad("sh:qualifiedValueShape without a qualified count".into()));
                    }
                    if let Some(m) = min {
                        let n = lit_usize(m).ok_or_else(|| bad(format!("sh:qualifiedMinCount expects an integer, found {m}")))?;
                        cs.push(CCon::QualifiedMin(Box::new(self.compile(shape, depth + 1)?), n));
                    }
                    if let Some(m) = max {
                        let n = lit_usize(m).ok_or_else(|| bad(format!("sh:qualifiedMaxCount expects an integer, found {m}")))?;
                        cs.push(CCon::QualifiedMax(Box::new(self.compile(shape, depth + 1)?), n));
                    }
                    continue;
                }
            };
            cs.push(cc);
        }
        Ok(CShape {
            node: s.id.clone(),
            path,
            constraints: cs,
            deactivated: s.deactivated,
            message: s.message.clone(),
        })
    }

    fn compile_path(&mut self, s: &Shape, p: &Path) -> Result<CPath, ShapeError> {
        Ok(match p {
            Path::Predicate(t) => {
                if !t.is_iri() {
                    return Err(ShapeError::malformed(&s.id, format!("path predicate must be an IRI, found {t}")));
                }
                CPath::Pred(self.resolve(t))
            }
            Path::Inverse(i) => CPath::Inv(Box::new(self.compile_path(s, i)?)),
            Path::ZeroOrMore(i) => CPath::ZeroOrMore(Box::new(self.compile_path(s, i)?)),
            Path::OneOrMore(i) => CPath::OneOrMore(Box::new(self.compile_path(s, i)?)),
            Path::ZeroOrOne(i) => CPath::ZeroOrOne(Box::new(self.compile_path(s, i)?)),
            Path::Sequence(ps) => CPath::Seq(ps.iter().map(|x| self.compile_path(s, x)).collect::<Result<_, _>>()?),
            Path::Alternative(ps) => CPath::Alt(ps.iter().map(|x| self.compile_path(s, x)).collect::<Result<_, _>>()?),
        })
    }

    // ---------------------------------------------------------------- targets

    fn focus_nodes(&self, targets: &[Target]) -> Vec<Id> {
        let mut set = BTreeSet::new();
        for t in targets {
            set.extend(self.target(t).iter().copied());
        }
        set.into_iter().collect()
    }

    fn target(&self, t: &Target) -> Arc<Vec<Id>> {
        if let Some(v) = self.targets.read().unwrap().get(t) {
            return v.clone();
        }
        let g = self.g;
        let nodes: Vec<Id> = match t {
            Target::Node(n) => match g.id(n).or_else(|| self.extra_ids.get(n).copied()) {
                Some(id) => vec![id],
                None => Vec::new(),
            },
            Target::Class(c) => match g.id(c) {
                Some(c) => {
                    let mut out = BTreeSet::new();
                    for cl in self.subclasses(c) {
                        out.extend(g.subjects_ids(self.rdf_type, cl));
                    }
                    out.into_iter().collect()
                }
                None => Vec::new(),
            },
            Target::SubjectsOf(p) => match g.id(p) {
                Some(p) => {
                    let set: BTreeSet<Id> = g.match_ids(None, Some(p), None).map(|(s, _, _)| s).collect();
                    set.into_iter().collect()
                }
                None => Vec::new(),
            },
            Target::ObjectsOf(p) => match g.id(p) {
                Some(p) => {
                    let set: BTreeSet<Id> = g.match_ids(None, Some(p), None).map(|(_, _, o)| o).collect();
                    set.into_iter().collect()
                }
                None => Vec::new(),
            },
        };
        let nodes = Arc::new(nodes);
        self.targets.write().unwrap().insert(t.clone(), nodes.clone());
        nodes
    }

    fn subclasses(&self, c: Id) -> Vec<Id> {
        let mut seen = BTreeSet::from([c]);
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            for s in self.g.subjects_ids(self.sub_class_of, x) {
                if seen.insert(s) {
                    stack.push(s);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn superclasses(&self, c: Id) -> Arc<HashSet<Id>> {
        if let Some(v) = self.supers.read().unwrap().get(&c) {
            return v.clone();
        }
        let mut seen = HashSet::from([c]);
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            for s in self.g.objects_ids(x, self.sub_class_of) {
                if seen.insert(s) {
                    stack.push(s);
                }
            }
        }
        let v = Arc::new(seen);
        self.supers.write().unwrap().insert(c, v.clone());
        v
    }

    fn is_instance(&self, node: Id, class: Id) -> bool {
        if self.term(node).is_literal() {
            return false;
        }
        self.g
            .objects_ids(node, self.rdf_type)
            .any(|t| t == class || self.superclasses(t).contains(&class))
    }

    // ---------------------------------------------------------------- paths

    fn step(&self, p: &CPath, node: Id, inverse: bool, out: &mut BTreeSet<Id>) {
        let g = self.g;
        match p {
            CPath::Pred(pred) => {
                if inverse {
                    out.extend(g.subjects_ids(*pred, node));
                } else {
                    out.extend(g.objects_ids(node, *pred));
                }
            }
            CPath::Inv(i) => self.step(i, node, !inverse, out),
            CPath::Alt(ps) => {
                for q in ps {
                    self.step(q, node, inverse, out);
                }
            }
            CPath::Seq(ps) => {
                let mut frontier = BTreeSet::from([node]);
                let order: Box<dyn Iterator<Item = &CPath>> =
                    if inverse { Box::new(ps.iter().rev()) } else { Box::new(ps.iter()) };
                for q in order {
                    let mut next = BTreeSet::new();
                    for &n in &frontier {
                        self.step(q, n, inverse, &mut next);
                    }
                    frontier = next;
                    if frontier.is_empty() {
                        break;
                    }
                }
                out.extend(frontier);
            }
            CPath::ZeroOrOne(i) => {
                out.insert(node);
                self.step(i, node, inverse, out);
            }
            CPath::ZeroOrMore(i) | CPath::OneOrMore(i) => {
                let mut reached = BTreeSet::new();
                if matches!(p, CPath::ZeroOrMore(_)) {
                    reached.insert(node);
                }
                let mut first = BTreeSet::new();
                self.step(i, node, inverse, &mut first);
                let mut stack: Vec<Id> = Vec::new();
                for n in first {
                    if reached.insert(n) {
                        stack.push(n);
                    }
                }
                while let Some(n) = stack.pop() {
                    let mut next = BTreeSet::new();
                    self.step(i, n, inverse, &mut next);
                    for m in next {
                        if reached.insert(m) {
                            stack.push(m);
                        }
                    }
                }
                out.extend(reached);
            }
        }
    }

    fn values(&self, p: &CPath, focus: Id) -> Vec<Id> {
        if let CPath::Pred(pred) = p {
            return self.g.objects_ids(focus, *pred).collect();
        }
        let mut out = BTreeSet::new();
        self.step(p, focus, false, &mut out);
        out.into_iter().collect()
    }

    // ---------------------------------------------------------------- eval

    fn conforms(&self, s: &CShape, node: Id) -> bool {
        let mut sink = Sink::new(false);
        self.eval(s, node, &mut sink);
        !sink.failed
    }

    fn eval<'s>(&self, s: &'s CShape, focus: Id, sink: &mut Sink<'s>) {
        if s.deactivated {
            return;
        }
        let single;
        let values: &[Id] = match &s.path {
            Some((p, _)) => {
                single = self.values(p, focus);
                &single
            }
            None => {
                single = vec![focus];
                &single
            }
        };
        for c in &s.constraints {
            self.eval_constraint(s, c, focus, values, sink);
            if sink.stop() {
                return;
            }
        }
    }

    fn eval_constraint<'s>(&self, s: &'s CShape, c: &'s CCon, focus: Id, values: &[Id], sink: &mut Sink<'s>) {
        let each = |sink: &mut Sink<'s>, comp: &'static str, ok: &dyn Fn(Id) -> bool| {
            for &v in values {
                if !ok(v) {
                    sink.push(s, focus, Some(v), comp);
                    if sink.stop() {
                        return;
                    }
                }
            }
        };
        match c {
            CCon::MinCount(n) => {
                if values.len() < *n {
                    sink.push(s, focus, None, sh::MIN_COUNT_COMPONENT);
                }
            }
            CCon::MaxCount(n) => {
                if values.len() > *n {
                    sink.push(s, focus, None, sh::MAX_COUNT_COMPONENT);
                }
            }
            CCon::Class(cl) => each(sink, sh::CLASS_COMPONENT, &|v| self.is_instance(v, *cl)),
            CCon::Datatype(dt) => each(sink, sh::DATATYPE_COMPONENT, &|v| match self.term(v) {
                Term::Literal(l) => l.datatype().as_str() == dt && !literal_is_ill_typed(self.term(v)),
                _ => false,
            }),
            CCon::NodeKind(k) => each(sink, sh::NODE_KIND_COMPONENT, &|v| k.accepts(self.term(v))),
            CCon::HasValue(h) => {
                if !values.contains(h) {
                    sink.push(s, focus, None, sh::HAS_VALUE_COMPONENT);
                }
            }
            CCon::In(set) => each(sink, sh::IN_COMPONENT, &|v| set.contains(&v)),
            CCon::Pattern(re) => each(sink, sh::PATTERN_COMPONENT, &|v| {
                let text = match self.term(v) {
                    Term::Iri(i) => i.as_str(),
                    Term::Literal(l) => l.lexical(),
                    Term::BlankNode(_) => return false,
                };
                re.is_match(text).unwrap_or(false)
            }),
            CCon::Range(cmp, lim, comp) => each(sink, comp, &|v| {
                let Some(l) = self.term(v).as_literal() else { return false };
                use std::cmp::Ordering::*;
                match (cmp, dqa_rdf::compare_literals(l, lim)) {
                    (_, None) => false,
                    (Cmp::MinInclusive, Some(o)) => o != Less,
                    (Cmp::MaxInclusive, Some(o)) => o != Greater,
                    (Cmp::MinExclusive, Some(o)) => o == Greater,
                    (Cmp::MaxExclusive, Some(o)) => o == Less,
                }
            }),
            CCon::MinLength(n) | CCon::MaxLength(n) => {
                let min = matches!(c, CCon::MinLength(_));
                let comp = if min { sh::MIN_LENGTH_COMPONENT } else { sh::MAX_LENGTH_COMPONENT };
                each(sink, comp, &|v| {
                    let len = match self.term(v) {
                        Term::Iri(i) => i.as_str().chars().count(),
                        Term::Literal(l) => l.lexical().chars().count(),
                        Term::BlankNode(_) => return false,
                    };
                    if min {
                        len >= *n
                    } else {
                        len <= *n
                    }
                })
            }
            CCon::LanguageIn(ranges) => each(sink, sh::LANGUAGE_IN_COMPONENT, &|v| {
                match self.term(v).as_literal().and_then(Literal::language) {
                    Some(tag) => ranges.iter().any(|r| lang_matches(tag, r)),
                    None => false,
                }
            }),
            CCon::UniqueLang => {
                let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
                for &v in values {
                    if let Some(tag) = self.term(v).as_literal().and_then(Literal::language) {
                        *counts.entry(tag).or_default() += 1;
                    }
                }
                for (_, n) in counts {
                    if n > 1 {
                        sink.push(s, focus, None, sh::UNIQUE_LANG_COMPONENT);
                        if sink.stop() {
                            return;
                        }
                    }
                }
            }
            CCon::Equals(p) => {
                let other: BTreeSet<Id> = self.g.objects_ids(focus, *p).collect();
                let mine: BTreeSet<Id> = values.iter().copied().collect();
                for v in mine.difference(&other).chain(other.difference(&mine)) {
                    sink.push(s, focus, Some(*v), sh::EQUALS_COMPONENT);
                    if sink.stop() {
                        return;
                    }
                }
            }
            CCon::Disjoint(p) => {
                let other: HashSet<Id> = self.g.objects_ids(focus, *p).collect();
                each(sink, sh::DISJOINT_COMPONENT, &|v| !other.contains(&v))
            }
            CCon::Not(inner) => each(sink, sh::NOT_COMPONENT, &|v| !self.conforms(inner, v)),
            CCon::And(xs) => each(sink, sh::AND_COMPONENT, &|v| xs.iter().all(|x| self.conforms(x, v))),
            CCon::Or(xs) => each(sink, sh::OR_COMPONENT, &|v| xs.iter().any(|x| self.conforms(x, v))),
            CCon::Node(inner) => each(sink, sh::NODE_COMPONENT, &|v| self.conforms(inner, v)),
            CCon::Property(inner) => {
                for &v in values {
                    self.eval(inner, v, sink);
                    if sink.stop() {
                        return;
                    }
                }
            }
            CCon::QualifiedMin(inner, n) | CCon::QualifiedMax(inner, n) => {
                let count = values.iter().filter(|&&v| self.conforms(inner, v)).count();
                let (bad, comp) = match c {
                    CCon::QualifiedMin(..) => (count < *n, sh::QUALIFIED_MIN_COUNT_COMPONENT),
                    _ => (count > *n, sh::QUALIFIED_MAX_COUNT_COMPONENT),
                };
                if bad {
                    sink.push(s, focus, None, comp);
                }
            }
        }
    }

    /// Focus nodes selected by `shape`'s targets, rendered as terms.
    pub fn resolve_targets(&self, shape: &Shape) -> Vec<Term> {
        let mut v: Vec<Term> = shape
            .targets
            .iter()
            .flat_map(|t| self.target_terms(t))
            .collect();
        v.sort_by_cached_key(Term::to_ntriples);
        v.dedup();
        v
    }

    fn target_terms(&self, t: &Target) -> Vec<Term> {
        if let Target::Node(n) = t {
            return vec![n.clone()];
        }
        self.target(t).iter().map(|&i| self.term(i).clone()).collect()
    }

    /// Values reached from `focus` along `path`, sorted by N-Triples form.
    pub fn evaluate_path(&mut self, focus: &Term, path: &Path) -> Result<Vec<Term>, ShapeError> {
        let cp = self.compile_path(&Shape::property(path.clone()), path)?;
        let f = self.resolve(focus);
        let mut v: Vec<Term> = self.values(&cp, f).into_iter().map(|i| self.term(i).clone()).collect();
        v.sort_by_cached_key(Term::to_ntriples);
        Ok(v)
    }
}

fn default_message(component: &str, value: Option<&Term>, path: Option<&Path>) -> String {
    let name = component
        .strip_prefix(sh::NS)
        .unwrap_or(component)
        .trim_end_matches("ConstraintComponent");
    let mut m = format!("{name} violation");
    if let Some(p) = path {
        m.push_str(&format!(" on path {p}"));
    }
    if let Some(v) = value {
        m.push_str(&format!(" for value {v}"));
    }
    m
}
