//! Term-level shape trees. Parameters are kept as RDF terms so that templates
//! can carry placeholder terms anywhere a value is expected; they are checked
//! when a shape is compiled for validation.

use std::fmt;

use dqa_rdf::Term;

/// A SHACL property path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    Predicate(Term),
    Inverse(Box<Path>),
    Sequence(Vec<Path>),
    Alternative(Vec<Path>),
    ZeroOrMore(Box<Path>),
    OneOrMore(Box<Path>),
    ZeroOrOne(Box<Path>),
}

impl Path {
    pub fn pred(iri: &str) -> Path {
        Path::Predicate(Term::iri(iri))
    }

    pub fn inverse(p: Path) -> Path {
        Path::Inverse(Box::new(p))
    }

    /// Visits every term in the path.
    pub fn for_each_term(&self, f: &mut dyn FnMut(&Term)) {
        match self {
            Path::Predicate(t) => f(t),
            Path::Inverse(p) | Path::ZeroOrMore(p) | Path::OneOrMore(p) | Path::ZeroOrOne(p) => p.for_each_term(f),
            Path::Sequence(ps) | Path::Alternative(ps) => ps.iter().for_each(|p| p.for_each_term(f)),
        }
    }

    pub fn map_terms(&self, f: &mut dyn FnMut(&Term) -> Term) -> Path {
        match self {
            Path::Predicate(t) => Path::Predicate(f(t)),
            Path::Inverse(p) => Path::Inverse(Box::new(p.map_terms(f))),
            Path::ZeroOrMore(p) => Path::ZeroOrMore(Box::new(p.map_terms(f))),
            Path::OneOrMore(p) => Path::OneOrMore(Box::new(p.map_terms(f))),
            Path::ZeroOrOne(p) => Path::ZeroOrOne(Box::new(p.map_terms(f))),
            Path::Sequence(ps) => Path::Sequence(ps.iter().map(|p| p.map_terms(f)).collect()),
            Path::Alternative(ps) => Path::Alternative(ps.iter().map(|p| p.map_terms(f)).collect()),
        }
    }
}

/// SPARQL-style path syntax, e.g. `^<p>/<q>*`.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Predicate(t) => write!(f, "{t}"),
            Path::Inverse(p) => write!(f, "^{}", Paren(p)),
            Path::ZeroOrMore(p) => write!(f, "{}*", Paren(p)),
            Path::OneOrMore(p) => write!(f, "{}+", Paren(p)),
            Path::ZeroOrOne(p) => write!(f, "{}?", Paren(p)),
            Path::Sequence(ps) => join(f, ps, "/"),
            Path::Alternative(ps) => join(f, ps, "|"),
        }
    }
}

struct Paren<'a>(&'a Path);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Path::Predicate(_) => write!(f, "{}", self.0),
            p => write!(f, "({p})"),
        }
    }
}

fn join(f: &mut fmt::Formatter<'_>, ps: &[Path], sep: &str) -> fmt::Result {
    for (i, p) in ps.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{}", Paren(p))?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Class(Term),
    Node(Term),
    SubjectsOf(Term),
    ObjectsOf(Term),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    MinCount(Term),
    MaxCount(Term),
    Class(Term),
    Datatype(Term),
    NodeKind(Term),
    HasValue(Term),
    In(Vec<Term>),
    Pattern { pattern: Term, flags: Option<Term> },
    MinInclusive(Term),
    MaxInclusive(Term),
    MinExclusive(Term),
    MaxExclusive(Term),
    MinLength(Term),
    MaxLength(Term),
    LanguageIn(Vec<Term>),
    UniqueLang(Term),
    Equals(Term),
    Disjoint(Term),
    Not(Box<Shape>),
    And(Vec<Shape>),
    Or(Vec<Shape>),
    Node(Box<Shape>),
    Property(Box<Shape>),
    Qualified {
        shape: Box<Shape>,
        min: Option<Term>,
        max: Option<Term>,
    },
}

/// A node shape (no path) or property shape (with path).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    /// The shape's node in the shapes graph; a blank node for anonymous shapes.
    pub id: Term,
    pub targets: Vec<Target>,
    pub path: Option<Path>,
    pub constraints: Vec<Constraint>,
    pub deactivated: bool,
    pub message: Option<String>,
}

impl Shape {
    /// An anonymous node shape.
    pub fn node() -> Shape {
        Shape::named(Term::blank("shape"))
    }

    pub fn named(id: Term) -> Shape {
        Shape {
            id,
            targets: Vec::new(),
            path: None,
            constraints: Vec::new(),
            deactivated: false,
            message: None,
        }
    }

    /// An anonymous property shape.
    pub fn property(path: Path) -> Shape {
        Shape {
            path: Some(path),
            ..Shape::node()
        }
    }

    pub fn with(mut self, c: Constraint) -> Shape {
        self.constraints.push(c);
        self
    }

    pub fn target(mut self, t: Target) -> Shape {
        self.targets.push(t);
        self
    }

    pub fn is_property_shape(&self) -> bool {
        self.path.is_some()
    }

    /// Children shapes referenced by logical and shape-based constraints.
    pub fn children(&self) -> Vec<&Shape> {
        let mut v = Vec::new();
        for c in &self.constraints {
            match c {
                Constraint::Not(s) | Constraint::Node(s) | Constraint::Property(s) => v.push(&**s),
                Constraint::Qualified { shape, .. } => v.push(&**shape),
                Constraint::And(ss) | Constraint::Or(ss) => v.extend(ss.iter()),
                _ => {}
            }
        }
        v
    }

    /// Rewrites every term in targets, path and parameters (not shape ids).
    pub fn map_terms(&self, f: &mut dyn FnMut(&Term) -> Term) -> Shape {
        let targets = self
            .targets
            .iter()
            .map(|t| match t {
                Target::Class(x) => Target::Class(f(x)),
                Target::Node(x) => Target::Node(f(x)),
                Target::SubjectsOf(x) => Target::SubjectsOf(f(x)),
                Target::ObjectsOf(x) => Target::ObjectsOf(f(x)),
            })
            .collect();
        let path = self.path.as_ref().map(|p| p.map_terms(f));
        let constraints = self.constraints.iter().map(|c| c.map_terms(f)).collect();
        Shape {
            id: self.id.clone(),
            targets,
            path,
            constraints,
            deactivated: self.deactivated,
            message: self.message.clone(),
        }
    }

    /// Visits every term in targets, path and parameters.
    pub fn for_each_term(&self, f: &mut dyn FnMut(&Term)) {
        let _ = self.map_terms(&mut |t| {
            f(t);
            t.clone()
        });
    }

    /// A form with blank shape ids erased and constraints sorted, used for
    /// structural comparison of shapes that went through different
    /// serializations.
    pub fn canonical(&self) -> Shape {
        let id = if self.id.is_blank() { Term::blank("_") } else { self.id.clone() };
        let mut constraints: Vec<Constraint> = self.constraints.iter().map(Constraint::canonical).collect();
        constraints.sort();
        let mut targets = self.targets.clone();
        targets.sort();
        targets.dedup();
        Shape {
            id,
            targets,
            path: self.path.clone(),
            constraints,
            deactivated: self.deactivated,
            message: self.message.clone(),
        }
    }
}

impl Constraint {
    pub fn map_terms(&self, f: &mut dyn FnMut(&Term) -> Term) -> Constraint {
        use Constraint::*;
        match self {
            MinCount(t) => MinCount(f(t)),
            MaxCount(t) => MaxCount(f(t)),
            Class(t) => Class(f(t)),
            Datatype(t) => Datatype(f(t)),
            NodeKind(t) => NodeKind(f(t)),
            HasValue(t) => HasValue(f(t)),
            In(ts) => In(ts.iter().map(|t| f(t)).collect()),
            Pattern { pattern, flags } => Pattern {
                pattern: f(pattern),
                flags: flags.as_ref().map(|t| f(t)),
            },
            MinInclusive(t) => MinInclusive(f(t)),
            MaxInclusive(t) => MaxInclusive(f(t)),
            MinExclusive(t) => MinExclusive(f(t)),
            MaxExclusive(t) => MaxExclusive(f(t)),
            MinLength(t) => MinLength(f(t)),
            MaxLength(t) => MaxLength(f(t)),
            LanguageIn(ts) => LanguageIn(ts.iter().map(|t| f(t)).collect()),
            UniqueLang(t) => UniqueLang(f(t)),
            Equals(t) => Equals(f(t)),
            Disjoint(t) => Disjoint(f(t)),
            Not(s) => Not(Box::new(s.map_terms(f))),
            And(ss) => And(ss.iter().map(|s| s.map_terms(f)).collect()),
            Or(ss) => Or(ss.iter().map(|s| s.map_terms(f)).collect()),
            Node(s) => Node(Box::new(s.map_terms(f))),
            Property(s) => Property(Box::new(s.map_terms(f))),
            Qualified { shape, min, max } => Qualified {
                shape: Box::new(shape.map_terms(f)),
                min: min.as_ref().map(|t| f(t)),
                max: max.as_ref().map(|t| f(t)),
            },
        }
    }

    fn canonical(&self) -> Constraint {
        use Constraint::*;
        match self {
            Not(s) => Not(Box::new(s.canonical())),
            Node(s) => Node(Box::new(s.canonical())),
            Property(s) => Property(Box::new(s.canonical())),
            And(ss) => And(ss.iter().map(Shape::canonical).collect()),
            Or(ss) => Or(ss.iter().map(Shape::canonical).collect()),
            Qualified { shape, min, max } => Qualified {
                shape: Box::new(shape.canonical()),
                min: min.clone(),
                max: max.clone(),
            },
            c => c.clone(),
        }
    }

    /// The SHACL constraint component IRI.
    pub fn component(&self) -> &'static str {
        use dqa_rdf::vocab::sh;
        use Constraint::*;
        match self {
            MinCount(_) => sh::MIN_COUNT_COMPONENT,
            MaxCount(_) => sh::MAX_COUNT_COMPONENT,
            Class(_) => sh::CLASS_COMPONENT,
            Datatype(_) => sh::DATATYPE_COMPONENT,
            NodeKind(_) => sh::NODE_KIND_COMPONENT,
            HasValue(_) => sh::HAS_VALUE_COMPONENT,
            In(_) => sh::IN_COMPONENT,
            Pattern { .. } => sh::PATTERN_COMPONENT,
            MinInclusive(_) => sh::MIN_INCLUSIVE_COMPONENT,
            MaxInclusive(_) => sh::MAX_INCLUSIVE_COMPONENT,
            MinExclusive(_) => sh::MIN_EXCLUSIVE_COMPONENT,
            MaxExclusive(_) => sh::MAX_EXCLUSIVE_COMPONENT,
            MinLength(_) => sh::MIN_LENGTH_COMPONENT,
            MaxLength(_) => sh::MAX_LENGTH_COMPONENT,
            LanguageIn(_) => sh::LANGUAGE_IN_COMPONENT,
            UniqueLang(_) => sh::UNIQUE_LANG_COMPONENT,
            Equals(_) => sh::EQUALS_COMPONENT,
            Disjoint(_) => sh::DISJOINT_COMPONENT,
            Not(_) => sh::NOT_COMPONENT,
            And(_) => sh::AND_COMPONENT,
            Or(_) => sh::OR_COMPONENT,
            Node(_) => sh::NODE_COMPONENT,
            Property(_) => sh::PROPERTY,
            Qualified { .. } => sh::QUALIFIED_MIN_COUNT_COMPONENT,
        }
    }
}
