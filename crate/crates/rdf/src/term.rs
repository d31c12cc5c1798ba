use std::fmt;
use std::sync::Arc;

use crate::vocab::{rdf, xsd};

/// An absolute IRI.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(Arc<str>);

impl Iri {
    /// Wraps a string without checking that it is absolute.
    pub fn new_unchecked(iri: impl Into<Arc<str>>) -> Self {
        Iri(iri.into())
    }

    /// Wraps a string, rejecting relative references.
    pub fn parse(iri: &str) -> Option<Self> {
        crate::iri::is_absolute(iri).then(|| Iri(iri.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        write_escaped_iri(f, &self.0)?;
        f.write_str(">")
    }
}

/// A blank node label, scoped to the graph that owns it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(Arc<str>);

impl BlankNode {
    pub fn new(label: impl Into<Arc<str>>) -> Self {
        BlankNode(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// An RDF literal. Language-tagged literals always carry `rdf:langString`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: Arc<str>,
    datatype: Iri,
    language: Option<Arc<str>>,
}

impl Literal {
    /// A plain `xsd:string` literal.
    pub fn string(lexical: impl Into<Arc<str>>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new_unchecked(xsd::STRING),
            language: None,
        }
    }

    /// A typed literal. Passing `rdf:langString` here yields a literal with no
    /// language tag, which is ill-formed; use [`Literal::lang`] instead.
    pub fn typed(lexical: impl Into<Arc<str>>, datatype: Iri) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        }
    }

    /// A language-tagged string. The tag is stored lower-cased.
    pub fn lang(lexical: impl Into<Arc<str>>, tag: &str) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new_unchecked(rdf::LANG_STRING),
            language: Some(tag.to_ascii_lowercase().into()),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("\"")?;
        write_escaped_string(f, &self.lexical)?;
        f.write_str("\"")?;
        if let Some(lang) = &self.language {
            write!(f, "@{lang}")
        } else if self.datatype.as_str() == xsd::STRING {
            Ok(())
        } else {
            write!(f, "^^{}", self.datatype)
        }
    }
}

/// Any RDF term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    BlankNode(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn iri(iri: &str) -> Self {
        Term::Iri(Iri::new_unchecked(iri))
    }

    pub fn blank(label: &str) -> Self {
        Term::BlankNode(BlankNode::new(label))
    }

    pub fn string(lexical: &str) -> Self {
        Term::Literal(Literal::string(lexical))
    }

    pub fn typed(lexical: &str, datatype: &str) -> Self {
        Term::Literal(Literal::typed(lexical, Iri::new_unchecked(datatype)))
    }

    pub fn integer(value: i64) -> Self {
        Term::typed(&value.to_string(), xsd::INTEGER)
    }

    pub fn boolean(value: bool) -> Self {
        Term::typed(if value { "true" } else { "false" }, xsd::BOOLEAN)
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, Term::Iri(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::BlankNode(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(l) => Some(l),
            _ => None,
        }
    }

    /// The IRI string of an IRI term.
    pub fn iri_str(&self) -> Option<&str> {
        self.as_iri().map(Iri::as_str)
    }

    /// The N-Triples rendering; also the deterministic sort key.
    pub fn to_ntriples(&self) -> String {
        self.to_string()
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => fmt::Display::fmt(i, f),
            Term::BlankNode(b) => fmt::Display::fmt(b, f),
            Term::Literal(l) => fmt::Display::fmt(l, f),
        }
    }
}

impl From<Iri> for Term {
    fn from(i: Iri) -> Self {
        Term::Iri(i)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::BlankNode(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

/// A triple. The predicate is always an IRI; the subject is never a literal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    /// Returns `None` when the subject is a literal.
    pub fn new(subject: Term, predicate: Iri, object: Term) -> Option<Self> {
        if subject.is_literal() {
            return None;
        }
        Some(Triple {
            subject,
            predicate,
            object,
        })
    }

    pub fn to_ntriples(&self) -> String {
        self.to_string()
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

fn write_escaped_iri(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    for c in s.chars() {
        match c {
            '\u{0}'..='\u{20}' | '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\' => {
                if (c as u32) <= 0xFFFF {
                    write!(f, "\\u{:04X}", c as u32)?
                } else {
                    write!(f, "\\U{:08X}", c as u32)?
                }
            }
            _ => f.write_fmt(format_args!("{c}"))?,
        }
    }
    Ok(())
}

fn write_escaped_string(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\r' => f.write_str("\\r")?,
            '\t' => f.write_str("\\t")?,
            '\u{8}' => f.write_str("\\b")?,
            '\u{c}' => f.write_str("\\f")?,
            c if (c as u32) < 0x20 || c == '\u{7f}' => write!(f, "\\u{:04X}", c as u32)?,
            c => f.write_fmt(format_args!("{c}"))?,
        }
    }
    Ok(())
}
