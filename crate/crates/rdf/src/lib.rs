//! RDF data model for the quality toolkit: terms, an indexed in-memory graph,
//! Turtle and N-Triples I/O, and XSD lexical checks.

pub mod error;
pub mod graph;
pub mod iri;
pub mod ntriples;
pub mod term;
pub mod turtle;
pub mod vocab;
pub mod xsd;

use std::io::Read;

pub use error::ParseError;
pub use graph::{Graph, TermId};
pub use ntriples::{parse_ntriples, write_ntriples};
pub use term::{BlankNode, Iri, Literal, Term, Triple};
pub use turtle::{parse_turtle, write_turtle};
pub use xsd::{compare_literals, compare_terms, literal_is_ill_typed};

/// Input serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Turtle,
    NTriples,
}

impl Format {
    /// Guesses the format from a file extension; Turtle otherwise.
    pub fn from_path(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("nt") => Format::NTriples,
            _ => Format::Turtle,
        }
    }
}

/// Reads a whole document and parses it.
pub fn load_graph<R: Read>(mut source: R, format: Format, base: Option<&str>) -> Result<Graph, ParseError> {
    let mut bytes = Vec::new();
    source
        .read_to_end(&mut bytes)
        .map_err(|e| ParseError::new(0, 0, format!("read failed: {e}")))?;
    let text = match std::str::from_utf8(&bytes) {
        Ok(t) => t,
        Err(e) => {
            let before = &bytes[..e.valid_up_to()];
            let line = before.iter().filter(|b| **b == b'\n').count() + 1;
            let col = before.iter().rev().take_while(|b| **b != b'\n').count() + 1;
            return Err(ParseError::new(line, col, "invalid UTF-8"));
        }
    };
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    match format {
        Format::Turtle => parse_turtle(text, base),
        Format::NTriples => parse_ntriples(text),
    }
}
