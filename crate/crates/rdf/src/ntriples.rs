//! N-Triples reader and writer.

use crate::error::ParseError;
use crate::graph::Graph;
use crate::turtle::Parser;

/// Parses an N-Triples document. Only absolute IRIs are accepted.
pub fn parse_ntriples(src: &str) -> Result<Graph, ParseError> {
    Parser::new(src, None, true).parse()
}

/// Writes one triple per line, sorted by N-Triples rendering.
pub fn write_ntriples(g: &Graph) -> String {
    let mut lines: Vec<String> = g.iter().map(|t| t.to_ntriples()).collect();
    lines.sort();
    let mut out = String::with_capacity(lines.iter().map(|l| l.len() + 1).sum());
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
