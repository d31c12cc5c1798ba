//! Turtle 1.1 reader and writer. The reader doubles as the N-Triples reader
//! in strict mode.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::ParseError;
use crate::graph::Graph;
use crate::iri;
use crate::term::{BlankNode, Iri, Literal, Term, Triple};
use crate::vocab::{rdf, xsd};

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
    base: Option<String>,
    prefixes: HashMap<String, String>,
    bnodes: HashMap<String, BlankNode>,
    next_bnode: usize,
    strict: bool,
    graph: Graph,
}

type PResult<T> = Result<T, ParseError>;

fn is_pn_chars_base(c: char) -> bool {
    matches!(c,
        'A'..='Z' | 'a'..='z'
        | '\u{C0}'..='\u{D6}' | '\u{D8}'..='\u{F6}' | '\u{F8}'..='\u{2FF}'
        | '\u{370}'..='\u{37D}' | '\u{37F}'..='\u{1FFF}' | '\u{200C}'..='\u{200D}'
        | '\u{2070}'..='\u{218F}' | '\u{2C00}'..='\u{2FEF}' | '\u{3001}'..='\u{D7FF}'
        | '\u{F900}'..='\u{FDCF}' | '\u{FDF0}'..='\u{FFFD}' | '\u{10000}'..='\u{EFFFF}')
}

fn is_pn_chars_u(c: char) -> bool {
    is_pn_chars_base(c) || c == '_'
}

fn is_pn_chars(c: char) -> bool {
    is_pn_chars_u(c)
        || c == '-'
        || c.is_ascii_digit()
        || c == '\u{B7}'
        || ('\u{300}'..='\u{36F}').contains(&c)
        || ('\u{203F}'..='\u{2040}').contains(&c)
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str, base: Option<&str>, strict: bool) -> Self {
        Parser {
            src,
            pos: 0,
            base: base.map(str::to_string),
            prefixes: HashMap::new(),
            bnodes: HashMap::new(),
            next_bnode: 0,
            strict,
            graph: Graph::new(),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(self.err_at(self.pos, msg))
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError::new(line, col, msg)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(f) => self.err(format!("expected '{c}', found '{f}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(' ' | '\t' | '\n' | '\r') => {
                    self.pos += 1;
                }
                Some('#') => {
                    let end = self.rest().find('\n').map_or(self.src.len(), |i| self.pos + i);
                    self.pos = end;
                }
                _ => break,
            }
        }
    }

    fn fresh(&mut self) -> Term {
        let b = BlankNode::new(format!("b{}", self.next_bnode));
        self.next_bnode += 1;
        Term::BlankNode(b)
    }

    fn emit(&mut self, s: &Term, p: &Iri, o: &Term) {
        self.graph.insert(&Triple {
            subject: s.clone(),
            predicate: p.clone(),
            object: o.clone(),
        });
    }

    pub(crate) fn parse(mut self) -> PResult<Graph> {
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            self.statement()?;
        }
        let mut prefixes: Vec<_> = self.prefixes.into_iter().collect();
        prefixes.sort();
        for (p, i) in prefixes {
            self.graph.set_prefix(&p, &i);
        }
        Ok(self.graph)
    }

    fn keyword_ci(&self, kw: &str) -> bool {
        let r = self.rest();
        r.len() > kw.len()
            && r[..kw.len()].eq_ignore_ascii_case(kw)
            && r[kw.len()..].starts_with(|c: char| c.is_whitespace() || c == '<' || c == ':' || c == '#')
    }

    fn statement(&mut self) -> PResult<()> {
        if !self.strict {
            if self.rest().starts_with("@prefix") {
                self.pos += 7;
                self.prefix_decl()?;
                self.skip_ws();
                return self.expect('.');
            }
            if self.rest().starts_with("@base") {
                self.pos += 5;
                self.base_decl()?;
                self.skip_ws();
                return self.expect('.');
            }
            if self.keyword_ci("PREFIX") {
                self.pos += 6;
                return self.prefix_decl();
            }
            if self.keyword_ci("BASE") {
                self.pos += 4;
                return self.base_decl();
            }
        }
        self.triples()?;
        self.skip_ws();
        self.expect('.')
    }

    fn prefix_decl(&mut self) -> PResult<()> {
        self.skip_ws();
        let start = self.pos;
        let prefix = self.pn_prefix();
        if !self.eat(':') {
            return Err(self.err_at(start, "expected prefix name followed by ':'"));
        }
        self.skip_ws();
        let iri = self.iriref()?;
        self.prefixes.insert(prefix, iri);
        Ok(())
    }

    fn base_decl(&mut self) -> PResult<()> {
        self.skip_ws();
        let iri = self.iriref()?;
        self.base = Some(iri);
        Ok(())
    }

    fn pn_prefix(&mut self) -> String {
        let start = self.pos;
        if let Some(c) = self.peek() {
            if is_pn_chars_base(c) {
                self.bump();
                while let Some(c) = self.peek() {
                    if is_pn_chars(c) || c == '.' {
                        self.bump();
                    } else {
                        break;
                    }
                }
                while self.src[start..self.pos].ends_with('.') {
                    self.pos -= 1;
                }
            }
        }
        self.src[start..self.pos].to_string()
    }

    fn triples(&mut self) -> PResult<()> {
        self.skip_ws();
        if !self.strict && self.peek() == Some('[') {
            let save = self.pos;
            self.bump();
            self.skip_ws();
            if self.eat(']') {
                let s = self.fresh();
                self.skip_ws();
                return self.predicate_object_list(&s);
            }
            self.pos = save;
            let s = self.blank_node_property_list()?;
            self.skip_ws();
            if self.peek() != Some('.') {
                self.predicate_object_list(&s)?;
            }
            return Ok(());
        }
        let s = self.subject()?;
        self.skip_ws();
        self.predicate_object_list(&s)
    }

    fn subject(&mut self) -> PResult<Term> {
        match self.peek() {
            Some('<') => Ok(Term::Iri(self.iri_term()?)),
            Some('_') => self.blank_label(),
            Some('(') if !self.strict => self.collection(),
            Some('[') if !self.strict => {
                self.bump();
                self.skip_ws();
                self.expect(']')?;
                Ok(self.fresh())
            }
            Some(_) if !self.strict => Ok(Term::Iri(self.prefixed_name()?)),
            Some(c) => self.err(format!("unexpected '{c}' in subject position")),
            None => self.err("unexpected end of input"),
        }
    }

    fn predicate_object_list(&mut self, s: &Term) -> PResult<()> {
        loop {
            let p = self.verb()?;
            self.skip_ws();
            self.object_list(s, &p)?;
            self.skip_ws();
            if self.strict || !self.eat(';') {
                return Ok(());
            }
            loop {
                self.skip_ws();
                if !self.eat(';') {
                    break;
                }
            }
            match self.peek() {
                Some('.') | Some(']') | None => return Ok(()),
                _ => {}
            }
        }
    }

    fn verb(&mut self) -> PResult<Iri> {
        if !self.strict && self.peek() == Some('a') {
            let next = self.peek_at(1);
            if !matches!(next, Some(c) if is_pn_chars(c) || c == ':' || c == '.') {
                self.bump();
                return Ok(Iri::new_unchecked(rdf::TYPE));
            }
        }
        match self.peek() {
            Some('<') => self.iri_term(),
            Some(_) if !self.strict => self.prefixed_name(),
            Some(c) => self.err(format!("unexpected '{c}' in predicate position")),
            None => self.err("unexpected end of input"),
        }
    }

    fn object_list(&mut self, s: &Term, p: &Iri) -> PResult<()> {
        loop {
            let o = self.object()?;
            self.emit(s, p, &o);
            self.skip_ws();
            if self.strict || !self.eat(',') {
                return Ok(());
            }
            self.skip_ws();
        }
    }

    fn object(&mut self) -> PResult<Term> {
        match self.peek() {
            Some('<') => Ok(Term::Iri(self.iri_term()?)),
            Some('_') if self.peek_at(1) == Some(':') => self.blank_label(),
            Some('"') => self.literal(),
            Some('\'') if !self.strict => self.literal(),
            Some('(') if !self.strict => self.collection(),
            Some('[') if !self.strict => self.blank_node_property_list(),
            Some(c) if !self.strict && (c.is_ascii_digit() || c == '+' || c == '-' || c == '.') => {
                self.numeric()
            }
            Some(_) if !self.strict => {
                for (kw, v) in [("true", true), ("false", false)] {
                    if self.rest().starts_with(kw) {
                        let after = self.rest()[kw.len()..].chars().next();
                        if !matches!(after, Some(c) if is_pn_chars(c) || c == ':' || c == '.') {
                            self.pos += kw.len();
                            return Ok(Term::boolean(v));
                        }
                    }
                }
                Ok(Term::Iri(self.prefixed_name()?))
            }
            Some(c) => self.err(format!("unexpected '{c}' in object position")),
            None => self.err("unexpected end of input"),
        }
    }

    fn blank_node_property_list(&mut self) -> PResult<Term> {
        self.expect('[')?;
        self.skip_ws();
        let b = self.fresh();
        if !self.eat(']') {
            self.predicate_object_list(&b)?;
            self.skip_ws();
            self.expect(']')?;
        }
        Ok(b)
    }

    fn collection(&mut self) -> PResult<Term> {
        self.expect('(')?;
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            if self.eat(')') {
                break;
            }
            if self.peek().is_none() {
                return self.err("unterminated collection");
            }
            items.push(self.object()?);
        }
        let nil = Term::iri(rdf::NIL);
        if items.is_empty() {
            return Ok(nil);
        }
        let nodes: Vec<Term> = items.iter().map(|_| self.fresh()).collect();
        let first = Iri::new_unchecked(rdf::FIRST);
        let rest = Iri::new_unchecked(rdf::REST);
        for (i, item) in items.iter().enumerate() {
            self.emit(&nodes[i], &first, item);
            let next = nodes.get(i + 1).cloned().unwrap_or_else(|| nil.clone());
            self.emit(&nodes[i], &rest, &next);
        }
        Ok(nodes[0].clone())
    }

    fn blank_label(&mut self) -> PResult<Term> {
        let start = self.pos;
        if !self.rest().starts_with("_:") {
            return self.err("expected blank node label");
        }
        self.pos += 2;
        let lstart = self.pos;
        match self.peek() {
            Some(c) if is_pn_chars_u(c) || c.is_ascii_digit() => {
                self.bump();
            }
            _ => return Err(self.err_at(start, "invalid blank node label")),
        }
        while let Some(c) = self.peek() {
            if is_pn_chars(c) || c == '.' {
                self.bump();
            } else {
                break;
            }
        }
        while self.src[lstart..self.pos].ends_with('.') {
            self.pos -= 1;
        }
        let label = self.src[lstart..self.pos].to_string();
        if let Some(b) = self.bnodes.get(&label) {
            return Ok(Term::BlankNode(b.clone()));
        }
        let Term::BlankNode(b) = self.fresh() else { unreachable!() };
        self.bnodes.insert(label, b.clone());
        Ok(Term::BlankNode(b))
    }

    fn iri_term(&mut self) -> PResult<Iri> {
        let start = self.pos;
        let raw = self.iriref_raw()?;
        if self.strict {
            if !iri::is_absolute(&raw) {
                return Err(self.err_at(start, format!("relative IRI <{raw}> not allowed in N-Triples")));
            }
            return Ok(Iri::new_unchecked(raw));
        }
        match iri::resolve(&raw, self.base.as_deref()) {
            Some(r) => Ok(Iri::new_unchecked(r)),
            None => Err(self.err_at(start, format!("cannot resolve relative IRI <{raw}> without a base IRI"))),
        }
    }

    fn iriref(&mut self) -> PResult<String> {
        Ok(self.iri_term()?.as_str().to_string())
    }

    fn iriref_raw(&mut self) -> PResult<String> {
        self.expect('<')?;
        let mut out = String::new();
        loop {
            match self.bump() {
                None => return self.err("unterminated IRI"),
                Some('>') => return Ok(out),
                Some('\\') => {
                    let c = self.uchar()?;
                    if matches!(c, '\u{0}'..='\u{20}' | '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') {
                        return self.err("escaped character not allowed in IRI");
                    }
                    out.push(c);
                }
                Some(c @ ('\u{0}'..='\u{20}' | '<' | '"' | '{' | '}' | '|' | '^' | '`')) => {
                    self.pos -= c.len_utf8();
                    return self.err(format!("invalid character {c:?} in IRI"));
                }
                Some(c) => out.push(c),
            }
        }
    }

    /// Parses the part after a backslash: `uXXXX` or `UXXXXXXXX`.
    fn uchar(&mut self) -> PResult<char> {
        let n = match self.bump() {
            Some('u') => 4,
            Some('U') => 8,
            _ => return self.err("invalid escape"),
        };
        let start = self.pos;
        for _ in 0..n {
            match self.bump() {
                Some(c) if c.is_ascii_hexdigit() => {}
                _ => return Err(self.err_at(start, "invalid hex escape")),
            }
        }
        let v = u32::from_str_radix(&self.src[start..self.pos], 16).unwrap();
        char::from_u32(v).ok_or_else(|| self.err_at(start, "escape is not a valid code point"))
    }

    fn prefixed_name(&mut self) -> PResult<Iri> {
        let start = self.pos;
        let prefix = self.pn_prefix();
        if !self.eat(':') {
            self.pos = start;
            return match self.peek() {
                Some(c) => self.err(format!("unexpected '{c}'")),
                None => self.err("unexpected end of input"),
            };
        }
        let Some(ns) = self.prefixes.get(&prefix).cloned() else {
            return Err(self.err_at(start, format!("undefined prefix '{prefix}:'")));
        };
        let local = self.pn_local()?;
        Ok(Iri::new_unchecked(format!("{ns}{local}")))
    }

    fn pn_local(&mut self) -> PResult<String> {
        let mut out = String::new();
        let mut first = true;
        // bytes of `out` after the last non-dot char, to strip trailing dots
        loop {
            let Some(c) = self.peek() else { break };
            let ok = if first {
                is_pn_chars_u(c) || c == ':' || c.is_ascii_digit() || c == '%' || c == '\\'
            } else {
                is_pn_chars(c) || c == '.' || c == ':' || c == '%' || c == '\\'
            };
            if !ok {
                break;
            }
            if c == '.' {
                // a dot is only part of the name when followed by a name char
                match self.peek_at(1) {
                    Some(n) if is_pn_chars(n) || n == '.' || n == ':' || n == '%' || n == '\\' => {}
                    _ => break,
                }
            }
            self.bump();
            match c {
                '%' => {
                    let s = self.pos;
                    for _ in 0..2 {
                        match self.bump() {
                            Some(h) if h.is_ascii_hexdigit() => {}
                            _ => return Err(self.err_at(s, "invalid percent escape")),
                        }
                    }
                    out.push('%');
                    out.push_str(&self.src[s..self.pos]);
                }
                '\\' => match self.bump() {
                    Some(e) if "_~.-!$&'()*+,;=/?#@%".contains(e) => out.push(e),
                    _ => return self.err("invalid local name escape"),
                },
                c => out.push(c),
            }
            first = false;
        }
        Ok(out)
    }

    fn literal(&mut self) -> PResult<Term> {
        let lex = self.string()?;
        if self.peek() == Some('@') {
            self.bump();
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                self.bump();
            }
            if self.pos == start {
                return self.err("empty language tag");
            }
            while self.peek() == Some('-') && matches!(self.peek_at(1), Some(c) if c.is_ascii_alphanumeric()) {
                self.bump();
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    self.bump();
                }
            }
            let tag = &self.src[start..self.pos];
            return Ok(Term::Literal(Literal::lang(lex, tag)));
        }
        if self.rest().starts_with("^^") {
            self.pos += 2;
            let dt = if self.peek() == Some('<') || self.strict {
                self.iri_term()?
            } else {
                self.prefixed_name()?
            };
            return Ok(Term::Literal(Literal::typed(lex, dt)));
        }
        Ok(Term::Literal(Literal::string(lex)))
    }

    fn string(&mut self) -> PResult<String> {
        let start = self.pos;
        let q = self.bump().unwrap();
        let long = !self.strict && self.rest().starts_with(&format!("{q}{q}"));
        if long {
            self.pos += 2;
        }
        let mut out = String::new();
        loop {
            match self.bump() {
                None => return Err(self.err_at(start, "unterminated string literal")),
                Some(c) if c == q => {
                    if !long {
                        return Ok(out);
                    }
                    let mut run = 1;
                    while self.peek() == Some(q) {
                        self.bump();
                        run += 1;
                    }
                    if run >= 3 {
                        out.extend(std::iter::repeat_n(q, run - 3));
                        return Ok(out);
                    }
                    out.extend(std::iter::repeat_n(q, run));
                }
                Some('\\') => match self.peek() {
                    Some('u' | 'U') => out.push(self.uchar()?),
                    Some(e) => {
                        self.bump();
                        out.push(match e {
                            't' => '\t',
                            'b' => '\u{8}',
                            'n' => '\n',
                            'r' => '\r',
                            'f' => '\u{c}',
                            '"' => '"',
                            '\'' => '\'',
                            '\\' => '\\',
                            _ => return self.err(format!("invalid escape '\\{e}'")),
                        });
                    }
                    None => return self.err("unterminated string literal"),
                },
                Some(c @ ('\n' | '\r')) if !long => {
                    self.pos -= c.len_utf8();
                    return self.err("line break in short string literal");
                }
                Some(c) => out.push(c),
            }
        }
    }

    fn numeric(&mut self) -> PResult<Term> {
        let start = self.pos;
        if matches!(self.peek(), Some('+' | '-')) {
            self.bump();
        }
        let int_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let int_digits = self.pos - int_start;
        let mut frac_digits = 0;
        if self.peek() == Some('.') && matches!(self.peek_at(1), Some(c) if c.is_ascii_digit()) {
            self.bump();
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
                frac_digits += 1;
            }
        } else if self.peek() == Some('.')
            && matches!(self.peek_at(1), Some('e' | 'E'))
            && int_digits > 0
        {
            self.bump();
        }
        if int_digits == 0 && frac_digits == 0 {
            return Err(self.err_at(start, "invalid numeric literal"));
        }
        let mut dt = if frac_digits > 0 || self.src[start..self.pos].ends_with('.') {
            xsd::DECIMAL
        } else {
            xsd::INTEGER
        };
        if matches!(self.peek(), Some('e' | 'E')) {
            self.bump();
            if matches!(self.peek(), Some('+' | '-')) {
                self.bump();
            }
            let es = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            if self.pos == es {
                return Err(self.err_at(start, "invalid exponent"));
            }
            dt = xsd::DOUBLE;
        }
        Ok(Term::typed(&self.src[start..self.pos], dt))
    }
}

/// Parses a Turtle document.
pub fn parse_turtle(src: &str, base: Option<&str>) -> Result<Graph, ParseError> {
    Parser::new(src, base, false).parse()
}

// ---------------------------------------------------------------------------
// writer

fn is_safe_local(s: &str) -> bool {
    s.chars().enumerate().all(|(i, c)| {
        c.is_ascii_alphanumeric() || c == '_' || (i > 0 && c == '-')
    })
}

struct Writer<'g> {
    g: &'g Graph,
    prefixes: Vec<(String, String)>,
    inline: BTreeSet<Term>,
    lists: HashMap<Term, Vec<Term>>,
    out: String,
}

impl<'g> Writer<'g> {
    fn iri(&self, i: &str) -> String {
        if i == rdf::TYPE {
            return "a".to_string();
        }
        self.name(i)
    }

    fn name(&self, i: &str) -> String {
        let mut best: Option<(&str, &str)> = None;
        for (p, ns) in &self.prefixes {
            if let Some(local) = i.strip_prefix(ns.as_str()) {
                if is_safe_local(local) && best.is_none_or(|(_, b)| ns.len() > b.len()) {
                    best = Some((p, ns));
                }
            }
        }
        match best {
            Some((p, ns)) => format!("{p}:{}", &i[ns.len()..]),
            None => Term::iri(i).to_string(),
        }
    }

    fn term(&self, t: &Term, indent: usize) -> String {
        match t {
            Term::Iri(i) => self.name(i.as_str()),
            Term::BlankNode(_) if self.lists.contains_key(t) => {
                let items: Vec<String> = self.lists[t].iter().map(|x| self.term(x, indent)).collect();
                format!("( {} )", items.join(" "))
            }
            Term::BlankNode(b) if self.inline.contains(t) => {
                let body = self.body(t, indent + 1);
                if body.is_empty() {
                    "[ ]".to_string()
                } else {
                    let pad = "    ".repeat(indent);
                    let _ = b;
                    format!("[\n{body}\n{pad}]")
                }
            }
            Term::BlankNode(b) => format!("_:{}", b.label()),
            Term::Literal(l) => {
                let dt = l.datatype().as_str();
                let lex = l.lexical();
                let plain = |re: fn(&str) -> bool| l.language().is_none() && re(lex);
                if dt == xsd::INTEGER && plain(is_int_lex) {
                    lex.to_string()
                } else if dt == xsd::DECIMAL && plain(is_dec_lex) {
                    lex.to_string()
                } else if dt == xsd::BOOLEAN && (lex == "true" || lex == "false") {
                    lex.to_string()
                } else if l.language().is_some() || dt == xsd::STRING {
                    t.to_string()
                } else {
                    let s = Term::Literal(Literal::string(lex)).to_string();
                    format!("{s}^^{}", self.name(dt))
                }
            }
        }
    }

    fn body(&self, s: &Term, indent: usize) -> String {
        let pad = "    ".repeat(indent);
        let Some(sid) = self.g.id(s) else {
            return String::new();
        };
        let mut by_pred: BTreeMap<(bool, String), Vec<Term>> = BTreeMap::new();
        for (_, p, o) in self.g.match_ids(Some(sid), None, None) {
            let piri = self.g.term(p).iri_str().unwrap().to_string();
            by_pred
                .entry((piri != rdf::TYPE, piri))
                .or_default()
                .push(self.g.term(o).clone());
        }
        let mut lines = Vec::new();
        for ((_, p), mut objs) in by_pred {
            objs.sort_by_cached_key(|o| o.to_ntriples());
            let rendered: Vec<String> = objs.iter().map(|o| self.term(o, indent)).collect();
            lines.push(format!("{pad}{} {}", self.iri(&p), rendered.join(", ")));
        }
        lines.join(" ;\n")
    }
}

fn is_int_lex(s: &str) -> bool {
    let d = s.strip_prefix(['+', '-']).unwrap_or(s);
    !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())
}

fn is_dec_lex(s: &str) -> bool {
    let d = s.strip_prefix(['+', '-']).unwrap_or(s);
    match d.split_once('.') {
        Some((a, b)) => !b.is_empty() && a.bytes().chain(b.bytes()).all(|c| c.is_ascii_digit()),
        None => false,
    }
}

/// Serializes a graph as Turtle. Output is deterministic: subjects, predicates
/// and objects are sorted by N-Triples rendering (with `rdf:type` first), blank
/// nodes referenced exactly once are nested, and well-formed lists use `( )`.
pub fn write_turtle(g: &Graph) -> String {
    let mut prefixes: Vec<(String, String)> = g.prefixes().iter().map(|(a, b)| (a.clone(), b.clone())).collect();
    prefixes.sort();

    let mut refs: HashMap<Term, usize> = HashMap::new();
    for t in g.iter() {
        if t.object.is_blank() {
            *refs.entry(t.object.clone()).or_default() += 1;
        }
    }
    let mut inline: BTreeSet<Term> = refs
        .iter()
        .filter(|(_, &n)| n == 1)
        .map(|(t, _)| t.clone())
        .collect();

    // break cycles of inlined nodes: anything not reachable from a top-level
    // subject gets promoted to top level
    let subjects: Vec<Term> = g.subject_ids().into_iter().map(|i| g.term(i).clone()).collect();
    loop {
        let mut reached = BTreeSet::new();
        let mut stack: Vec<Term> = subjects.iter().filter(|s| !inline.contains(*s)).cloned().collect();
        while let Some(s) = stack.pop() {
            for o in g.match_pattern(Some(&s), None, None).into_iter().map(|t| t.object) {
                if inline.contains(&o) && reached.insert(o.clone()) {
                    stack.push(o);
                }
            }
        }
        let orphan = inline.iter().find(|b| !reached.contains(*b) && g.id(b).is_some() && subjects.contains(b)).cloned();
        match orphan {
            Some(b) => {
                inline.remove(&b);
            }
            None => break,
        }
    }

    let mut lists = HashMap::new();
    for head in &inline {
        if let Some(items) = list_items(g, head, &inline) {
            lists.insert(head.clone(), items);
        }
    }
    // interior list nodes need no rendering of their own
    let mut interior = BTreeSet::new();
    for head in lists.keys() {
        let mut cur = head.clone();
        loop {
            let rest = g.object(&cur, rdf::REST).unwrap();
            if rest.iri_str() == Some(rdf::NIL) {
                break;
            }
            interior.insert(rest.clone());
            cur = rest;
        }
    }
    for i in &interior {
        lists.remove(i);
    }

    let w = Writer {
        g,
        prefixes: prefixes.clone(),
        inline,
        lists,
        out: String::new(),
    };
    let mut out = w.out.clone();
    for (p, ns) in &prefixes {
        out.push_str(&format!("@prefix {p}: {} .\n", Term::iri(ns)));
    }
    if !prefixes.is_empty() {
        out.push('\n');
    }
    let mut tops: Vec<(String, Term)> = subjects
        .into_iter()
        .filter(|s| !w.inline.contains(s))
        .map(|s| (s.to_ntriples(), s))
        .collect();
    tops.sort_by(|a, b| a.0.cmp(&b.0));
    for (_, s) in tops {
        let head = match &s {
            Term::BlankNode(b) => format!("_:{}", b.label()),
            _ => w.term(&s, 0),
        };
        out.push_str(&head);
        out.push('\n');
        out.push_str(&w.body(&s, 1));
        out.push_str(" .\n\n");
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

fn list_items(g: &Graph, head: &Term, inline: &BTreeSet<Term>) -> Option<Vec<Term>> {
    let mut items = Vec::new();
    let mut cur = head.clone();
    let mut seen = BTreeSet::new();
    loop {
        if cur.iri_str() == Some(rdf::NIL) {
            return Some(items);
        }
        if !cur.is_blank() || !inline.contains(&cur) || !seen.insert(cur.clone()) {
            return None;
        }
        let triples = g.match_pattern(Some(&cur), None, None);
        if triples.len() != 2 {
            return None;
        }
        let first = g.objects(&cur, rdf::FIRST);
        let rest = g.objects(&cur, rdf::REST);
        if first.len() != 1 || rest.len() != 1 {
            return None;
        }
        items.push(first[0].clone());
        cur = rest[0].clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_abbreviations() {
        let doc = r#"
            @prefix ex: <http://ex.org/> .
            PREFIX sh: <http://www.w3.org/ns/shacl#>
            ex:s a ex:T ; ex:p "x"@en-GB, 1, 2.5, 1e3, true ;
                 ex:q [ ex:r ex:o ] ; ex:l ( 1 2 ) .
            [] ex:p ex:o .
        "#;
        let g = parse_turtle(doc, None).unwrap();
        assert_eq!(g.len(), 1 + 5 + 2 + 4 + 1 + 1);
        let s = Term::iri("http://ex.org/s");
        let l = g.object(&s, "http://ex.org/l").unwrap();
        assert_eq!(g.list(&l).unwrap(), vec![Term::integer(1), Term::integer(2)]);
        assert!(g.has(&s, "http://ex.org/p", &Term::Literal(Literal::lang("x", "en-gb"))));
        assert!(g.has(&s, "http://ex.org/p", &Term::typed("2.5", xsd::DECIMAL)));
        assert!(g.has(&s, "http://ex.org/p", &Term::typed("1e3", xsd::DOUBLE)));
    }

    #[test]
    fn relative_iris_need_base() {
        let e = parse_turtle("<a> <b> <c> .", None).unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let g = parse_turtle("<a> <b> <c> .", Some("http://ex.org/d/")).unwrap();
        assert!(g.has(&Term::iri("http://ex.org/d/a"), "http://ex.org/d/b", &Term::iri("http://ex.org/d/c")));
    }

    #[test]
    fn error_positions() {
        let e = parse_turtle("@prefix ex: <http://ex.org/> .\nex:a ex:b ex:c ;\n  ex:d .", None).unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_turtle("<http://a> <http://b> nope:x .", None).unwrap_err();
        assert!(e.message.contains("undefined prefix"), "{e}");
    }

    #[test]
    fn trailing_dot_after_local_name() {
        let g = parse_turtle("@prefix ex: <http://ex.org/> . ex:a ex:b ex:c.", None).unwrap();
        assert!(g.has(&Term::iri("http://ex.org/a"), "http://ex.org/b", &Term::iri("http://ex.org/c")));
    }

    #[test]
    fn long_strings() {
        let g = parse_turtle("<http://a> <http://b> \"\"\"x\n\"y\"\"\"\" .", None).unwrap();
        let o = g.object(&Term::iri("http://a"), "http://b").unwrap();
        assert_eq!(o.as_literal().unwrap().lexical(), "x\n\"y\"");
    }

    #[test]
    fn writer_round_trip() {
        let doc = r#"
            @prefix ex: <http://ex.org/> .
            ex:s a ex:T ; ex:p "x\ny", 1, -2.50 ; ex:q [ ex:r [ ex:z ex:o ] ] ;
                 ex:l ( 1 [ ex:k 2 ] "z" ) ; ex:e () .
            _:a ex:p _:b . _:b ex:p _:a .
            _:c ex:p _:c .
        "#;
        let g = parse_turtle(doc, None).unwrap();
        let text = write_turtle(&g);
        let g2 = parse_turtle(&text, None).unwrap();
        assert_eq!(g.len(), g2.len(), "{text}");
        assert!(text.contains("( 1 ["), "{text}");
    }
}
