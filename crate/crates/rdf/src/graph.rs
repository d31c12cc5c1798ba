use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::Bound;

use crate::term::{BlankNode, Iri, Term, Triple};

/// Index of an interned term inside one [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(pub u32);

type Key = (u32, u32, u32);

/// An in-memory set of triples with SPO, POS and OSP indexes.
///
/// Terms are interned; ids are stable for the lifetime of the graph and are
/// never reused. The graph is cheap to share read-only across threads.
#[derive(Clone, Default)]
pub struct Graph {
    terms: Vec<Term>,
    ids: HashMap<Term, u32>,
    spo: BTreeSet<Key>,
    pos: BTreeSet<Key>,
    osp: BTreeSet<Key>,
    prefixes: BTreeMap<String, String>,
    fresh: u64,
}

fn range3(set: &BTreeSet<Key>, a: u32, b: Option<u32>) -> impl Iterator<Item = &Key> + '_ {
    let (lo, hi) = match b {
        Some(b) => ((a, b, 0), Bound::Included((a, b, u32::MAX))),
        None => ((a, 0, 0), Bound::Included((a, u32::MAX, u32::MAX))),
    };
    set.range((Bound::Included(lo), hi))
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of distinct triples.
    pub fn len(&self) -> usize {
        self.spo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spo.is_empty()
    }

    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    pub fn set_prefix(&mut self, prefix: &str, iri: &str) {
        self.prefixes.insert(prefix.to_string(), iri.to_string());
    }

    fn intern(&mut self, t: &Term) -> u32 {
        if let Some(&id) = self.ids.get(t) {
            return id;
        }
        let id = u32::try_from(self.terms.len()).expect("term table overflow");
        self.terms.push(t.clone());
        self.ids.insert(t.clone(), id);
        id
    }

    /// Looks up the id of a term that occurs (or once occurred) in the graph.
    pub fn id(&self, t: &Term) -> Option<TermId> {
        self.ids.get(t).map(|&i| TermId(i))
    }

    pub fn iri_id(&self, iri: &str) -> Option<TermId> {
        self.id(&Term::iri(iri))
    }

    /// Number of interned terms; ids below this value are valid.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, id: TermId) -> &Term {
        &self.terms[id.0 as usize]
    }

    /// Inserts a triple; returns false if it was already present.
    pub fn insert(&mut self, t: &Triple) -> bool {
        let s = self.intern(&t.subject);
        let p = self.intern(&Term::Iri(t.predicate.clone()));
        let o = self.intern(&t.object);
        self.insert_ids(s, p, o)
    }

    /// Convenience insert; panics if `s` is a literal.
    pub fn add(&mut self, s: Term, p: &str, o: Term) -> bool {
        let t = Triple::new(s, Iri::new_unchecked(p), o).expect("literal subject");
        self.insert(&t)
    }

    fn insert_ids(&mut self, s: u32, p: u32, o: u32) -> bool {
        if !self.spo.insert((s, p, o)) {
            return false;
        }
        self.pos.insert((p, o, s));
        self.osp.insert((o, s, p));
        true
    }

    pub fn contains(&self, t: &Triple) -> bool {
        let (Some(s), Some(p), Some(o)) = (
            self.ids.get(&t.subject),
            self.ids.get(&Term::Iri(t.predicate.clone())),
            self.ids.get(&t.object),
        ) else {
            return false;
        };
        self.spo.contains(&(*s, *p, *o))
    }

    pub fn contains_ids(&self, s: TermId, p: TermId, o: TermId) -> bool {
        self.spo.contains(&(s.0, p.0, o.0))
    }

    fn triple(&self, (s, p, o): Key) -> Triple {
        Triple {
            subject: self.terms[s as usize].clone(),
            predicate: self.terms[p as usize].as_iri().expect("predicate is an IRI").clone(),
            object: self.terms[o as usize].clone(),
        }
    }

    /// All triples in index order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().map(|&k| self.triple(k))
    }

    /// All triples as id tuples in SPO order.
    pub fn iter_ids(&self) -> impl Iterator<Item = (TermId, TermId, TermId)> + '_ {
        self.spo.iter().map(|&(s, p, o)| (TermId(s), TermId(p), TermId(o)))
    }

    /// Id-level pattern match. Unbound positions are `None`.
    pub fn match_ids(
        &self,
        s: Option<TermId>,
        p: Option<TermId>,
        o: Option<TermId>,
    ) -> Box<dyn Iterator<Item = (TermId, TermId, TermId)> + '_> {
        let w = |(s, p, o): Key| (TermId(s), TermId(p), TermId(o));
        match (s, p, o) {
            (Some(s), Some(p), Some(o)) => {
                Box::new(self.spo.get(&(s.0, p.0, o.0)).into_iter().map(move |&k| w(k)))
            }
            (Some(s), Some(p), None) => Box::new(range3(&self.spo, s.0, Some(p.0)).map(move |&k| w(k))),
            (Some(s), None, None) => Box::new(range3(&self.spo, s.0, None).map(move |&k| w(k))),
            (None, Some(p), Some(o)) => {
                Box::new(range3(&self.pos, p.0, Some(o.0)).map(move |&(p, o, s)| w((s, p, o))))
            }
            (None, Some(p), None) => Box::new(range3(&self.pos, p.0, None).map(move |&(p, o, s)| w((s, p, o)))),
            (Some(s), None, Some(o)) => {
                Box::new(range3(&self.osp, o.0, Some(s.0)).map(move |&(o, s, p)| w((s, p, o))))
            }
            (None, None, Some(o)) => Box::new(range3(&self.osp, o.0, None).map(move |&(o, s, p)| w((s, p, o)))),
            (None, None, None) => Box::new(self.spo.iter().map(move |&k| w(k))),
        }
    }

    /// Term-level pattern match. A bound term absent from the graph yields
    /// nothing.
    pub fn match_pattern(&self, s: Option<&Term>, p: Option<&Term>, o: Option<&Term>) -> Vec<Triple> {
        let look = |t: Option<&Term>| match t {
            None => Ok(None),
            Some(t) => self.id(t).map(Some).ok_or(()),
        };
        let (Ok(s), Ok(p), Ok(o)) = (look(s), look(p), look(o)) else {
            return Vec::new();
        };
        self.match_ids(s, p, o).map(|(s, p, o)| self.triple((s.0, p.0, o.0))).collect()
    }

    /// Like [`Graph::match_pattern`] but ordered by N-Triples rendering.
    pub fn match_sorted(&self, s: Option<&Term>, p: Option<&Term>, o: Option<&Term>) -> Vec<Triple> {
        let mut v: Vec<(String, Triple)> = self
            .match_pattern(s, p, o)
            .into_iter()
            .map(|t| (t.to_ntriples(), t))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, t)| t).collect()
    }

    pub fn objects_ids(&self, s: TermId, p: TermId) -> impl Iterator<Item = TermId> + '_ {
        range3(&self.spo, s.0, Some(p.0)).map(|&(_, _, o)| TermId(o))
    }

    pub fn subjects_ids(&self, p: TermId, o: TermId) -> impl Iterator<Item = TermId> + '_ {
        range3(&self.pos, p.0, Some(o.0)).map(|&(_, _, s)| TermId(s))
    }

    /// Objects of `(s, p, ?)`.
    pub fn objects(&self, s: &Term, p: &str) -> Vec<Term> {
        match (self.id(s), self.iri_id(p)) {
            (Some(s), Some(p)) => self.objects_ids(s, p).map(|o| self.term(o).clone()).collect(),
            _ => Vec::new(),
        }
    }

    /// Subjects of `(?, p, o)`.
    pub fn subjects(&self, p: &str, o: &Term) -> Vec<Term> {
        match (self.iri_id(p), self.id(o)) {
            (Some(p), Some(o)) => self.subjects_ids(p, o).map(|s| self.term(s).clone()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn object(&self, s: &Term, p: &str) -> Option<Term> {
        let (s, p) = (self.id(s)?, self.iri_id(p)?);
        self.objects_ids(s, p).next().map(|o| self.term(o).clone())
    }

    pub fn has(&self, s: &Term, p: &str, o: &Term) -> bool {
        match (self.id(s), self.iri_id(p), self.id(o)) {
            (Some(s), Some(p), Some(o)) => self.contains_ids(s, p, o),
            _ => false,
        }
    }

    /// Distinct subjects having at least one value for `p`, in id order.
    pub fn subjects_with(&self, p: &str) -> Vec<Term> {
        let Some(p) = self.iri_id(p) else {
            return Vec::new();
        };
        let set: BTreeSet<u32> = range3(&self.pos, p.0, None).map(|&(_, _, s)| s).collect();
        set.into_iter().map(|s| self.terms[s as usize].clone()).collect()
    }

    /// Distinct objects of `p`, in id order.
    pub fn objects_of(&self, p: &str) -> Vec<Term> {
        let Some(p) = self.iri_id(p) else {
            return Vec::new();
        };
        let mut seen = BTreeSet::new();
        range3(&self.pos, p.0, None)
            .filter(|&&(_, o, _)| seen.insert(o))
            .map(|&(_, o, _)| self.terms[o as usize].clone())
            .collect()
    }

    /// Distinct predicates used in the graph.
    pub fn predicates(&self) -> Vec<TermId> {
        let mut out = Vec::new();
        let mut cur: Option<u32> = None;
        for &(p, _, _) in &self.pos {
            if cur != Some(p) {
                out.push(TermId(p));
                cur = Some(p);
            }
        }
        out
    }

    /// Distinct subjects in the graph.
    pub fn subject_ids(&self) -> Vec<TermId> {
        let mut out = Vec::new();
        let mut cur: Option<u32> = None;
        for &(s, _, _) in &self.spo {
            if cur != Some(s) {
                out.push(TermId(s));
                cur = Some(s);
            }
        }
        out
    }

    /// True if the term occurs in subject or object position.
    pub fn mentions(&self, t: &Term) -> bool {
        let Some(id) = self.id(t) else {
            return false;
        };
        range3(&self.spo, id.0, None).next().is_some()
            || range3(&self.osp, id.0, None).next().is_some()
            || range3(&self.pos, id.0, None).next().is_some()
    }

    /// A blank node label not yet used in this graph.
    pub fn fresh_blank(&mut self) -> BlankNode {
        loop {
            self.fresh += 1;
            let b = BlankNode::new(format!("g{}", self.fresh));
            if !self.ids.contains_key(&Term::BlankNode(b.clone())) {
                return b;
            }
        }
    }

    /// Adds every triple of `other`, giving its blank nodes fresh labels so
    /// they cannot collide with blank nodes already present.
    pub fn merge(&mut self, other: &Graph) -> usize {
        let mut map: HashMap<u32, Term> = HashMap::new();
        let mut added = 0;
        for &(s, p, o) in &other.spo {
            let s = self.rename(other, s, &mut map);
            let o = self.rename(other, o, &mut map);
            let p = Triple {
                subject: s,
                predicate: other.terms[p as usize].as_iri().unwrap().clone(),
                object: o,
            };
            added += usize::from(self.insert(&p));
        }
        for (k, v) in &other.prefixes {
            self.prefixes.entry(k.clone()).or_insert_with(|| v.clone());
        }
        added
    }

    /// Adds every triple of `other`, relabelling each blank node `x` as
    /// `{scope}x`. Merging the same graph twice with the same scope is a no-op.
    pub fn merge_scoped(&mut self, other: &Graph, scope: &str) -> usize {
        let relabel = |t: &Term| match t {
            Term::BlankNode(b) => Term::blank(&format!("{scope}{}", b.label())),
            t => t.clone(),
        };
        let mut added = 0;
        for t in other.iter() {
            let t = Triple {
                subject: relabel(&t.subject),
                predicate: t.predicate,
                object: relabel(&t.object),
            };
            added += usize::from(self.insert(&t));
        }
        for (k, v) in &other.prefixes {
            self.prefixes.entry(k.clone()).or_insert_with(|| v.clone());
        }
        added
    }

    fn rename(&mut self, other: &Graph, id: u32, map: &mut HashMap<u32, Term>) -> Term {
        let t = &other.terms[id as usize];
        if !t.is_blank() {
            return t.clone();
        }
        if let Some(r) = map.get(&id) {
            return r.clone();
        }
        let b = Term::BlankNode(self.fresh_blank());
        // reserve the label
        self.intern(&b);
        map.insert(id, b.clone());
        b
    }

    /// Triples as a set, for equality checks in tests.
    pub fn triple_set(&self) -> BTreeSet<Triple> {
        self.iter().collect()
    }

    /// Collects the members of an RDF list starting at `head`. Returns `None`
    /// for malformed or cyclic lists.
    pub fn list(&self, head: &Term) -> Option<Vec<Term>> {
        use crate::vocab::rdf;
        let mut out = Vec::new();
        let mut cur = head.clone();
        let mut seen = BTreeSet::new();
        loop {
            if cur.iri_str() == Some(rdf::NIL) {
                return Some(out);
            }
            if !seen.insert(cur.clone()) {
                return None;
            }
            let first = self.objects(&cur, rdf::FIRST);
            let rest = self.objects(&cur, rdf::REST);
            if first.len() != 1 || rest.len() != 1 {
                return None;
            }
            out.push(first[0].clone());
            cur = rest[0].clone();
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("triples", &self.len()).finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|t| other.contains(&t))
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        for t in iter {
            g.insert(&t);
        }
        g
    }
}
