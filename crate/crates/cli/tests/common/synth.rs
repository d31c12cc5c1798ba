//! Synthetic graphs for scaling runs: typed entities over a generated
//! ontology with enough classes and properties for several hundred shapes.

#![allow(dead_code)]

use dqa_rdf::{Graph, Term};

const EX: &str = "http://example.org/";
const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
const OWL: &str = "http://www.w3.org/2002/07/owl#";
const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";

pub const CLASSES: usize = 50;
pub const PROPERTIES: usize = 50;

fn ex(local: String) -> Term {
    Term::iri(&format!("{EX}{local}"))
}

/// Ontology: classes C0.. and properties p0.., half datatype, half object,
/// every fifth functional, each with a domain and a range.
pub fn ontology() -> Graph {
    let mut g = Graph::new();
    let owl = |l: &str| Term::iri(&format!("{OWL}{l}"));
    for c in 0..CLASSES {
        g.add(ex(format!("C{c}")), RDF_TYPE, owl("Class"));
        g.add(ex(format!("C{c}")), &format!("{RDFS}label"), Term::string(&format!("class {c}")));
    }
    for p in 0..PROPERTIES {
        let prop = ex(format!("p{p}"));
        let datatype = p % 2 == 0;
        g.add(prop.clone(), RDF_TYPE, owl(if datatype { "DatatypeProperty" } else { "ObjectProperty" }));
        if p % 5 == 0 {
            g.add(prop.clone(), RDF_TYPE, owl("FunctionalProperty"));
        }
        g.add(prop.clone(), &format!("{RDFS}domain"), ex(format!("C{}", p % CLASSES)));
        let range = if datatype { Term::iri(XSD_STRING) } else { ex(format!("C{}", (p + 1) % CLASSES)) };
        g.add(prop, &format!("{RDFS}range"), range);
    }
    g
}

/// At least `triples` data triples: entities with a type, a label, an
/// occasional sameAs and a handful of property values.
pub fn data(triples: usize) -> Graph {
    let per_entity = 8;
    let n = (triples * 3).div_ceil(22).max(1);
    let mut g = Graph::new();
    for i in 0.. {
        if g.len() >= triples {
            break;
        }
        let e = if i % 97 == 0 { ex(format!("e#{i}")) } else { ex(format!("e/{i}")) };
        let class = i % CLASSES;
        g.add(e.clone(), RDF_TYPE, ex(format!("C{class}")));
        g.add(e.clone(), &format!("{RDFS}label"), Term::string(&format!("entity {i}")));
        if i % 3 == 0 {
            g.add(e.clone(), &format!("{OWL}sameAs"), Term::iri(&format!("http://other.org/{i}")));
        }
        let mut k = 0;
        let mut j = 0;
        while k < per_entity - 3 {
            let p = (class + j * 7) % PROPERTIES;
            j += 1;
            let obj = if p.is_multiple_of(2) {
                Term::string(&format!("v{i}-{p}"))
            } else {
                ex(format!("e/{}", (i * 31 + p) % n))
            };
            g.add(e.clone(), &format!("{EX}p{p}"), obj);
            k += 1;
        }
    }
    g
}
