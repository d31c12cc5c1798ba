#![no_main]

use libfuzzer_sys::fuzz_target;

// First line names the datatype (local name in the XSD namespace), the rest is the lexical form.
fuzz_target!(|data: &str| {
    let (dt, lex) = data.split_once('\n').unwrap_or(("string", data));
    let dt = format!("http://www.w3.org/2001/XMLSchema#{dt}");
    let _ = dqa_rdf::xsd::lexical_ok(&dt, lex);
    let lit = dqa_rdf::Term::typed(lex, &dt);
    let _ = dqa_rdf::literal_is_ill_typed(&lit);
    let _ = dqa_rdf::compare_terms(&lit, &lit);
});
