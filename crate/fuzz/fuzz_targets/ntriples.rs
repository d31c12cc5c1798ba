#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(g) = dqa_rdf::parse_ntriples(data) {
        let again = dqa_rdf::parse_ntriples(&dqa_rdf::write_ntriples(&g)).expect("written N-Triples parse");
        assert_eq!(g.len(), again.len());
    }
});
