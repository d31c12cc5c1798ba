#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(g) = dqa_rdf::parse_turtle(data, Some("http://example.org/base/")) {
        // Whatever parses must survive a write/read round trip.
        let again = dqa_rdf::parse_turtle(&dqa_rdf::write_turtle(&g), None).expect("written Turtle parses");
        assert_eq!(g.len(), again.len());
    }
});
