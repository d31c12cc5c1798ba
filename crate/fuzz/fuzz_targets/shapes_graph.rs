#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(g) = dqa_rdf::parse_turtle(data, None) else { return };
    if let Ok(shapes) = dqa_shacl::parse_shapes(&g) {
        let _ = dqa_shacl::validate(&g, &shapes);
        let _ = dqa_shacl::shapes_to_graph(&shapes);
    }
});
