mod common;

use std::path::Path;

#[test]
fn core_suite_supported_cases_pass() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/w3c/core");
    let out = common::w3c::run_suite(&root);
    for (name, why) in &out.excluded {
        println!("excluded {name}: {why}");
    }
    for (name, why) in &out.failed {
        println!("FAILED {name}: {why}");
    }
    println!(
        "passed {} of {} supported, {} excluded",
        out.passed.len(),
        out.supported(),
        out.excluded.len()
    );
    assert!(out.failed.is_empty(), "{} failures", out.failed.len());
    assert!(out.supported() >= 80, "only {} supported cases", out.supported());
}
