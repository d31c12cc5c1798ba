//! JSON description of the catalog.

use serde_json::{json, Value};

use crate::catalog::catalog;
use crate::instantiate::{render_template, Bindings};

/// One entry per template with its metadata and Turtle body.
pub fn catalog_manifest() -> Value {
    let entries: Vec<Value> = catalog()
        .iter()
        .map(|t| {
            let body = render_template(t, &Bindings::identity(t)).expect("identity bindings cover the template");
            json!({
                "id": t.id,
                "group": t.group,
                "dimension": t.dimension,
                "caption": t.caption,
                "artifact": t.artifact,
                "measure-kind": t.kind,
                "source": t.source,
                "enabled-by-default": t.enabled_by_default,
                "denominator": t.denominator,
                "placeholders": t.placeholders(),
                "variants": t.variants.iter().map(|v| v.name).collect::<Vec<_>>(),
                "turtle": body,
            })
        })
        .collect();
    Value::Array(entries)
}
