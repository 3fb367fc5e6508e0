//! The shipped JSON schema for every document written to standard output.

use std::sync::OnceLock;

use serde_json::Value;

pub const SCHEMA: &str = include_str!("../data/response.schema.json");

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let schema: Value = serde_json::from_str(SCHEMA).expect("shipped schema is JSON");
        jsonschema::validator_for(&schema).expect("shipped schema compiles")
    })
}

pub fn validate(doc: &Value) -> Result<(), Vec<String>> {
    let errors: Vec<String> = validator()
        .iter_errors(doc)
        .map(|e| format!("{}: {e}", e.instance_path()))
        .collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

pub fn validate_text(text: &str) -> Result<(), Vec<String>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| vec![e.to_string()])?;
    validate(&doc)
}
