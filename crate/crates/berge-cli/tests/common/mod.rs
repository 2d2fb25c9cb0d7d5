//! Minimal JSON Schema validator covering exactly the keyword subset used by
//! report.schema.json: $ref, type, enum, required, properties,
//! additionalProperties (boolean), items, oneOf.

use serde_json::Value;

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference
        .strip_prefix("#/")
        .unwrap_or_else(|| panic!("unsupported $ref `{reference}`"));
    let mut cur = root;
    for part in path.split('/') {
        cur = cur
            .get(part)
            .unwrap_or_else(|| panic!("dangling $ref `{reference}`"));
    }
    cur
}

fn type_matches(name: &str, instance: &Value) -> bool {
    match name {
        "object" => instance.is_object(),
        "array" => instance.is_array(),
        "string" => instance.is_string(),
        "integer" => instance.is_i64() || instance.is_u64(),
        "number" => instance.is_number(),
        "boolean" => instance.is_boolean(),
        "null" => instance.is_null(),
        other => panic!("unsupported type `{other}`"),
    }
}

pub fn validate(root: &Value, schema: &Value, instance: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        return validate(root, resolve(root, reference), instance, path);
    }
    if let Some(one_of) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = one_of
            .iter()
            .filter(|branch| validate(root, branch, instance, path).is_ok())
            .count();
        if hits != 1 {
            return Err(format!(
                "{path}: matched {hits} oneOf branches, want exactly 1"
            ));
        }
        return Ok(());
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(instance) {
            return Err(format!("{path}: {instance} not in enum {allowed:?}"));
        }
        return Ok(());
    }
    if let Some(ty) = schema.get("type") {
        let names: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().filter_map(Value::as_str).collect(),
            other => panic!("unsupported type spec {other}"),
        };
        if !names.iter().any(|name| type_matches(name, instance)) {
            return Err(format!("{path}: expected type {names:?}, got {instance}"));
        }
    }
    if let Some(obj) = instance.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required property `{key}`"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        let additional = schema
            .get("additionalProperties")
            .and_then(Value::as_bool)
            .unwrap_or(true);
        for (key, value) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => validate(root, sub, value, &format!("{path}.{key}"))?,
                None if !additional => {
                    return Err(format!("{path}: unexpected property `{key}`"));
                }
                None => {}
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(list) = instance.as_array() {
            for (i, element) in list.iter().enumerate() {
                validate(root, items, element, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

/// Parses stdout as a report, validates it against the shipped schema, and
/// checks that it survives a serialize/parse round trip.
pub fn check_report(stdout: &[u8]) -> Value {
    let schema: Value = serde_json::from_str(include_str!("../../../../report.schema.json"))
        .expect("schema parses");
    let report: Value = serde_json::from_slice(stdout).expect("stdout is JSON");
    validate(&schema, &schema, &report, "$").expect("report validates against schema");
    let round: Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).expect("round trip");
    assert_eq!(round, report);
    report
}
