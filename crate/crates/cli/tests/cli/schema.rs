//! The draft-07 keywords the shipped schemas use, and nothing else: an
//! unknown keyword is reported as an error rather than ignored.

use regex::Regex;
use serde_json::Value;

const ANNOTATIONS: [&str; 3] = ["$schema", "title", "description"];

pub fn validate(schema: &Value, v: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    check(schema, v, "$", &mut errors);
    errors
}

fn type_ok(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        _ => false,
    }
}

fn check(schema: &Value, v: &Value, at: &str, errors: &mut Vec<String>) {
    let Some(map) = schema.as_object() else {
        errors.push(format!("{at}: schema is not an object"));
        return;
    };
    for (key, s) in map {
        match key.as_str() {
            k if ANNOTATIONS.contains(&k) => {}
            "type" => {
                let ok = match s {
                    Value::String(t) => type_ok(t, v),
                    Value::Array(ts) => ts.iter().any(|t| type_ok(t.as_str().unwrap_or(""), v)),
                    _ => false,
                };
                if !ok {
                    errors.push(format!("{at}: expected type {s}, found {v}"));
                }
            }
            "enum" => {
                if !s.as_array().is_some_and(|opts| opts.contains(v)) {
                    errors.push(format!("{at}: {v} not in {s}"));
                }
            }
            "required" => {
                if let Some(obj) = v.as_object() {
                    for r in s.as_array().into_iter().flatten().filter_map(Value::as_str) {
                        if !obj.contains_key(r) {
                            errors.push(format!("{at}: missing `{r}`"));
                        }
                    }
                }
            }
            "properties" => {
                if let (Some(obj), Some(props)) = (v.as_object(), s.as_object()) {
                    for (k, sub) in props {
                        if let Some(x) = obj.get(k) {
                            check(sub, x, &format!("{at}.{k}"), errors);
                        }
                    }
                }
            }
            "additionalProperties" => {
                let allowed = map.get("properties").and_then(Value::as_object);
                if let (Some(obj), Some(false)) = (v.as_object(), s.as_bool()) {
                    for k in obj.keys() {
                        if !allowed.is_some_and(|p| p.contains_key(k)) {
                            errors.push(format!("{at}: unexpected `{k}`"));
                        }
                    }
                }
            }
            "items" => {
                if let Some(arr) = v.as_array() {
                    match s {
                        Value::Array(tuple) => {
                            for (i, (sub, x)) in tuple.iter().zip(arr).enumerate() {
                                check(sub, x, &format!("{at}[{i}]"), errors);
                            }
                        }
                        sub => {
                            for (i, x) in arr.iter().enumerate() {
                                check(sub, x, &format!("{at}[{i}]"), errors);
                            }
                        }
                    }
                }
            }
            "minItems" | "maxItems" => {
                if let (Some(arr), Some(bound)) = (v.as_array(), s.as_u64()) {
                    let len = arr.len() as u64;
                    if (key == "minItems" && len < bound) || (key == "maxItems" && len > bound) {
                        errors.push(format!("{at}: {len} items violates {key} {bound}"));
                    }
                }
            }
            "minimum" | "maximum" | "exclusiveMinimum" => {
                if let (Some(x), Some(b)) = (v.as_f64(), s.as_f64()) {
                    let ok = match key.as_str() {
                        "minimum" => x >= b,
                        "maximum" => x <= b,
                        _ => x > b,
                    };
                    if !ok {
                        errors.push(format!("{at}: {x} violates {key} {b}"));
                    }
                }
            }
            "pattern" => {
                if let (Some(text), Some(p)) = (v.as_str(), s.as_str()) {
                    if !Regex::new(p).expect("valid pattern").is_match(text) {
                        errors.push(format!("{at}: `{text}` does not match {p}"));
                    }
                }
            }
            "oneOf" => {
                let matching = s.as_array().into_iter().flatten().filter(|sub| validate(sub, v).is_empty()).count();
                if matching != 1 {
                    errors.push(format!("{at}: {matching} oneOf branches match"));
                }
            }
            other => errors.push(format!("{at}: unsupported keyword `{other}`")),
        }
    }
}

#[test]
fn checker_rejects_what_it_should() {
    let s: Value = serde_json::json!({
        "type": "object",
        "required": ["a"],
        "properties": {"a": {"oneOf": [{"type": "string", "pattern": "^[0-9]+$"}, {"type": "null"}]}},
        "additionalProperties": false
    });
    assert!(validate(&s, &serde_json::json!({"a": "12"})).is_empty());
    assert!(validate(&s, &serde_json::json!({"a": null})).is_empty());
    assert_eq!(validate(&s, &serde_json::json!({"a": "x"})).len(), 1);
    assert_eq!(validate(&s, &serde_json::json!({"b": 1})).len(), 2);
    assert_eq!(validate(&serde_json::json!({"if": true}), &Value::Null).len(), 1);
}
