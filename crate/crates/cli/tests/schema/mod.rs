//! Minimal JSON-schema validator covering the subset used by the schemas in
//! docs/schemas: `type`, `required`, `properties`, and `enum`.

use serde_json::Value;

pub fn validate(schema: &Value, instance: &Value) -> Result<(), String> {
    validate_at(schema, instance, "$")
}

fn validate_at(schema: &Value, instance: &Value, path: &str) -> Result<(), String> {
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(instance) {
            return Err(format!("{path}: {instance} not in enum {options:?}"));
        }
    }
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => instance.is_object(),
            "array" => instance.is_array(),
            "string" => instance.is_string(),
            "number" => instance.is_number(),
            "integer" => instance.is_i64() || instance.is_u64(),
            "boolean" => instance.is_boolean(),
            "null" => instance.is_null(),
            other => return Err(format!("{path}: unsupported schema type `{other}`")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {instance}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        let obj = instance
            .as_object()
            .ok_or_else(|| format!("{path}: required on non-object"))?;
        for key in required {
            let key = key.as_str().expect("required entries are strings");
            if !obj.contains_key(key) {
                return Err(format!("{path}: missing required key `{key}`"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        if let Some(obj) = instance.as_object() {
            for (key, subschema) in props {
                if let Some(sub) = obj.get(key) {
                    validate_at(subschema, sub, &format!("{path}.{key}"))?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn accepts_and_rejects() {
        let schema = json!({
            "type": "object",
            "required": ["a", "b"],
            "properties": {
                "a": {"type": "integer"},
                "b": {"enum": ["x", "y"]},
            }
        });
        assert!(validate(&schema, &json!({"a": 3, "b": "x"})).is_ok());
        assert!(validate(&schema, &json!({"a": 3.5, "b": "x"})).is_err());
        assert!(validate(&schema, &json!({"a": 3, "b": "z"})).is_err());
        assert!(validate(&schema, &json!({"a": 3})).is_err());
    }
}
