use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use blocktilt_core::rational::format_rational;
use blocktilt_core::Weight;

use crate::commands::Failure;

pub const SCHEMA_VERSION: &str = "1";

pub fn envelope(command: &str, body: Map<String, Value>) -> Value {
    let mut out = Map::new();
    out.insert("schema_version".into(), SCHEMA_VERSION.into());
    out.insert("command".into(), command.into());
    out.extend(body);
    Value::Object(out)
}

pub fn error_envelope(command: &str, failure: &Failure) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": failure.kind(), "message": failure.message() },
    })
}

/// Integers are emitted as JSON numbers of any size.
pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integers are JSON numbers"))
}

pub fn weight(w: &Weight, len: usize) -> Value {
    let len = len.max(w.support()).max(1);
    Value::Array(
        (1..=len)
            .map(|i| Value::String(format_rational(&w.coord(i))))
            .collect(),
    )
}

pub fn word(w: &[usize]) -> Value {
    Value::Array(w.iter().map(|&k| k.into()).collect())
}
