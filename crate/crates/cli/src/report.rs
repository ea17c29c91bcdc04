//! Versioned JSON report envelope.

use serde_json::{json, Map, Value};
use std::time::Instant;

pub const SCHEMA_VERSION: &str = "1.0";

pub struct Report {
    command: &'static str,
    convention: &'static str,
    truncation: Value,
    input: Value,
    result: Map<String, Value>,
    verdicts: Map<String, Value>,
    started: Option<Instant>,
}

impl Report {
    pub fn new(command: &'static str, timing: bool) -> Self {
        Report {
            command,
            convention: "shifted-chain-map",
            truncation: Value::Null,
            input: Value::Null,
            result: Map::new(),
            verdicts: Map::new(),
            started: timing.then(Instant::now),
        }
    }

    pub fn convention(mut self, name: &'static str) -> Self {
        self.convention = name;
        self
    }

    pub fn truncation(mut self, p: Option<usize>, d: Option<u32>) -> Self {
        self.truncation = json!({ "P": p, "D": d });
        self
    }

    pub fn input(mut self, v: Value) -> Self {
        self.input = v;
        self
    }

    pub fn set(&mut self, key: &str, v: impl serde::Serialize) {
        self.result.insert(key.into(), serde_json::to_value(v).expect("report values serialise"));
    }

    pub fn verdict(&mut self, key: &str, v: impl serde::Serialize) {
        self.verdicts.insert(key.into(), serde_json::to_value(v).expect("report values serialise"));
    }

    /// Keys come out sorted, so equal inputs give byte-identical reports
    /// (unless timing was requested).
    pub fn render(self) -> String {
        let mut top = Map::new();
        top.insert("schema_version".into(), json!(SCHEMA_VERSION));
        top.insert("tool".into(), json!({ "name": "c2coh", "version": env!("CARGO_PKG_VERSION") }));
        top.insert("command".into(), json!(self.command));
        top.insert(
            "convention".into(),
            json!({
                "product": self.convention,
                "note": "shifted-chain-map products lift with d ξ̂ = (-1)^p ξ̂ d; composition of unshifted chain maps differs by (-1)^(pq)",
            }),
        );
        top.insert("truncation".into(), self.truncation);
        top.insert("input".into(), self.input);
        top.insert("result".into(), Value::Object(self.result));
        top.insert("verdicts".into(), Value::Object(self.verdicts));
        if let Some(t) = self.started {
            top.insert("timing_ms".into(), json!(t.elapsed().as_secs_f64() * 1000.0));
        }
        serde_json::to_string_pretty(&Value::Object(top)).expect("report serialises")
    }
}
