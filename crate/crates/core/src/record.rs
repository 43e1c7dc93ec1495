//! Line-delimited JSON result records written by the command-line tool.

use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::error::Error;

pub const SCHEMA: &str = "convdom.record/1";

/// Field holding wall-clock data; ignored when comparing records.
pub const TIMING_FIELD: &str = "timing";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputDigest {
    pub sha256: String,
    pub bytes: usize,
}

impl InputDigest {
    pub fn of(data: &[u8]) -> Self {
        InputDigest {
            sha256: hex::encode(Sha256::digest(data)),
            bytes: data.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        let (kind, detail) = match e {
            Error::InvalidVertex { .. } => ("invalid_vertex", None),
            Error::Precondition(_) => ("precondition", None),
            Error::NoPath(..) => ("no_path", None),
            Error::WrongClass { witness, .. } => (
                "wrong_class",
                witness
                    .as_ref()
                    .map(|w| serde_json::json!({ "forbidden": w })),
            ),
            Error::SizeGuard { n, bound } => (
                "size_guard",
                Some(serde_json::json!({ "n": n, "bound": bound })),
            ),
            Error::ResourceExhausted { cap } => (
                "resource_exhausted",
                Some(serde_json::json!({ "cap": cap })),
            ),
            Error::Parse { line, column, .. } => (
                "parse",
                Some(serde_json::json!({ "line": line, "column": column })),
            ),
            Error::Internal(_) => ("internal", None),
        };
        ErrorReport {
            kind,
            message: e.to_string(),
            exit_code: e.exit_code(),
            detail,
        }
    }
}

/// One output line: what ran, on which input, and what came out.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRecord {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    pub options: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub timing: Timing,
}

impl ResultRecord {
    pub fn new(command: impl Into<String>, input: Option<InputDigest>, options: Value) -> Self {
        ResultRecord {
            schema: SCHEMA,
            command: command.into(),
            input,
            options,
            result: None,
            error: None,
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn with_result(mut self, result: impl Serialize) -> Self {
        self.result = Some(serde_json::to_value(result).expect("result values serialize"));
        self
    }

    pub fn with_error(mut self, e: &Error) -> Self {
        self.error = Some(e.into());
        self
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.timing.elapsed_ms = d.as_secs_f64() * 1e3;
        self
    }

    /// Single-line JSON, without a trailing newline.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// The record line with its timing field removed, for determinism checks.
pub fn without_timing(line: &str) -> serde_json::Result<String> {
    let mut v: Map<String, Value> = serde_json::from_str(line)?;
    v.remove(TIMING_FIELD);
    serde_json::to_string(&v)
}
