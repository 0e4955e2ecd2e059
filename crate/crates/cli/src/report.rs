//! The report record every subcommand emits: a command echo, the parsed
//! input indices, and the payload of the subcommand. JSON output serializes
//! this struct directly, so parsing the emitted JSON and re-serializing it
//! is byte-identical.

use immaculata::json::ElementJson;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<ElementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descents: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<String>>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: String, input: Vec<String>) -> Self {
        Report {
            command,
            input,
            rule: None,
            output: None,
            tableaux: None,
            descents: None,
            count: None,
            suite: None,
            max_n: None,
            instances: None,
            failures: None,
            elapsed_ms: 0,
        }
    }
}
