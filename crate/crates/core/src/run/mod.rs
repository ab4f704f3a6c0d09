//! Batch orchestration: configuration, reports and one function per
//! subcommand of the `sullivan` binary.
//!
//! Every command returns a [`Report`]. A report that did not pass maps to
//! exit code 3; configuration and input problems surface as [`RunError`]
//! before any mathematics runs.

mod commands;
mod config;
pub mod props;

use serde::{Deserialize, Serialize};

pub use commands::{
    cmd_analyze, cmd_aut, cmd_build, cmd_endos, cmd_realize, cmd_verify_all, cmd_verify_arith, load_model,
    resolve_graph, AnalyzeCheck, BuildTarget,
};
pub use config::{Check, RunConfig, DESK_MAX_K, DESK_MAX_N_ARITH, DESK_MAX_N_SYMBOLIC, DESK_MAX_VERTICES};

use crate::Error;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Io(String),
    #[error("check failed: {0}")]
    Math(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 1,
            RunError::Io(_) => 2,
            RunError::Math(_) => 3,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::InvalidGroup(_) => RunError::Config(e.to_string()),
            Error::Io(_) | Error::Json(_) | Error::Parse(_) | Error::InvalidGraph(_) => RunError::Io(e.to_string()),
            _ => RunError::Math(e.to_string()),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e.to_string())
    }
}

/// One named check with its verdict and machine-readable detail.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    #[serde(default)]
    pub detail: serde_json::Value,
}

impl Section {
    pub fn new(name: impl Into<String>, passed: bool, summary: impl Into<String>, detail: serde_json::Value) -> Self {
        Section { name: name.into(), passed, summary: summary.into(), detail }
    }

    /// A section for a check that raised instead of returning a verdict.
    pub fn failed(name: impl Into<String>, err: &impl std::fmt::Display) -> Self {
        Section::new(name, false, err.to_string(), serde_json::Value::Null)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: impl Into<String>, sections: Vec<Section>) -> Self {
        let passed = sections.iter().all(|s| s.passed);
        Report { command: command.into(), passed, sections }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            3
        }
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `PASS`/`FAIL` line per section.
    pub fn summary_lines(&self) -> Vec<String> {
        self.sections
            .iter()
            .map(|s| format!("{} {}: {}", if s.passed { "PASS" } else { "FAIL" }, s.name, s.summary))
            .collect()
    }
}
