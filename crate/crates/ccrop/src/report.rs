//! Deterministic JSON reports. Object keys come out sorted because
//! `serde_json::Map` is ordered, so fixed inputs and seed give identical bytes.

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witness: Value,
    pub tolerance: Option<f64>,
}

impl CheckResult {
    pub fn exact(name: impl Into<String>, ok: bool, witness: Value) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::from_bool(ok),
            witness,
            tolerance: None,
        }
    }

    pub fn toleranced(name: impl Into<String>, ok: bool, witness: Value, tol: f64) -> Self {
        CheckResult {
            tolerance: Some(tol),
            ..CheckResult::exact(name, ok, witness)
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status.as_str(),
            "witness": self.witness,
            "tolerance": self.tolerance,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<CheckResult>,
    pub seed: u64,
    pub verdict: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value, seed: u64) -> Self {
        Report {
            command: command.into(),
            inputs,
            results: Vec::new(),
            seed,
            verdict: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.results.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if self.results.iter().any(|r| r.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    /// 0 when everything passed, 1 on any failure, 2 if something is only
    /// inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
            "seed": self.seed,
            "status": self.status().as_str(),
            "version": env!("CARGO_PKG_VERSION"),
        });
        if let Some(verdict) = &self.verdict {
            v["verdict"] = json!(verdict);
        }
        v
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report values serialize");
        s.push('\n');
        s
    }
}
