use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// Everything a subcommand prints. Rendering is a pure function of the
/// fields, so identical inputs and flags give byte-identical output.
pub struct Report {
    command: &'static str,
    inputs: Vec<(String, String)>,
    config: Vec<(&'static str, Value)>,
    lines: Vec<String>,
    data: Map<String, Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Vec::new(),
            config: Vec::new(),
            lines: Vec::new(),
            data: Map::new(),
            status: Status::Pass,
        }
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push((path.display().to_string(), hex::encode(Sha256::digest(bytes))));
    }

    pub fn config(&mut self, key: &'static str, value: impl Into<Value>) {
        self.config.push((key, value.into()));
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn fail(&mut self) {
        self.status = Status::Fail;
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn status_name(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("lya {} {}\n", env!("CARGO_PKG_VERSION"), self.command);
        for (path, hash) in &self.inputs {
            out.push_str(&format!("input {path} sha256:{hash}\n"));
        }
        let cfg: Vec<String> = self
            .config
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        out.push_str(&format!("config {}\n", cfg.join(" ")));
        for l in &self.lines {
            out.push_str(l);
            if !l.ends_with('\n') {
                out.push('\n');
            }
        }
        out.push_str(&format!("status: {}\n", self.status_name()));
        out
    }

    pub fn render_json(&self) -> String {
        let inputs: Vec<Value> = self.inputs.iter().map(|(p, h)| json!({ "path": p, "sha256": h })).collect();
        let config: Map<String, Value> = self.config.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let v = json!({
            "lya_version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs": inputs,
            "config": config,
            "result": Value::Object(self.data.clone()),
            "status": self.status_name(),
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }
}
