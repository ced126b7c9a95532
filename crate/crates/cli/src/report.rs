use std::time::Duration;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Result of one run. Machine output is deterministic: sorted keys, no timing.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub human: String,
    pub elapsed: Duration,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let doc = json!({
                    "command": self.command,
                    "input_digest": self.input_digest,
                    "result": self.result,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Human => {
                let mut s = self.human.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s.push_str(&format!("time: {:.3} ms\n", self.elapsed.as_secs_f64() * 1e3));
                s
            }
        }
    }
}

/// Hex SHA-256.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
