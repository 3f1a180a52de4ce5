use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::Serialize;

/// Outcome of one subcommand. Field order and map insertion order are fixed,
/// so identical requests serialize to identical bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subcommand: String,
    pub ring: String,
    pub verdict: String,
    pub witness: IndexMap<String, String>,
    pub bound: IndexMap<String, u64>,
    pub certificate_kind: Option<String>,
    pub transcript: Vec<String>,
    pub citations: Vec<String>,
}

impl Report {
    pub fn new(subcommand: &str, ring: impl Into<String>) -> Report {
        Report {
            subcommand: subcommand.to_string(),
            ring: ring.into(),
            verdict: String::new(),
            witness: IndexMap::new(),
            bound: IndexMap::new(),
            certificate_kind: None,
            transcript: Vec::new(),
            citations: Vec::new(),
        }
    }

    pub fn verdict(&mut self, v: impl Into<String>) -> &mut Self {
        self.verdict = v.into();
        self
    }

    pub fn witness(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }

    pub fn bound(&mut self, key: &str, value: u64) -> &mut Self {
        self.bound.insert(key.to_string(), value);
        self
    }

    pub fn step(&mut self, line: impl Into<String>) -> &mut Self {
        self.transcript.push(line.into());
        self
    }

    pub fn steps(&mut self, lines: impl IntoIterator<Item = String>) -> &mut Self {
        self.transcript.extend(lines);
        self
    }

    pub fn cite(&mut self, names: &[&str]) -> &mut Self {
        for n in names {
            if !self.citations.iter().any(|c| c == n) {
                self.citations.push(n.to_string());
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "subcommand: {}", self.subcommand);
        let _ = writeln!(s, "ring: {}", self.ring);
        let _ = writeln!(s, "verdict: {}", self.verdict);
        if let Some(k) = &self.certificate_kind {
            let _ = writeln!(s, "certificate: {k}");
        }
        if !self.witness.is_empty() {
            let _ = writeln!(s, "witness:");
            for (k, v) in &self.witness {
                let _ = writeln!(s, "  {k} = {v}");
            }
        }
        if !self.bound.is_empty() {
            let parts: Vec<String> = self.bound.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(s, "bounds: {}", parts.join(", "));
        }
        if !self.transcript.is_empty() {
            let _ = writeln!(s, "transcript:");
            for (i, line) in self.transcript.iter().enumerate() {
                let _ = writeln!(s, "  {}. {line}", i + 1);
            }
        }
        if !self.citations.is_empty() {
            let _ = writeln!(s, "citations: {}", self.citations.join("; "));
        }
        s
    }
}
