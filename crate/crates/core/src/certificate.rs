//! Pass/fail certificates emitted by the comparison checks.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: impl Into<String>, content: &[u8]) -> Self {
        Self { name: name.into(), sha256: hex::encode(Sha256::digest(content)) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub label: String,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<CountRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<Check>,
    pub tables: Vec<CountTable>,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
    pub wall_clock_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Certificate {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            tables: Vec::new(),
            counterexample: None,
            notes: Vec::new(),
            wall_clock_ms: 0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    /// Records a failed check together with the witness that broke it.
    pub fn fail(&mut self, name: impl Into<String>, counterexample: impl Into<String>) {
        let witness = counterexample.into();
        self.checks.push(Check { name: name.into(), passed: false, detail: witness.clone() });
        if self.counterexample.is_none() {
            self.counterexample = Some(witness);
        }
    }

    pub fn table(&mut self, title: impl Into<String>, columns: &[&str], rows: Vec<CountRow>) {
        self.tables.push(CountTable {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another certificate in, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: Certificate) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}: {}", c.name), ..c });
        }
        for t in other.tables {
            self.tables.push(CountTable { title: format!("{prefix}: {}", t.title), ..t });
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample.map(|c| format!("{prefix}: {c}"));
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.wall_clock_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => serde_json::to_string_pretty(self).expect("certificates serialize"),
            Format::Text => self.render_text(),
        }
    }

    pub fn from_structured(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::malformed("certificate", e.to_string()))
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.verdict(), self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "  input {} sha256:{}", input.name, input.sha256);
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "  [{mark}] {}", c.name);
            } else {
                let _ = writeln!(out, "  [{mark}] {}: {}", c.name, c.detail);
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "  {}", t.title);
            let label_width = t.rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max(1);
            let widths: Vec<usize> = t
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let vals = t.rows.iter().filter_map(|r| r.values.get(i)).map(|v| v.to_string().len()).max().unwrap_or(0);
                    vals.max(c.chars().count())
                })
                .collect();
            let mut header = format!("    {:label_width$}", "");
            for (c, w) in t.columns.iter().zip(&widths) {
                let _ = write!(header, "  {c:>w$}");
            }
            let _ = writeln!(out, "{}", header.trim_end());
            for r in &t.rows {
                let mut line = format!("    {:label_width$}", r.label);
                for (v, w) in r.values.iter().zip(&widths) {
                    let _ = write!(line, "  {v:>w$}");
                }
                let _ = writeln!(out, "{line}");
            }
        }
        if let Some(c) = &self.counterexample {
            let _ = writeln!(out, "  counterexample: {c}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        let _ = writeln!(out, "  wall clock: {} ms", self.wall_clock_ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(pass: bool) -> Certificate {
        let mut c = Certificate::new("check demo");
        c.inputs.push(InputDigest::of("fixture", b"{}"));
        c.check("counts agree", true, "");
        if !pass {
            c.fail("maps inverse", "1-cell (•,0)|φ");
        }
        c.table("cells per dimension", &["left", "right"], vec![CountRow { label: "0".into(), values: vec![2, 2] }]);
        c
    }

    #[test]
    fn text_rendering() {
        let text = sample(true).render(Format::Text);
        assert!(text.starts_with("PASS check demo"));
        assert!(text.contains("left  right"));
        let fail = sample(false).render(Format::Text);
        assert!(fail.starts_with("FAIL"));
        assert!(fail.contains("counterexample: 1-cell (•,0)|φ"));
    }

    #[test]
    fn structured_round_trip() {
        for pass in [true, false] {
            let c = sample(pass);
            assert_eq!(Certificate::from_structured(&c.render(Format::Structured)).unwrap(), c);
        }
        assert!(Certificate::from_structured("{").is_err());
    }

    #[test]
    fn empty_certificate_does_not_pass() {
        assert!(!Certificate::new("nothing").passed());
        assert_eq!(
            InputDigest::of("x", b"abc").sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
