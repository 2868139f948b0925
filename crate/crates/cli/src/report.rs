//! Report documents and their JSON and text serializations.

use std::fmt::Write as _;

use pqn_core::structures::DefectReport;
use serde::Serialize;

use crate::instance::{TensorDoc, SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentOut {
    pub component: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryOut {
    pub identity: String,
    pub is_zero: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionOut {
    pub name: String,
    pub verdict: bool,
    pub entries: Vec<EntryOut>,
}

impl SectionOut {
    pub fn from_report(name: &str, r: &DefectReport) -> Self {
        let entries = r
            .entries()
            .iter()
            .map(|e| EntryOut {
                identity: e.identity.clone(),
                is_zero: e.is_zero,
                components: e
                    .defect
                    .components()
                    .into_iter()
                    .map(|(component, value)| ComponentOut { component, value })
                    .collect(),
            })
            .collect();
        SectionOut {
            name: name.to_string(),
            verdict: r.verdict(),
            entries,
        }
    }
}

/// Output of a `compute` command: a tensor, or a section `X + ξ` of the
/// generalized tangent bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ResultOut {
    Tensor(TensorDoc),
    Section { vector: TensorDoc, form: TensorDoc },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<SectionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<ResultOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ReportDocument {
    pub fn new(command: &str, seed: u64, trials: u64) -> Self {
        ReportDocument {
            schema: SCHEMA,
            command: command.to_string(),
            seed,
            trials,
            verdict: None,
            sections: Vec::new(),
            result: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "seed: {}  trials: {}", self.seed, self.trials).unwrap();
        for s in &self.sections {
            writeln!(out, "[{}] verdict: {}", s.name, s.verdict).unwrap();
            for e in &s.entries {
                let mark = if e.is_zero { "ok  " } else { "FAIL" };
                writeln!(out, "  {mark} {}", e.identity).unwrap();
                for c in &e.components {
                    writeln!(out, "       {} = {}", c.component, c.value).unwrap();
                }
            }
        }
        if let Some(r) = &self.result {
            match r {
                ResultOut::Tensor(t) => write_tensor(&mut out, "result", t),
                ResultOut::Section { vector, form } => {
                    write_tensor(&mut out, "vector", vector);
                    write_tensor(&mut out, "form", form);
                }
            }
        }
        if let Some(v) = self.verdict {
            writeln!(out, "verdict: {v}").unwrap();
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "timing_ms: {t}").unwrap();
        }
        out
    }
}

fn write_tensor(out: &mut String, label: &str, t: &TensorDoc) {
    if t.components.is_empty() {
        writeln!(out, "{label}: 0").unwrap();
        return;
    }
    writeln!(out, "{label}:").unwrap();
    for c in &t.components {
        let idx: Vec<String> = c.indices.iter().map(|i| i.to_string()).collect();
        writeln!(out, "  ({}) {}", idx.join(","), c.value).unwrap();
    }
}
