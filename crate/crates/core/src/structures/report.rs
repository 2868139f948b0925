use std::fmt;

use crate::exterior::{
    basis_label, Alternating, DifferentialForm, MultiVectorField, PolyMatrix, Variance,
    VectorValuedTwoForm,
};
use crate::gencplx::GeneralizedSection;
use crate::ratpoly::Polynomial;

/// A tensor-valued defect; zero means the identity holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    Polynomial(Polynomial),
    MultiVector(MultiVectorField),
    Form(DifferentialForm),
    Matrix(PolyMatrix),
    VectorValued(VectorValuedTwoForm),
    Section(GeneralizedSection),
    /// Labelled sub-defects, e.g. one per generator or frame pair.
    Family(Vec<(String, Defect)>),
}

fn alternating_components<V: Variance>(
    a: &Alternating<V>,
    out: &mut Vec<(String, String)>,
    prefix: &str,
) {
    for (idx, c) in a.iter() {
        let key = if idx.is_empty() {
            "1".to_string()
        } else {
            basis_label::<V>(idx)
        };
        out.push((format!("{prefix}{key}"), c.to_string()));
    }
}

impl Defect {
    pub fn is_zero(&self) -> bool {
        match self {
            Defect::Polynomial(p) => p.is_zero(),
            Defect::MultiVector(m) => m.is_zero(),
            Defect::Form(f) => f.is_zero(),
            Defect::Matrix(m) => m.is_zero(),
            Defect::VectorValued(v) => v.is_zero(),
            Defect::Section(s) => s.is_zero(),
            Defect::Family(items) => items.iter().all(|(_, d)| d.is_zero()),
        }
    }

    /// Nonzero components as `(key, value)` pairs in canonical order.
    /// Coordinate labels are one-based.
    pub fn components(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        self.collect("", &mut out);
        out
    }

    fn collect(&self, prefix: &str, out: &mut Vec<(String, String)>) {
        match self {
            Defect::Polynomial(p) => {
                if !p.is_zero() {
                    out.push((format!("{prefix}1"), p.to_string()));
                }
            }
            Defect::MultiVector(m) => alternating_components(m, out, prefix),
            Defect::Form(f) => alternating_components(f, out, prefix),
            Defect::Matrix(m) => {
                for ((i, j), p) in m.nonzero_entries() {
                    out.push((format!("{prefix}({},{})", i + 1, j + 1), p.to_string()));
                }
            }
            Defect::VectorValued(v) => {
                for ((i, j), x) in v.iter() {
                    alternating_components(x, out, &format!("{prefix}({},{}):", i + 1, j + 1));
                }
            }
            Defect::Section(s) => {
                alternating_components(s.vector(), out, prefix);
                alternating_components(s.form(), out, prefix);
            }
            Defect::Family(items) => {
                for (label, d) in items {
                    d.collect(&format!("{prefix}{label}/"), out);
                }
            }
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps = self.components();
        if comps.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = comps.iter().map(|(k, v)| format!("[{k}] {v}")).collect();
        f.write_str(&parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectEntry {
    pub identity: String,
    pub defect: Defect,
    pub is_zero: bool,
}

/// Ordered list of identity checks; the verdict holds iff every defect is
/// zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DefectReport {
    entries: Vec<DefectEntry>,
}

impl DefectReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, identity: impl Into<String>, defect: Defect) {
        let is_zero = defect.is_zero();
        self.entries.push(DefectEntry {
            identity: identity.into(),
            defect,
            is_zero,
        });
    }

    pub fn extend(&mut self, other: DefectReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[DefectEntry] {
        &self.entries
    }

    pub fn entry(&self, identity: &str) -> Option<&DefectEntry> {
        self.entries.iter().find(|e| e.identity == identity)
    }

    pub fn verdict(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero)
    }
}

impl fmt::Display for DefectReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.is_zero { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", e.identity, e.defect)?;
        }
        write!(f, "verdict: {}", self.verdict())
    }
}

/// Two reports whose verdicts a theorem asserts to be equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedVerdict {
    pub left: DefectReport,
    pub right: DefectReport,
}

impl PairedVerdict {
    pub fn verdicts(&self) -> (bool, bool) {
        (self.left.verdict(), self.right.verdict())
    }

    pub fn agree(&self) -> bool {
        self.left.verdict() == self.right.verdict()
    }
}
