//! Instance documents: a dimension and a set of named polynomial tensors.
//!
//! ```json
//! {"schema": 1, "n": 2,
//!  "tensors": {"pi": {"kind": "bivector",
//!                     "components": [{"indices": [1, 2], "value": "1"}]}}}
//! ```
//!
//! Indices are one-based. Alternating kinds take strictly increasing index
//! tuples; an endomorphism component `[i, j]` is the matrix entry `N^i_j`.

use std::collections::BTreeMap;
use std::fmt;

use pqn_core::exterior::{DifferentialForm, EndomorphismField, MultiVectorField};
use pqn_core::Polynomial;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceError(pub String);

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InstanceError {}

fn err<T>(msg: impl Into<String>) -> Result<T, InstanceError> {
    Err(InstanceError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Bivector,
    Form,
    Endomorphism,
    Vector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CourantKind {
    Standard,
    Deformed,
    Double,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default)]
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub courant: Option<CourantKind>,
    #[serde(default)]
    pub tensors: BTreeMap<String, TensorDoc>,
}

fn default_schema() -> u32 {
    SCHEMA
}

/// A validated tensor with every coefficient in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tensor {
    Multivector { kind: Kind, field: MultiVectorField },
    Form(DifferentialForm),
    Endomorphism(EndomorphismField),
}

/// Tensor names understood by the commands, with the kinds and degrees
/// they accept (`None` for any degree).
const NAMES: &[(&str, &[Kind], Option<usize>)] = &[
    ("pi", &[Kind::Bivector], Some(2)),
    ("N", &[Kind::Endomorphism], None),
    ("phi", &[Kind::Form], Some(3)),
    ("sigma", &[Kind::Form], Some(2)),
    ("omega", &[Kind::Form], Some(2)),
    ("alpha", &[Kind::Form], None),
    ("beta", &[Kind::Form], None),
    ("P", &[Kind::Bivector, Kind::Vector], None),
    ("Q", &[Kind::Bivector, Kind::Vector], None),
    ("X", &[Kind::Vector], Some(1)),
    ("Y", &[Kind::Vector], Some(1)),
    ("xi", &[Kind::Form], Some(1)),
    ("eta", &[Kind::Form], Some(1)),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub n: usize,
    pub courant: Option<CourantKind>,
    pub tensors: BTreeMap<String, Tensor>,
}

impl Instance {
    pub fn get(&self, name: &str) -> Option<&Tensor> {
        self.tensors.get(name)
    }

    pub fn require(&self, name: &str) -> Result<&Tensor, InstanceError> {
        self.get(name)
            .ok_or_else(|| InstanceError(format!("missing tensor '{name}' for this command")))
    }

    pub fn multivector(&self, name: &str) -> Result<&MultiVectorField, InstanceError> {
        match self.require(name)? {
            Tensor::Multivector { field, .. } => Ok(field),
            _ => err(format!("tensor '{name}' is not a multivector")),
        }
    }

    pub fn form(&self, name: &str) -> Result<&DifferentialForm, InstanceError> {
        match self.require(name)? {
            Tensor::Form(f) => Ok(f),
            _ => err(format!("tensor '{name}' is not a form")),
        }
    }

    pub fn endomorphism(&self, name: &str) -> Result<&EndomorphismField, InstanceError> {
        match self.require(name)? {
            Tensor::Endomorphism(e) => Ok(e),
            _ => err(format!("tensor '{name}' is not an endomorphism")),
        }
    }

    pub fn optional_form(&self, name: &str) -> Result<Option<&DifferentialForm>, InstanceError> {
        match self.get(name) {
            None => Ok(None),
            Some(_) => self.form(name).map(Some),
        }
    }

    pub fn optional_multivector(
        &self,
        name: &str,
    ) -> Result<Option<&MultiVectorField>, InstanceError> {
        match self.get(name) {
            None => Ok(None),
            Some(_) => self.multivector(name).map(Some),
        }
    }

    /// Canonical document: components in graded-lex index order, values in
    /// canonical polynomial form.
    pub fn to_document(&self) -> InstanceDocument {
        let tensors = self
            .tensors
            .iter()
            .map(|(name, t)| (name.clone(), tensor_doc(t)))
            .collect();
        InstanceDocument {
            schema: SCHEMA,
            n: self.n,
            courant: self.courant,
            tensors,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable document")
    }
}

pub fn tensor_doc(t: &Tensor) -> TensorDoc {
    let alternating = |it: Vec<(Vec<usize>, String)>| {
        it.into_iter()
            .map(|(idx, value)| ComponentDoc {
                indices: idx.iter().map(|i| i + 1).collect(),
                value,
            })
            .collect()
    };
    match t {
        Tensor::Multivector { kind, field } => TensorDoc {
            kind: *kind,
            degree: Some(field.degree()),
            components: alternating(
                field
                    .iter()
                    .map(|(i, p)| (i.clone(), p.to_string()))
                    .collect(),
            ),
        },
        Tensor::Form(f) => TensorDoc {
            kind: Kind::Form,
            degree: Some(f.degree()),
            components: alternating(f.iter().map(|(i, p)| (i.clone(), p.to_string())).collect()),
        },
        Tensor::Endomorphism(e) => {
            let mut components = Vec::new();
            for (i, row) in e.matrix().iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if !p.is_zero() {
                        components.push(ComponentDoc {
                            indices: vec![i + 1, j + 1],
                            value: p.to_string(),
                        });
                    }
                }
            }
            TensorDoc {
                kind: Kind::Endomorphism,
                degree: None,
                components,
            }
        }
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let doc: InstanceDocument =
        serde_json::from_str(text).map_err(|e| InstanceError(format!("syntax error: {e}")))?;
    from_document(&doc)
}

pub fn from_document(doc: &InstanceDocument) -> Result<Instance, InstanceError> {
    if doc.schema != SCHEMA {
        return err(format!(
            "unsupported schema {} (expected {SCHEMA})",
            doc.schema
        ));
    }
    if doc.n == 0 {
        return err("dimension n must be positive");
    }
    let mut tensors = BTreeMap::new();
    for (name, t) in &doc.tensors {
        let tensor = build_tensor(doc.n, name, t)
            .map_err(|e| InstanceError(format!("tensor '{name}': {e}")))?;
        tensors.insert(name.clone(), tensor);
    }
    Ok(Instance {
        n: doc.n,
        courant: doc.courant,
        tensors,
    })
}

fn build_tensor(n: usize, name: &str, t: &TensorDoc) -> Result<Tensor, InstanceError> {
    let Some(&(_, kinds, fixed)) = NAMES.iter().find(|(k, _, _)| *k == name) else {
        let known: Vec<&str> = NAMES.iter().map(|(k, _, _)| *k).collect();
        return err(format!(
            "unknown tensor name (expected one of {})",
            known.join(", ")
        ));
    };
    if !kinds.contains(&t.kind) {
        return err(format!("kind {:?} not allowed here", t.kind).to_lowercase());
    }
    let values = t
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if let Some(&bad) = c.indices.iter().find(|&&i| i == 0 || i > n) {
                return err(format!("component {k}: index {bad} out of range 1..={n}"));
            }
            let p = Polynomial::parse(&c.value, n)
                .map_err(|e| InstanceError(format!("component {k}: {e}")))?;
            Ok((c.indices.iter().map(|i| i - 1).collect::<Vec<_>>(), p))
        })
        .collect::<Result<Vec<_>, _>>()?;

    if t.kind == Kind::Endomorphism {
        if t.degree.is_some() {
            return err("an endomorphism takes no degree");
        }
        let mut rows = vec![vec![Polynomial::zero(n); n]; n];
        let mut seen = std::collections::BTreeSet::new();
        for (idx, p) in values {
            if idx.len() != 2 {
                return err("endomorphism components need two indices [row, column]");
            }
            if !seen.insert(idx.clone()) {
                return err("duplicate indices");
            }
            rows[idx[0]][idx[1]] = p;
        }
        let e = EndomorphismField::from_matrix(rows).map_err(|e| InstanceError(e.to_string()))?;
        return Ok(Tensor::Endomorphism(e));
    }

    let default_degree = match t.kind {
        Kind::Bivector => Some(2),
        Kind::Vector => Some(1),
        _ => None,
    };
    let degree = match (t.degree, fixed, default_degree) {
        (Some(d), _, _) => d,
        (None, Some(d), _) => d,
        (None, None, Some(d)) => d,
        (None, None, None) => match values.first() {
            Some((idx, _)) => idx.len(),
            None => return err("degree is required for a form without components"),
        },
    };
    if t.kind == Kind::Bivector && degree != 2 {
        return err(format!("a bivector has degree 2, not {degree}"));
    }
    if let Some(d) = fixed {
        if degree != d {
            return err(format!("expected degree {d}, found {degree}"));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for (idx, _) in &values {
        if idx.len() != degree {
            return err(format!("expected {degree} indices, found {}", idx.len()));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return err("indices not strictly increasing");
        }
        if !seen.insert(idx.clone()) {
            return err("duplicate indices");
        }
    }
    let to_err = |e: pqn_core::Error| InstanceError(e.to_string());
    Ok(match t.kind {
        Kind::Form => {
            Tensor::Form(DifferentialForm::from_components(n, degree, values).map_err(to_err)?)
        }
        kind => Tensor::Multivector {
            kind,
            field: MultiVectorField::from_components(n, degree, values).map_err(to_err)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let inst = parse_instance(
            r#"{"n":2,"tensors":{"pi":{"kind":"bivector","components":[{"indices":[1,2],"value":"1"}]}}}"#,
        )
        .unwrap();
        assert_eq!(
            inst.multivector("pi").unwrap(),
            &MultiVectorField::basis(2, &[0, 1])
        );
    }

    #[test]
    fn rational_coefficients() {
        let inst = parse_instance(
            r#"{"n":2,"tensors":{"xi":{"kind":"form","components":[{"indices":[1],"value":"3/2*x1^2"}]}}}"#,
        )
        .unwrap();
        let xi = inst.form("xi").unwrap();
        assert_eq!(xi.coeff(&[0]), Polynomial::parse("3/2*x1^2", 2).unwrap());
    }

    #[test]
    fn rejections() {
        let cases = [
            (
                r#"{"n":2,"tensors":{"pi":{"kind":"bivector","components":[{"indices":[2,1],"value":"1"}]}}}"#,
                "indices not strictly increasing",
            ),
            (
                r#"{"n":2,"tensors":{"pi":{"kind":"spinor","components":[]}}}"#,
                "syntax error",
            ),
            (r#"{"n":2,"extra":1}"#, "unknown field"),
            (
                r#"{"n":2,"tensors":{"pi":{"kind":"bivector","components":[{"indices":[1,3],"value":"1"}]}}}"#,
                "out of range",
            ),
            (
                r#"{"n":2,"tensors":{"pi":{"kind":"bivector","components":[{"indices":[1,2],"value":"x3"}]}}}"#,
                "parse error",
            ),
            (
                r#"{"n":2,"tensors":{"foo":{"kind":"form","degree":1}}}"#,
                "unknown tensor name",
            ),
            (
                r#"{"n":2,"tensors":{"phi":{"kind":"form","degree":2}}}"#,
                "expected degree 3",
            ),
            (r#"{"n":2,"#, "line 1 column"),
        ];
        for (text, needle) in cases {
            let e = parse_instance(text).unwrap_err();
            assert!(e.0.contains(needle), "{text}: {e}");
        }
    }

    #[test]
    fn round_trip() {
        let text = r#"{"n":3,"courant":"double","tensors":{
            "N":{"kind":"endomorphism","components":[{"indices":[2,1],"value":"x1 + x1"}]},
            "phi":{"kind":"form","components":[{"indices":[1,2,3],"value":"-1/2"}]},
            "P":{"kind":"vector","degree":3,"components":[{"indices":[1,2,3],"value":"x2*x1"}]}}}"#;
        let a = parse_instance(text).unwrap();
        let b = parse_instance(&a.to_json()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }
}
