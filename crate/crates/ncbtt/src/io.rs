//! JSON formats: algebra files and weight-indexed cochain tables.

use std::fmt;
use std::path::Path;

use ncbtt_core::algebra::{Algebra, AlgebraBuilder, AlgebraError};
use ncbtt_core::exactla::{Field, Scalar};
use ncbtt_core::hochschild::Cochain;
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FormatError {
    Io(String),
    Json(String),
    Field(String),
    Scalar(String),
    Parity { name: String, parity: u8 },
    ArityMismatch { arity: usize, inputs: usize },
    Algebra(AlgebraError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io(s) => write!(f, "cannot read algebra file: {}", s),
            FormatError::Json(s) => write!(f, "malformed algebra file: {}", s),
            FormatError::Field(s) => write!(f, "bad field: {}", s),
            FormatError::Scalar(s) => write!(f, "{}", s),
            FormatError::Parity { name, parity } => write!(f, "basis element {} has parity {} (expected 0 or 1)", name, parity),
            FormatError::ArityMismatch { arity, inputs } => {
                write!(f, "product declares arity {} but lists {} inputs", arity, inputs)
            }
            FormatError::Algebra(e) => write!(f, "invalid algebra: {:?}", e),
        }
    }
}

impl std::error::Error for FormatError {}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub parity: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub output: Vec<(String, String)>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Annotations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
    #[serde(default)]
    pub notes: String,
}

/// On-disk algebra description.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub basis: Vec<BasisEntry>,
    pub unit: String,
    pub pairing_parity: u8,
    pub pairing: Vec<(String, String, String)>,
    pub products: Vec<ProductEntry>,
    #[serde(default)]
    pub annotations: Annotations,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
}

fn scalar(s: &str) -> Result<Scalar, FormatError> {
    s.parse().map_err(FormatError::Scalar)
}

fn parity(name: &str, p: u8) -> Result<bool, FormatError> {
    match p {
        0 => Ok(false),
        1 => Ok(true),
        _ => Err(FormatError::Parity { name: name.to_string(), parity: p }),
    }
}

impl AlgebraFile {
    /// Builds the algebra over the file's field, or over `field` if given.
    pub fn build(&self, field: Option<Field>) -> Result<Algebra, FormatError> {
        let field = match field {
            Some(f) => f,
            None => self.field.parse().map_err(FormatError::Field)?,
        };
        let mut b = AlgebraBuilder::new(&self.name);
        for e in &self.basis {
            b.basis.push((e.name.clone(), parity(&e.name, e.parity)?));
        }
        b.unit = self.unit.clone();
        b.pairing_odd = parity("pairing", self.pairing_parity)?;
        for (x, y, v) in &self.pairing {
            b.pairing.push((x.clone(), y.clone(), scalar(v)?));
        }
        for p in &self.products {
            if p.arity != p.inputs.len() {
                return Err(FormatError::ArityMismatch { arity: p.arity, inputs: p.inputs.len() });
            }
            let outs = p.output.iter().map(|(o, v)| Ok((o.clone(), scalar(v)?))).collect::<Result<Vec<_>, FormatError>>()?;
            b.products.push((p.inputs.clone(), outs));
        }
        b.k_max = self.k_max;
        b.smooth = self.annotations.smooth;
        b.notes = self.annotations.notes.clone();
        b.build(field).map_err(FormatError::Algebra)
    }

    /// The file form of an algebra (the field as written in files).
    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        let b = a.to_builder();
        let field = match a.field() {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{}", p),
        };
        AlgebraFile {
            name: b.name.clone(),
            field,
            basis: b.basis.iter().map(|(n, p)| BasisEntry { name: n.clone(), parity: *p as u8 }).collect(),
            unit: b.unit.clone(),
            pairing_parity: b.pairing_odd as u8,
            pairing: b.pairing.iter().map(|(x, y, v)| (x.clone(), y.clone(), v.to_string())).collect(),
            products: b
                .products
                .iter()
                .map(|(ins, outs)| ProductEntry {
                    arity: ins.len(),
                    inputs: ins.clone(),
                    output: outs.iter().map(|(o, v)| (o.clone(), v.to_string())).collect(),
                })
                .collect(),
            annotations: Annotations { smooth: b.smooth, notes: b.notes.clone() },
            k_max: b.k_max,
        }
    }
}

pub fn parse_algebra(text: &str, field: Option<Field>) -> Result<Algebra, FormatError> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    f.build(field)
}

pub fn load_algebra(path: &Path, field: Option<Field>) -> Result<Algebra, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io(format!("{}: {}", path.display(), e)))?;
    parse_algebra(&text, field)
}

/// One monomial of a cochain: inputs, output and coefficient.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermJson {
    pub inputs: Vec<String>,
    pub output: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WeightJson {
    pub weight: usize,
    pub terms: Vec<TermJson>,
}

/// A cochain as a weight-indexed sparse table.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CochainJson {
    pub parity: &'static str,
    pub weights: Vec<WeightJson>,
}

impl CochainJson {
    pub fn new(a: &Algebra, c: &Cochain) -> CochainJson {
        let names = a.names();
        let weights = c
            .weights()
            .into_iter()
            .map(|w| WeightJson {
                weight: w,
                terms: c
                    .terms()
                    .filter(|(m, _)| m.weight() == w)
                    .map(|(m, v)| TermJson {
                        inputs: m.inputs().iter().map(|&i| names[i].clone()).collect(),
                        output: names[m.output()].clone(),
                        coeff: v.to_string(),
                    })
                    .collect(),
            })
            .collect();
        CochainJson { parity: if c.is_odd() { "odd" } else { "even" }, weights }
    }

    /// `c1*(x,x)->1 + …`, for text reports.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for w in &self.weights {
            for t in &w.terms {
                parts.push(format!("{}*({})->{}", t.coeff, t.inputs.join(","), t.output));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}
