//! JSON file formats: algebras, bimodules, corpora.
//!
//! The algebra format is sparse — unlisted products are zero:
//!
//! ```json
//! {
//!   "field": {"kind": "Q"} | {"kind": "Fp", "p": 5},
//!   "dim": 4,
//!   "labels": ["u", "n", "k", "n^2"],
//!   "products": [{"i": 1, "j": 2, "out": ["1", "0", "0", "0"]}]
//! }
//! ```
//!
//! Indices are 1-based; scalars are strings ("num/den" or "num" over Q, a
//! decimal residue over F_p).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldScalar};
use crate::generators::{CorpusEntry, KnownFlags};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldJson {
    pub fn to_descriptor(&self) -> Result<FieldDescriptor> {
        match self.kind.as_str() {
            "Q" => Ok(FieldDescriptor::Rationals),
            "Fp" => {
                let p = self
                    .p
                    .ok_or_else(|| Error::Parse("field kind Fp needs \"p\"".into()))?;
                FieldDescriptor::prime(p)
            }
            other => Err(Error::Parse(format!("unknown field kind {:?}", other))),
        }
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Self {
        match desc {
            FieldDescriptor::Rationals => FieldJson { kind: "Q".into(), p: None },
            FieldDescriptor::PrimeField(p) => FieldJson { kind: "Fp".into(), p: Some(*p) },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductJson {
    pub i: usize,
    pub j: usize,
    pub out: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub products: Vec<ProductJson>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let mut products = Vec::new();
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let out = algebra.basis_product(i, j);
                if out.iter().any(|s| !s.is_zero()) {
                    products.push(ProductJson {
                        i: i + 1,
                        j: j + 1,
                        out: out.iter().map(|s| s.to_string()).collect(),
                    });
                }
            }
        }
        AlgebraFile {
            field: FieldJson::from_descriptor(&algebra.field()),
            dim: algebra.dim(),
            labels: algebra.labels().map(|l| l.to_vec()),
            products,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = self.field.to_descriptor()?;
        let mut products = Vec::new();
        for entry in &self.products {
            if entry.i == 0 || entry.j == 0 || entry.i > self.dim || entry.j > self.dim {
                return Err(Error::Parse(format!(
                    "product index ({}, {}) outside 1..={}",
                    entry.i, entry.j, self.dim
                )));
            }
            if entry.out.len() != self.dim {
                return Err(Error::Parse(format!(
                    "product ({}, {}) has {} coordinates, expected {}",
                    entry.i,
                    entry.j,
                    entry.out.len(),
                    self.dim
                )));
            }
            let out: Result<Vec<FieldScalar>> = entry
                .out
                .iter()
                .map(|s| FieldScalar::parse(s, &field))
                .collect();
            products.push((entry.i - 1, entry.j - 1, out?));
        }
        Algebra::from_products(self.dim, field, &products, self.labels.clone())
    }
}

/// Serialize an algebra to the canonical JSON string (pretty-printed with a
/// trailing newline; byte-stable for a fixed presentation).
pub fn algebra_to_json(algebra: &Algebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(algebra))
        .expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_algebra()
}

pub fn write_algebra(path: &Path, algebra: &Algebra) -> std::io::Result<()> {
    fs::write(path, algebra_to_json(algebra))
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    algebra_from_json(&text)
}

/// Bimodule format: the underlying algebra plus the two operator tensors,
/// one m×m matrix of scalar strings per algebra basis element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BimoduleFile {
    pub algebra: AlgebraFile,
    pub module_dim: usize,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Vec<String>>>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<Vec<String>>>,
}

impl BimoduleFile {
    pub fn from_bimodule(b: &Bimodule) -> Self {
        let grid = |ops: &[Matrix]| -> Vec<Vec<Vec<String>>> {
            ops.iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| m.row(r).iter().map(|s| s.to_string()).collect())
                        .collect()
                })
                .collect()
        };
        BimoduleFile {
            algebra: AlgebraFile::from_algebra(b.algebra()),
            module_dim: b.module_dim(),
            t: grid(b.t_basis_ops()),
            s: grid(b.s_basis_ops()),
        }
    }

    pub fn to_bimodule(&self) -> Result<Bimodule> {
        let algebra = self.algebra.to_algebra()?;
        let field = algebra.field();
        let parse_ops = |grids: &[Vec<Vec<String>>]| -> Result<Vec<Matrix>> {
            grids
                .iter()
                .map(|g| {
                    let rows: Result<Vec<Vec<FieldScalar>>> = g
                        .iter()
                        .map(|row| {
                            row.iter().map(|s| FieldScalar::parse(s, &field)).collect()
                        })
                        .collect();
                    Ok(Matrix::from_rows(rows?, self.module_dim, field))
                })
                .collect()
        };
        Bimodule::new(algebra, parse_ops(&self.t)?, parse_ops(&self.s)?)
    }
}

/// Corpus manifest: provenance and expected flags per algebra file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub name: String,
    pub provenance: String,
    pub flags: KnownFlags,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

/// Write a corpus as a directory of algebra files plus `manifest.json`.
pub fn write_corpus(dir: &Path, corpus: &[CorpusEntry]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut entries = Vec::new();
    for entry in corpus {
        let file = format!("{}.json", entry.name);
        write_algebra(&dir.join(&file), &entry.algebra)?;
        entries.push(ManifestEntry {
            file,
            name: entry.name.clone(),
            provenance: entry.provenance.clone(),
            flags: entry.flags.clone(),
        });
    }
    let mut manifest = serde_json::to_string_pretty(&Manifest { entries })
        .expect("serialization cannot fail");
    manifest.push('\n');
    fs::write(dir.join("manifest.json"), manifest)
}

/// Load every algebra file of a corpus directory in sorted order.
/// Files that fail to parse or fail the Leibniz identity are reported.
pub fn read_corpus(dir: &Path) -> Result<Vec<(String, Algebra)>> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("{}: {}", dir.display(), e)))?
        .filter_map(|entry| {
            let name = entry.ok()?.file_name().into_string().ok()?;
            (name.ends_with(".json") && name != "manifest.json").then_some(name)
        })
        .collect();
    names.sort();
    let mut out = Vec::new();
    for name in names {
        let algebra = read_algebra(&dir.join(&name))?;
        match algebra.verify_leibniz() {
            v if v.passed() => out.push((name, algebra)),
            crate::algebra::LeibnizVerdict::Fail { triple, .. } => {
                return Err(Error::Parse(format!(
                    "{}: not a Leibniz algebra (fails at basis triple {:?})",
                    name,
                    (triple.0 + 1, triple.1 + 1, triple.2 + 1)
                )))
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{barnes_algebra, nil_bimodule, standard_corpus, SMode};

    #[test]
    fn algebra_json_round_trip() {
        let a = barnes_algebra(FieldDescriptor::rationals());
        let text = algebra_to_json(&a);
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(algebra_to_json(&back), text);
    }

    #[test]
    fn unlisted_products_are_zero() {
        let text = r#"{"field": {"kind": "Fp", "p": 5}, "dim": 2, "products": []}"#;
        let a = algebra_from_json(text).unwrap();
        assert!(a.product_space(&a.full_space(), &a.full_space()).is_zero());
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(algebra_from_json("not json").is_err());
        let bad_index =
            r#"{"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 2, "j": 1, "out": ["1"]}]}"#;
        assert!(matches!(algebra_from_json(bad_index), Err(Error::Parse(_))));
        let bad_field = r#"{"field": {"kind": "Fp", "p": 6}, "dim": 1, "products": []}"#;
        assert!(matches!(algebra_from_json(bad_field), Err(Error::NotPrime(6))));
    }

    #[test]
    fn bimodule_json_round_trip() {
        let b = nil_bimodule(FieldDescriptor::prime(5).unwrap(), 3, SMode::SZero);
        let file = BimoduleFile::from_bimodule(&b);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: BimoduleFile = serde_json::from_str(&text).unwrap();
        let back = parsed.to_bimodule().unwrap();
        assert_eq!(back.module_dim(), 3);
        assert_eq!(back.t_basis_ops(), b.t_basis_ops());
        assert_eq!(back.s_basis_ops(), b.s_basis_ops());
    }

    #[test]
    fn corpus_write_read_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let corpus: Vec<_> = standard_corpus().into_iter().take(6).collect();
        write_corpus(dir.path(), &corpus).unwrap();
        let loaded = read_corpus(dir.path()).unwrap();
        assert_eq!(loaded.len(), 6);
        let manifest: Manifest = serde_json::from_str(
            &std::fs::read_to_string(dir.path().join("manifest.json")).unwrap(),
        )
        .unwrap();
        assert_eq!(manifest.entries.len(), 6);
    }
}
