//! On-disk structure documents: UTF-8 JSON describing a gamma-semiring
//! plus optional named fuzzy subsets and a default grade chain.
//!
//! Memberships are written as exact rational strings like `"1/2"`;
//! decimals are rejected. Re-emission is canonical (fixed key order,
//! compact inner arrays), so parse-then-emit is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AxiomViolation, ElemG, ElemS, GammaSemiring, ShapeError, Side, UnityDecl};
use crate::fuzzy::{Chain, FuzzySubset, Membership, ValueError};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("subset {name:?}: {source}")]
    BadSubset { name: String, source: ValueError },
    #[error("subset {name:?} has {got} grades, the carrier has {expected}")]
    SubsetLength {
        name: String,
        got: usize,
        expected: usize,
    },
    #[error("default_chain: {0}")]
    BadChain(ValueError),
    #[error("unity side must be \"left\" or \"right\", got {got:?}")]
    BadSide { got: String },
    #[error("structure violates {count} axiom instance(s); first: {first}")]
    Invalid {
        count: usize,
        first: String,
        violations: Vec<AxiomViolation>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct UnityDoc {
    pub side: String,
    pub pairs: Vec<(usize, usize)>,
}

/// The document schema, field for field.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureDoc {
    pub name: String,
    pub s_size: usize,
    pub gamma_size: usize,
    pub s_add: Vec<Vec<usize>>,
    pub gamma_add: Vec<Vec<usize>>,
    pub product: Vec<Vec<Vec<usize>>>,
    pub s_zero: usize,
    pub gamma_zero: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unities: Option<Vec<UnityDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<BTreeMap<String, Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub default_chain: Option<Vec<String>>,
}

/// A parsed, shape-checked, axiom-validated document.
#[derive(Debug, Clone)]
pub struct LoadedDoc {
    pub structure: Arc<GammaSemiring>,
    pub subsets: BTreeMap<String, FuzzySubset>,
    pub default_chain: Option<Chain>,
    pub doc: StructureDoc,
}

fn unity_from_doc(u: &UnityDoc) -> Result<UnityDecl, DocError> {
    let side = match u.side.as_str() {
        "left" => Side::Left,
        "right" => Side::Right,
        other => {
            return Err(DocError::BadSide {
                got: other.to_string(),
            })
        }
    };
    Ok(UnityDecl {
        side,
        pairs: u.pairs.iter().map(|&(e, d)| (ElemS(e), ElemG(d))).collect(),
    })
}

fn unity_to_doc(u: &UnityDecl) -> UnityDoc {
    UnityDoc {
        side: u.side.to_string(),
        pairs: u.pairs.iter().map(|&(e, d)| (e.0, d.0)).collect(),
    }
}

impl StructureDoc {
    pub fn parse(json: &str) -> Result<StructureDoc, DocError> {
        Ok(serde_json::from_str(json)?)
    }

    /// Builds the structure and validates every axiom; an invalid
    /// document fails to load and reports its violation list.
    pub fn build(&self) -> Result<LoadedDoc, DocError> {
        if self.s_add.len() != self.s_size
            || self.gamma_add.len() != self.gamma_size
            || self.product.len() != self.s_size
        {
            return Err(ShapeError::BadDims {
                table: "document",
                expected: format!("s_size {} / gamma_size {}", self.s_size, self.gamma_size),
                got: format!(
                    "s_add {} / gamma_add {} / product {}",
                    self.s_add.len(),
                    self.gamma_add.len(),
                    self.product.len()
                ),
            }
            .into());
        }
        let unities = self
            .unities
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .map(unity_from_doc)
            .collect::<Result<Vec<_>, _>>()?;
        let g = GammaSemiring::new(
            self.name.clone(),
            self.s_add.clone(),
            self.gamma_add.clone(),
            self.product.clone(),
            self.s_zero,
            self.gamma_zero,
            unities,
        )?;
        let violations = g.validate();
        if !violations.is_empty() {
            return Err(DocError::Invalid {
                count: violations.len(),
                first: violations[0].to_string(),
                violations,
            });
        }
        let structure = Arc::new(g);

        let mut subsets = BTreeMap::new();
        for (name, grades) in self.subsets.as_ref().unwrap_or(&BTreeMap::new()) {
            if grades.len() != self.s_size {
                return Err(DocError::SubsetLength {
                    name: name.clone(),
                    got: grades.len(),
                    expected: self.s_size,
                });
            }
            let parsed = grades
                .iter()
                .map(|s| s.parse::<Membership>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| DocError::BadSubset {
                    name: name.clone(),
                    source,
                })?;
            let mu =
                FuzzySubset::new(Arc::clone(&structure), parsed).expect("length checked above");
            subsets.insert(name.clone(), mu);
        }

        let default_chain = match &self.default_chain {
            None => None,
            Some(vals) => {
                let parsed = vals
                    .iter()
                    .map(|s| s.parse::<Membership>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(DocError::BadChain)?;
                Some(Chain::new(parsed))
            }
        };

        Ok(LoadedDoc {
            structure,
            subsets,
            default_chain,
            doc: self.clone(),
        })
    }

    /// Rebuilds a document from a structure (used for canonical
    /// re-emission of programmatic structures).
    pub fn from_structure(g: &GammaSemiring) -> StructureDoc {
        let n = g.s_size();
        let m = g.g_size();
        StructureDoc {
            name: g.name().to_string(),
            s_size: n,
            gamma_size: m,
            s_add: (0..n)
                .map(|a| (0..n).map(|b| g.add(ElemS(a), ElemS(b)).0).collect())
                .collect(),
            gamma_add: (0..m)
                .map(|a| (0..m).map(|b| g.gadd(ElemG(a), ElemG(b)).0).collect())
                .collect(),
            product: (0..n)
                .map(|a| {
                    (0..m)
                        .map(|x| {
                            (0..n)
                                .map(|b| g.mul(ElemS(a), ElemG(x), ElemS(b)).0)
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            s_zero: g.s_zero().0,
            gamma_zero: g.g_zero().0,
            unities: if g.unities().is_empty() {
                None
            } else {
                Some(g.unities().iter().map(unity_to_doc).collect())
            },
            subsets: None,
            default_chain: None,
        }
    }

    /// Canonical emission: top-level keys one per line in schema order,
    /// numeric arrays compact. Stable under parse/emit round trips.
    pub fn to_canonical_json(&self) -> String {
        fn js(s: &str) -> String {
            serde_json::to_string(s).expect("strings serialize")
        }

        let mut out = String::from("{\n");
        let mut first = true;
        let mut field = |out: &mut String, key: &str, value: String| {
            if !first {
                out.push_str(",\n");
            }
            first = false;
            let _ = write!(out, "  \"{key}\": {value}");
        };

        field(&mut out, "name", js(&self.name));
        field(&mut out, "s_size", self.s_size.to_string());
        field(&mut out, "gamma_size", self.gamma_size.to_string());
        field(&mut out, "s_add", fmt_table2(&self.s_add));
        field(&mut out, "gamma_add", fmt_table2(&self.gamma_add));
        field(&mut out, "product", fmt_table3(&self.product));
        field(&mut out, "s_zero", self.s_zero.to_string());
        field(&mut out, "gamma_zero", self.gamma_zero.to_string());
        if let Some(unities) = &self.unities {
            let items: Vec<String> = unities
                .iter()
                .map(|u| {
                    let pairs: Vec<String> =
                        u.pairs.iter().map(|(e, d)| format!("[{e}, {d}]")).collect();
                    format!(
                        "{{\"side\": {}, \"pairs\": [{}]}}",
                        js(&u.side),
                        pairs.join(", ")
                    )
                })
                .collect();
            field(&mut out, "unities", format!("[{}]", items.join(", ")));
        }
        if let Some(subsets) = &self.subsets {
            let items: Vec<String> = subsets
                .iter()
                .map(|(name, grades)| {
                    let gs: Vec<String> = grades.iter().map(|g| js(g)).collect();
                    format!("{}: [{}]", js(name), gs.join(", "))
                })
                .collect();
            field(&mut out, "subsets", format!("{{{}}}", items.join(", ")));
        }
        if let Some(chain) = &self.default_chain {
            let vals: Vec<String> = chain.iter().map(|v| js(v)).collect();
            field(&mut out, "default_chain", format!("[{}]", vals.join(", ")));
        }
        out.push_str("\n}\n");
        out
    }
}

fn fmt_row(row: &[usize]) -> String {
    let items: Vec<String> = row.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn fmt_table2(t: &[Vec<usize>]) -> String {
    let rows: Vec<String> = t.iter().map(|r| fmt_row(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_table3(t: &[Vec<Vec<usize>>]) -> String {
    let blocks: Vec<String> = t.iter().map(|b| fmt_table2(b)).collect();
    format!("[{}]", blocks.join(", "))
}

/// Reads and fully loads a structure document from disk.
pub fn load_structure(path: impl AsRef<Path>) -> Result<LoadedDoc, DocError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DocError::Io {
        path: path.display().to_string(),
        source,
    })?;
    StructureDoc::parse(&text)?.build()
}
