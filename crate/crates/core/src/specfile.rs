//! JSON group-spec files: a representation kind, a degree, an optional
//! field and a list of generators.
//!
//! ```json
//! {"name": "sl2(5)", "kind": "matrix", "degree": 2, "field": {"p": 5, "n": 1},
//!  "generators": [[[1,1],[0,1]], [[0,1],[4,0]]]}
//! ```
//!
//! Permutation generators are 0-based image arrays. Matrix entries are
//! integers over a prime field and coefficient arrays (low degree first)
//! otherwise.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{field_from_parts, Field, MAX_FIELD_ORDER};
use crate::groups::{FiniteGroup, GroupElement, Matrix, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecKind {
    Permutation,
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDescription {
    pub p: u64,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: SpecKind,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescription>,
    pub generators: Vec<Value>,
}

impl GroupSpecFile {
    pub fn from_slice(bytes: &[u8]) -> Result<Self> {
        Ok(serde_json::from_slice(bytes)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize") + "\n"
    }

    /// Builds the group; `fallback_name` is used when the file has none.
    pub fn build(&self, fallback_name: &str, cap: usize) -> Result<FiniteGroup> {
        if self.degree == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        let name = self.name.clone().unwrap_or_else(|| fallback_name.to_string());
        let mut gens = match self.kind {
            SpecKind::Permutation => {
                if self.field.is_some() {
                    return Err(Error::invalid("permutation specs take no field"));
                }
                self.generators
                    .iter()
                    .enumerate()
                    .map(|(i, v)| permutation(v, self.degree).map_err(|e| at(i, e)))
                    .collect::<Result<Vec<GroupElement>>>()?
            }
            SpecKind::Matrix => {
                let f = self
                    .field
                    .as_ref()
                    .ok_or_else(|| Error::invalid("matrix specs need a field"))?;
                let field = field_from_parts(f.p, f.n, f.modulus.clone(), MAX_FIELD_ORDER)?;
                self.generators
                    .iter()
                    .enumerate()
                    .map(|(i, v)| matrix(v, self.degree, &field).map_err(|e| at(i, e)))
                    .collect::<Result<Vec<GroupElement>>>()?
            }
        };
        if gens.is_empty() {
            gens.push(self.identity()?);
        }
        FiniteGroup::with_cap(name, gens, cap)
    }

    fn identity(&self) -> Result<GroupElement> {
        Ok(match self.kind {
            SpecKind::Permutation => Permutation::identity(self.degree).into(),
            SpecKind::Matrix => {
                let f = self.field.as_ref().expect("checked by build");
                let field = field_from_parts(f.p, f.n, f.modulus.clone(), MAX_FIELD_ORDER)?;
                Matrix::identity(field, self.degree).into()
            }
        })
    }

    /// Spec file for a permutation or matrix group.
    pub fn from_group(g: &FiniteGroup) -> Result<Self> {
        let (kind, degree, field) = match g.identity() {
            GroupElement::Perm(p) => (SpecKind::Permutation, p.degree(), None),
            GroupElement::Matrix(m) => {
                let spec = m.field().spec();
                let field = FieldDescription {
                    p: spec.p,
                    n: spec.n,
                    modulus: (spec.n > 1).then(|| spec.modulus.clone()),
                };
                (SpecKind::Matrix, m.dim(), Some(field))
            }
            GroupElement::Coset(_) => {
                return Err(Error::invalid("quotient groups have no spec-file encoding"));
            }
        };
        Ok(GroupSpecFile {
            name: Some(g.name().to_string()),
            kind,
            degree,
            field,
            generators: g.generators().iter().map(GroupElement::encoding).collect(),
        })
    }
}

pub fn parse_group_spec(bytes: &[u8], fallback_name: &str, cap: usize) -> Result<FiniteGroup> {
    GroupSpecFile::from_slice(bytes)?.build(fallback_name, cap)
}

fn at(index: usize, e: Error) -> Error {
    match e {
        Error::InvalidInput(msg) => Error::invalid(format!("generator {index}: {msg}")),
        other => other,
    }
}

fn uint(v: &Value) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::invalid(format!("expected a non-negative integer, found {v}")))
}

fn array(v: &Value, len: usize, what: &str) -> Result<Vec<Value>> {
    let a = v
        .as_array()
        .ok_or_else(|| Error::invalid(format!("{what} must be an array, found {v}")))?;
    if a.len() != len {
        return Err(Error::invalid(format!("{what} has length {}, expected {len}", a.len())));
    }
    Ok(a.clone())
}

fn permutation(v: &Value, degree: usize) -> Result<GroupElement> {
    let images = array(v, degree, "image array")?
        .iter()
        .map(|x| {
            let i = uint(x)?;
            u32::try_from(i).map_err(|_| Error::invalid(format!("image {i} out of range")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Permutation::new(images)?.into())
}

fn matrix(v: &Value, degree: usize, field: &Arc<Field>) -> Result<GroupElement> {
    let n = field.spec().n as usize;
    let mut codes = Vec::with_capacity(degree * degree);
    for row in array(v, degree, "matrix")? {
        for entry in array(&row, degree, "matrix row")? {
            let coeffs = if n == 1 && entry.is_number() {
                vec![uint(&entry)?]
            } else {
                array(&entry, n, "field entry")?
                    .iter()
                    .map(uint)
                    .collect::<Result<Vec<u64>>>()?
            };
            codes.push(field.code(&coeffs)?);
        }
    }
    Ok(Matrix::new(Arc::clone(field), degree, codes)?.into())
}
