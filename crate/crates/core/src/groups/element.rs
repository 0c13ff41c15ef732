use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Code, Field};

use super::quotient::CosetTable;

/// A permutation of `0..degree` stored as its image array.
///
/// Products compose left to right: `(a * b)[i] = b[a[i]]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Box<[u32]>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::invalid(format!("{images:?} is not a bijection on 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images.into_boxed_slice()))
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::invalid(format!("cycle {cycle:?} exceeds degree {degree}")));
                }
                images[a as usize] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    fn compose(&self, other: &Self) -> Self {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation(inv.into_boxed_slice())
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A square matrix over a finite field, entries row-major as field codes.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    dim: usize,
    entries: Box<[Code]>,
}

impl Matrix {
    /// Validates reduction and invertibility.
    pub fn new(field: Arc<Field>, dim: usize, entries: Vec<Code>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::invalid(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|&&e| e as usize >= field.order()) {
            return Err(Error::invalid(format!("entry code {e} outside the field")));
        }
        let m = Matrix {
            field,
            dim,
            entries: entries.into_boxed_slice(),
        };
        if m.try_inverse().is_none() {
            return Err(Error::invalid("matrix is singular"));
        }
        Ok(m)
    }

    /// Builds a matrix from integer entries reduced into the prime subfield.
    pub fn from_ints(field: &Arc<Field>, dim: usize, entries: &[i64]) -> Result<Self> {
        let p = field.characteristic() as i64;
        let codes = entries
            .iter()
            .map(|&e| field.from_int(e.rem_euclid(p) as u64))
            .collect();
        Matrix::new(Arc::clone(field), dim, codes)
    }

    pub fn identity(field: Arc<Field>, dim: usize) -> Self {
        let mut entries = vec![field.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = field.one();
        }
        Matrix {
            field,
            dim,
            entries: entries.into_boxed_slice(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn entries(&self) -> &[Code] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Code {
        self.entries[row * self.dim + col]
    }

    fn product(&self, other: &Self) -> Self {
        let d = self.dim;
        let f = &self.field;
        let mut out = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = f.zero();
                for k in 0..d {
                    acc = f.add(acc, f.mul(self.entries[i * d + k], other.entries[k * d + j]));
                }
                out[i * d + j] = acc;
            }
        }
        Matrix {
            field: Arc::clone(f),
            dim: d,
            entries: out.into_boxed_slice(),
        }
    }

    /// Gauss-Jordan inverse.
    fn try_inverse(&self) -> Option<Self> {
        let d = self.dim;
        let f = &self.field;
        let mut a = self.entries.to_vec();
        let mut inv = Matrix::identity(Arc::clone(f), d).entries.to_vec();
        for col in 0..d {
            let pivot = (col..d).find(|&r| a[r * d + col] != 0)?;
            if pivot != col {
                for k in 0..d {
                    a.swap(pivot * d + k, col * d + k);
                    inv.swap(pivot * d + k, col * d + k);
                }
            }
            let scale = f.inv(a[col * d + col])?;
            for k in 0..d {
                a[col * d + k] = f.mul(a[col * d + k], scale);
                inv[col * d + k] = f.mul(inv[col * d + k], scale);
            }
            for r in 0..d {
                if r == col || a[r * d + col] == 0 {
                    continue;
                }
                let factor = a[r * d + col];
                for k in 0..d {
                    a[r * d + k] = f.sub(a[r * d + k], f.mul(factor, a[col * d + k]));
                    inv[r * d + k] = f.sub(inv[r * d + k], f.mul(factor, inv[col * d + k]));
                }
            }
        }
        Some(Matrix {
            field: Arc::clone(f),
            dim: d,
            entries: inv.into_boxed_slice(),
        })
    }

    fn is_identity(&self) -> bool {
        let one = self.field.one();
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.entries[i * self.dim + j] == if i == j { one } else { 0 }))
    }

    fn encoding(&self) -> Value {
        let n = self.field.spec().n;
        let rows: Vec<Value> = (0..self.dim)
            .map(|i| {
                Value::Array(
                    (0..self.dim)
                        .map(|j| {
                            let c = self.field.coeffs(self.entry(i, j));
                            if n == 1 {
                                json!(c[0])
                            } else {
                                json!(c)
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        Value::Array(rows)
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.entries).cmp(&(other.dim, &other.entries))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encoding())
    }
}

/// A coset of a normal subgroup, identified by its index in the quotient's
/// coset table. Indices follow the order of the canonical representatives.
#[derive(Clone)]
pub struct Coset {
    pub(crate) id: u32,
    pub(crate) table: Arc<CosetTable>,
}

impl Coset {
    pub fn id(&self) -> usize {
        self.id as usize
    }

    /// The canonical representative in the parent group.
    pub fn representative(&self) -> &GroupElement {
        self.table.representative(self.id as usize)
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Coset {}

impl Hash for Coset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl PartialOrd for Coset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.id.cmp(&other.id)
    }
}

impl fmt::Debug for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}N", self.representative())
    }
}

/// An element of a concrete group. The derived ordering is the canonical
/// ordering used for representatives everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Matrix(Matrix),
    Coset(Coset),
}

impl GroupElement {
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.compose(b)),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a.product(b)),
            (GroupElement::Coset(a), GroupElement::Coset(b)) => GroupElement::Coset(a.table.multiply(a.id, b.id)),
            _ => panic!("cannot multiply elements of different representations"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Perm(a) => GroupElement::Perm(a.inverse()),
            GroupElement::Matrix(a) => GroupElement::Matrix(a.try_inverse().expect("group elements are invertible")),
            GroupElement::Coset(a) => GroupElement::Coset(a.table.invert(a.id)),
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(a) => GroupElement::Perm(Permutation::identity(a.degree())),
            GroupElement::Matrix(a) => GroupElement::Matrix(Matrix::identity(Arc::clone(&a.field), a.dim)),
            GroupElement::Coset(a) => GroupElement::Coset(a.table.identity()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(a) => a.is_identity(),
            GroupElement::Matrix(a) => a.is_identity(),
            GroupElement::Coset(a) => a.table.identity().id == a.id,
        }
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, mut e: u64) -> GroupElement {
        let mut base = self.clone();
        let mut acc = self.identity_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupElement::Perm(_) => "permutation",
            GroupElement::Matrix(_) => "matrix",
            GroupElement::Coset(_) => "coset",
        }
    }

    /// True when both elements can be multiplied together.
    pub fn compatible(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.degree() == b.degree(),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => a.dim == b.dim && *a.field == *b.field,
            (GroupElement::Coset(a), GroupElement::Coset(b)) => Arc::ptr_eq(&a.table, &b.table),
            _ => false,
        }
    }

    /// JSON encoding: image array, nested matrix rows, or `{"coset": rep}`.
    pub fn encoding(&self) -> Value {
        match self {
            GroupElement::Perm(a) => json!(a.images()),
            GroupElement::Matrix(a) => a.encoding(),
            GroupElement::Coset(a) => json!({ "coset": a.representative().encoding() }),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(a) => a.fmt(f),
            GroupElement::Matrix(a) => a.fmt(f),
            GroupElement::Coset(a) => a.fmt(f),
        }
    }
}

impl From<Permutation> for GroupElement {
    fn from(p: Permutation) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<Matrix> for GroupElement {
    fn from(m: Matrix) -> Self {
        GroupElement::Matrix(m)
    }
}
