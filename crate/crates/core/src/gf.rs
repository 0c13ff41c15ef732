//! Finite fields GF(p^n) with table-driven arithmetic.
//!
//! Elements are stored as a single integer code. For a coefficient vector
//! `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` the code is the base-`p` number whose
//! most significant digit is `c_0`, so comparing codes numerically is the same
//! as comparing coefficient vectors lexicographically, low degree first.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Default upper bound on `p^n`.
pub const DEFAULT_FIELD_CAP: u64 = 256;
/// Arithmetic tables are `q * q`; beyond this they stop being cheap.
pub const MAX_FIELD_ORDER: u64 = 1024;

/// Raw element code inside a field, in `[0, q)`.
pub type Code = u16;

/// Parameters of a finite field: characteristic, degree and defining modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    /// Monic modulus of degree `n`, coefficients low degree first.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// A finite field with precomputed addition and multiplication tables.
pub struct Field {
    spec: FieldSpec,
    q: usize,
    add: Vec<Code>,
    mul: Vec<Code>,
    neg: Vec<Code>,
    inv: Vec<Code>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.spec.p, self.spec.n, self.spec.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

/// Builds GF(p^n) with the canonical modulus and the default size cap.
pub fn make_field(p: u64, n: u32) -> Result<Arc<Field>> {
    make_field_capped(p, n, DEFAULT_FIELD_CAP)
}

pub fn make_field_capped(p: u64, n: u32, cap: u64) -> Result<Arc<Field>> {
    check_parameters(p, n, cap)?;
    let modulus = canonical_modulus(p, n);
    Field::build(FieldSpec { p, n, modulus })
}

/// Builds a field from an explicit description, validating the modulus.
/// A missing modulus selects the canonical one.
pub fn field_from_parts(p: u64, n: u32, modulus: Option<Vec<u64>>, cap: u64) -> Result<Arc<Field>> {
    check_parameters(p, n, cap)?;
    let modulus = match modulus {
        None => canonical_modulus(p, n),
        Some(m) => {
            if m.len() != n as usize + 1 || m[n as usize] != 1 {
                return Err(Error::invalid(format!("modulus {m:?} is not monic of degree {n}")));
            }
            if m.iter().any(|&c| c >= p) {
                return Err(Error::invalid(format!("modulus {m:?} has unreduced coefficients")));
            }
            if !is_irreducible(&m, p) {
                return Err(Error::invalid(format!("modulus {m:?} is reducible over Z_{p}")));
            }
            m
        }
    };
    Field::build(FieldSpec { p, n, modulus })
}

fn check_parameters(p: u64, n: u32, cap: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::invalid("field degree must be at least 1"));
    }
    let cap = cap.min(MAX_FIELD_ORDER);
    match p.checked_pow(n) {
        Some(q) if q <= cap => Ok(()),
        _ => Err(Error::cap(format!("field order {p}^{n}"), cap)),
    }
}

/// Lexicographically smallest (low degree first) monic irreducible of degree `n`.
fn canonical_modulus(p: u64, n: u32) -> Vec<u64> {
    let count = p.pow(n);
    (0..count)
        .map(|t| {
            let mut poly = digits(t, p, n as usize);
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Base-`p` digits of `code`, most significant first, padded to `len`.
fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % p;
        code /= p;
    }
    out
}

/// Exhaustive irreducibility test for a monic polynomial (low degree first).
pub(crate) fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let n = poly.len() - 1;
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        for t in 0..p.pow(d as u32) {
            let mut divisor = digits(t, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic `m`, both low degree first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

impl Field {
    fn build(spec: FieldSpec) -> Result<Arc<Field>> {
        let q = spec.order() as usize;
        let p = spec.p;
        let n = spec.n as usize;
        let vecs: Vec<Vec<u64>> = (0..q as u64).map(|c| digits(c, p, n)).collect();
        let encode = |v: &[u64]| v.iter().fold(0u64, |acc, &d| acc * p + d) as Code;

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u64> = vecs[a].iter().zip(&vecs[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);

                let mut prod = vec![0u64; 2 * n - 1];
                for (i, &x) in vecs[a].iter().enumerate() {
                    for (j, &y) in vecs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let rem = if prod.len() > n {
                    poly_rem(&prod, &spec.modulus, p)
                } else {
                    prod
                };
                mul[a * q + b] = encode(&rem);
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as Code;
                }
            }
        }
        let one = encode(&{
            let mut v = vec![0; n];
            v[0] = 1;
            v
        });
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == one)
                .ok_or_else(|| Error::Inconsistent(format!("{a} has no inverse; modulus reducible")))?
                as Code;
        }
        Ok(Arc::new(Field {
            spec,
            q,
            add,
            mul,
            neg,
            inv,
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn zero(&self) -> Code {
        0
    }

    pub fn one(&self) -> Code {
        self.spec.p.pow(self.spec.n - 1) as Code
    }

    #[inline]
    pub fn add(&self, a: Code, b: Code) -> Code {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Code, b: Code) -> Code {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Code, b: Code) -> Code {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Code) -> Code {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Code) -> Option<Code> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Code, mut e: u64) -> Code {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Code) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let one = self.one();
        let mut x = a;
        let mut k = 1;
        while x != one {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    pub fn coeffs(&self, code: Code) -> Vec<u64> {
        digits(code as u64, self.spec.p, self.spec.n as usize)
    }

    pub fn code(&self, coeffs: &[u64]) -> Result<Code> {
        if coeffs.len() != self.spec.n as usize {
            return Err(Error::invalid(format!(
                "expected {} coefficients, got {}",
                self.spec.n,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.spec.p) {
            return Err(Error::invalid(format!(
                "coefficient {c} not reduced mod {}",
                self.spec.p
            )));
        }
        Ok(coeffs.iter().fold(0u64, |acc, &d| acc * self.spec.p + d) as Code)
    }

    /// Image of an integer under `Z -> GF(p) <= GF(q)`.
    pub fn from_int(&self, k: u64) -> Code {
        let mut v = vec![0; self.spec.n as usize];
        v[0] = k % self.spec.p;
        self.code(&v).expect("reduced")
    }

    /// Power basis `1, x, ..., x^{n-1}` as codes.
    pub fn power_basis(&self) -> Vec<Code> {
        let n = self.spec.n as usize;
        (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                self.code(&v).expect("reduced")
            })
            .collect()
    }

    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        Ok(FieldElement {
            field: Arc::clone(self),
            code: self.code(coeffs)?,
        })
    }

    pub fn element_from_code(self: &Arc<Self>, code: Code) -> FieldElement {
        assert!((code as usize) < self.q, "code out of range");
        FieldElement {
            field: Arc::clone(self),
            code,
        }
    }

    /// Smallest element (in code order) of multiplicative order `q - 1`.
    pub fn primitive_code(&self) -> Code {
        let target = self.q as u64 - 1;
        (1..self.q as Code)
            .find(|&a| self.mult_order(a) == Some(target))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

/// Canonical generator of the multiplicative group.
pub fn primitive_element(field: &Arc<Field>) -> FieldElement {
    field.element_from_code(field.primitive_code())
}

/// An element of a specific field.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    code: Code,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn code(&self) -> Code {
        self.code
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            code: self.field.pow(self.code, e),
        }
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        let code = self
            .field
            .inv(self.code)
            .ok_or(Error::DivisionByZero(self.field.q as u64))?;
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            code,
        })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && *self.field == *other.field
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

/// Field arithmetic with mismatch and zero-division checks.
pub fn arith(a: &FieldElement, b: &FieldElement, kind: ArithKind) -> Result<FieldElement> {
    if !Arc::ptr_eq(&a.field, &b.field) && *a.field != *b.field {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    let code = match kind {
        ArithKind::Add => f.add(a.code, b.code),
        ArithKind::Sub => f.sub(a.code, b.code),
        ArithKind::Mul => f.mul(a.code, b.code),
        ArithKind::Div => {
            let inv = f.inv(b.code).ok_or(Error::DivisionByZero(f.q as u64))?;
            f.mul(a.code, inv)
        }
    };
    Ok(FieldElement {
        field: Arc::clone(f),
        code,
    })
}
