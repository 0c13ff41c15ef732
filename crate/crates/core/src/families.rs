//! Deterministic constructors for the group families used throughout the
//! crate. Every constructor enumerates its result and checks the order.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::gf::{make_field, primitive_element, Field};
use crate::groups::{FiniteGroup, GroupElement, Matrix, Permutation, DEFAULT_ORDER_CAP};

/// Largest group `to_permutation` will turn into a regular representation.
pub const REGULAR_REPRESENTATION_CAP: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Sym,
    Alt,
    Dihedral,
    Cyclic,
    ElemAbelian,
}

fn checked(group: FiniteGroup, expected: u64) -> Result<FiniteGroup> {
    let order = group.order()? as u64;
    if order != expected {
        return Err(Error::Inconsistent(format!(
            "{} has order {order}, expected {expected}",
            group.name()
        )));
    }
    Ok(group)
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Result<GroupElement> {
    Ok(Permutation::from_cycles(degree, cycles)?.into())
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn standard_group(kind: StandardKind, params: &[u64]) -> Result<FiniteGroup> {
    let arg = |i: usize| {
        params
            .get(i)
            .copied()
            .ok_or_else(|| Error::invalid(format!("{kind:?} needs {} parameter(s)", i + 1)))
    };
    match kind {
        StandardKind::Sym => symmetric(arg(0)?),
        StandardKind::Alt => alternating(arg(0)?),
        StandardKind::Dihedral => dihedral(arg(0)?),
        StandardKind::Cyclic => cyclic(arg(0)?),
        StandardKind::ElemAbelian => elementary_abelian(arg(0)?, arg(1)? as u32),
    }
}

/// `S_n` generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric(n: u64) -> Result<FiniteGroup> {
    if !(2..=9).contains(&n) {
        return Err(Error::invalid(format!("sym needs 2 <= n <= 9, got {n}")));
    }
    let d = n as usize;
    let long: Vec<u32> = (0..n as u32).collect();
    let g = FiniteGroup::new(format!("sym({n})"), vec![perm(d, &[&[0, 1]])?, perm(d, &[&long])?])?;
    checked(g, factorial(n))
}

/// `A_n` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: u64) -> Result<FiniteGroup> {
    if !(2..=9).contains(&n) {
        return Err(Error::invalid(format!("alt needs 2 <= n <= 9, got {n}")));
    }
    let d = n as usize;
    let mut gens = Vec::new();
    for i in 2..n as u32 {
        gens.push(perm(d, &[&[0, 1, i]])?);
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(d).into());
    }
    checked(FiniteGroup::new(format!("alt({n})"), gens)?, factorial(n) / 2)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: u64) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::invalid(format!("dihedral needs n >= 3, got {n}")));
    }
    let rotation: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let reflection: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    let g = FiniteGroup::new(
        format!("dihedral({n})"),
        vec![Permutation::new(rotation)?.into(), Permutation::new(reflection)?.into()],
    )?;
    checked(g, 2 * n)
}

pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::invalid("cyclic needs n >= 1"));
    }
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    checked(
        FiniteGroup::new(format!("cyclic({n})"), vec![Permutation::new(cycle)?.into()])?,
        n,
    )
}

/// `k` disjoint `p`-cycles on `p*k` points.
pub fn elementary_abelian(p: u64, k: u32) -> Result<FiniteGroup> {
    if !is_prime(p) || k == 0 {
        return Err(Error::invalid(format!(
            "elem_abelian needs a prime and k >= 1, got ({p}, {k})"
        )));
    }
    let order = p.checked_pow(k).filter(|&o| o <= DEFAULT_ORDER_CAP as u64);
    let order = order.ok_or_else(|| Error::cap(format!("order {p}^{k}"), DEFAULT_ORDER_CAP as u64))?;
    let d = (p * k as u64) as usize;
    let gens = (0..k as u64)
        .map(|b| {
            let cycle: Vec<u32> = (0..p).map(|j| (b * p + j) as u32).collect();
            perm(d, &[&cycle])
        })
        .collect::<Result<Vec<_>>>()?;
    checked(FiniteGroup::new(format!("elem_abelian({p},{k})"), gens)?, order)
}

/// `Q_8` as the subgroup of `SL_2(3)` generated by `i = [[0,1],[-1,0]]` and
/// `j = [[1,1],[1,-1]]`.
pub fn quaternion() -> Result<FiniteGroup> {
    let f = make_field(3, 1)?;
    let i = Matrix::from_ints(&f, 2, &[0, 1, -1, 0])?;
    let j = Matrix::from_ints(&f, 2, &[1, 1, 1, -1])?;
    checked(FiniteGroup::new("quaternion", vec![i.into(), j.into()])?, 8)
}

fn unitriangular_generators(f: &Arc<Field>) -> Result<Vec<GroupElement>> {
    let x = Matrix::from_ints(f, 3, &[1, 1, 0, 0, 1, 0, 0, 0, 1])?;
    let y = Matrix::from_ints(f, 3, &[1, 0, 0, 0, 1, 1, 0, 0, 1])?;
    Ok(vec![x.into(), y.into()])
}

/// Upper unitriangular 3x3 matrices over GF(p), order `p^3`.
pub fn heisenberg(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::invalid(format!("heisenberg needs an odd prime, got {p}")));
    }
    if p.pow(3) > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::cap(format!("order {p}^3"), DEFAULT_ORDER_CAP as u64));
    }
    let f = make_field(p, 1)?;
    checked(
        FiniteGroup::new(format!("heisenberg({p})"), unitriangular_generators(&f)?)?,
        p.pow(3),
    )
}

/// Field for a prime power `q`.
pub fn field_for(q: u64) -> Result<Arc<Field>> {
    let (p, n) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
    make_field(p, n)
}

fn transvections(f: &Arc<Field>) -> Result<Vec<GroupElement>> {
    let one = f.one();
    let zero = f.zero();
    let alpha = primitive_element(f).code();
    let mut betas = vec![one];
    if f.spec().n > 1 {
        betas.push(alpha);
    }
    let mut gens = Vec::new();
    for &b in &betas {
        gens.push(Matrix::new(Arc::clone(f), 2, vec![one, b, zero, one])?.into());
        gens.push(Matrix::new(Arc::clone(f), 2, vec![one, zero, b, one])?.into());
    }
    Ok(gens)
}

/// `SL_2(q)` generated by the transvections with parameters `1` and the
/// primitive element.
pub fn sl2(f: &Arc<Field>) -> Result<FiniteGroup> {
    let q = f.order() as u64;
    let order = q * (q * q - 1);
    if order > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::cap(format!("order of SL_2({q})"), DEFAULT_ORDER_CAP as u64));
    }
    checked(FiniteGroup::new(format!("sl2({q})"), transvections(f)?)?, order)
}

/// `GL_2(q)`: the `SL_2` generators plus `diag(alpha, 1)`.
pub fn gl2(f: &Arc<Field>) -> Result<FiniteGroup> {
    let q = f.order() as u64;
    if q < 3 {
        return Err(Error::invalid(format!("gl2 needs q >= 3, got {q}")));
    }
    let order = (q * q - 1) * (q * q - q);
    if order > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::cap(format!("order of GL_2({q})"), DEFAULT_ORDER_CAP as u64));
    }
    let mut gens = transvections(f)?;
    let alpha = primitive_element(f).code();
    gens.push(Matrix::new(Arc::clone(f), 2, vec![alpha, 0, 0, f.one()])?.into());
    checked(FiniteGroup::new(format!("gl2({q})"), gens)?, order)
}

/// Affine maps `x -> a x + b` of GF(q) acting on the `q` field codes.
pub fn agl1(f: &Arc<Field>) -> Result<FiniteGroup> {
    let q = f.order();
    if q < 3 {
        return Err(Error::invalid(format!("agl1 needs q >= 3, got {q}")));
    }
    let mut gens = Vec::new();
    for b in f.power_basis() {
        let images = (0..q as u16).map(|x| f.add(x, b) as u32).collect();
        gens.push(Permutation::new(images)?.into());
    }
    let alpha = primitive_element(f).code();
    let images = (0..q as u16).map(|x| f.mul(alpha, x) as u32).collect();
    gens.push(Permutation::new(images)?.into());
    let q = q as u64;
    checked(FiniteGroup::new(format!("agl1({q})"), gens)?, q * (q - 1))
}

/// Heisenberg group over GF(p) extended by `diag(1, lambda^-1, 1)` where
/// `lambda` has multiplicative order `d`. The extension fixes the center
/// and acts fixed-point-freely on the central quotient.
pub fn type3_frobenius(p: u64, d: u64) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::invalid(format!("type3 needs an odd prime, got {p}")));
    }
    if d <= 1 || !(p - 1).is_multiple_of(d) {
        return Err(Error::invalid(format!(
            "type3 needs 1 < d | p - 1, got d = {d}, p = {p}"
        )));
    }
    let order = p.pow(3) * d;
    if order > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::cap(format!("order {order}"), DEFAULT_ORDER_CAP as u64));
    }
    let f = make_field(p, 1)?;
    let lambda = primitive_element(&f).pow((p - 1) / d);
    let lambda_inv = lambda.inverse()?.code();
    let one = f.one();
    let mut gens = unitriangular_generators(&f)?;
    gens.push(Matrix::new(Arc::clone(&f), 3, vec![one, 0, 0, 0, lambda_inv, 0, 0, 0, one])?.into());
    checked(FiniteGroup::new(format!("type3({p},{d})"), gens)?, order)
}

/// `C_p wr C_p` on `p^2` points: a `p`-cycle on the first block of `p`
/// points, and the permutation cycling the blocks.
pub fn remark_group(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::invalid(format!("remark needs an odd prime, got {p}")));
    }
    let order = p.checked_pow(p as u32 + 1).filter(|&o| o <= DEFAULT_ORDER_CAP as u64);
    let order = order.ok_or_else(|| Error::cap(format!("order {p}^{}", p + 1), DEFAULT_ORDER_CAP as u64))?;
    let d = (p * p) as usize;
    let block: Vec<u32> = (0..p as u32).collect();
    let shift: Vec<u32> = (0..d as u32)
        .map(|x| {
            let (b, j) = (x / p as u32, x % p as u32);
            ((b + 1) % p as u32) * p as u32 + j
        })
        .collect();
    let gens = vec![perm(d, &[&block])?, Permutation::new(shift)?.into()];
    checked(FiniteGroup::new(format!("remark({p})"), gens)?, order)
}

/// Direct product of two permutation groups acting on disjoint point sets.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let degree = |grp: &FiniteGroup| match grp.identity() {
        GroupElement::Perm(p) => Ok(p.degree()),
        other => Err(Error::invalid(format!(
            "direct_product needs permutation groups, {} is a {} group",
            grp.name(),
            other.kind()
        ))),
    };
    let (dg, dh) = (degree(g)?, degree(h)?);
    let expected = g.order()? as u64 * h.order()? as u64;
    if expected > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::cap(
            format!("order of {} x {}", g.name(), h.name()),
            DEFAULT_ORDER_CAP as u64,
        ));
    }
    let mut gens = Vec::new();
    for x in g.generators() {
        if let GroupElement::Perm(p) = x {
            let images = p.images().iter().copied().chain(dg as u32..(dg + dh) as u32).collect();
            gens.push(Permutation::new(images)?.into());
        }
    }
    for y in h.generators() {
        if let GroupElement::Perm(p) = y {
            let images = (0..dg as u32)
                .chain(p.images().iter().map(|&i| i + dg as u32))
                .collect();
            gens.push(Permutation::new(images)?.into());
        }
    }
    checked(FiniteGroup::new(format!("{}x{}", g.name(), h.name()), gens)?, expected)
}

/// Right-regular permutation representation on the enumerated elements.
pub fn to_permutation(g: &FiniteGroup) -> Result<FiniteGroup> {
    let n = g.order()?;
    if n > REGULAR_REPRESENTATION_CAP {
        return Err(Error::cap(
            format!("regular representation of {} (order {n})", g.name()),
            REGULAR_REPRESENTATION_CAP as u64,
        ));
    }
    let gens = g
        .generator_indices()
        .into_iter()
        .map(|s| {
            let images = (0..n).map(|i| g.mul(i, s) as u32).collect();
            Ok(Permutation::new(images)?.into())
        })
        .collect::<Result<Vec<_>>>()?;
    checked(FiniteGroup::new(format!("perm({})", g.name()), gens)?, n as u64)
}

/// A named family instance, as used by the corpus and the `construct`
/// command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum FamilyRequest {
    Sym {
        n: u64,
    },
    Alt {
        n: u64,
    },
    Dihedral {
        n: u64,
    },
    Cyclic {
        n: u64,
    },
    ElemAbelian {
        p: u64,
        k: u32,
    },
    Quaternion,
    Heisenberg {
        p: u64,
    },
    Sl2 {
        q: u64,
    },
    Gl2 {
        q: u64,
    },
    Agl1 {
        q: u64,
    },
    Type3 {
        p: u64,
        d: u64,
    },
    Remark {
        p: u64,
    },
    Product {
        left: Box<FamilyRequest>,
        right: Box<FamilyRequest>,
    },
    Regular {
        inner: Box<FamilyRequest>,
    },
}

impl FamilyRequest {
    pub fn product(left: FamilyRequest, right: FamilyRequest) -> Self {
        FamilyRequest::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn regular(inner: FamilyRequest) -> Self {
        FamilyRequest::Regular { inner: Box::new(inner) }
    }

    /// Order the construction will have, when the parameters are sane.
    pub fn projected_order(&self) -> Option<u64> {
        use FamilyRequest::*;
        let pow = |b: u64, e: u64| b.checked_pow(e as u32);
        match self {
            Sym { n } => (*n <= 20).then(|| factorial(*n)),
            Alt { n } => (*n <= 20).then(|| factorial(*n) / 2),
            Dihedral { n } => n.checked_mul(2),
            Cyclic { n } => Some(*n),
            ElemAbelian { p, k } => pow(*p, *k as u64),
            Quaternion => Some(8),
            Heisenberg { p } => pow(*p, 3),
            Sl2 { q } => q.checked_mul(q.checked_mul(*q)?.checked_sub(1)?),
            Gl2 { q } => (q.checked_mul(*q)?.checked_sub(1)?).checked_mul(q.checked_mul(*q)?.checked_sub(*q)?),
            Agl1 { q } => q.checked_mul(q.checked_sub(1)?),
            Type3 { p, d } => pow(*p, 3)?.checked_mul(*d),
            Remark { p } => pow(*p, p + 1),
            Product { left, right } => left.projected_order()?.checked_mul(right.projected_order()?),
            Regular { inner } => inner.projected_order(),
        }
    }

    /// Builds the group; refuses before enumeration when the projected
    /// order exceeds `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        use FamilyRequest::*;
        match self.projected_order() {
            Some(o) if o <= cap as u64 => {}
            _ => return Err(Error::cap(format!("order of {self}"), cap as u64)),
        }
        let g = match self {
            Sym { n } => symmetric(*n)?,
            Alt { n } => alternating(*n)?,
            Dihedral { n } => dihedral(*n)?,
            Cyclic { n } => cyclic(*n)?,
            ElemAbelian { p, k } => elementary_abelian(*p, *k)?,
            Quaternion => quaternion()?,
            Heisenberg { p } => heisenberg(*p)?,
            Sl2 { q } => sl2(&field_for(*q)?)?,
            Gl2 { q } => gl2(&field_for(*q)?)?,
            Agl1 { q } => agl1(&field_for(*q)?)?,
            Type3 { p, d } => type3_frobenius(*p, *d)?,
            Remark { p } => remark_group(*p)?,
            Product { left, right } => direct_product(&left.build(cap)?, &right.build(cap)?)?,
            Regular { inner } => to_permutation(&inner.build(cap)?)?,
        };
        let g = g.renamed(self.to_string(), cap);
        g.enumerate()?;
        Ok(g)
    }

    /// Parses `family param...`, e.g. `["sl2", "7"]` or
    /// `["product", "agl1 5", "cyclic 3"]`.
    pub fn parse(args: &[&str]) -> Result<Self> {
        use FamilyRequest::*;
        let (name, rest) = args
            .split_first()
            .ok_or_else(|| Error::invalid("missing family name"))?;
        let nums = || -> Result<Vec<u64>> {
            rest.iter()
                .map(|s| {
                    s.parse::<u64>()
                        .map_err(|_| Error::invalid(format!("bad parameter {s:?}")))
                })
                .collect()
        };
        let want = |count: usize| -> Result<Vec<u64>> {
            let v = nums()?;
            if v.len() != count {
                return Err(Error::invalid(format!(
                    "{name} takes {count} parameter(s), got {}",
                    v.len()
                )));
            }
            Ok(v)
        };
        let sub = |s: &str| FamilyRequest::parse(&s.split_whitespace().collect::<Vec<_>>());
        Ok(match *name {
            "sym" => Sym { n: want(1)?[0] },
            "alt" => Alt { n: want(1)?[0] },
            "dihedral" => Dihedral { n: want(1)?[0] },
            "cyclic" => Cyclic { n: want(1)?[0] },
            "elem_abelian" => {
                let v = want(2)?;
                ElemAbelian {
                    p: v[0],
                    k: v[1] as u32,
                }
            }
            "quaternion" => {
                want(0)?;
                Quaternion
            }
            "heisenberg" => Heisenberg { p: want(1)?[0] },
            "sl2" => Sl2 { q: want(1)?[0] },
            "gl2" => Gl2 { q: want(1)?[0] },
            "agl1" => Agl1 { q: want(1)?[0] },
            "type3" => {
                let v = want(2)?;
                Type3 { p: v[0], d: v[1] }
            }
            "remark" => Remark { p: want(1)?[0] },
            "product" => match rest {
                [a, b] => FamilyRequest::product(sub(a)?, sub(b)?),
                _ => return Err(Error::invalid("product takes two quoted family specs")),
            },
            "regular" if !rest.is_empty() => FamilyRequest::regular(sub(&rest.join(" "))?),
            "regular" => return Err(Error::invalid("regular takes a family spec")),
            other => return Err(Error::invalid(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for FamilyRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyRequest::*;
        match self {
            Sym { n } => write!(f, "sym({n})"),
            Alt { n } => write!(f, "alt({n})"),
            Dihedral { n } => write!(f, "dihedral({n})"),
            Cyclic { n } => write!(f, "cyclic({n})"),
            ElemAbelian { p, k } => write!(f, "elem_abelian({p},{k})"),
            Quaternion => write!(f, "quaternion"),
            Heisenberg { p } => write!(f, "heisenberg({p})"),
            Sl2 { q } => write!(f, "sl2({q})"),
            Gl2 { q } => write!(f, "gl2({q})"),
            Agl1 { q } => write!(f, "agl1({q})"),
            Type3 { p, d } => write!(f, "type3({p},{d})"),
            Remark { p } => write!(f, "remark({p})"),
            Product { left, right } => write!(f, "{left}x{right}"),
            Regular { inner } => write!(f, "perm({inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classgraph::class_size_set;

    fn n_set(g: &FiniteGroup) -> Vec<u64> {
        class_size_set(g).unwrap().n_set
    }

    fn sizes(g: &FiniteGroup) -> Vec<u64> {
        class_size_set(g).unwrap().sizes
    }

    #[test]
    fn standard_groups() {
        assert_eq!(standard_group(StandardKind::Sym, &[4]).unwrap().order().unwrap(), 24);
        let d4 = standard_group(StandardKind::Dihedral, &[4]).unwrap();
        assert_eq!(d4.order().unwrap(), 8);
        assert_eq!(n_set(&d4), vec![2]);
        let c6 = standard_group(StandardKind::Cyclic, &[6]).unwrap();
        assert!(c6.is_abelian());
        assert_eq!(standard_group(StandardKind::Alt, &[5]).unwrap().order().unwrap(), 60);
        assert_eq!(
            standard_group(StandardKind::ElemAbelian, &[3, 2])
                .unwrap()
                .order()
                .unwrap(),
            9
        );
        assert!(standard_group(StandardKind::Sym, &[10]).is_err());
        assert!(standard_group(StandardKind::Dihedral, &[2]).is_err());
        assert!(standard_group(StandardKind::ElemAbelian, &[4, 2]).is_err());
    }

    #[test]
    fn heisenberg_groups() {
        let h3 = heisenberg(3).unwrap();
        assert_eq!(h3.order().unwrap(), 27);
        assert_eq!(n_set(&h3), vec![3]);
        assert_eq!(h3.center().unwrap().order(), 3);
        let h5 = heisenberg(5).unwrap();
        assert_eq!(h5.order().unwrap(), 125);
        assert_eq!(n_set(&h5), vec![5]);
        assert!(h5.element_orders().unwrap().iter().all(|&o| o == 1 || o == 5));
        assert!(heisenberg(2).is_err());
    }

    #[test]
    fn special_linear_groups() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
            let g = sl2(&field_for(q).unwrap()).unwrap();
            assert_eq!(g.order().unwrap() as u64, q * (q * q - 1), "q = {q}");
        }
        let n = |q| n_set(&sl2(&field_for(q).unwrap()).unwrap());
        assert_eq!(n(5), vec![12, 20, 30]);
        assert_eq!(n(9), vec![40, 72, 90]);
        assert_eq!(n(4), vec![12, 15, 20]);
    }

    #[test]
    fn general_linear_groups() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let g = gl2(&field_for(q).unwrap()).unwrap();
            assert_eq!(g.order().unwrap() as u64, (q * q - 1) * (q * q - q));
        }
        let n = |q| n_set(&gl2(&field_for(q).unwrap()).unwrap());
        assert_eq!(n(5), vec![20, 24, 30]);
        assert_eq!(n(4), vec![12, 15, 20]);
        let g3 = n(3);
        assert!(g3.contains(&6) && g3.contains(&12));
        assert!(gl2(&field_for(2).unwrap()).is_err());
    }

    #[test]
    fn affine_groups() {
        let n = |q| n_set(&agl1(&field_for(q).unwrap()).unwrap());
        assert_eq!(n(5), vec![4, 5]);
        assert_eq!(n(8), vec![7, 8]);
        assert_eq!(n(4), vec![3, 4]);
        assert_eq!(agl1(&field_for(9).unwrap()).unwrap().order().unwrap(), 72);
    }

    #[test]
    fn type3_groups() {
        let g = type3_frobenius(7, 3).unwrap();
        assert_eq!(g.order().unwrap(), 1029);
        assert_eq!(n_set(&g), vec![21, 49]);
        assert_eq!(n_set(&type3_frobenius(5, 2).unwrap()), vec![10, 25]);
        assert_eq!(n_set(&type3_frobenius(3, 2).unwrap()), vec![6, 9]);
        assert!(type3_frobenius(7, 4).is_err());
        assert!(type3_frobenius(7, 1).is_err());
    }

    #[test]
    fn remark_groups() {
        let g = remark_group(3).unwrap();
        assert_eq!(g.order().unwrap(), 81);
        assert_eq!(n_set(&g), vec![3, 9]);
    }

    #[test]
    fn products_and_regular_representations() {
        let t1 = direct_product(&cyclic(5).unwrap(), &to_permutation(&heisenberg(3).unwrap()).unwrap()).unwrap();
        assert_eq!(t1.order().unwrap(), 135);
        assert_eq!(n_set(&t1), vec![3]);
        let t2 = direct_product(&agl1(&field_for(5).unwrap()).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert_eq!(t2.order().unwrap(), 60);
        assert_eq!(n_set(&t2), vec![4, 5]);
        assert_eq!(t2.center().unwrap().order(), 3);

        let s3 = symmetric(3).unwrap();
        let s3x1 = direct_product(&s3, &cyclic(1).unwrap()).unwrap();
        assert_eq!(sizes(&s3x1), sizes(&s3));

        // Class multiset of a product is the multiset of pairwise products.
        let (a, b) = (symmetric(4).unwrap(), dihedral(5).unwrap());
        let mut expected: Vec<u64> = sizes(&a)
            .iter()
            .flat_map(|x| sizes(&b).into_iter().map(move |y| x * y))
            .collect();
        expected.sort_unstable();
        assert_eq!(sizes(&direct_product(&a, &b).unwrap()), expected);

        assert!(direct_product(&heisenberg(3).unwrap(), &s3).is_err());

        let q8 = quaternion().unwrap();
        let q8p = to_permutation(&q8).unwrap();
        assert!(matches!(q8p.identity(), GroupElement::Perm(p) if p.degree() == 8));
        assert_eq!(sizes(&q8p), sizes(&q8));
        let h3p = to_permutation(&heisenberg(3).unwrap()).unwrap();
        assert!(matches!(h3p.identity(), GroupElement::Perm(p) if p.degree() == 27));
        let trivial = to_permutation(&cyclic(1).unwrap()).unwrap();
        assert_eq!(trivial.order().unwrap(), 1);
    }

    #[test]
    fn requests_parse_and_build() {
        let r = FamilyRequest::parse(&["type3", "7", "3"]).unwrap();
        assert_eq!(r, FamilyRequest::Type3 { p: 7, d: 3 });
        let p = FamilyRequest::parse(&["product", "agl1 5", "cyclic 3"]).unwrap();
        assert_eq!(p.to_string(), "agl1(5)xcyclic(3)");
        assert_eq!(p.build(1000).unwrap().order().unwrap(), 60);
        assert!(matches!(p.build(50), Err(Error::CapExceeded { .. })));
        let nested = FamilyRequest::parse(&["product", "regular sl2 5", "cyclic 3"]).unwrap();
        assert_eq!(
            nested,
            FamilyRequest::product(
                FamilyRequest::regular(FamilyRequest::Sl2 { q: 5 }),
                FamilyRequest::Cyclic { n: 3 }
            )
        );
        assert_eq!(
            FamilyRequest::parse(&["regular", "quaternion"])
                .unwrap()
                .build(100)
                .unwrap()
                .len(),
            8
        );
        assert!(FamilyRequest::parse(&["regular"]).is_err());
        assert!(FamilyRequest::parse(&["sl2"]).is_err());
        assert!(FamilyRequest::parse(&["nope", "1"]).is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<FamilyRequest>(&json).unwrap(), p);
    }
}
