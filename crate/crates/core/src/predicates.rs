//! Centralizer predicates: SP (class sizes form a primitive set), CH
//! (commuting noncentral elements have equal centralizer orders), CA
//! (noncentral centralizers are abelian) and F (centralizer containment
//! forces equality).
//!
//! Element checks only visit class representatives for `x`; all four
//! properties are invariant under conjugating `x` and `y` together.

use crate::classgraph::{class_size_set, divisor_pair, is_primitive};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Two element indices with their centralizer orders, the smaller first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementPair {
    pub x: usize,
    pub y: usize,
    pub centralizer_orders: (u64, u64),
}

impl ElementPair {
    fn ordered(g: &FiniteGroup, a: usize, b: usize) -> Result<Self> {
        let (ca, cb) = (g.centralizer_order(a)? as u64, g.centralizer_order(b)? as u64);
        Ok(if ca <= cb {
            ElementPair {
                x: a,
                y: b,
                centralizer_orders: (ca, cb),
            }
        } else {
            ElementPair {
                x: b,
                y: a,
                centralizer_orders: (cb, ca),
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateReport {
    pub rank: usize,
    pub sp: bool,
    pub ch: bool,
    pub ca: bool,
    pub f: bool,
    /// Class sizes `(a, b)` with `a | b`.
    pub sp_witness: Option<(u64, u64)>,
    pub ch_witness: Option<ElementPair>,
    /// Representative whose centralizer is nonabelian.
    pub ca_witness: Option<usize>,
    /// `C(x)` properly contained in `C(y)`.
    pub f_witness: Option<ElementPair>,
}

impl PredicateReport {
    /// `sp => ch`, `ca => ch` and `ch => f`.
    pub fn implications_hold(&self) -> bool {
        (!self.sp || self.ch) && (!self.ca || self.ch) && (!self.ch || self.f)
    }
}

pub fn predicates(g: &FiniteGroup) -> Result<PredicateReport> {
    let (sp, sp_witness) = is_sp(g)?;
    let (ch, ch_witness) = is_ch(g)?;
    let (ca, ca_witness) = is_ca(g)?;
    let (f, f_witness) = is_f(g)?;
    Ok(PredicateReport {
        rank: rank(g)?,
        sp,
        ch,
        ca,
        f,
        sp_witness,
        ch_witness,
        ca_witness,
        f_witness,
    })
}

pub fn rank(g: &FiniteGroup) -> Result<usize> {
    Ok(class_size_set(g)?.rank())
}

fn noncentral_reps(g: &FiniteGroup) -> Result<Vec<usize>> {
    Ok(g.conjugacy_classes()?
        .iter()
        .filter(|c| c.size > 1)
        .map(|c| c.representative)
        .collect())
}

/// Decided twice, from the class-size set and from centralizer orders of
/// representative pairs counted directly; disagreement is an error.
pub fn is_sp(g: &FiniteGroup) -> Result<(bool, Option<(u64, u64)>)> {
    let n_set = class_size_set(g)?.n_set;
    let by_sizes = is_primitive(&n_set)?;

    let reps = noncentral_reps(g)?;
    let orders: Vec<u64> = reps
        .iter()
        .map(|&x| g.centralizer_mask(x).into_iter().filter(|&b| b).count() as u64)
        .collect();
    let by_elements = !orders.iter().any(|&a| orders.iter().any(|&b| a != b && b % a == 0));

    if by_sizes != by_elements {
        return Err(Error::Inconsistent(format!(
            "{}: primitivity of N = {n_set:?} is {by_sizes}, centralizer-order test gives {by_elements}",
            g.name()
        )));
    }
    let witness = if by_sizes { None } else { divisor_pair(&n_set)? };
    Ok((by_sizes, witness))
}

pub fn is_ch(g: &FiniteGroup) -> Result<(bool, Option<ElementPair>)> {
    let center = g.center()?;
    for x in noncentral_reps(g)? {
        let cx = g.centralizer_order(x)?;
        for (y, _) in g.centralizer_mask(x).iter().enumerate().filter(|(_, &m)| m) {
            if !center.contains(y) && g.centralizer_order(y)? != cx {
                return Ok((false, Some(ElementPair::ordered(g, x, y)?)));
            }
        }
    }
    Ok((true, None))
}

pub fn is_ca(g: &FiniteGroup) -> Result<(bool, Option<usize>)> {
    for x in noncentral_reps(g)? {
        if !g.centralizer(x).is_abelian() {
            return Ok((false, Some(x)));
        }
    }
    Ok((true, None))
}

/// `C(x) <= C(y)` holds exactly when `y` lies in the center of `C(x)`, so
/// only those `y` are examined; containment is then proper iff the orders
/// differ.
pub fn is_f(g: &FiniteGroup) -> Result<(bool, Option<ElementPair>)> {
    let center = g.center()?;
    for x in noncentral_reps(g)? {
        let cx = g.centralizer(x);
        let gens = cx.generators();
        let order_x = cx.order();
        for &y in cx.members() {
            if center.contains(y) || !gens.iter().all(|&h| g.commute(h, y)) {
                continue;
            }
            if g.centralizer_order(y)? != order_x {
                return Ok((false, Some(ElementPair::ordered(g, x, y)?)));
            }
        }
    }
    Ok((true, None))
}
