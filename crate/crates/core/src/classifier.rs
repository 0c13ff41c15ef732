//! Structural recognition of groups whose class sizes form a primitive set.
//!
//! Five shapes are tried in a fixed order:
//! I   `G = T x P`, `T` abelian, `P` a `p`-group of conjugate rank 1;
//! II  `G/Z` Frobenius with kernel `K/Z` and complement `L/Z`, `K` and `L`
//!     abelian;
//! III `G/Z` Frobenius, `K = PZ` for a normal Sylow `P` of rank 1 with
//!     `Z(P) = Z ∩ P`, `L` abelian;
//! IV  `G/Z` looks like `PSL(2,q)` or `PGL(2,q)` and `G'` like `SL(2,q)`,
//!     `q > 3`;
//! V   `G/Z` looks like `PSL(2,9)` or `PGL(2,9)` and `G'` has order 2160
//!     with class sizes `{72, 90, 120}`.
//!
//! IV and V compare orders and class-size multisets against reference
//! groups; they are not isomorphism tests.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, prime_power};
use crate::classgraph::{class_size_set, ClassSizeSet};
use crate::error::{Error, Result};
use crate::families;
use crate::groups::{FiniteGroup, Quotient, SubgroupHandle, DEFAULT_ORDER_CAP};
use crate::predicates::{is_sp, rank};

pub const FINGERPRINT_LIMITATION: &str = "matched by order and class-size multisets only; isomorphism not tested";

/// Largest `q` tried for reference linear groups.
const MAX_REFERENCE_Q: u64 = 256;

#[derive(Debug, Clone)]
pub struct FrobeniusStructure {
    pub kernel: SubgroupHandle,
    pub complement_order: usize,
    pub complement: Option<SubgroupHandle>,
}

/// Finds a proper nontrivial normal `N` of coprime index with
/// `C_Q(k) <= N` for every `1 != k` in `N`. Such an `N` is the Frobenius
/// kernel of `Q`, hence unique.
pub fn find_frobenius_structure(q: &FiniteGroup) -> Result<Option<FrobeniusStructure>> {
    let order = q.order()?;
    let classes = q.conjugacy_classes()?;
    let mut found: Option<SubgroupHandle> = None;
    for n in q.normal_subgroups()? {
        if n.order() == 1 || n.order() == order || gcd(n.order() as u64, (order / n.order()) as u64) != 1 {
            continue;
        }
        // N is a union of classes; conjugate elements have conjugate centralizers.
        let fixed_point_free = classes
            .iter()
            .filter(|c| c.representative != 0 && n.contains(c.representative))
            .all(|c| n.contains_all(&q.centralizer_mask(c.representative)));
        if !fixed_point_free {
            continue;
        }
        if let Some(prev) = &found {
            return Err(Error::Inconsistent(format!(
                "{}: two Frobenius kernel candidates of orders {} and {}",
                q.name(),
                prev.order(),
                n.order()
            )));
        }
        found = Some(n);
    }
    let Some(kernel) = found else {
        return Ok(None);
    };
    let complement_order = order / kernel.order();
    // An abelian complement is the centralizer of each of its nonidentity elements.
    let complement = classes
        .iter()
        .filter(|c| !kernel.contains(c.representative))
        .map(|c| c.representative)
        .find(|&x| q.centralizer_order(x).ok() == Some(complement_order))
        .map(|x| q.centralizer(x));
    Ok(Some(FrobeniusStructure {
        kernel,
        complement_order,
        complement,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Abelian,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeV,
    NotSP,
    Unrecognized,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum Evidence {
    TypeI {
        p: u64,
        #[serde(rename = "P")]
        p_order: usize,
        #[serde(rename = "T")]
        t_order: usize,
    },
    TypeII {
        #[serde(rename = "Z")]
        z_order: usize,
        #[serde(rename = "K")]
        k_order: usize,
        #[serde(rename = "L")]
        l_order: usize,
        kernel_quotient: usize,
        complement_quotient: usize,
    },
    TypeIII {
        p: u64,
        #[serde(rename = "Z")]
        z_order: usize,
        #[serde(rename = "P")]
        p_order: usize,
        #[serde(rename = "K")]
        k_order: usize,
        #[serde(rename = "L")]
        l_order: usize,
        center_of_p: usize,
        /// `Ind(G,x) = Ind(P,x)|L/Z|` for every noncentral `x` in `P`.
        index_relation: bool,
    },
    TypeIV {
        q: u64,
        quotient: ReferenceKind,
        quotient_order: usize,
        derived_order: usize,
        limitation: &'static str,
    },
    TypeV {
        quotient: ReferenceKind,
        quotient_order: usize,
        derived_order: usize,
        limitation: &'static str,
    },
}

impl Evidence {
    pub fn verdict(&self) -> Verdict {
        match self {
            Evidence::TypeI { .. } => Verdict::TypeI,
            Evidence::TypeII { .. } => Verdict::TypeII,
            Evidence::TypeIII { .. } => Verdict::TypeIII,
            Evidence::TypeIV { .. } => Verdict::TypeIV,
            Evidence::TypeV { .. } => Verdict::TypeV,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpClassification {
    pub verdict: Verdict,
    /// One record per shape whose conditions hold, in matching order.
    pub evidence: Vec<Evidence>,
    /// Divisor pair of class sizes for `NotSP`.
    pub witness: Option<(u64, u64)>,
    /// Why an SP group was left unrecognized.
    pub reason: Option<String>,
}

impl SpClassification {
    pub fn passing(&self) -> Vec<Verdict> {
        self.evidence.iter().map(Evidence::verdict).collect()
    }
}

/// `G/Z(G)` with the handles shared by clauses II-V.
struct CentralQuotient {
    center: SubgroupHandle,
    quotient: Quotient,
    frobenius: Option<FrobeniusStructure>,
}

impl CentralQuotient {
    fn new(g: &FiniteGroup) -> Result<Self> {
        let center = g.center()?;
        let quotient = g.quotient(&center)?;
        let q = quotient.group();
        let frobenius = if q.is_abelian() {
            None
        } else {
            find_frobenius_structure(q)?
        };
        Ok(CentralQuotient {
            center,
            quotient,
            frobenius,
        })
    }

    /// Preimages `K` and `L` of the kernel and the recovered complement.
    fn preimages(&self) -> Option<(SubgroupHandle, SubgroupHandle)> {
        let fs = self.frobenius.as_ref()?;
        let l = fs.complement.as_ref()?;
        Some((self.quotient.preimage(&fs.kernel), self.quotient.preimage(l)))
    }
}

pub fn classify(g: &FiniteGroup) -> Result<SpClassification> {
    let sizes = class_size_set(g)?;
    if sizes.n_set.is_empty() {
        return Ok(SpClassification {
            verdict: Verdict::Abelian,
            evidence: Vec::new(),
            witness: None,
            reason: None,
        });
    }
    let (sp, witness) = is_sp(g)?;
    if !sp {
        return Ok(SpClassification {
            verdict: Verdict::NotSP,
            evidence: Vec::new(),
            witness,
            reason: None,
        });
    }

    let cq = CentralQuotient::new(g)?;
    let derived = g.derived_subgroup()?;
    let mut evidence = Vec::new();
    let mut reasons = Vec::new();
    evidence.extend(type_one(g)?);
    evidence.extend(type_two(g, &cq, &sizes)?);
    evidence.extend(type_three(g, &cq)?);
    match linear_type(g, &cq, &derived)? {
        Ok(e) => evidence.extend(e),
        Err(why) => reasons.push(why),
    }

    let verdict = evidence.first().map_or(Verdict::Unrecognized, Evidence::verdict);
    let reason = (verdict == Verdict::Unrecognized).then(|| {
        if reasons.is_empty() {
            "no structural clause matched".to_string()
        } else {
            reasons.join("; ")
        }
    });
    Ok(SpClassification {
        verdict,
        evidence,
        witness: None,
        reason,
    })
}

fn type_one(g: &FiniteGroup) -> Result<Option<Evidence>> {
    let order = g.order()?;
    let orders = g.element_orders()?;
    for (p, _) in factorize(order as u64) {
        let Some(sylow) = g.normal_sylow(p)? else {
            continue;
        };
        let p_prime: Vec<usize> = (0..order).filter(|&i| !(orders[i] as u64).is_multiple_of(p)).collect();
        if p_prime.len() * sylow.order() != order {
            continue;
        }
        let t = g.subgroup_generated(&p_prime);
        if t.order() != p_prime.len() || !t.is_abelian() {
            continue;
        }
        let centralizes = t
            .generators()
            .iter()
            .all(|&a| sylow.generators().iter().all(|&b| g.commute(a, b)));
        if !centralizes {
            continue;
        }
        if rank(&sylow.to_group(format!("{}_{p}", g.name()))?)? != 1 {
            continue;
        }
        return Ok(Some(Evidence::TypeI {
            p,
            p_order: sylow.order(),
            t_order: t.order(),
        }));
    }
    Ok(None)
}

fn type_two(g: &FiniteGroup, cq: &CentralQuotient, sizes: &ClassSizeSet) -> Result<Option<Evidence>> {
    let Some((k, l)) = cq.preimages() else {
        return Ok(None);
    };
    if !k.is_abelian() || !l.is_abelian() {
        return Ok(None);
    }
    let z = cq.center.order();
    let (kbar, lbar) = (k.order() / z, l.order() / z);
    let mut expected = vec![kbar as u64, lbar as u64];
    expected.sort_unstable();
    if sizes.n_set != expected {
        return Err(Error::Inconsistent(format!(
            "{}: abelian K, L with |K/Z| = {kbar}, |L/Z| = {lbar} but N = {:?}",
            g.name(),
            sizes.n_set
        )));
    }
    Ok(Some(Evidence::TypeII {
        z_order: z,
        k_order: k.order(),
        l_order: l.order(),
        kernel_quotient: kbar,
        complement_quotient: lbar,
    }))
}

fn type_three(g: &FiniteGroup, cq: &CentralQuotient) -> Result<Option<Evidence>> {
    let Some((k, l)) = cq.preimages() else {
        return Ok(None);
    };
    let z = &cq.center;
    let Some((p, _)) = prime_power((k.order() / z.order()) as u64) else {
        return Ok(None);
    };
    let Some(sylow) = g.normal_sylow(p)? else {
        return Ok(None);
    };
    if !l.is_abelian() {
        return Ok(None);
    }
    // K = PZ as element sets.
    let mut pz = vec![false; g.len()];
    for &a in sylow.members() {
        for &b in z.members() {
            pz[g.mul(a, b)] = true;
        }
    }
    if pz != k.mask() {
        return Ok(None);
    }
    let p_group = sylow.to_group(format!("{}_{p}", g.name()))?;
    if rank(&p_group)? != 1 {
        return Ok(None);
    }
    let p_center = p_group.center()?;
    let center_of_p: Vec<&crate::GroupElement> = p_center.elements().collect();
    let z_cap_p = sylow.intersection(z);
    let same = center_of_p.len() == z_cap_p.order() && z_cap_p.elements().all(|e| center_of_p.contains(&e));
    if !same {
        return Ok(None);
    }
    let lz = l.order() / z.order();
    let index_relation = sylow
        .members()
        .iter()
        .filter(|&&x| !z.contains(x))
        .all(|&x| g.class_size(x).ok() == Some(g.index(&sylow, x) * lz));
    Ok(Some(Evidence::TypeIII {
        p,
        z_order: z.order(),
        p_order: sylow.order(),
        k_order: k.order(),
        l_order: l.order(),
        center_of_p: center_of_p.len(),
        index_relation,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReferenceKind {
    /// `SL(2,q)` itself.
    SL,
    /// `SL(2,q)` modulo its center.
    PSL,
    /// `GL(2,q)` modulo its center.
    PGL,
}

type ReferenceSlot = Arc<OnceLock<std::result::Result<ClassSizeSet, String>>>;

fn reference_cache() -> &'static Mutex<HashMap<(ReferenceKind, u64), ReferenceSlot>> {
    static CACHE: OnceLock<Mutex<HashMap<(ReferenceKind, u64), ReferenceSlot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Class sizes of a reference linear group, built once per `(kind, q)`.
pub fn reference_fingerprint(kind: ReferenceKind, q: u64) -> std::result::Result<ClassSizeSet, String> {
    let slot = {
        let mut cache = reference_cache().lock().unwrap_or_else(|e| e.into_inner());
        Arc::clone(cache.entry((kind, q)).or_default())
    };
    slot.get_or_init(|| build_reference(kind, q).map_err(|e| e.to_string()))
        .clone()
}

fn build_reference(kind: ReferenceKind, q: u64) -> Result<ClassSizeSet> {
    let field = families::field_for(q)?;
    let base = match kind {
        ReferenceKind::SL | ReferenceKind::PSL => families::sl2(&field)?,
        ReferenceKind::PGL => families::gl2(&field)?,
    }
    .renamed(format!("{kind:?}(2,{q})"), DEFAULT_ORDER_CAP);
    base.enumerate()?;
    if kind == ReferenceKind::SL {
        return class_size_set(&base);
    }
    let quotient = base.quotient(&base.center()?)?;
    class_size_set(quotient.group())
}

fn same_fingerprint(a: &ClassSizeSet, b: &ClassSizeSet) -> bool {
    a.order == b.order && a.sizes == b.sizes
}

/// Clauses IV and V. The outer error is a hard failure; the inner one
/// explains a reference that could not be built.
fn linear_type(
    g: &FiniteGroup,
    cq: &CentralQuotient,
    derived: &SubgroupHandle,
) -> Result<std::result::Result<Vec<Evidence>, String>> {
    let q_group = cq.quotient.group();
    let q_order = q_group.len() as u64;
    let d_order = derived.order() as u64;
    if q_group.is_abelian() {
        return Ok(Ok(Vec::new()));
    }
    let mut out = Vec::new();
    let mut q_sizes: Option<ClassSizeSet> = None;
    let mut d_sizes: Option<ClassSizeSet> = None;

    let candidates: Vec<u64> = (4..=MAX_REFERENCE_Q)
        .filter(|&q| prime_power(q).is_some() && q * (q * q - 1) == d_order)
        .collect();
    for q in candidates {
        let full = q * (q * q - 1);
        let psl = full / gcd(2, q - 1);
        let kinds: Vec<ReferenceKind> = [(ReferenceKind::PSL, psl), (ReferenceKind::PGL, full)]
            .into_iter()
            .filter(|&(_, o)| o == q_order)
            .map(|(k, _)| k)
            .collect();
        for kind in kinds {
            let reference = match reference_fingerprint(kind, q) {
                Ok(r) => r,
                Err(e) => return Ok(Err(format!("reference {kind:?}(2,{q}) unavailable: {e}"))),
            };
            let qs = match &q_sizes {
                Some(s) => s,
                None => q_sizes.insert(class_size_set(q_group)?),
            };
            if !same_fingerprint(qs, &reference) {
                continue;
            }
            let sl = match reference_fingerprint(ReferenceKind::SL, q) {
                Ok(r) => r,
                Err(e) => return Ok(Err(format!("reference SL(2,{q}) unavailable: {e}"))),
            };
            let ds = match &d_sizes {
                Some(s) => s,
                None => d_sizes.insert(class_size_set(&derived.to_group(format!("{}'", g.name()))?)?),
            };
            if same_fingerprint(ds, &sl) {
                out.push(Evidence::TypeIV {
                    q,
                    quotient: kind,
                    quotient_order: q_order as usize,
                    derived_order: d_order as usize,
                    limitation: FINGERPRINT_LIMITATION,
                });
                break;
            }
        }
        if !out.is_empty() {
            break;
        }
    }

    if d_order == 2160 && (q_order == 360 || q_order == 720) {
        let kind = if q_order == 360 {
            ReferenceKind::PSL
        } else {
            ReferenceKind::PGL
        };
        let reference = match reference_fingerprint(kind, 9) {
            Ok(r) => r,
            Err(e) => return Ok(Err(format!("reference {kind:?}(2,9) unavailable: {e}"))),
        };
        let qs = match &q_sizes {
            Some(s) => s,
            None => q_sizes.insert(class_size_set(q_group)?),
        };
        if same_fingerprint(qs, &reference) {
            let dn = class_size_set(&derived.to_group(format!("{}'", g.name()))?)?.n_set;
            if dn == [72, 90, 120] {
                out.push(Evidence::TypeV {
                    quotient: kind,
                    quotient_order: q_order as usize,
                    derived_order: d_order as usize,
                    limitation: FINGERPRINT_LIMITATION,
                });
            }
        }
    }
    Ok(Ok(out))
}

/// For an SP group of conjugate rank 2, `G/Z` is a solvable Frobenius group.
pub fn check_corollary1(g: &FiniteGroup) -> Result<bool> {
    let (sp, _) = is_sp(g)?;
    let r = rank(g)?;
    if !sp || r != 2 {
        return Err(Error::Precondition(format!(
            "{} must be SP of conjugate rank 2 (sp = {sp}, rank = {r})",
            g.name()
        )));
    }
    let cq = CentralQuotient::new(g)?;
    Ok(cq.frobenius.is_some() && cq.quotient.group().is_solvable()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, field_for};

    fn verdict(g: &FiniteGroup) -> SpClassification {
        classify(g).unwrap()
    }

    /// Frobenius kernels by definition: some normal `N` and a subgroup `H`
    /// with `N H = Q`, `N ∩ H = 1` and `H ∩ H^g = 1` for `g` outside `H`.
    fn brute_frobenius_kernel_order(q: &FiniteGroup) -> Option<usize> {
        let n = q.order().unwrap();
        for k in q.normal_subgroups().unwrap() {
            if k.order() == 1 || k.order() == n {
                continue;
            }
            let h_order = n / k.order();
            // Complements are subgroups of order |Q/N| meeting N trivially;
            // search among cyclic-generated and pair-generated subgroups.
            let mut found = false;
            'outer: for a in 0..n {
                for b in a..n {
                    let h = q.subgroup_generated(&[a, b]);
                    if h.order() != h_order || h.intersection(&k).order() != 1 {
                        continue;
                    }
                    let malnormal = (0..n).filter(|&g| !h.contains(g)).all(|g| {
                        h.members()
                            .iter()
                            .filter(|&&x| x != 0)
                            .all(|&x| !h.contains(q.conjugate(x, g)))
                    });
                    if malnormal {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if found {
                return Some(k.order());
            }
        }
        None
    }

    #[test]
    fn frobenius_structures() {
        let a5 = families::agl1(&field_for(5).unwrap()).unwrap();
        let fs = find_frobenius_structure(&a5).unwrap().unwrap();
        assert_eq!((fs.kernel.order(), fs.complement_order), (5, 4));
        assert_eq!(fs.complement.as_ref().unwrap().order(), 4);
        assert_eq!(brute_frobenius_kernel_order(&a5), Some(5));

        let t = families::type3_frobenius(7, 3).unwrap();
        let q = t.quotient(&t.center().unwrap()).unwrap();
        let fs = find_frobenius_structure(q.group()).unwrap().unwrap();
        assert_eq!((fs.kernel.order(), fs.complement_order), (49, 3));

        let s4 = families::symmetric(4).unwrap();
        assert!(find_frobenius_structure(&s4).unwrap().is_none());
        assert_eq!(brute_frobenius_kernel_order(&s4), None);

        for g in [
            families::symmetric(3).unwrap(),
            families::alternating(4).unwrap(),
            families::dihedral(5).unwrap(),
        ] {
            let fast = find_frobenius_structure(&g).unwrap().map(|f| f.kernel.order());
            assert_eq!(fast, brute_frobenius_kernel_order(&g), "{}", g.name());
        }
        let a5 = families::alternating(5).unwrap();
        assert!(find_frobenius_structure(&a5).unwrap().is_none());
    }

    #[test]
    fn clause_examples() {
        let t1 = families::direct_product(
            &families::cyclic(5).unwrap(),
            &families::to_permutation(&families::heisenberg(3).unwrap()).unwrap(),
        )
        .unwrap();
        let c = verdict(&t1);
        assert_eq!(c.verdict, Verdict::TypeI);
        assert_eq!(
            c.evidence[0],
            Evidence::TypeI {
                p: 3,
                p_order: 27,
                t_order: 5
            }
        );

        let t2 = families::direct_product(
            &families::agl1(&field_for(8).unwrap()).unwrap(),
            &families::cyclic(3).unwrap(),
        )
        .unwrap();
        let c = verdict(&t2);
        assert_eq!(c.verdict, Verdict::TypeII);
        assert!(matches!(
            c.evidence[0],
            Evidence::TypeII {
                k_order: 24,
                z_order: 3,
                ..
            }
        ));

        let c = verdict(&families::type3_frobenius(7, 3).unwrap());
        assert_eq!(c.verdict, Verdict::TypeIII);
        assert!(matches!(
            c.evidence[0],
            Evidence::TypeIII {
                p: 7,
                center_of_p: 7,
                index_relation: true,
                ..
            }
        ));

        let c = verdict(&families::sl2(&field_for(7).unwrap()).unwrap());
        assert_eq!(c.verdict, Verdict::TypeIV);
        assert!(matches!(
            c.evidence[0],
            Evidence::TypeIV {
                q: 7,
                quotient: ReferenceKind::PSL,
                derived_order: 336,
                ..
            }
        ));

        let c = verdict(&families::gl2(&field_for(3).unwrap()).unwrap());
        assert_eq!(c.verdict, Verdict::NotSP);
        assert_eq!(c.witness, Some((6, 12)));
    }

    #[test]
    fn small_groups() {
        let cases: Vec<(FiniteGroup, Verdict)> = vec![
            (families::cyclic(12).unwrap(), Verdict::Abelian),
            (families::symmetric(3).unwrap(), Verdict::TypeII),
            (families::alternating(4).unwrap(), Verdict::TypeII),
            (families::dihedral(5).unwrap(), Verdict::TypeII),
            (families::dihedral(6).unwrap(), Verdict::TypeII),
            (families::sl2(&field_for(3).unwrap()).unwrap(), Verdict::TypeIII),
            (families::alternating(5).unwrap(), Verdict::TypeIV),
            (families::gl2(&field_for(4).unwrap()).unwrap(), Verdict::TypeIV),
            (families::gl2(&field_for(5).unwrap()).unwrap(), Verdict::TypeIV),
            (families::dihedral(4).unwrap(), Verdict::TypeI),
            (families::quaternion().unwrap(), Verdict::TypeI),
            (families::symmetric(4).unwrap(), Verdict::NotSP),
            (families::remark_group(3).unwrap(), Verdict::NotSP),
        ];
        for (g, v) in cases {
            let c = verdict(&g);
            assert_eq!(c.verdict, v, "{}", g.name());
        }
        let c = verdict(&families::alternating(5).unwrap());
        assert!(matches!(c.evidence[0], Evidence::TypeIV { q: 4, .. }));
        let c = verdict(&families::gl2(&field_for(5).unwrap()).unwrap());
        assert!(matches!(
            c.evidence[0],
            Evidence::TypeIV {
                q: 5,
                quotient: ReferenceKind::PGL,
                ..
            }
        ));
    }

    #[test]
    fn central_extension_of_linear_group() {
        let g = families::direct_product(
            &families::to_permutation(&families::sl2(&field_for(5).unwrap()).unwrap()).unwrap(),
            &families::cyclic(3).unwrap(),
        )
        .unwrap();
        let c = verdict(&g);
        assert_eq!(c.verdict, Verdict::TypeIV);
        assert!(matches!(
            c.evidence[0],
            Evidence::TypeIV {
                q: 5,
                quotient_order: 60,
                derived_order: 120,
                ..
            }
        ));
    }

    #[test]
    fn corollary_one() {
        assert!(check_corollary1(&families::agl1(&field_for(8).unwrap()).unwrap()).unwrap());
        assert!(check_corollary1(&families::type3_frobenius(5, 2).unwrap()).unwrap());
        let g = families::direct_product(
            &families::agl1(&field_for(5).unwrap()).unwrap(),
            &families::cyclic(7).unwrap(),
        )
        .unwrap();
        assert!(check_corollary1(&g).unwrap());
        assert!(matches!(
            check_corollary1(&families::sl2(&field_for(5).unwrap()).unwrap()),
            Err(Error::Precondition(_))
        ));
        assert!(check_corollary1(&families::symmetric(4).unwrap()).is_err());
    }

    #[test]
    fn reference_fingerprints_are_memoized() {
        let a = reference_fingerprint(ReferenceKind::PSL, 5).unwrap();
        let b = reference_fingerprint(ReferenceKind::PSL, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.order, 60);
        assert_eq!(a.sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(reference_fingerprint(ReferenceKind::PGL, 4).unwrap().sizes, a.sizes);
    }
}
