//! Structural facts about centralizers and quotients, checked on concrete
//! groups.
//!
//! For `K` normal in `G`, bars denoting images in `G/K`:
//! - divides: `|x^K|` and `|xbar^Gbar|` divide `|x^G|`;
//! - product: commuting `x`, `y` of coprime orders have `C(xy) = C(x) ∩ C(y)`;
//! - coprime image: `gcd(|x|, |K|) = 1` gives `C_Gbar(xbar) = C_G(x)K/K`;
//! - image: `C_G(x)K/K <= C_Gbar(xbar)`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::{factorize, gcd, prime_power};
use crate::error::Result;
use crate::groups::{FiniteGroup, Quotient, SubgroupHandle};

/// Exhaustive checks run up to this order; larger groups are sampled.
pub const EXHAUSTIVE_ORDER: usize = 500;

#[derive(Debug, Default, Clone)]
pub struct Tally {
    pub tuples: usize,
    pub violations: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.tuples += 1;
        if !ok && self.violations.len() < 10 {
            self.violations.push(what());
        }
    }
}

struct Bits(Vec<u64>);

impl Bits {
    fn from_mask(mask: &[bool]) -> Self {
        let mut w = vec![0u64; mask.len().div_ceil(64)];
        for (i, _) in mask.iter().enumerate().filter(|(_, &b)| b) {
            w[i / 64] |= 1 << (i % 64);
        }
        Bits(w)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
}

/// Per-`(K, x)` facts: divides, coprime image and image.
fn quotient_clauses(g: &FiniteGroup, k: &SubgroupHandle, q: &Quotient, x: usize, tally: &mut Tally) -> Result<()> {
    let qg = q.group();
    let class = g.class_size(x)?;
    let ind_k = g.index(k, x);
    let xbar = q.image(x);
    let class_bar = qg.class_size(xbar)?;
    tally.check(class % ind_k == 0 && class % class_bar == 0, || {
        format!(
            "divides {}: K order {}, x {:?}: |x^K| = {ind_k}, |xbar^Gbar| = {class_bar}, |x^G| = {class}",
            g.name(),
            k.order(),
            g.element(x)
        )
    });

    let image = q.image_mask(&g.centralizer(x));
    let cbar = qg.centralizer_mask(xbar);
    let contained = image.iter().zip(&cbar).all(|(&a, &b)| !a || b);
    tally.check(contained, || {
        format!(
            "image {}: K order {}, x {:?}: image of C(x) not inside C(xbar)",
            g.name(),
            k.order(),
            g.element(x)
        )
    });

    let order_x = g.element_orders()?[x] as u64;
    if gcd(order_x, k.order() as u64) == 1 {
        tally.check(image == cbar, || {
            format!(
                "coprime image {}: K order {}, x {:?}: C(xbar) differs from C(x)K/K",
                g.name(),
                k.order(),
                g.element(x)
            )
        });
    }
    Ok(())
}

fn coprime_clause(g: &FiniteGroup, x: usize, y: usize, cx: &Bits, cy: &Bits, cxy: &Bits, tally: &mut Tally) {
    let ok = cx.and(cy).0 == cxy.0;
    tally.check(ok, || {
        format!(
            "product {}: x {:?}, y {:?}: C(xy) != C(x) ∩ C(y)",
            g.name(),
            g.element(x),
            g.element(y)
        )
    });
}

/// Every normal subgroup, every element and every coprime commuting pair.
pub fn quotient_facts_exhaustive(g: &FiniteGroup) -> Result<Tally> {
    let n = g.order()?;
    let orders = g.element_orders()?;
    let cent: Vec<Bits> = (0..n).map(|x| Bits::from_mask(&g.centralizer_mask(x))).collect();
    let mut tally = Tally::default();
    for k in g.normal_subgroups()? {
        let q = g.quotient(&k)?;
        for x in 0..n {
            quotient_clauses(g, &k, &q, x, &mut tally)?;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if (cent[x].0[y / 64] >> (y % 64)) & 1 == 1 && gcd(orders[x] as u64, orders[y] as u64) == 1 {
                coprime_clause(g, x, y, &cent[x], &cent[y], &cent[g.mul(x, y)], &mut tally);
            }
        }
    }
    Ok(tally)
}

/// Random `(K, x, y)`: `K` from a pool of normal subgroups, `y` a random
/// element of `C(x)` with the primes of `|x|` removed from its order.
pub fn quotient_facts_sampled<R: Rng>(g: &FiniteGroup, rng: &mut R, samples: usize) -> Result<Tally> {
    let n = g.order()?;
    let orders = g.element_orders()?;
    let mut pool: Vec<SubgroupHandle> = vec![g.trivial()?, g.center()?, g.derived_subgroup()?, g.whole()?];
    for _ in 0..4 {
        pool.push(g.normal_closure(&[rng.gen_range(0..n)]));
    }
    pool.sort_by_key(|h| h.order());
    pool.dedup_by(|a, b| a.same_elements(b));
    let quotients = pool.iter().map(|k| g.quotient(k)).collect::<Result<Vec<_>>>()?;

    let mut tally = Tally::default();
    for _ in 0..samples {
        let i = rng.gen_range(0..pool.len());
        let x = rng.gen_range(0..n);
        quotient_clauses(g, &pool[i], &quotients[i], x, &mut tally)?;

        let cx_mask = g.centralizer_mask(x);
        let members: Vec<usize> = (0..n).filter(|&i| cx_mask[i]).collect();
        let y0 = *members.choose(rng).expect("x centralizes itself");
        let strip: u64 = factorize(orders[y0] as u64)
            .into_iter()
            .filter(|&(p, _)| (orders[x] as u64).is_multiple_of(p))
            .map(|(p, e)| p.pow(e))
            .product();
        let y = g.index_of(&g.element(y0).pow(strip)).expect("powers stay in the group");
        let cx = Bits::from_mask(&cx_mask);
        let cy = Bits::from_mask(&g.centralizer_mask(y));
        let cxy = Bits::from_mask(&g.centralizer_mask(g.mul(x, y)));
        coprime_clause(g, x, y, &cx, &cy, &cxy, &mut tally);
    }
    Ok(tally)
}

/// For a nonabelian group of prime-power order, `P/Z(P)` is not cyclic.
/// `None` when `g` is abelian or not of prime-power order.
pub fn center_quotient_not_cyclic(g: &FiniteGroup) -> Result<Option<bool>> {
    let n = g.order()? as u64;
    if g.is_abelian() || prime_power(n).is_none() {
        return Ok(None);
    }
    let q = g.quotient(&g.center()?)?;
    let qn = q.group().len() as u32;
    Ok(Some(q.group().element_orders()?.iter().all(|&o| o < qn)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeDecomposition {
    pub p_order: usize,
    pub acting_order: usize,
    pub fixed: usize,
    pub commutator: usize,
    pub holds: bool,
}

/// For the abelian normal Sylow `P` of `x` and a `p'`-complement `A`,
/// checks `P = C_P(A) x [P, A]`. `None` when `X` does not have that shape.
pub fn coprime_action_decomposition(x: &FiniteGroup, p: u64) -> Result<Option<CoprimeDecomposition>> {
    let n = x.order()?;
    let Some(sylow) = x.normal_sylow(p)? else {
        return Ok(None);
    };
    if !sylow.is_abelian() {
        return Ok(None);
    }
    let a_order = n / sylow.order();
    let Some(acting) = p_complement(x, p, a_order)? else {
        return Ok(None);
    };
    let fixed = SubgroupHandle::from_mask(
        x,
        (0..n)
            .map(|i| sylow.contains(i) && acting.generators().iter().all(|&a| x.commute(i, a)))
            .collect(),
    );
    let comms: Vec<usize> = sylow
        .members()
        .iter()
        .flat_map(|&s| acting.members().iter().map(move |&b| (s, b)))
        .map(|(s, b)| x.commutator(s, b))
        .collect();
    let commutator = x.subgroup_generated(&comms);
    let holds = commutator.is_subset_of(&sylow)
        && fixed.intersection(&commutator).order() == 1
        && fixed.order() * commutator.order() == sylow.order();
    Ok(Some(CoprimeDecomposition {
        p_order: sylow.order(),
        acting_order: acting.order(),
        fixed: fixed.order(),
        commutator: commutator.order(),
        holds,
    }))
}

/// A `p'`-subgroup of order `target`, grown greedily from elements of
/// largest order. `None` if the greedy walk stalls below `target`.
fn p_complement(x: &FiniteGroup, p: u64, target: usize) -> Result<Option<SubgroupHandle>> {
    let orders = x.element_orders()?;
    let mut candidates: Vec<usize> = (0..x.order()?)
        .filter(|&i| !(orders[i] as u64).is_multiple_of(p))
        .collect();
    candidates.sort_by_key(|&i| std::cmp::Reverse(orders[i]));
    let mut gens: Vec<usize> = Vec::new();
    let mut current = x.trivial()?;
    for b in candidates {
        if current.order() == target {
            break;
        }
        if current.contains(b) {
            continue;
        }
        gens.push(b);
        let next = x.subgroup_generated(&gens);
        if (next.order() as u64).is_multiple_of(p) {
            gens.pop();
        } else {
            current = next;
        }
    }
    Ok((current.order() == target).then_some(current))
}

/// If every `p'`-element has class size prime to `p`, the Sylow
/// `p`-subgroup is a direct factor. `None` when the hypothesis fails,
/// otherwise whether the conclusion holds.
pub fn sylow_direct_factor(g: &FiniteGroup, p: u64) -> Result<Option<bool>> {
    let n = g.order()?;
    let orders = g.element_orders()?;
    let p_prime: Vec<usize> = (0..n).filter(|&i| !(orders[i] as u64).is_multiple_of(p)).collect();
    for &x in &p_prime {
        if (g.class_size(x)? as u64).is_multiple_of(p) {
            return Ok(None);
        }
    }
    let Some(sylow) = g.normal_sylow(p)? else {
        return Ok(Some(false));
    };
    let h = g.subgroup_generated(&p_prime);
    let factor = h.order() == p_prime.len()
        && h.order() * sylow.order() == n
        && h.generators()
            .iter()
            .all(|&a| sylow.generators().iter().all(|&b| g.commute(a, b)));
    Ok(Some(factor))
}
