use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{factorize, mod_inverse};
use crate::error::{Error, Result};

use super::element::GroupElement;
use super::subgroup::SubgroupHandle;

/// Default bound on the number of elements enumerated for one group.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// A finite group given by generators.
///
/// Element enumeration and class data are computed on first use and then
/// frozen. Cloning is cheap and clones share the caches.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

struct Inner {
    name: String,
    generators: Vec<GroupElement>,
    identity: GroupElement,
    cap: usize,
    table: OnceLock<ElementTable>,
    classes: OnceLock<ClassData>,
    orders: OnceLock<Vec<u32>>,
}

struct ElementTable {
    elems: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    inverse: Vec<u32>,
    generators: Vec<u32>,
}

struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// A conjugacy class; `representative` is the member with the least
/// canonical encoding. Members are element indices in ascending order.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    pub members: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.inner.name)
            .field("generators", &self.inner.generators)
            .finish()
    }
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, generators: Vec<GroupElement>) -> Result<Self> {
        Self::with_cap(name, generators, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(name: impl Into<String>, generators: Vec<GroupElement>, cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::invalid("a group needs at least one generator"))?;
        if let Some(i) = generators.iter().position(|g| !first.compatible(g)) {
            return Err(Error::invalid(format!(
                "generator {i} does not match the representation of generator 0"
            )));
        }
        let identity = first.identity_like();
        Ok(FiniteGroup {
            inner: Arc::new(Inner {
                name: name.into(),
                generators,
                identity,
                cap,
                table: OnceLock::new(),
                classes: OnceLock::new(),
                orders: OnceLock::new(),
            }),
        })
    }

    /// Same generators under a different name and cap; caches are not shared.
    pub fn renamed(&self, name: impl Into<String>, cap: usize) -> FiniteGroup {
        FiniteGroup::with_cap(name, self.inner.generators.clone(), cap).expect("generators already validated")
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.inner.generators
    }

    pub fn identity(&self) -> &GroupElement {
        &self.inner.identity
    }

    pub fn cap(&self) -> usize {
        self.inner.cap
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Breadth-first closure from the identity under left multiplication by
    /// the generators, in generator order.
    pub fn enumerate(&self) -> Result<&[GroupElement]> {
        if let Some(t) = self.inner.table.get() {
            return Ok(&t.elems);
        }
        let table = self.build_table()?;
        let _ = self.inner.table.set(table);
        Ok(&self.table().elems)
    }

    // Hashing reads only the element's encoding, never the cached tables.
    #[allow(clippy::mutable_key_type)]
    fn build_table(&self) -> Result<ElementTable> {
        let cap = self.inner.cap;
        let gens = &self.inner.generators;
        let mut elems = vec![self.inner.identity.clone()];
        let mut index = HashMap::new();
        index.insert(self.inner.identity.clone(), 0u32);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = g.mul(&x);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(Error::cap(format!("order of group {}", self.inner.name), cap as u64));
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let inverse = elems.iter().map(|e| index[&e.inverse()]).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(ElementTable {
            elems,
            index,
            inverse,
            generators,
        })
    }

    fn table(&self) -> &ElementTable {
        self.inner
            .table
            .get()
            .expect("group elements must be enumerated before index-based access")
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.enumerate()?.len())
    }

    // Index-based access. These require a prior successful `enumerate`.

    pub fn len(&self) -> usize {
        self.table().elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.table().elems[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.table().index.get(g).map(|&i| i as usize)
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.table().generators.iter().map(|&g| g as usize).collect()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let t = self.table();
        t.index[&t.elems[a].mul(&t.elems[b])] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.table().inverse[a] as usize
    }

    /// Index of `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let t = self.table();
        let y = t.elems[t.inverse[g] as usize].mul(&t.elems[x]).mul(&t.elems[g]);
        t.index[&y] as usize
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        let t = self.table();
        t.elems[a].commutes_with(&t.elems[b])
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Least `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        let mut x = g.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(g);
            k += 1;
        }
        k
    }

    /// Orders of all elements, indexed like `enumerate`.
    pub fn element_orders(&self) -> Result<&[u32]> {
        self.enumerate()?;
        Ok(self.inner.orders.get_or_init(|| {
            let t = self.table();
            let mut orders = vec![0u32; t.elems.len()];
            for i in 0..t.elems.len() {
                if orders[i] != 0 {
                    continue;
                }
                let o = self.element_order(&t.elems[i]) as u32;
                orders[i] = o;
                // Powers coprime to the order share it.
                let mut x = i;
                for k in 2..o {
                    x = self.mul(x, i);
                    if crate::arith::gcd(k as u64, o as u64) == 1 {
                        orders[x] = o;
                    }
                }
            }
            orders
        }))
    }

    /// Splits `g` into commuting powers of pairwise coprime prime-power order
    /// whose product is `g`. Parts are listed by ascending prime.
    pub fn primary_decomposition(&self, g: &GroupElement) -> Vec<GroupElement> {
        let m = self.element_order(g);
        factorize(m)
            .into_iter()
            .map(|(p, e)| {
                let mi = p.pow(e);
                let rest = m / mi;
                // u = 1 mod mi and u = 0 mod rest.
                let u = rest * mod_inverse(rest % mi, mi).expect("coprime parts") % m;
                g.pow(u)
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.inner.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn centralizer_mask(&self, x: usize) -> Vec<bool> {
        let t = self.table();
        let xe = &t.elems[x];
        t.elems.iter().map(|g| g.commutes_with(xe)).collect()
    }

    pub fn centralizer(&self, x: usize) -> SubgroupHandle {
        SubgroupHandle::from_mask(self, self.centralizer_mask(x))
    }

    /// Conjugacy classes sorted by size, then by representative.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass]> {
        Ok(&self.class_data()?.classes)
    }

    fn class_data(&self) -> Result<&ClassData> {
        self.enumerate()?;
        Ok(self.inner.classes.get_or_init(|| self.build_classes()))
    }

    fn build_classes(&self) -> ClassData {
        let t = self.table();
        let n = t.elems.len();
        let gens: Vec<usize> = self.generator_indices();
        let mut assigned = vec![false; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = self.conjugate(x, g);
                    if !assigned[y] {
                        assigned[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut classes: Vec<ConjugacyClass> = orbits
            .into_iter()
            .map(|members| {
                let representative = *members.iter().min_by(|&&a, &&b| t.elems[a].cmp(&t.elems[b])).unwrap();
                ConjugacyClass {
                    representative,
                    size: members.len(),
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            a.size
                .cmp(&b.size)
                .then_with(|| t.elems[a.representative].cmp(&t.elems[b.representative]))
        });
        let mut class_of = vec![0u32; n];
        for (c, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = c as u32;
            }
        }
        ClassData { classes, class_of }
    }

    /// Index of the class containing element `x`.
    pub fn class_of(&self, x: usize) -> Result<usize> {
        Ok(self.class_data()?.class_of[x] as usize)
    }

    /// `|x^G|`, read from the class partition.
    pub fn class_size(&self, x: usize) -> Result<usize> {
        let data = self.class_data()?;
        Ok(data.classes[data.class_of[x] as usize].size)
    }

    /// `|C_G(x)|`, read from the class partition.
    pub fn centralizer_order(&self, x: usize) -> Result<usize> {
        Ok(self.len() / self.class_size(x)?)
    }

    /// `Ind(N, x) = |N| / |C_N(x)|`.
    pub fn index(&self, n: &SubgroupHandle, x: usize) -> usize {
        let xe = self.element(x);
        let fixed = n
            .members()
            .iter()
            .filter(|&&m| self.element(m).commutes_with(xe))
            .count();
        n.order() / fixed
    }

    pub fn center(&self) -> Result<SubgroupHandle> {
        let data = self.class_data()?;
        let mut mask = vec![false; self.len()];
        for class in data.classes.iter().filter(|c| c.size == 1) {
            mask[class.members[0]] = true;
        }
        Ok(SubgroupHandle::from_mask(self, mask))
    }

    /// Elementwise center via generator centralizers; independent of the
    /// class partition.
    pub fn center_by_generators(&self) -> Result<SubgroupHandle> {
        self.enumerate()?;
        let gens = &self.inner.generators;
        let mask = self
            .table()
            .elems
            .iter()
            .map(|x| gens.iter().all(|g| g.commutes_with(x)))
            .collect();
        Ok(SubgroupHandle::from_mask(self, mask))
    }

    pub fn whole(&self) -> Result<SubgroupHandle> {
        self.enumerate()?;
        Ok(SubgroupHandle::from_parts(
            self,
            vec![true; self.len()],
            self.generator_indices(),
        ))
    }

    pub fn trivial(&self) -> Result<SubgroupHandle> {
        self.enumerate()?;
        Ok(self.subgroup_generated(&[]))
    }

    /// Least subgroup containing the given elements.
    pub fn subgroup_generated(&self, elements: &[usize]) -> SubgroupHandle {
        let mut h = SubgroupHandle::from_parts(self, self.unit_mask(), Vec::new());
        for &s in elements {
            if !h.contains(s) {
                h = self.extend(&h, s);
            }
        }
        h
    }

    fn unit_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        mask[0] = true;
        mask
    }

    /// `<H, g>`, grown from the members of `H`.
    pub(crate) fn extend(&self, h: &SubgroupHandle, g: usize) -> SubgroupHandle {
        let mut gens = h.generators().to_vec();
        gens.push(g);
        let mut mask = h.mask().to_vec();
        let mut queue: VecDeque<usize> = h.members().iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(s, x);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        SubgroupHandle::from_parts(self, mask, gens)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, elements: &[usize]) -> SubgroupHandle {
        let mut h = self.subgroup_generated(elements);
        let gens = self.generator_indices();
        loop {
            let missing = h
                .generators()
                .iter()
                .flat_map(|&x| gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conjugate(x, g))
                .find(|&c| !h.contains(c));
            match missing {
                Some(c) => h = self.extend(&h, c),
                None => return h,
            }
        }
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Result<SubgroupHandle> {
        self.enumerate()?;
        let gens = self.generator_indices();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        Ok(self.normal_closure(&comms))
    }

    pub fn is_solvable(&self) -> Result<bool> {
        let mut current = self.clone();
        loop {
            let d = current.derived_subgroup()?;
            if d.order() == 1 {
                return Ok(true);
            }
            if d.order() == current.len() {
                return Ok(false);
            }
            current = d.to_group(format!("{}'", current.name()))?;
        }
    }

    /// The unique Sylow `p`-subgroup when the `p`-elements are product-closed.
    pub fn normal_sylow(&self, p: u64) -> Result<Option<SubgroupHandle>> {
        let order = self.order()? as u64;
        if p < 2 || !order.is_multiple_of(p) {
            return Err(Error::invalid(format!("{p} does not divide |G| = {order}")));
        }
        let orders = self.element_orders()?;
        let p_elements: Vec<usize> = (0..self.len())
            .filter(|&i| crate::arith::p_part(orders[i] as u64, p) == orders[i] as u64)
            .collect();
        let mut h = SubgroupHandle::from_parts(self, self.unit_mask(), Vec::new());
        for &s in &p_elements {
            if !h.contains(s) {
                h = self.extend(&h, s);
                if h.order() > p_elements.len() {
                    return Ok(None);
                }
            }
        }
        Ok(Some(h))
    }

    /// All normal subgroups, sorted by order and then by their sorted
    /// member encodings.
    pub fn normal_subgroups(&self) -> Result<Vec<SubgroupHandle>> {
        const MAX_NORMAL_SUBGROUPS: usize = 4096;
        let classes = self.conjugacy_classes()?;
        let mut found: Vec<SubgroupHandle> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut push = |h: SubgroupHandle, found: &mut Vec<SubgroupHandle>| -> Result<()> {
            if seen.insert(h.members().to_vec()) {
                if found.len() >= MAX_NORMAL_SUBGROUPS {
                    return Err(Error::cap(
                        format!("number of normal subgroups of {}", self.name()),
                        MAX_NORMAL_SUBGROUPS as u64,
                    ));
                }
                found.push(h);
            }
            Ok(())
        };
        for class in classes {
            push(self.subgroup_generated(&class.members), &mut found)?;
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a, b) = (&found[i], &found[j]);
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let mut joined = a.clone();
                for &g in b.generators() {
                    if !joined.contains(g) {
                        joined = self.extend(&joined, g);
                    }
                }
                push(joined, &mut found)?;
            }
            i += 1;
        }
        let key = |h: &SubgroupHandle| {
            let mut elems: Vec<&GroupElement> = h.members().iter().map(|&m| self.element(m)).collect();
            elems.sort();
            elems
        };
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| key(a).cmp(&key(b))));
        Ok(found)
    }
}
