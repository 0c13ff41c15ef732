use std::sync::Arc;

use crate::error::{Error, Result};

use super::element::{Coset, GroupElement};
use super::group::FiniteGroup;
use super::subgroup::SubgroupHandle;

/// Coset bookkeeping for `G/N`: every parent element maps to a coset id,
/// and coset ids are ordered by their least-encoded representative.
pub struct CosetTable {
    parent: FiniteGroup,
    coset_of: Vec<u32>,
    reps: Vec<u32>,
    normal_order: usize,
}

impl CosetTable {
    pub(crate) fn representative(&self, id: usize) -> &GroupElement {
        self.parent.element(self.reps[id] as usize)
    }

    pub(crate) fn multiply(self: &Arc<Self>, a: u32, b: u32) -> Coset {
        let prod = self
            .parent
            .mul(self.reps[a as usize] as usize, self.reps[b as usize] as usize);
        Coset {
            id: self.coset_of[prod],
            table: Arc::clone(self),
        }
    }

    pub(crate) fn invert(self: &Arc<Self>, a: u32) -> Coset {
        Coset {
            id: self.coset_of[self.parent.inv(self.reps[a as usize] as usize)],
            table: Arc::clone(self),
        }
    }

    pub(crate) fn identity(self: &Arc<Self>) -> Coset {
        Coset {
            id: self.coset_of[self.parent.identity_index()],
            table: Arc::clone(self),
        }
    }

    fn coset(self: &Arc<Self>, parent_index: usize) -> Coset {
        Coset {
            id: self.coset_of[parent_index],
            table: Arc::clone(self),
        }
    }
}

/// A quotient group together with the natural map from its parent.
pub struct Quotient {
    group: FiniteGroup,
    table: Arc<CosetTable>,
    coset_index: Vec<u32>,
}

impl Quotient {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.table.parent
    }

    pub fn kernel_order(&self) -> usize {
        self.table.normal_order
    }

    /// Index in the quotient of the image of a parent element.
    pub fn image(&self, parent_index: usize) -> usize {
        self.coset_index[self.table.coset_of[parent_index] as usize] as usize
    }

    /// Mask over the quotient of the image of a parent subgroup.
    pub fn image_mask(&self, sub: &SubgroupHandle) -> Vec<bool> {
        let mut mask = vec![false; self.group.len()];
        for &m in sub.members() {
            mask[self.image(m)] = true;
        }
        mask
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, sub: &SubgroupHandle) -> SubgroupHandle {
        let parent = &self.table.parent;
        let mask = (0..parent.len()).map(|i| sub.contains(self.image(i))).collect();
        SubgroupHandle::from_mask(parent, mask)
    }
}

impl FiniteGroup {
    /// `G/N` with cosets as elements; products go through representatives.
    pub fn quotient(&self, normal: &SubgroupHandle) -> Result<Quotient> {
        self.enumerate()?;
        if !normal.parent().same_group(self) {
            return Err(Error::invalid("subgroup belongs to a different group"));
        }
        if !normal.is_normal() {
            return Err(Error::NotNormal(normal.order()));
        }
        let n = self.len();
        let mut coset_of = vec![u32::MAX; n];
        let mut cosets: Vec<(usize, Vec<usize>)> = Vec::new();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let members: Vec<usize> = normal.members().iter().map(|&k| self.mul(x, k)).collect();
            let rep = *members
                .iter()
                .min_by(|&&a, &&b| self.element(a).cmp(self.element(b)))
                .unwrap();
            for &m in &members {
                coset_of[m] = 0;
            }
            cosets.push((rep, members));
        }
        cosets.sort_by(|a, b| self.element(a.0).cmp(self.element(b.0)));
        let mut reps = Vec::with_capacity(cosets.len());
        for (id, (rep, members)) in cosets.iter().enumerate() {
            reps.push(*rep as u32);
            for &m in members {
                coset_of[m] = id as u32;
            }
        }
        let table = Arc::new(CosetTable {
            parent: self.clone(),
            coset_of,
            reps,
            normal_order: normal.order(),
        });
        let generators: Vec<GroupElement> = self
            .generator_indices()
            .into_iter()
            .map(|g| GroupElement::Coset(table.coset(g)))
            .collect();
        let group = FiniteGroup::with_cap(format!("{}/N{}", self.name(), normal.order()), generators, self.cap())?;
        group.enumerate()?;
        let mut coset_index = vec![0u32; table.reps.len()];
        for (i, e) in group.enumerate()?.iter().enumerate() {
            if let GroupElement::Coset(c) = e {
                coset_index[c.id()] = i as u32;
            }
        }
        Ok(Quotient {
            group,
            table,
            coset_index,
        })
    }
}
