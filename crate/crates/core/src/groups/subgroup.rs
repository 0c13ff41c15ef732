use std::fmt;

use crate::error::Result;

use super::element::GroupElement;
use super::group::FiniteGroup;

/// A subgroup of an enumerated group, held as an element mask over the
/// parent's element indices plus a generating set.
#[derive(Clone)]
pub struct SubgroupHandle {
    group: FiniteGroup,
    mask: Vec<bool>,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.members.len(), self.group.name())
    }
}

impl SubgroupHandle {
    pub(crate) fn from_parts(group: &FiniteGroup, mask: Vec<bool>, generators: Vec<usize>) -> Self {
        let members = mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect();
        SubgroupHandle {
            group: group.clone(),
            mask,
            members,
            generators,
        }
    }

    /// Wraps a mask known to be closed, picking generators greedily.
    pub fn from_mask(group: &FiniteGroup, mask: Vec<bool>) -> Self {
        let mut h = SubgroupHandle::from_parts(
            group,
            {
                let mut unit = vec![false; mask.len()];
                unit[0] = true;
                unit
            },
            Vec::new(),
        );
        for (i, &m) in mask.iter().enumerate() {
            if m && !h.contains(i) {
                h = group.extend(&h, i);
            }
        }
        debug_assert_eq!(h.mask, mask, "mask is not closed under multiplication");
        h
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> + '_ {
        self.members.iter().map(|&m| self.group.element(m))
    }

    pub fn is_subset_of(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Every index set in `mask` is a member.
    pub fn contains_all(&self, mask: &[bool]) -> bool {
        mask.iter().zip(&self.mask).all(|(&m, &s)| !m || s)
    }

    pub fn same_elements(&self, other: &SubgroupHandle) -> bool {
        self.mask == other.mask
    }

    pub fn intersection(&self, other: &SubgroupHandle) -> SubgroupHandle {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        SubgroupHandle::from_mask(&self.group, mask)
    }

    /// All generator pairs commute.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.group.commute(a, b)))
    }

    /// Every conjugate of a generator by a parent generator stays inside.
    pub fn is_normal(&self) -> bool {
        let parent_gens = self.group.generator_indices();
        self.generators
            .iter()
            .all(|&h| parent_gens.iter().all(|&g| self.contains(self.group.conjugate(h, g))))
    }

    /// An independent group on this subgroup's generators.
    pub fn to_group(&self, name: impl Into<String>) -> Result<FiniteGroup> {
        let gens: Vec<GroupElement> = if self.generators.is_empty() {
            vec![self.group.identity().clone()]
        } else {
            self.generators.iter().map(|&g| self.group.element(g).clone()).collect()
        };
        FiniteGroup::with_cap(name, gens, self.group.cap())
    }
}
