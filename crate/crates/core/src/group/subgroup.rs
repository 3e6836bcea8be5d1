use std::cmp::Ordering;
use std::fmt;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A set of element indices of some parent group, kept sorted.
///
/// Every subgroup produced by the group machinery is closed under products
/// and inverses. Sets derived from character values (centers and kernels of
/// characters) are only guaranteed to be subgroups when the table is genuine.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: Vec<usize>,
    mask: Vec<u64>,
}

impl SubgroupSet {
    pub fn from_members(parent_order: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![0u64; parent_order.div_ceil(64)];
        for x in members {
            mask[x / 64] |= 1 << (x % 64);
        }
        Self::from_mask(mask)
    }

    pub(crate) fn from_mask(mask: Vec<u64>) -> Self {
        let mut members = Vec::new();
        for (w, &bits) in mask.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let t = b.trailing_zeros() as usize;
                members.push(w * 64 + t);
                b &= b - 1;
            }
        }
        SubgroupSet { members, mask }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x / 64).is_some_and(|w| w & (1 << (x % 64)) != 0)
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.mask.iter().zip(other.mask.iter().chain(std::iter::repeat(&0))).all(|(a, b)| a & !b == 0)
    }

    /// Proper inclusion: subset and strictly smaller.
    pub fn is_proper_subset(&self, other: &SubgroupSet) -> bool {
        self.is_subset(other) && self.len() < other.len()
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| a & b).collect();
        SubgroupSet::from_mask(mask)
    }

    pub(crate) fn mask(&self) -> &[u64] {
        &self.mask
    }
}

/// Ordered by size, then lexicographically by members.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl FiniteGroup {
    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::from_members(self.order(), self.elements())
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet {
        SubgroupSet::from_members(self.order(), [0])
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(&self, seed: impl IntoIterator<Item = usize>) -> SubgroupSet {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for s in seed {
            if inside[s] {
                continue;
            }
            gens.push(s);
            // close under right multiplication by all generators so far;
            // finite, so the monoid generated is already a group
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
        }
        SubgroupSet::from_members(n, members)
    }

    /// A small generating set of the whole group, greedily chosen.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.elem_order(x)), x));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in by_order {
            if current.len() == self.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(gens.iter().copied());
            }
        }
        gens
    }

    pub fn center(&self) -> SubgroupSet {
        let gens = self.generators();
        SubgroupSet::from_members(
            self.order(),
            self.elements().filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z))),
        )
    }

    /// `[N, G]`: the subgroup generated by all `[n, g]` with `n ∈ N`, `g ∈ G`.
    pub fn commutator_subgroup(&self, n: &SubgroupSet) -> SubgroupSet {
        let order = self.order();
        let mut seen = vec![false; order];
        let mut seed = Vec::new();
        for &x in n.members() {
            for g in self.elements() {
                let c = self.comm(x, g);
                if !seen[c] {
                    seen[c] = true;
                    seed.push(c);
                }
            }
        }
        self.subgroup_generated(seed)
    }

    pub fn derived_subgroup(&self) -> SubgroupSet {
        self.commutator_subgroup(&self.whole())
    }

    /// `NM = {nm}` for subgroups where at least one factor is normal.
    pub fn product_subgroup(&self, n: &SubgroupSet, m: &SubgroupSet) -> Result<SubgroupSet> {
        if !self.is_normal(n) && !self.is_normal(m) {
            return Err(Error::NeitherNormal);
        }
        Ok(self.product_set(n, m))
    }

    pub(crate) fn product_set(&self, n: &SubgroupSet, m: &SubgroupSet) -> SubgroupSet {
        let mut mask = vec![0u64; self.order().div_ceil(64)];
        for &a in n.members() {
            for &b in m.members() {
                let c = self.mul(a, b);
                mask[c / 64] |= 1 << (c % 64);
            }
        }
        SubgroupSet::from_mask(mask)
    }

    pub fn is_normal(&self, h: &SubgroupSet) -> bool {
        let gens = self.generators();
        h.members().iter().all(|&x| gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// Whether `h` is closed under the group operation and contains the identity.
    pub fn is_subgroup(&self, h: &SubgroupSet) -> bool {
        h.contains(0)
            && h.members()
                .iter()
                .all(|&a| h.members().iter().all(|&b| h.contains(self.mul(a, b))))
    }

    /// Normal closure of a set of elements.
    pub fn normal_closure(&self, seed: impl IntoIterator<Item = usize>) -> SubgroupSet {
        let gens = self.generators();
        let mut h = self.subgroup_generated(seed);
        loop {
            let extra: Vec<usize> = h
                .members()
                .iter()
                .flat_map(|&x| gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            h = self.subgroup_generated(h.members().iter().copied().chain(extra));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;

    // D8: element i + 4j is r^i s^j
    const R: usize = 1;
    const R2: usize = 2;
    const S: usize = 4;

    #[test]
    fn centers() {
        let d8 = d8();
        assert_eq!(d8.center().members(), &[0, R2]);
        assert!(s3().center().is_trivial());
        let c6 = cyclic(6);
        assert_eq!(c6.center().len(), 6);
    }

    #[test]
    fn commutators_in_d8() {
        let g = d8();
        assert!(g.commutator_subgroup(&g.center()).is_trivial());
        assert_eq!(g.derived_subgroup().members(), &[0, R2]);
        let rot = g.subgroup_generated([R]);
        assert_eq!(g.commutator_subgroup(&rot).members(), &[0, R2]);
    }

    #[test]
    fn generated_subgroups() {
        let g = d8();
        assert!(g.subgroup_generated([]).is_trivial());
        assert_eq!(g.subgroup_generated([R]).len(), 4);
        let klein = g.subgroup_generated([R2, S]);
        assert_eq!(klein.members(), &[0, 2, 4, 6]);
    }

    #[test]
    fn products() {
        let g = d8();
        let z = g.center();
        let s = g.subgroup_generated([S]);
        assert_eq!(g.product_subgroup(&z, &g.trivial_subgroup()).unwrap(), z);
        assert_eq!(g.product_subgroup(&z, &s).unwrap().members(), &[0, 2, 4, 6]);
        assert_eq!(g.product_subgroup(&z, &z).unwrap(), z);
        let sr = g.subgroup_generated([5]);
        assert!(g.product_subgroup(&s, &sr).is_err());
    }

    #[test]
    fn normality() {
        let g = d8();
        assert!(g.is_normal(&g.center()));
        assert!(!g.is_normal(&g.subgroup_generated([S])));
        let c6 = cyclic(6);
        assert!(c6.is_normal(&c6.subgroup_generated([2])));
        assert_eq!(g.normal_closure([S]).members(), &[0, 2, 4, 6]);
    }
}
