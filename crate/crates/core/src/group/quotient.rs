use super::{FiniteGroup, SubgroupSet};
use crate::error::{Error, Result};

/// `G/N` as a group of its own, with the projection from `G`.
///
/// Cosets are labelled by their smallest element and sorted by label, so
/// the coset `N` itself (containing `0`) is always quotient element `0`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub kernel: SubgroupSet,
    /// Smallest parent element in each coset, indexed by quotient element.
    pub labels: Vec<usize>,
}

impl QuotientGroup {
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// Image of a set of parent elements.
    pub fn image(&self, s: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_members(self.group.order(), s.members().iter().map(|&x| self.projection[x]))
    }

    /// Full preimage of a set of quotient elements.
    pub fn preimage(&self, s: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_members(
            self.projection.len(),
            (0..self.projection.len()).filter(|&x| s.contains(self.projection[x])),
        )
    }
}

impl FiniteGroup {
    pub fn quotient(&self, n: &SubgroupSet) -> Result<QuotientGroup> {
        if !self.is_subgroup(n) || !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        let mut projection = vec![usize::MAX; order];
        let mut labels = Vec::new();
        // ascending scan visits each coset first at its smallest element
        for x in 0..order {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = labels.len();
            labels.push(x);
            for &m in n.members() {
                projection[self.mul(m, x)] = c;
            }
        }
        let k = labels.len();
        let mut mul = vec![0u32; k * k];
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate() {
                mul[i * k + j] = projection[self.mul(a, b)] as u32;
            }
        }
        Ok(QuotientGroup {
            group: FiniteGroup::from_flat_trusted(k, mul, None),
            projection,
            kernel: n.clone(),
            labels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::is_elementary_abelian;
    use super::super::ElementaryAbelian;

    #[test]
    fn trivial_kernel_is_identity_projection() {
        let g = d8();
        let q = g.quotient(&g.trivial_subgroup()).unwrap();
        assert_eq!(q.projection, (0..8).collect::<Vec<_>>());
        assert_eq!(q.group, g);
    }

    #[test]
    fn d8_mod_center_is_klein() {
        let g = d8();
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!((1..4).all(|x| q.group.elem_order(x) == 2));
        assert_eq!(is_elementary_abelian(&q.group), ElementaryAbelian::Prime(2));
    }

    #[test]
    fn whole_group_quotient_is_trivial() {
        let g = s3();
        assert_eq!(g.quotient(&g.whole()).unwrap().group.order(), 1);
    }

    #[test]
    fn non_normal_kernel_rejected() {
        let g = d8();
        assert!(g.quotient(&g.subgroup_generated([4])).is_err());
    }

    #[test]
    fn projection_is_homomorphism() {
        for g in [d8(), q8(), s3()] {
            for n in super::super::normal_subgroups(&g, 1000).unwrap() {
                let q = g.quotient(&n).unwrap();
                assert_eq!(q.group.order() * n.len(), g.order());
                for x in g.elements() {
                    for y in g.elements() {
                        assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)));
                        let same = n.contains(g.mul(x, g.inv(y)));
                        assert_eq!(q.project(x) == q.project(y), same);
                    }
                }
            }
        }
    }
}
