use std::collections::HashSet;

use super::{FiniteGroup, SubgroupSet};
use crate::error::{Error, Result};

/// All normal subgroups, sorted by order and then by members.
///
/// Every normal subgroup is the join of the normal closures of the classes
/// it contains, so closing `{1}` under joins with class closures is complete.
pub fn normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    let classes = g.conjugacy_classes();
    let mut closures: Vec<SubgroupSet> = Vec::new();
    let mut seen_closure = HashSet::new();
    for c in 1..classes.count() {
        let k = g.normal_closure([classes.rep(c)]);
        if seen_closure.insert(k.mask().to_vec()) {
            closures.push(k);
        }
    }
    let trivial = g.trivial_subgroup();
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    found.insert(trivial.mask().to_vec());
    let mut out = vec![trivial];
    let mut i = 0;
    while i < out.len() {
        let h = out[i].clone();
        for k in &closures {
            if k.is_subset(&h) {
                continue;
            }
            let j = g.product_set(&h, k);
            if found.insert(j.mask().to_vec()) {
                out.push(j);
                if out.len() > cap {
                    return Err(Error::LatticeTooLarge { cap });
                }
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}

/// All subgroups by cyclic extension: start from the cyclic subgroups and
/// repeatedly adjoin one more element, deduplicating by member set.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    let mut cyclic_reps = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<SubgroupSet> = Vec::new();
    for x in g.elements() {
        let c = g.subgroup_generated([x]);
        if seen.insert(c.mask().to_vec()) {
            cyclic_reps.push(x);
            out.push(c);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let h = out[i].clone();
        for &x in &cyclic_reps {
            if h.contains(x) {
                continue;
            }
            let j = g.subgroup_generated(h.members().iter().copied().chain([x]));
            if seen.insert(j.mask().to_vec()) {
                out.push(j);
                if out.len() > cap {
                    return Err(Error::LatticeTooLarge { cap });
                }
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn prime_cyclic_has_two_normal_subgroups() {
        assert_eq!(normal_subgroups(&cyclic(7), 100).unwrap().len(), 2);
    }

    #[test]
    fn d8_and_q8_lattices() {
        let d8 = d8();
        let ns = normal_subgroups(&d8, 100).unwrap();
        let orders: Vec<usize> = ns.iter().map(|h| h.len()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(all_subgroups(&d8, 100).unwrap().len(), 10);

        let q8 = q8();
        assert_eq!(normal_subgroups(&q8, 100).unwrap().len(), 6);
        assert_eq!(all_subgroups(&q8, 100).unwrap().len(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(normal_subgroups(&d8(), 3), Err(Error::LatticeTooLarge { cap: 3 }));
    }

    #[test]
    fn matches_brute_force_filter() {
        for g in [d8(), q8(), s3(), cyclic(12)] {
            let mut filtered: Vec<_> = all_subgroups(&g, 1000)
                .unwrap()
                .into_iter()
                .filter(|h| g.is_normal(h))
                .collect();
            filtered.sort();
            assert_eq!(normal_subgroups(&g, 1000).unwrap(), filtered);
        }
    }
}
