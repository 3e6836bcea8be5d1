use super::{exponent, FiniteGroup, SubgroupSet};

/// Conjugacy classes ordered by first appearance of their smallest element,
/// so the identity class is always class `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
    /// `power_map[c][k]` is the class of `rep(c)^k` for `k < exp G`.
    power_map: Vec<Vec<usize>>,
    exponent: usize,
}

impl ConjugacyClasses {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let gens = g.generators();
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = members.len();
            class_of[x] = c;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &s in gens {
                    let z = g.conj(y, s);
                    if class_of[z] == usize::MAX {
                        class_of[z] = c;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let inverse_class = members.iter().map(|m| class_of[g.inv(m[0])]).collect();
        let e = exponent(g);
        let power_map = members
            .iter()
            .map(|m| {
                let rep = m[0];
                let mut x = 0;
                let mut row = Vec::with_capacity(e);
                for _ in 0..e {
                    row.push(class_of[x]);
                    x = g.mul(x, rep);
                }
                row
            })
            .collect();
        ConjugacyClasses {
            class_of,
            members,
            inverse_class,
            power_map,
            exponent: e,
        }
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn rep(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Class of the `k`-th power of the class representative.
    pub fn power_class(&self, c: usize, k: usize) -> usize {
        self.power_map[c][k % self.exponent]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Expands a set of classes to the element set they cover.
    pub fn union_of(&self, parent_order: usize, classes: impl IntoIterator<Item = usize>) -> SubgroupSet {
        SubgroupSet::from_members(
            parent_order,
            classes.into_iter().flat_map(|c| self.members[c].iter().copied()),
        )
    }
}

impl FiniteGroup {
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        ConjugacyClasses::new(self)
    }
}
