use crate::group::{ConjugacyClasses, FiniteGroup};

/// Class multiplication coefficients `a[i][j][t] = #{(x, y) ∈ Cᵢ × Cⱼ : xy = z}`
/// for a fixed `z ∈ C_t`; the structure constants of the class-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMultCoeffs {
    k: usize,
    a: Vec<u64>,
}

impl ClassMultCoeffs {
    pub fn new(g: &FiniteGroup, classes: &ConjugacyClasses) -> Self {
        let k = classes.count();
        let mut a = vec![0u64; k * k * k];
        for t in 0..k {
            let z = classes.rep(t);
            for i in 0..k {
                for &x in classes.members(i) {
                    let j = classes.class_of(g.mul(g.inv(x), z));
                    a[(i * k + j) * k + t] += 1;
                }
            }
        }
        ClassMultCoeffs { k, a }
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, t: usize) -> u64 {
        self.a[(i * self.k + j) * self.k + t]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::fixtures::*;

    #[test]
    fn trivial_and_c2() {
        let g = FiniteGroup::trivial();
        let c = ClassMultCoeffs::new(&g, &g.conjugacy_classes());
        assert_eq!(c.get(0, 0, 0), 1);
        let g = cyclic(2);
        let c = ClassMultCoeffs::new(&g, &g.conjugacy_classes());
        assert_eq!(c.get(1, 1, 0), 1);
        assert_eq!(c.get(1, 1, 1), 0);
    }

    #[test]
    fn counting_identity_and_representative_independence() {
        for g in [d8(), q8(), s3(), cyclic(5)] {
            let cl = g.conjugacy_classes();
            let c = ClassMultCoeffs::new(&g, &cl);
            let k = cl.count();
            for i in 0..k {
                for j in 0..k {
                    let total: u64 = (0..k).map(|t| c.get(i, j, t) * cl.size(t) as u64).sum();
                    assert_eq!(total, (cl.size(i) * cl.size(j)) as u64);
                    for t in 0..k {
                        for &z in cl.members(t) {
                            let count = cl
                                .members(i)
                                .iter()
                                .flat_map(|&x| cl.members(j).iter().map(move |&y| (x, y)))
                                .filter(|&(x, y)| g.mul(x, y) == z)
                                .count() as u64;
                            assert_eq!(count, c.get(i, j, t));
                        }
                    }
                }
            }
        }
    }
}
