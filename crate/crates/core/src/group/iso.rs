//! Isomorphism and isoclinism search by backtracking over generator images.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// An isomorphism `G → H` as an element index map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

/// Invariant of an element under any isomorphism: its order, the size of
/// its conjugacy class and how many square roots it has.
fn fingerprints(g: &FiniteGroup) -> Vec<(usize, usize, usize)> {
    let classes = g.conjugacy_classes();
    let mut roots = vec![0usize; g.order()];
    for y in g.elements() {
        roots[g.mul(y, y)] += 1;
    }
    g.elements()
        .map(|x| (g.elem_order(x), classes.size(classes.class_of(x)), roots[x]))
        .collect()
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    /// Extends the assignment of the first `k` generators to the subgroup
    /// they generate; `None` when the assignment is not an injective homomorphism.
    fn extend(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.g.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; self.h.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for j in 0..k {
                let y = self.g.mul(x, self.gens[j]);
                let img = self.h.mul(map[x], self.images[j]);
                if map[y] == usize::MAX {
                    if used[img] {
                        return None;
                    }
                    used[img] = true;
                    map[y] = img;
                    queue.push(y);
                } else if map[y] != img {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }

    fn run(&mut self, level: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        if level == self.gens.len() {
            let map = self.extend(level).expect("checked at previous level");
            return Ok(visit(&map));
        }
        for ci in 0..self.candidates[level].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            self.images[level] = self.candidates[level][ci];
            if self.extend(level + 1).is_some() && self.run(level + 1, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Visits isomorphisms `G → H` until `visit` returns `true`.
/// Returns whether the visitor stopped the search.
pub(crate) fn for_each_isomorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    budget: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let fg = fingerprints(g);
    let fh = fingerprints(h);
    let mut sg = fg.clone();
    let mut sh = fh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }
    let gens = g.generators().to_vec();
    let candidates = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| fh[y] == fg[x]).collect())
        .collect();
    let mut search = Search {
        g,
        h,
        images: vec![0; gens.len()],
        gens,
        candidates,
        budget,
        nodes: 0,
    };
    search.run(0, visit)
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup, budget: u64) -> Result<Option<Isomorphism>> {
    let mut found = None;
    for_each_isomorphism(g, h, budget, &mut |map| {
        found = Some(Isomorphism { map: map.to_vec() });
        true
    })?;
    Ok(found)
}

/// Whether some isomorphism `G/Z(G) → H/Z(H)` induces, through lifted
/// commutators, a well-defined isomorphism `G′ → H′`.
pub fn is_isoclinic(g: &FiniteGroup, h: &FiniteGroup, quotient_cap: usize, budget: u64) -> Result<bool> {
    let qg = g.quotient(&g.center())?;
    let qh = h.quotient(&h.center())?;
    let dg = g.derived_subgroup();
    let dh = h.derived_subgroup();
    if qg.group.order() != qh.group.order() || dg.len() != dh.len() {
        return Ok(false);
    }
    let k = qg.group.order();
    if k > quotient_cap {
        return Err(Error::CapExceeded { size: k, cap: quotient_cap });
    }
    // commutators depend only on cosets of the center
    let comm_table = |grp: &FiniteGroup, labels: &[usize]| -> Vec<usize> {
        let mut t = Vec::with_capacity(k * k);
        for &a in labels {
            for &b in labels {
                t.push(grp.comm(a, b));
            }
        }
        t
    };
    let cg = comm_table(g, &qg.labels);
    let ch = comm_table(h, &qh.labels);
    let mut commutators: Vec<usize> = cg.clone();
    commutators.sort_unstable();
    commutators.dedup();

    for_each_isomorphism(&qg.group, &qh.group, budget, &mut |phi| {
        let mut psi = vec![usize::MAX; g.order()];
        let mut back = vec![usize::MAX; h.order()];
        for a in 0..k {
            for b in 0..k {
                let x = cg[a * k + b];
                let y = ch[phi[a] * k + phi[b]];
                if (psi[x] != usize::MAX && psi[x] != y) || (back[y] != usize::MAX && back[y] != x) {
                    return false;
                }
                psi[x] = y;
                back[y] = x;
            }
        }
        extends_to_isomorphism(g, h, &commutators, &psi, dg.len())
    })
}

/// Checks that a map defined on a generating set of a subgroup of `g`
/// extends to an injective homomorphism onto a subgroup of `h` of size `target`.
fn extends_to_isomorphism(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], on_gens: &[usize], target: usize) -> bool {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for &c in gens {
            let y = g.mul(x, c);
            let img = h.mul(map[x], on_gens[c]);
            if map[y] == usize::MAX {
                if used[img] {
                    return false;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return false;
            }
        }
        i += 1;
    }
    queue.len() == target && gens.iter().all(|&c| map[c] == on_gens[c])
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    const BUDGET: u64 = 1_000_000;

    #[test]
    fn self_isomorphism_found() {
        let g = d8();
        let iso = is_isomorphic(&g, &g, BUDGET).unwrap().unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(iso.map[g.mul(x, y)], g.mul(iso.map[x], iso.map[y]));
            }
        }
    }

    #[test]
    fn d8_not_isomorphic_to_q8() {
        assert!(is_isomorphic(&d8(), &q8(), BUDGET).unwrap().is_none());
    }

    #[test]
    fn relabelled_klein_groups_are_isomorphic() {
        let a = cyclic(2).direct_product(&cyclic(2));
        // same group, labels 1 and 3 swapped
        let swap = |x: usize| match x {
            1 => 3,
            3 => 1,
            x => x,
        };
        let b = FiniteGroup::from_fn_trusted(4, |x, y| swap(a.mul(swap(x), swap(y))));
        assert!(is_isomorphic(&a, &b, BUDGET).unwrap().is_some());
        assert!(is_isomorphic(&a, &cyclic(4), BUDGET).unwrap().is_none());
    }

    #[test]
    fn isoclinism_examples() {
        let (d8, q8) = (d8(), q8());
        assert!(is_isoclinic(&d8, &d8, 64, BUDGET).unwrap());
        assert!(is_isoclinic(&d8, &q8, 64, BUDGET).unwrap());
        assert!(is_isoclinic(&q8, &d8, 64, BUDGET).unwrap());
        let klein = cyclic(2).direct_product(&cyclic(2));
        assert!(!is_isoclinic(&d8, &klein, 64, BUDGET).unwrap());
        // abelian groups are all isoclinic to each other
        assert!(is_isoclinic(&klein, &cyclic(5), 64, BUDGET).unwrap());
        // D8 × C2 shares D8's isoclinism class
        assert!(is_isoclinic(&d8.direct_product(&cyclic(2)), &d8, 64, BUDGET).unwrap());
        assert!(!is_isoclinic(&s3(), &d8, 64, BUDGET).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = d8();
        assert_eq!(
            is_isomorphic(&g, &g, 0),
            Err(Error::SearchBudgetExceeded { budget: 0 })
        );
    }

    #[test]
    fn quotient_cap_is_enforced() {
        let g = s3();
        assert_eq!(is_isoclinic(&g, &g, 4, BUDGET), Err(Error::CapExceeded { size: 6, cap: 4 }));
    }
}
