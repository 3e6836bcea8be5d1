//! Finite groups stored as full Cayley tables.
//!
//! Element `0` is always the identity. Products follow the convention that
//! `x * y` means "apply `x`, then `y`" when elements come from permutations,
//! so the commutator `[x, y] = x⁻¹ y⁻¹ x y` matches the usual left-to-right
//! reading.

mod classes;
mod iso;
mod lattice;
mod perm;
mod quotient;
mod series;
mod subgroup;

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

pub use classes::ConjugacyClasses;
pub use iso::{is_isoclinic, is_isomorphic, Isomorphism};
pub use lattice::{all_subgroups, normal_subgroups};
pub use perm::Permutation;
pub use quotient::QuotientGroup;
pub use series::{exponent, is_elementary_abelian, lower_central_series, CentralSeries, ElementaryAbelian};
pub use subgroup::SubgroupSet;

use crate::error::{Error, Result};

/// Tables up to this order are checked for associativity by a full triple scan;
/// larger tables use Light's generator test, which is equally conclusive.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    /// Generator words (indices into the generating list), when known.
    words: Option<Vec<Vec<u16>>>,
    gens: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a multiplication function that is already known
    /// to satisfy the group axioms with `0` as identity.
    pub(crate) fn from_fn_trusted(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b) as u32);
            }
        }
        Self::from_flat_trusted(order, mul, None)
    }

    pub(crate) fn from_flat_trusted(order: usize, mul: Vec<u32>, words: Option<Vec<Vec<u16>>>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            let b = row.iter().position(|&x| x == 0).expect("every element has an inverse");
            inv[a] = b as u32;
        }
        let mut elem_order = vec![1u32; order];
        for (a, slot) in elem_order.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * order + a] as usize;
                k += 1;
            }
            *slot = k;
        }
        FiniteGroup {
            order,
            mul,
            inv,
            elem_order,
            words,
            gens: OnceLock::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::from_flat_trusted(1, vec![0], Some(vec![vec![]]))
    }

    /// Closes a set of permutations under composition.
    ///
    /// The returned group has element `0` as the identity and records, for
    /// every element, a word in the generators reaching it (BFS order).
    pub fn close_generators(gens: &[Permutation], max_order: usize) -> Result<Self> {
        let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {bad} has degree {} but expected {degree}",
                bad.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let y = elements[head].then(g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= max_order {
                            return Err(Error::OrderExceeded { cap: max_order });
                        }
                        index.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((head, gi));
                        i
                    }
                };
                row.push(idx as u32);
            }
            right.push(row);
            head += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            mul[x * n] = x as u32;
            for y in 1..n {
                let (p, g) = parent[y];
                let xp = mul[x * n + p] as usize;
                mul[x * n + y] = right[xp][g];
            }
        }
        let mut words: Vec<Vec<u16>> = vec![Vec::new(); n];
        for y in 1..n {
            let (p, g) = parent[y];
            let mut w = words[p].clone();
            w.push(g as u16);
            words[y] = w;
        }
        Ok(Self::from_flat_trusted(n, mul, Some(words)))
    }

    /// Validates a Cayley table against the group axioms and relabels it so
    /// that the identity is element `0`.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!("row {r} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadTable(format!("entry {bad} in row {r} is out of range")));
            }
        }
        let m = |a: usize, b: usize| table[a][b];
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = m(a, b);
                    for c in 0..n {
                        if m(ab, c) != m(a, m(b, c)) {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            for g in magma_generators(n, &m) {
                for a in 0..n {
                    let ag = m(a, g);
                    for c in 0..n {
                        if m(ag, c) != m(a, m(g, c)) {
                            return Err(Error::NotAssociative { a, b: g, c });
                        }
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e && m(y, x) == e) {
                return Err(Error::NoInverse { element: x });
            }
        }
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(m(a, b)) as u32;
            }
        }
        Ok(Self::from_flat_trusted(n, mul, None))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        let ia = self.inv(a);
        let ib = self.inv(b);
        self.mul(self.mul(ia, ib), self.mul(a, b))
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.elem_order(a);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The largest prime-power decomposition check: `Some(p)` when |G| = pᵏ, k ≥ 1.
    pub fn p_group_prime(&self) -> Option<usize> {
        prime_power_base(self.order)
    }

    pub fn table_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.order.hash(&mut h);
        self.mul.hash(&mut h);
        h.finish()
    }

    pub fn word(&self, a: usize) -> Option<&[u16]> {
        self.words.as_ref().map(|w| w[a].as_slice())
    }

    pub fn has_words(&self) -> bool {
        self.words.is_some()
    }

    /// A printable name for an element: a generator word such as `g1*g2`
    /// when words are known, otherwise `#index`.
    pub fn element_label(&self, a: usize) -> String {
        match self.word(a) {
            Some([]) => "e".to_string(),
            Some(w) => w.iter().map(|g| format!("g{}", g + 1)).collect::<Vec<_>>().join("*"),
            None => format!("#{a}"),
        }
    }

    /// Rows of the Cayley table as plain index vectors.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// The subgroup `H` as a group in its own right, together with the map
    /// from new indices back to indices of `self`. The identity stays first.
    pub fn subgroup_as_group(&self, h: &SubgroupSet) -> (FiniteGroup, Vec<usize>) {
        let members = h.members().to_vec();
        let mut pos = HashMap::with_capacity(members.len());
        for (i, &x) in members.iter().enumerate() {
            pos.insert(x, i);
        }
        let k = members.len();
        let mut mul = vec![0u32; k * k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                mul[i * k + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        (FiniteGroup::from_flat_trusted(k, mul, None), members)
    }

    /// Direct product `self × other` on pairs `(a, b) ↦ a·|other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order;
        FiniteGroup::from_fn_trusted(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }
}

/// Returns `p` when `n = pᵏ` for a prime `p` and `k ≥ 1`.
pub fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Greedy generating set of a finite magma on `0..n`.
fn magma_generators(n: usize, m: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    while let Some(x) = (0..n).find(|&x| !inside[x]) {
        gens.push(x);
        inside[x] = true;
        members.push(x);
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let snapshot = members.len();
            for j in 0..snapshot {
                let b = members[j];
                for c in [m(a, b), m(b, a)] {
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// D8 with element `i + 4j` standing for `rⁱ sʲ`.
    pub fn d8() -> FiniteGroup {
        FiniteGroup::from_fn_trusted(8, |x, y| {
            let (i, j) = (x % 4, x / 4);
            let (k, l) = (y % 4, y / 4);
            let k = if j == 1 { (4 - k) % 4 } else { k };
            (i + k) % 4 + 4 * ((j + l) % 2)
        })
    }

    pub fn s3() -> FiniteGroup {
        let gens = [
            Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
            Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
        ];
        FiniteGroup::close_generators(&gens, 100).unwrap()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn_trusted(n, |a, b| (a + b) % n)
    }

    pub fn q8() -> FiniteGroup {
        // a^i x^j with x a x^-1 = a^-1, x^2 = a^2
        FiniteGroup::from_fn_trusted(8, |p, q| {
            let (i, j) = (p % 4, p / 4);
            let (k, l) = (q % 4, q / 4);
            let k = if j == 1 { (4 - k) % 4 } else { k };
            let mut e = i + k;
            if j + l == 2 {
                e += 2;
            }
            e % 4 + 4 * ((j + l) % 2)
        })
    }
}
