use num_integer::Integer;

use super::{prime_power_base, FiniteGroup, SubgroupSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    /// `γ₁ = G ⊇ γ₂ = G′ ⊇ …`, ending at the first repeated term.
    pub terms: Vec<SubgroupSet>,
    /// Nilpotency class, or `None` when the series stalls above the trivial group.
    pub class: Option<usize>,
}

impl CentralSeries {
    pub fn is_nilpotent(&self) -> bool {
        self.class.is_some()
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> CentralSeries {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            return CentralSeries {
                class: Some(terms.len() - 1),
                terms,
            };
        }
        let next = g.commutator_subgroup(last);
        if next.len() == last.len() {
            return CentralSeries { terms, class: None };
        }
        terms.push(next);
    }
}

/// lcm of the element orders.
pub fn exponent(g: &FiniteGroup) -> usize {
    g.elements().fold(1, |acc, x| acc.lcm(&g.elem_order(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryAbelian {
    /// The trivial group, elementary abelian for every prime.
    Trivial,
    Prime(usize),
    No,
}

impl ElementaryAbelian {
    pub fn prime(self) -> Option<usize> {
        match self {
            ElementaryAbelian::Prime(p) => Some(p),
            _ => None,
        }
    }

    pub fn holds(self) -> bool {
        self != ElementaryAbelian::No
    }
}

pub fn is_elementary_abelian(q: &FiniteGroup) -> ElementaryAbelian {
    if q.order() == 1 {
        return ElementaryAbelian::Trivial;
    }
    let Some(p) = prime_power_base(q.order()) else {
        return ElementaryAbelian::No;
    };
    if (1..q.order()).all(|x| q.elem_order(x) == p) && q.is_abelian() {
        ElementaryAbelian::Prime(p)
    } else {
        ElementaryAbelian::No
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn series_examples() {
        let c6 = lower_central_series(&cyclic(6));
        assert_eq!(c6.class, Some(1));
        assert_eq!(c6.terms.len(), 2);

        let d8 = d8();
        let s = lower_central_series(&d8);
        assert_eq!(s.class, Some(2));
        assert_eq!(s.terms[1].members(), &[0, 2]);
        assert!(s.terms[2].is_trivial());

        let s3 = s3();
        let s = lower_central_series(&s3);
        assert_eq!(s.class, None);
        assert_eq!(s.terms.last().unwrap().len(), 3);
        for t in &s.terms {
            assert!(s3.is_normal(t));
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent(&FiniteGroup::trivial()), 1);
        assert_eq!(exponent(&d8()), 4);
        assert_eq!(exponent(&cyclic(2).direct_product(&cyclic(3))), 6);
    }

    #[test]
    fn elementary_abelian_cases() {
        let klein = cyclic(2).direct_product(&cyclic(2));
        assert_eq!(is_elementary_abelian(&klein), ElementaryAbelian::Prime(2));
        assert_eq!(is_elementary_abelian(&cyclic(4)), ElementaryAbelian::No);
        assert_eq!(is_elementary_abelian(&FiniteGroup::trivial()), ElementaryAbelian::Trivial);
        assert_eq!(is_elementary_abelian(&cyclic(6)), ElementaryAbelian::No);
        assert_eq!(is_elementary_abelian(&s3()), ElementaryAbelian::No);
    }
}
