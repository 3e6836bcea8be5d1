//! Group and character predicates used by the equivalence verifiers.

use super::context::render_set;
use super::{GroupContext, Witness};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{all_subgroups, is_elementary_abelian, normal_subgroups, FiniteGroup, SubgroupSet};
use crate::props::degree_set;

/// A truth value with a counterexample when false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Predicate {
    fn yes() -> Self {
        Predicate { holds: true, witness: None }
    }

    fn no(w: Witness) -> Self {
        Predicate {
            holds: false,
            witness: Some(w),
        }
    }
}

fn integer_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// `cd(G) = {1, |G/Z(G)|^½}`.
pub fn thm1_i(g: &FiniteGroup, t: &CharacterTable) -> Predicate {
    let index = g.order() / g.center().len();
    let cd = degree_set(t);
    let ok = integer_sqrt(index).is_some_and(|r| cd == [1, r as u64]);
    if ok {
        Predicate::yes()
    } else {
        let cd: Vec<String> = cd.iter().map(u64::to_string).collect();
        Predicate::no(
            Witness::new("degree_set_mismatch")
                .with("cd", format!("{{{}}}", cd.join(",")))
                .with("central_index", index),
        )
    }
}

/// `Cl(x) = xG′` for every noncentral `x`.
pub fn thm1_ii(g: &FiniteGroup) -> Predicate {
    let z = g.center();
    let d = g.derived_subgroup();
    let classes = g.conjugacy_classes();
    for x in g.elements().filter(|&x| !z.contains(x)) {
        let coset = SubgroupSet::from_members(g.order(), d.members().iter().map(|&y| g.mul(x, y)));
        let class = SubgroupSet::from_members(g.order(), classes.members(classes.class_of(x)).iter().copied());
        if class != coset {
            return Predicate::no(
                Witness::new("class_not_coset")
                    .with("x", g.element_label(x))
                    .with("class", render_set(g, &class))
                    .with("coset", render_set(g, &coset)),
            );
        }
    }
    Predicate::yes()
}

/// `[x, G] = G′` for every noncentral `x`.
pub fn thm1_iii(g: &FiniteGroup) -> Predicate {
    let z = g.center();
    let d = g.derived_subgroup();
    for x in g.elements().filter(|&x| !z.contains(x)) {
        let xg = g.subgroup_generated(g.elements().map(|y| g.comm(x, y)));
        if xg != d {
            return Predicate::no(
                Witness::new("commutators_not_derived")
                    .with("x", g.element_label(x))
                    .with("x_G", render_set(g, &xg))
                    .with("derived", render_set(g, &d)),
            );
        }
    }
    Predicate::yes()
}

/// `Z(G/N) = Z(G)/N` for every normal `N` with `G′ ⊄ N`.
pub fn thm1_v(g: &FiniteGroup, normals: &[SubgroupSet]) -> Result<Predicate> {
    let z = g.center();
    let d = g.derived_subgroup();
    for n in normals.iter().filter(|n| !d.is_subset(n)) {
        let q = g.quotient(n)?;
        let zq = q.group.center();
        let image = q.image(&z);
        if zq != image {
            return Ok(Predicate::no(
                Witness::new("quotient_center_mismatch")
                    .with("N", render_set(g, n))
                    .with("Z_N", render_set(g, &q.preimage(&zq)))
                    .with("Z(G)N", render_set(g, &q.preimage(&image))),
            ));
        }
    }
    Ok(Predicate::yes())
}

/// `|Z(G)| = p`, `G′ = Z(G)`, and `G/Z(G)` elementary abelian.
pub fn is_extraspecial(g: &FiniteGroup) -> bool {
    let Some(p) = g.p_group_prime() else {
        return false;
    };
    let z = g.center();
    if z.len() != p || g.derived_subgroup() != z {
        return false;
    }
    match g.quotient(&z) {
        Ok(q) => is_elementary_abelian(&q.group).holds(),
        Err(_) => false,
    }
}

/// `G/N` is extraspecial for every maximal subgroup `N` of `Z(G)`.
///
/// Abelian groups are never semi-extraspecial, since all their quotients are
/// abelian; other groups must be p-groups.
pub fn semi_extraspecial(g: &FiniteGroup, lattice_cap: usize) -> Result<bool> {
    if g.is_abelian() {
        return Ok(false);
    }
    let p = g.p_group_prime().ok_or(Error::NotPGroup { order: g.order() })?;
    let z = g.center();
    let (zg, embed) = g.subgroup_as_group(&z);
    for s in all_subgroups(&zg, lattice_cap)? {
        if s.len() * p != z.len() {
            continue;
        }
        let n = SubgroupSet::from_members(g.order(), s.members().iter().map(|&x| embed[x]));
        if !is_extraspecial(&g.quotient(&n)?.group) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three conditions of the equivalence theorem for GVZ groups, with the
/// canonical candidate collection for (ii).
#[derive(Clone, Debug)]
pub struct CenterOrderPredicates {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    /// Distinct lifted centers `Z_N` over admissible `N`, sorted.
    pub collection: Vec<SubgroupSet>,
    pub witness_ii: Option<Witness>,
    pub witness_iii: Option<Witness>,
}

pub fn center_order_predicates(ctx: &GroupContext) -> Result<CenterOrderPredicates> {
    let g = ctx.group();
    let admissible = ctx.admissible()?;
    let mut lifted = Vec::with_capacity(admissible.len());
    for (n, _) in &admissible {
        lifted.push((n.clone(), ctx.lifted_center(n)?));
    }

    let mut collection: Vec<SubgroupSet> = lifted.iter().map(|(_, z)| z.clone()).collect();
    collection.sort();
    collection.dedup();

    // (ii): any valid collection must contain every Z_N, because
    // Z(G/N) = X/N forces X = Z_N; so the canonical candidate fails only
    // when (ii) is false.
    let mut witness_ii = None;
    if let Some(x) = collection.iter().find(|x| !g.is_normal(x)) {
        witness_ii = Some(Witness::new("collection_member_not_normal").with("X", ctx.render_set(x)));
    } else if let Some(pair) = collection.windows(2).find(|w| w[0].len() != w[1].len()) {
        witness_ii = Some(
            Witness::new("collection_orders_differ")
                .with("X_a", ctx.render_set(&pair[0]))
                .with("X_b", ctx.render_set(&pair[1])),
        );
    }

    let mut witness_iii = None;
    'outer: for (n, zn) in &lifted {
        for (m, zm) in &lifted {
            if zn.len() != zm.len() {
                witness_iii = Some(
                    Witness::new("lifted_center_orders_differ")
                        .with("N", ctx.render_set(n))
                        .with("M", ctx.render_set(m))
                        .with("|Z_N|", zn.len())
                        .with("|Z_M|", zm.len()),
                );
                break 'outer;
            }
        }
    }

    Ok(CenterOrderPredicates {
        i: ctx.degrees().len() == 2,
        ii: witness_ii.is_none(),
        iii: witness_iii.is_none(),
        collection,
        witness_ii,
        witness_iii,
    })
}

/// All four checkable conditions of the p-group equivalence theorem for `g`.
pub fn thm1_all(g: &FiniteGroup, t: &CharacterTable, lattice_cap: usize) -> Result<[Predicate; 4]> {
    let normals = normal_subgroups(g, lattice_cap)?;
    Ok([thm1_i(g, t), thm1_ii(g), thm1_iii(g), thm1_v(g, &normals)?])
}
