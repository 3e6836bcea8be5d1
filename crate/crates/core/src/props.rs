//! Subgroups and predicates read off a character table: kernels, centers,
//! degree sets, the GVZ property, and inflation from quotients.

use std::sync::Arc;

use crate::chartab::{character_table, CharacterTable};
use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, SubgroupSet};

/// `ker χ = {g : χ(g) = χ(1)}`.
pub fn kernel_of(t: &CharacterTable, row: usize) -> SubgroupSet {
    let chi = t.row(row);
    let d = chi.degree as i64;
    let cl = t.classes();
    cl.union_of(t.group_order(), (0..cl.count()).filter(|&c| chi.values[c].equals_integer(d)))
}

/// `Z(χ) = {g : |χ(g)| = χ(1)}`, tested as `χ(g)χ(g⁻¹) = χ(1)²`.
pub fn center_of(t: &CharacterTable, row: usize) -> SubgroupSet {
    let cl = t.classes();
    cl.union_of(t.group_order(), (0..cl.count()).filter(|&c| modulus_is_degree(t, row, c)))
}

fn modulus_is_degree(t: &CharacterTable, row: usize, c: usize) -> bool {
    let chi = t.row(row);
    let inv = t.classes().inverse_class(c);
    CyclotomicValue::abs_squared_equals(&chi.values[c], &chi.values[inv], chi.degree * chi.degree)
}

/// Distinct degrees, ascending.
pub fn degree_set(t: &CharacterTable) -> Vec<u64> {
    let mut d = t.degrees();
    d.dedup();
    d
}

pub fn nonlinear_rows(t: &CharacterTable) -> Vec<usize> {
    (0..t.len()).filter(|&r| t.row(r).degree > 1).collect()
}

/// A class outside `Z(χ)` where `χ` does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVanishing {
    pub class: usize,
    pub value: CyclotomicValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEvidence {
    pub row: usize,
    pub degree: u64,
    pub center_order: usize,
    pub vanishes_off_center: bool,
    pub degree_squared_is_index: bool,
    pub witness: Option<NonVanishing>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GvzEvidence {
    pub holds: bool,
    pub rows: Vec<RowEvidence>,
}

impl GvzEvidence {
    pub fn first_failure(&self) -> Option<&RowEvidence> {
        self.rows.iter().find(|r| !r.vanishes_off_center)
    }
}

/// Whether every irreducible character vanishes off its center.
///
/// Each row is also checked against `χ(1)² = |G : Z(χ)|`, which is
/// equivalent; disagreement means the table is wrong.
pub fn is_gvz(t: &CharacterTable) -> Result<GvzEvidence> {
    let cl = t.classes();
    if cl.count() == t.group_order() {
        return Err(Error::AbelianInput);
    }
    let mut rows = Vec::with_capacity(t.len());
    for r in 0..t.len() {
        let chi = t.row(r);
        let mut center_order = 0;
        let mut witness = None;
        for c in 0..cl.count() {
            if modulus_is_degree(t, r, c) {
                center_order += cl.size(c);
            } else if witness.is_none() && !chi.values[c].is_zero() {
                witness = Some(NonVanishing {
                    class: c,
                    value: chi.values[c].clone(),
                });
            }
        }
        let vanishes = witness.is_none();
        let index_ok = (chi.degree * chi.degree) as usize * center_order == t.group_order();
        if vanishes != index_ok {
            return Err(Error::InternalInconsistency(format!(
                "row {r}: vanishing test says {vanishes}, degree test says {index_ok}"
            )));
        }
        rows.push(RowEvidence {
            row: r,
            degree: chi.degree,
            center_order,
            vanishes_off_center: vanishes,
            degree_squared_is_index: index_ok,
            witness,
        });
    }
    Ok(GvzEvidence {
        holds: rows.iter().all(|r| r.vanishes_off_center),
        rows,
    })
}

/// `Irr(G/N)` matched to the rows of `Irr(G)` whose kernel contains `N`.
#[derive(Clone, Debug)]
pub struct QuotientCharacters {
    pub quotient: QuotientGroup,
    pub table: Arc<CharacterTable>,
    /// `parent_rows[i]` is the row of `G`'s table that quotient row `i` inflates to.
    pub parent_rows: Vec<usize>,
}

pub fn quotient_characters(g: &FiniteGroup, parent: &CharacterTable, n: &SubgroupSet) -> Result<QuotientCharacters> {
    let quotient = g.quotient(n)?;
    let table = character_table(&quotient.group)?;
    let e = parent.root_order();
    let pcl = parent.classes();
    let qcl = table.classes();
    // quotient class of the image of each parent class
    let image_class: Vec<usize> = (0..pcl.count())
        .map(|c| qcl.class_of(quotient.project(pcl.rep(c))))
        .collect();
    let mut parent_rows = Vec::with_capacity(table.len());
    for qr in 0..table.len() {
        let lifted = image_class
            .iter()
            .map(|&qc| table.value(qr, qc).embed(e))
            .collect::<Result<Vec<_>>>()?;
        let found = (0..parent.len()).find(|&r| {
            parent.row(r).values.iter().zip(&lifted).all(|(a, b)| a.equals(b))
        });
        match found {
            Some(r) if !parent_rows.contains(&r) => parent_rows.push(r),
            Some(r) => return Err(Error::MatchFailed(format!("quotient rows share parent row {r}"))),
            None => return Err(Error::MatchFailed(format!("quotient row {qr} inflates to no row"))),
        }
    }
    Ok(QuotientCharacters {
        quotient,
        table,
        parent_rows,
    })
}

/// One row of a table with the subgroups attached to it.
#[derive(Clone, Debug)]
pub struct CharacterView<'a> {
    pub table: &'a CharacterTable,
    pub row: usize,
    pub degree: u64,
    pub kernel: SubgroupSet,
    pub center: SubgroupSet,
}

impl CharacterView<'_> {
    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

pub fn views(t: &CharacterTable) -> Vec<CharacterView<'_>> {
    (0..t.len())
        .map(|row| CharacterView {
            table: t,
            row,
            degree: t.row(row).degree,
            kernel: kernel_of(t, row),
            center: center_of(t, row),
        })
        .collect()
}
