#![allow(dead_code)]

use charlab_core::catalog::{bundled_catalog, GroupRecipe};
use charlab_core::chartab::CharacterTable;
use charlab_core::group::FiniteGroup;

pub fn bundled() -> Vec<(GroupRecipe, FiniteGroup)> {
    bundled_catalog()
        .into_iter()
        .map(|r| {
            let g = r.build(4096).unwrap_or_else(|e| panic!("{}: {e}", r.name));
            (r, g)
        })
        .collect()
}

/// Table values per element, as complex numbers.
pub fn per_element(g: &FiniteGroup, t: &CharacterTable) -> Vec<Vec<(f64, f64)>> {
    (0..t.len())
        .map(|r| g.elements().map(|x| t.value(r, t.classes().class_of(x)).to_complex()).collect())
        .collect()
}

fn close(a: &[(f64, f64)], b: &[(f64, f64)], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x.0 - y.0).abs() < tol && (x.1 - y.1).abs() < tol)
}

/// Whether the two row lists agree up to a permutation of rows.
pub fn same_rows(a: &[Vec<(f64, f64)>], b: &[Vec<(f64, f64)>], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|ra| {
        match (0..b.len()).find(|&j| !used[j] && close(ra, &b[j], tol)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}
