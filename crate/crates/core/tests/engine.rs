mod common;

use std::time::Instant;

use charlab_core::chartab::character_table;
use charlab_core::cyclotomic::CyclotomicValue;
use charlab_oracles::{abelian_dual_table, numeric_character_table};
use common::{bundled, per_element, same_rows};

#[test]
fn tables_of_every_bundled_group_are_consistent() {
    let start = Instant::now();
    let groups = bundled();
    assert!(groups.len() >= 25);
    for (r, g) in &groups {
        let t = character_table(g).unwrap();
        let sum: u64 = t.rows().iter().map(|c| c.degree * c.degree).sum();
        assert_eq!(sum as usize, g.order(), "{}", r.name);
        assert_eq!(t.len(), t.classes().count(), "{}", r.name);
        assert!(t.first_orthogonality_holds(), "{}", r.name);
        assert!(t.second_orthogonality_holds(), "{}", r.name);
        assert!(t.inverse_values_are_conjugates(), "{}", r.name);
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn abelian_tables_match_the_dual_group() {
    for (r, g) in bundled().iter().filter(|(_, g)| g.is_abelian()) {
        let t = character_table(g).unwrap();
        let dual = abelian_dual_table(&g.cayley_rows()).unwrap();
        let e = t.root_order() as usize;
        let l = (e * dual.exponent / gcd(e, dual.exponent)) as u32;
        let ours: Vec<Vec<CyclotomicValue>> = (0..t.len())
            .map(|i| g.elements().map(|x| t.value(i, t.classes().class_of(x)).embed(l).unwrap()).collect())
            .collect();
        assert_eq!(ours.len(), dual.rows.len(), "{}", r.name);
        for row in &dual.rows {
            let theirs: Vec<CyclotomicValue> = row
                .iter()
                .map(|&j| CyclotomicValue::root(dual.exponent as u32, j as u32).embed(l).unwrap())
                .collect();
            assert!(
                ours.iter().any(|o| o.iter().zip(&theirs).all(|(a, b)| a.equals(b))),
                "{}: dual character {row:?} missing",
                r.name
            );
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn nonabelian_tables_match_numeric_diagonalization() {
    for (r, g) in bundled().iter().filter(|(_, g)| !g.is_abelian() && g.order() <= 64) {
        let t = character_table(g).unwrap();
        let numeric: Vec<Vec<(f64, f64)>> = numeric_character_table(&g.cayley_rows())
            .iter()
            .map(|row| row.iter().map(|v| (v.re, v.im)).collect())
            .collect();
        assert!(same_rows(&per_element(g, &t), &numeric, 1e-6), "{}", r.name);
    }
}
