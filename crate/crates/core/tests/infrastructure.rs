mod common;

use charlab_core::catalog::{parse_group_file, parse_recipe, perm_file_text, RecipeKind};
use charlab_core::group::{is_isoclinic, is_isomorphic, normal_subgroups, Permutation};
use charlab_core::Limits;
use common::bundled;

#[test]
fn normal_lattice_matches_brute_force() {
    let cap = Limits::default().normal_lattice_cap;
    for (r, g) in bundled().iter().filter(|(_, g)| g.order() <= 64) {
        let ours: Vec<Vec<usize>> = normal_subgroups(g, cap).unwrap().iter().map(|n| n.members().to_vec()).collect();
        let mut ours_sorted = ours.clone();
        ours_sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let brute = charlab_oracles::normal_subgroups(&g.cayley_rows());
        assert_eq!(ours_sorted, brute, "{}", r.name);
    }
}

#[test]
fn quotient_projections_are_homomorphisms() {
    let cap = Limits::default().normal_lattice_cap;
    for (r, g) in bundled().iter().filter(|(_, g)| g.order() <= 64) {
        for n in normal_subgroups(g, cap).unwrap() {
            let q = g.quotient(&n).unwrap();
            assert_eq!(q.group.order() * n.len(), g.order(), "{}", r.name);
            for x in g.elements() {
                assert_eq!(q.project(x) == q.project(0), n.contains(x), "{}", r.name);
                for y in g.elements() {
                    assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)), "{}", r.name);
                }
            }
        }
    }
}

#[test]
fn builds_are_deterministic_and_match_their_order_formula() {
    for (r, g) in bundled() {
        assert_eq!(r.build(4096).unwrap().cayley_rows(), g.cayley_rows(), "{}", r.name);
        if let Some(n) = r.expected_order() {
            assert_eq!(n, g.order(), "{}", r.name);
        }
    }
}

#[test]
fn perm_files_round_trip_up_to_isomorphism() {
    let cases = [
        ("S4", 4, vec![vec![vec![0, 1, 2, 3]], vec![vec![0, 1]]]),
        ("D10", 5, vec![vec![vec![0, 1, 2, 3, 4]], vec![vec![1, 4], vec![2, 3]]]),
        ("Q8", 8, vec![vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], vec![vec![0, 4, 2, 6], vec![1, 7, 3, 5]]]),
    ];
    for (name, degree, gens) in cases {
        let gens: Vec<Permutation> = gens.iter().map(|c| Permutation::from_cycles(degree, c).unwrap()).collect();
        let text = perm_file_text(name, degree, &gens);
        let parsed = parse_group_file(&text).unwrap();
        assert!(matches!(parsed.kind, RecipeKind::PermGens { .. }));
        let reference = parse_recipe(name).unwrap().build(4096).unwrap();
        let built = parsed.build(4096).unwrap();
        assert!(is_isomorphic(&built, &reference, 1_000_000).unwrap().is_some(), "{name}");
    }
}

#[test]
fn isoclinism_examples() {
    let d8 = parse_recipe("D8").unwrap().build(64).unwrap();
    let q8 = parse_recipe("Q8").unwrap().build(64).unwrap();
    let c222 = parse_recipe("abelian:2,2,2").unwrap().build(64).unwrap();
    let c4 = parse_recipe("cyclic:4").unwrap().build(64).unwrap();
    let limits = Limits::default();
    assert!(is_isoclinic(&d8, &q8, limits.isoclinism_quotient_cap, limits.iso_search_cap).unwrap());
    assert!(!is_isoclinic(&d8, &c222, limits.isoclinism_quotient_cap, limits.iso_search_cap).unwrap());
    assert!(is_isoclinic(&c4, &c222, limits.isoclinism_quotient_cap, limits.iso_search_cap).unwrap());
}
