mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use charlab_core::catalog::parse_recipe;
use charlab_core::cyclotomic::CyclotomicValue;
use charlab_core::verify::predicates::{center_order_predicates, semi_extraspecial, thm1_all};
use charlab_core::verify::{nl_quotient_violations, run_all, GroupContext, TheoremId, VerificationReport, VerifierRegistry};
use charlab_core::Limits;
use common::bundled;

fn context(recipe: &str) -> GroupContext {
    let g = parse_recipe(recipe).unwrap().build(4096).unwrap();
    GroupContext::new(recipe, g, Limits::default()).unwrap()
}

fn applicable(reports: &[VerificationReport]) -> Vec<TheoremId> {
    reports.iter().filter(|r| r.hypotheses_met).map(|r| r.theorem_id).collect()
}

const CONDITIONAL: [TheoremId; 8] = [
    TheoremId::Class2,
    TheoremId::CenterEq,
    TheoremId::NInZchi,
    TheoremId::CenterIdent,
    TheoremId::QuotCenterGvz,
    TheoremId::ElemAbelian,
    TheoremId::NlQuotient,
    TheoremId::Equivalences,
];

#[test]
fn abelian_group_runs_only_the_unconditional_lemmas() {
    let reports = run_all(&context("cyclic:6")).unwrap();
    assert_eq!(reports.len(), TheoremId::ALL.len());
    assert_eq!(applicable(&reports), vec![TheoremId::LinearIff, TheoremId::QuotCenterGeneral]);
    assert!(reports.iter().all(|r| !r.failed()));
}

#[test]
fn d8_passes_every_verifier() {
    let reports = run_all(&context("D8")).unwrap();
    assert_eq!(applicable(&reports).len(), TheoremId::ALL.len());
    assert!(reports.iter().all(|r| r.conclusion_holds == Some(true)), "{reports:#?}");
}

#[test]
fn s3_skips_the_gvz_results() {
    let reports = run_all(&context("S3")).unwrap();
    for r in &reports {
        if CONDITIONAL.contains(&r.theorem_id) {
            assert!(!r.hypotheses_met, "{}", r.theorem_id);
            assert!(r.hypothesis_detail.is_some());
        }
    }
    assert!(reports.iter().all(|r| !r.failed()));
}

#[test]
fn every_bundled_group_passes() {
    let expected_gvz_two: BTreeSet<&str> =
        ["D8", "Q8", "E27+", "E27-", "E32+", "E32-", "Heis4", "D8xC2"].into_iter().collect();
    let mut gvz_two = BTreeSet::new();
    for (r, g) in bundled() {
        let ctx = GroupContext::new(r.name.clone(), g, Limits::default()).unwrap();
        let reports = run_all(&ctx).unwrap();
        for r in &reports {
            assert!(!r.failed(), "{} {}: {:?}", r.group_name, r.theorem_id, r.witnesses);
        }
        for id in [TheoremId::LinearIff, TheoremId::QuotCenterGeneral] {
            let rep = reports.iter().find(|r| r.theorem_id == id).unwrap();
            assert_eq!(rep.conclusion_holds, Some(true), "{} {id}", r.name);
        }
        let flagged = ctx.gvz().map(|e| e.holds).unwrap_or(false) && ctx.degrees().len() == 2;
        if flagged {
            gvz_two.insert(r.name.clone());
            for id in CONDITIONAL {
                let rep = reports.iter().find(|r| r.theorem_id == id).unwrap();
                assert_eq!(rep.conclusion_holds, Some(true), "{} {id}", r.name);
            }
        }
    }
    for name in &expected_gvz_two {
        assert!(gvz_two.contains(*name), "{name} not flagged GVZ with two degrees");
    }
    let snapshot = std::fs::read_to_string(format!("{}/tests/fixtures/gvz_two_degrees.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let frozen: BTreeSet<String> = snapshot.lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(gvz_two, frozen);
}

#[test]
fn center_order_predicates_agree() {
    for (r, g) in bundled() {
        let ctx = GroupContext::new(r.name.clone(), g, Limits::default()).unwrap();
        if ctx.require_gvz().is_err() {
            continue;
        }
        let p = center_order_predicates(&ctx).unwrap();
        assert!(p.i == p.ii && p.ii == p.iii, "{}: {} {} {}", r.name, p.i, p.ii, p.iii);
        if ctx.degrees().len() == 2 {
            assert!(p.i, "{}", r.name);
            let centers: BTreeSet<_> = ctx.nonlinear().iter().map(|&i| ctx.rows()[i].center.clone()).collect();
            let collection: BTreeSet<_> = p.collection.iter().cloned().collect();
            assert_eq!(collection, centers, "{}", r.name);
        }
    }
}

#[test]
fn thm1_predicates_agree_on_p_groups() {
    let cap = Limits::default().normal_lattice_cap;
    let mut seen = BTreeSet::new();
    for (r, g) in bundled() {
        if g.is_abelian() || g.p_group_prime().is_none() {
            continue;
        }
        let t = charlab_core::chartab::character_table(&g).unwrap();
        let preds = thm1_all(&g, &t, cap).unwrap();
        let first = preds[0].holds;
        assert!(preds.iter().all(|p| p.holds == first), "{}", r.name);
        for p in &preds {
            assert_eq!(p.witness.is_some(), !p.holds, "{}", r.name);
        }
        seen.insert((r.name.clone(), first));
    }
    for name in ["D8", "Q8", "E27+", "E27-", "Heis4"] {
        assert!(seen.contains(&(name.to_string(), true)), "{name}");
    }
    assert!(seen.contains(&("D16".to_string(), false)));
    let h5 = parse_recipe("heisenberg:5").unwrap().build(4096).unwrap();
    let t = charlab_core::chartab::character_table(&h5).unwrap();
    assert!(thm1_all(&h5, &t, cap).unwrap().iter().all(|p| p.holds));
}

#[test]
fn semi_extraspecial_sets() {
    let cap = Limits::default().normal_lattice_cap;
    let yes = ["heisenberg:3", "heisenberg:4", "E27+", "E27-", "E32+", "E32-", "D8", "Q8"];
    for name in yes {
        let g = parse_recipe(name).unwrap().build(4096).unwrap();
        assert!(semi_extraspecial(&g, cap).unwrap(), "{name}");
    }
    for name in ["D16", "M4(2)"] {
        let g = parse_recipe(name).unwrap().build(4096).unwrap();
        assert!(!semi_extraspecial(&g, cap).unwrap(), "{name}");
    }
    for (r, g) in bundled().into_iter().filter(|(_, g)| g.is_abelian()) {
        assert!(!semi_extraspecial(&g, cap).unwrap_or(false), "{}", r.name);
    }
}

#[test]
fn nl_quotient_readings_agree() {
    for name in ["D8", "Q8", "E27+", "E32+", "D8xC2", "Heis4"] {
        let ctx = context(name);
        assert!(nl_quotient_violations(&ctx, true).unwrap().is_empty(), "{name}");
        assert!(nl_quotient_violations(&ctx, false).unwrap().is_empty(), "{name}");
    }
}

/// Negates the last character at its first nonzero non-identity class. For
/// groups with real central values this keeps the table consistent with
/// the GVZ property but breaks orthogonality.
fn perturbed(name: &str) -> GroupContext {
    let ctx = context(name);
    let t = ctx.table();
    let r = t.len() - 1;
    let c = (1..t.len()).find(|&c| !t.value(r, c).is_zero()).unwrap();
    let negated = CyclotomicValue::zero(t.root_order()).try_sub(t.value(r, c)).unwrap();
    let bad = Arc::new(t.with_value(r, c, negated));
    GroupContext::with_table(name, ctx.group().clone(), bad, Limits::default())
}

#[test]
fn every_verifier_rejects_a_perturbed_table() {
    let registry = VerifierRegistry::standard();
    for name in ["D8", "Q8", "E32+", "E32-", "Heis4", "D8xC2"] {
        let ctx = perturbed(name);
        for v in registry.iter() {
            let rep = registry.run(v, &ctx).unwrap();
            assert!(rep.hypotheses_met, "{name} {}", rep.theorem_id);
            assert_eq!(rep.conclusion_holds, Some(false), "{name} {}", rep.theorem_id);
            assert!(!rep.witnesses.is_empty());
        }
    }
}

#[test]
fn injected_fault_is_reported() {
    for name in ["D8", "S3", "cyclic:6", "E27+"] {
        let ctx = context(name).with_injected_fault();
        let reports = run_all(&ctx).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| r.failed()).collect();
        assert!(!failed.is_empty(), "{name}");
        assert!(failed.iter().all(|r| !r.witnesses.is_empty()));
    }
}

#[test]
fn registry_selection() {
    let registry = VerifierRegistry::standard();
    assert_eq!(registry.ids(), TheoremId::ALL.to_vec());
    let picked = registry.select(&["nl_quotient".into(), "L_class2".into()]).unwrap();
    assert_eq!(picked.iter().map(|v| v.id()).collect::<Vec<_>>(), vec![TheoremId::Class2, TheoremId::NlQuotient]);
    assert!(registry.select(&["T_nope".into()]).is_err());
}
