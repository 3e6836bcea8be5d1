use super::predicates::{center_order_predicates, thm1_all, thm1_i, Predicate};
use super::{Findings, GroupContext, Outcome, TheoremId, Verifier, Witness};
use crate::chartab::character_table;
use crate::error::Result;
use crate::group::{exponent, is_elementary_abelian, is_isoclinic, lower_central_series, ElementaryAbelian, FiniteGroup, SubgroupSet};

pub(super) fn all() -> Vec<Box<dyn Verifier>> {
    vec![
        Box::new(ClassTwo),
        Box::new(CenterEquality),
        Box::new(NInCenter),
        Box::new(CenterIdentification),
        Box::new(LinearIff),
        Box::new(QuotientCenterGeneral),
        Box::new(QuotientCenterGvz),
        Box::new(ElementaryAbelianQuotients),
        Box::new(NlQuotient),
        Box::new(CenterOrderEquivalence),
        Box::new(PGroupEquivalence),
        Box::new(Thm1Equivalence),
    ]
}

macro_rules! hypothesis {
    ($e:expr) => {
        if let Err(why) = $e {
            return Ok(Outcome::HypothesesNotMet(why));
        }
    };
}

fn chi(r: usize) -> String {
    format!("chi_{r}")
}

struct ClassTwo;

impl Verifier for ClassTwo {
    fn id(&self) -> TheoremId {
        TheoremId::Class2
    }
    fn name(&self) -> &'static str {
        "class_two"
    }
    fn description(&self) -> &'static str {
        "GVZ with two degrees implies nilpotency class two"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let series = lower_central_series(ctx.group());
        let mut f = Findings::default();
        if series.class != Some(2) {
            let class = series.class.map_or("not nilpotent".to_string(), |c| c.to_string());
            let orders: Vec<String> = series.terms.iter().map(|t| t.len().to_string()).collect();
            f.witnesses.push(
                Witness::new("nilpotency_class")
                    .with("class", class)
                    .with("lower_central_series_orders", orders.join(" > ")),
            );
        }
        Ok(Outcome::Checked(f))
    }
}

struct CenterEquality;

impl Verifier for CenterEquality {
    fn id(&self) -> TheoremId {
        TheoremId::CenterEq
    }
    fn name(&self) -> &'static str {
        "center_equality"
    }
    fn description(&self) -> &'static str {
        "[Z(phi),G] in ker chi implies Z(phi) = Z(chi)"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let rows = ctx.rows();
        let mut f = Findings::default();
        let nl = ctx.nonlinear();
        for &phi in &nl {
            for &c in &nl {
                if rows[phi].comm.is_subset(&rows[c].kernel) && rows[phi].center != rows[c].center {
                    f.witnesses.push(
                        Witness::new("centers_differ")
                            .with("phi", chi(phi))
                            .with("chi", chi(c))
                            .with("Z(phi)", ctx.render_set(&rows[phi].center))
                            .with("Z(chi)", ctx.render_set(&rows[c].center)),
                    );
                }
            }
        }
        Ok(Outcome::Checked(f))
    }
}

struct NInCenter;

impl Verifier for NInCenter {
    fn id(&self) -> TheoremId {
        TheoremId::NInZchi
    }
    fn name(&self) -> &'static str {
        "n_in_center"
    }
    fn description(&self) -> &'static str {
        "G' not in N and [Z(chi),G] in N imply N in Z(chi)"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let rows = ctx.rows();
        let mut f = Findings::default();
        for (n, admissible_rows) in ctx.admissible()? {
            for r in admissible_rows {
                if !n.is_subset(&rows[r].center) {
                    f.witnesses.push(
                        Witness::new("N_not_in_center")
                            .with("N", ctx.render_set(&n))
                            .with("chi", chi(r))
                            .with("Z(chi)", ctx.render_set(&rows[r].center)),
                    );
                }
            }
        }
        Ok(Outcome::Checked(f))
    }
}

struct CenterIdentification;

impl Verifier for CenterIdentification {
    fn id(&self) -> TheoremId {
        TheoremId::CenterIdent
    }
    fn name(&self) -> &'static str {
        "center_identification"
    }
    fn description(&self) -> &'static str {
        "Z(chi) = X_i iff [X_i,G] in ker chi"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let g = ctx.group();
        let rows = ctx.rows();
        let nl = ctx.nonlinear();
        let mut xs: Vec<SubgroupSet> = nl.iter().map(|&r| rows[r].center.clone()).collect();
        xs.sort();
        xs.dedup();
        let x_comms: Vec<SubgroupSet> = xs.iter().map(|x| g.commutator_subgroup(x)).collect();
        let mut f = Findings::default();
        for &r in &nl {
            for (i, x) in xs.iter().enumerate() {
                let equal = rows[r].center == *x;
                let in_kernel = x_comms[i].is_subset(&rows[r].kernel);
                if equal != in_kernel {
                    f.witnesses.push(
                        Witness::new("biconditional_fails")
                            .with("chi", chi(r))
                            .with("X", ctx.render_set(x))
                            .with("Z(chi) = X", equal)
                            .with("[X,G] in ker chi", in_kernel),
                    );
                }
            }
        }
        Ok(Outcome::Checked(f))
    }
}

struct LinearIff;

impl Verifier for LinearIff {
    fn id(&self) -> TheoremId {
        TheoremId::LinearIff
    }
    fn name(&self) -> &'static str {
        "linear_iff"
    }
    fn description(&self) -> &'static str {
        "chi is linear iff [Z(chi),G] = G'"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        let mut f = Findings::default();
        for (r, row) in ctx.rows().iter().enumerate() {
            let linear = row.degree == 1;
            let full = row.comm == *ctx.derived();
            if linear != full {
                f.witnesses.push(
                    Witness::new("linearity_mismatch")
                        .with("chi", chi(r))
                        .with("degree", row.degree)
                        .with("[Z(chi),G]", ctx.render_set(&row.comm))
                        .with("derived", ctx.render_set(ctx.derived())),
                );
            }
        }
        Ok(Outcome::Checked(f))
    }
}

/// `Z(G/N) = Z(χ)N/N`, compared through full preimages.
fn quotient_center_witness(ctx: &GroupContext, n: &SubgroupSet, r: usize) -> Result<Option<Witness>> {
    let g = ctx.group();
    let center = &ctx.rows()[r].center;
    if !g.is_subgroup(n) || !g.is_normal(n) {
        return Ok(Some(
            Witness::new("kernel_not_normal").with("chi", chi(r)).with("N", ctx.render_set(n)),
        ));
    }
    let zn = ctx.lifted_center(n)?;
    let expected = g.product_set(center, n);
    Ok((zn != expected).then(|| {
        Witness::new("quotient_center_mismatch")
            .with("chi", chi(r))
            .with("N", ctx.render_set(n))
            .with("Z_N", ctx.render_set(&zn))
            .with("Z(chi)N", ctx.render_set(&expected))
    }))
}

struct QuotientCenterGeneral;

impl Verifier for QuotientCenterGeneral {
    fn id(&self) -> TheoremId {
        TheoremId::QuotCenterGeneral
    }
    fn name(&self) -> &'static str {
        "quotient_center_general"
    }
    fn description(&self) -> &'static str {
        "Z(G/[Z(chi),G]) = Z(chi)/[Z(chi),G]"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        let mut f = Findings::default();
        for r in 0..ctx.rows().len() {
            let n = ctx.rows()[r].comm.clone();
            if let Some(w) = quotient_center_witness(ctx, &n, r)? {
                f.witnesses.push(w);
            }
        }
        Ok(Outcome::Checked(f))
    }
}

struct QuotientCenterGvz;

impl Verifier for QuotientCenterGvz {
    fn id(&self) -> TheoremId {
        TheoremId::QuotCenterGvz
    }
    fn name(&self) -> &'static str {
        "quotient_center_gvz"
    }
    fn description(&self) -> &'static str {
        "G' not in N and [Z(chi),G] in N imply Z(G/N) = Z(chi)/N"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let mut f = Findings::default();
        for (n, rows) in ctx.admissible()? {
            for r in rows {
                if let Some(w) = quotient_center_witness(ctx, &n, r)? {
                    f.witnesses.push(w);
                }
            }
        }
        Ok(Outcome::Checked(f))
    }
}

struct ElementaryAbelianQuotients;

impl Verifier for ElementaryAbelianQuotients {
    fn id(&self) -> TheoremId {
        TheoremId::ElemAbelian
    }
    fn name(&self) -> &'static str {
        "elementary_abelian"
    }
    fn description(&self) -> &'static str {
        "G/Z(chi), G/Z(G), G'/[Z(chi),G] elementary abelian of one exponent"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let g = ctx.group();
        let mut f = Findings::default();
        let mod_center = g.quotient(ctx.center())?.group;
        for r in ctx.nonlinear() {
            let row = &ctx.rows()[r];
            let mod_chi = match g.quotient(&row.center) {
                Ok(q) => q.group,
                Err(_) => {
                    f.witnesses.push(Witness::new("center_not_normal").with("chi", chi(r)));
                    continue;
                }
            };
            let q = g.quotient(&row.comm)?;
            let (derived_mod, _) = q.group.subgroup_as_group(&q.image(ctx.derived()));
            let parts: [(&str, &FiniteGroup); 3] = [
                ("G/Z(chi)", &mod_chi),
                ("G/Z(G)", &mod_center),
                ("G'/[Z(chi),G]", &derived_mod),
            ];
            let mut primes = Vec::new();
            let mut exps = Vec::new();
            for (label, h) in parts {
                match is_elementary_abelian(h) {
                    ElementaryAbelian::No => f.witnesses.push(
                        Witness::new("not_elementary_abelian")
                            .with("chi", chi(r))
                            .with("quotient", label)
                            .with("order", h.order())
                            .with("exponent", exponent(h)),
                    ),
                    ElementaryAbelian::Prime(p) => {
                        primes.push(p);
                        exps.push((label, exponent(h)));
                    }
                    ElementaryAbelian::Trivial => {}
                }
            }
            primes.dedup();
            if primes.len() > 1 || exps.windows(2).any(|w| w[0].1 != w[1].1) {
                let desc: Vec<String> = exps.iter().map(|(l, e)| format!("exp {l} = {e}")).collect();
                f.witnesses.push(
                    Witness::new("exponents_differ")
                        .with("chi", chi(r))
                        .with("exponents", desc.join(", ")),
                );
            }
        }
        Ok(Outcome::Checked(f))
    }
}

/// Counterexamples to `χ ∈ nl(G/N) ⟺ N[Z(χ),G] < NG′` over rows with
/// `N ⊆ ker χ`. With `strict`, only `N` with `G′ ⊄ N` are considered.
pub fn nl_quotient_violations(ctx: &GroupContext, strict: bool) -> Result<Vec<Witness>> {
    let g = ctx.group();
    let mut out = Vec::new();
    for n in ctx.normals()? {
        if strict && ctx.derived().is_subset(n) {
            continue;
        }
        let ng = g.product_set(n, ctx.derived());
        for (r, row) in ctx.rows().iter().enumerate() {
            if !n.is_subset(&row.kernel) {
                continue;
            }
            let nz = g.product_set(n, &row.comm);
            let proper = nz.is_subset(&ng) && nz.len() < ng.len();
            let nonlinear = row.degree > 1;
            if proper != nonlinear {
                out.push(
                    Witness::new("nl_quotient_mismatch")
                        .with("N", ctx.render_set(n))
                        .with("chi", chi(r))
                        .with("degree", row.degree)
                        .with("N[Z(chi),G]", ctx.render_set(&nz))
                        .with("NG'", ctx.render_set(&ng)),
                );
            }
        }
    }
    Ok(out)
}

struct NlQuotient;

impl Verifier for NlQuotient {
    fn id(&self) -> TheoremId {
        TheoremId::NlQuotient
    }
    fn name(&self) -> &'static str {
        "nl_quotient"
    }
    fn description(&self) -> &'static str {
        "chi in nl(G/N) iff N[Z(chi),G] < NG'"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz_two_degrees());
        let strict = nl_quotient_violations(ctx, true)?;
        let extended = nl_quotient_violations(ctx, false)?;
        let mut f = Findings::default();
        if extended.len() != strict.len() {
            f.notes.push(format!(
                "reading over all normal N (including G' in N) has {} counterexamples against {} for G' not in N",
                extended.len(),
                strict.len()
            ));
        }
        f.witnesses = strict;
        Ok(Outcome::Checked(f))
    }
}

struct CenterOrderEquivalence;

impl Verifier for CenterOrderEquivalence {
    fn id(&self) -> TheoremId {
        TheoremId::Equivalences
    }
    fn name(&self) -> &'static str {
        "center_order_equivalence"
    }
    fn description(&self) -> &'static str {
        "for GVZ groups: |cd| = 2 iff equal-order lifted centers, collection = centers of nl(G)"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_gvz());
        let p = center_order_predicates(ctx)?;
        let mut f = Findings::default();
        f.notes.push(format!("(i) = {}, (ii) = {}, (iii) = {}", p.i, p.ii, p.iii));
        if let Some(w) = &p.witness_ii {
            f.notes.push(format!("(ii) refuted, since any valid collection contains every lifted center: {w}"));
        }
        if !(p.i == p.ii && p.ii == p.iii) {
            let mut w = Witness::new("predicates_disagree")
                .with("(i)", p.i)
                .with("(ii)", p.ii)
                .with("(iii)", p.iii);
            if let Some(x) = p.witness_ii.as_ref().or(p.witness_iii.as_ref()) {
                w = w.with("detail", x);
            }
            f.witnesses.push(w);
        } else if p.i {
            let rows = ctx.rows();
            let mut centers: Vec<SubgroupSet> = ctx.nonlinear().iter().map(|&r| rows[r].center.clone()).collect();
            centers.sort();
            centers.dedup();
            if centers != p.collection {
                let render = |v: &[SubgroupSet]| v.iter().map(|s| ctx.render_set(s)).collect::<Vec<_>>().join(" ");
                f.witnesses.push(
                    Witness::new("collection_not_character_centers")
                        .with("collection", render(&p.collection))
                        .with("centers", render(&centers)),
                );
            }
        }
        Ok(Outcome::Checked(f))
    }
}

/// Whether `h` is isoclinic to a bundled semi-extraspecial group with the
/// same prime, `|H/Z(H)|` and `|H′|`. `None` when there is no such group or
/// the search is out of range.
fn bundled_isoclinism(ctx: &GroupContext, h: &FiniteGroup) -> Result<Option<(bool, Vec<String>)>> {
    let Some(p) = h.p_group_prime() else {
        return Ok(None);
    };
    let q = h.order() / h.center().len();
    let d = h.derived_subgroup().len();
    if q > ctx.limits().isoclinism_quotient_cap {
        return Ok(None);
    }
    let matching: Vec<_> = ctx
        .comparators()
        .iter()
        .filter(|c| c.prime == p && c.central_quotient_order == q && c.derived_order == d)
        .collect();
    if matching.is_empty() {
        return Ok(None);
    }
    let names = matching.iter().map(|c| c.name.clone()).collect();
    for c in matching {
        if is_isoclinic(h, &c.group, ctx.limits().isoclinism_quotient_cap, ctx.limits().iso_search_cap)? {
            return Ok(Some((true, vec![c.name.clone()])));
        }
    }
    Ok(Some((false, names)))
}

fn isoclinism_witness(expected: bool, found: bool, names: &[String], subject: &str) -> Option<Witness> {
    (expected != found).then(|| {
        Witness::new("isoclinism_cross_check")
            .with("group", subject)
            .with("expected_isoclinic", expected)
            .with("compared_with", names.join(", "))
    })
}

struct PGroupEquivalence;

impl Verifier for PGroupEquivalence {
    fn id(&self) -> TheoremId {
        TheoremId::PGroup
    }
    fn name(&self) -> &'static str {
        "pgroup_equivalence"
    }
    fn description(&self) -> &'static str {
        "p-groups with |cd| = 2: GVZ iff quotients isoclinic to semi-extraspecial iff quotient centers"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_nonabelian_p_group());
        hypothesis!(ctx.require_two_degrees());
        let gvz = match ctx.gvz() {
            Ok(ev) => ev.holds,
            Err(e) => return Ok(Outcome::HypothesesNotMet(format!("GVZ test inconsistent: {e}"))),
        };
        let g = ctx.group();
        let mut f = Findings::default();

        // (ii) through the degree-set criterion on each G/[Z(chi),G]
        let mut ii = true;
        let mut ii_witness = None;
        for r in ctx.nonlinear() {
            let row = &ctx.rows()[r];
            let q = g.quotient(&row.comm)?;
            let t = character_table(&q.group)?;
            let pred: Predicate = thm1_i(&q.group, &t);
            let subject = format!("G/[Z({}),G]", chi(r));
            if let Some((found, names)) = bundled_isoclinism(ctx, &q.group)? {
                if let Some(w) = isoclinism_witness(pred.holds, found, &names, &subject) {
                    f.witnesses.push(w);
                }
            }
            if !pred.holds && ii {
                ii = false;
                ii_witness = pred.witness.map(|w| w.with("chi", chi(r)));
            }
        }

        // (iii) over admissible (N, chi)
        let mut iii = true;
        let mut iii_witness = None;
        for (n, rows) in ctx.admissible()? {
            for r in rows {
                if let Some(w) = quotient_center_witness(ctx, &n, r)? {
                    if iii {
                        iii = false;
                        iii_witness = Some(w);
                    }
                }
            }
        }

        f.notes.push(format!("(i) = {gvz}, (ii) = {ii}, (iii) = {iii}"));
        if !(gvz == ii && ii == iii) {
            let mut w = Witness::new("predicates_disagree")
                .with("(i)", gvz)
                .with("(ii)", ii)
                .with("(iii)", iii);
            if let Some(x) = ii_witness.or(iii_witness) {
                w = w.with("detail", x);
            }
            f.witnesses.push(w);
        }
        Ok(Outcome::Checked(f))
    }
}

struct Thm1Equivalence;

impl Verifier for Thm1Equivalence {
    fn id(&self) -> TheoremId {
        TheoremId::Thm1Equiv
    }
    fn name(&self) -> &'static str {
        "thm1_equivalence"
    }
    fn description(&self) -> &'static str {
        "p-groups: cd = {1, |G:Z|^1/2} iff classes are G'-cosets iff [x,G] = G' iff quotient centers"
    }
    fn verify(&self, ctx: &GroupContext) -> Result<Outcome> {
        hypothesis!(ctx.require_nonabelian_p_group());
        let g = ctx.group();
        let preds = thm1_all(g, ctx.table(), ctx.limits().normal_lattice_cap)?;
        let labels = ["(i)", "(ii)", "(iii)", "(v)"];
        let mut f = Findings::default();
        let summary: Vec<String> = labels.iter().zip(&preds).map(|(l, p)| format!("{l} = {}", p.holds)).collect();
        f.notes.push(summary.join(", "));
        if preds.iter().any(|p| p.holds != preds[0].holds) {
            let mut w = Witness::new("predicates_disagree");
            for (l, p) in labels.iter().zip(&preds) {
                w = w.with(l, p.holds);
            }
            if let Some(x) = preds.iter().find_map(|p| p.witness.as_ref()) {
                w = w.with("detail", x);
            }
            f.witnesses.push(w);
        }
        match bundled_isoclinism(ctx, g)? {
            Some((found, names)) => {
                f.notes.push(format!("(iv) isoclinic to a bundled semi-extraspecial group: {found}"));
                if let Some(w) = isoclinism_witness(preds[0].holds, found, &names, "G") {
                    f.witnesses.push(w);
                }
            }
            None => f.notes.push("(iv) no bundled comparator in range".to_string()),
        }
        Ok(Outcome::Checked(f))
    }
}
