use std::fmt::Write as _;

use serde_json::{json, Value};

use charlab_core::chartab::CharacterTable;
use charlab_core::group::{lower_central_series, FiniteGroup};
use charlab_core::verify::GroupContext;

fn fmt_degrees(d: &[u64]) -> String {
    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn text(ctx: &GroupContext) -> String {
    let g = ctx.group();
    let t = ctx.table();
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", ctx.name());
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(out, "abelian: {}", if g.is_abelian() { "yes" } else { "no" });
    let _ = writeln!(out, "center: order {} {}", ctx.center().len(), ctx.render_set(ctx.center()));
    let _ = writeln!(out, "derived subgroup: order {} {}", ctx.derived().len(), ctx.render_set(ctx.derived()));
    let _ = writeln!(out, "cd: {}", fmt_degrees(ctx.degrees()));
    let _ = writeln!(out, "nonlinear characters: {}", ctx.nonlinear().len());
    match lower_central_series(g).class {
        Some(c) => {
            let _ = writeln!(out, "nilpotency class: {c}");
        }
        None => out.push_str("nilpotency class: not nilpotent\n"),
    }
    match ctx.gvz() {
        Err(_) if g.is_abelian() => out.push_str("GVZ: not applicable (abelian)\n"),
        Err(e) => {
            let _ = writeln!(out, "GVZ: error: {e}");
        }
        Ok(ev) => {
            let _ = writeln!(out, "GVZ: {}", if ev.holds { "yes" } else { "no" });
            for r in ev.rows.iter().filter(|r| r.degree > 1) {
                let _ = write!(out, "  chi_{}: degree {}, |Z(chi)| = {}, ", r.row, r.degree, r.center_order);
                match &r.witness {
                    None => out.push_str("vanishes off Z(chi)\n"),
                    Some(w) => {
                        let rep = t.classes().rep(w.class);
                        let _ = writeln!(
                            out,
                            "nonzero at class {} (rep {}, value {})",
                            w.class,
                            g.element_label(rep),
                            w.value
                        );
                    }
                }
            }
        }
    }
    out
}

pub fn json(ctx: &GroupContext) -> String {
    let g = ctx.group();
    let t = ctx.table();
    let gvz: Value = match ctx.gvz() {
        Err(_) if g.is_abelian() => Value::Null,
        Err(e) => json!({ "error": e.to_string() }),
        Ok(ev) => json!({
            "holds": ev.holds,
            "rows": ev.rows.iter().filter(|r| r.degree > 1).map(|r| json!({
                "row": r.row,
                "degree": r.degree,
                "center_order": r.center_order,
                "vanishes_off_center": r.vanishes_off_center,
                "witness": r.witness.as_ref().map(|w| json!({
                    "class": w.class,
                    "representative": g.element_label(t.classes().rep(w.class)),
                    "value": w.value.to_string(),
                })),
            })).collect::<Vec<_>>(),
        }),
    };
    let v = json!({
        "group": ctx.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center_order": ctx.center().len(),
        "derived_order": ctx.derived().len(),
        "cd": ctx.degrees(),
        "nonlinear": ctx.nonlinear().len(),
        "nilpotency_class": lower_central_series(g).class,
        "gvz": gvz,
    });
    pretty(&v)
}

pub fn table_json(name: &str, g: &FiniteGroup, t: &CharacterTable) -> String {
    let classes: Vec<Value> = (0..t.classes().count())
        .map(|c| {
            let rep = t.classes().rep(c);
            json!({ "size": t.classes().size(c), "element_order": g.elem_order(rep), "representative": g.element_label(rep) })
        })
        .collect();
    let characters: Vec<Value> = t
        .rows()
        .iter()
        .map(|chi| {
            json!({
                "degree": chi.degree,
                "values": chi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "approx": chi.values.iter().map(|v| v.approx()).collect::<Vec<_>>(),
            })
        })
        .collect();
    pretty(&json!({
        "group": name,
        "order": g.order(),
        "root_order": t.root_order(),
        "classes": classes,
        "characters": characters,
    }))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
