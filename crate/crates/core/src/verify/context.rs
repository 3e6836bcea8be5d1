use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::Witness;
use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{normal_subgroups, FiniteGroup, SubgroupSet};
use crate::props::{center_of, degree_set, is_gvz, kernel_of, GvzEvidence};
use crate::Limits;

/// Subgroups attached to one row of the table.
#[derive(Clone, Debug)]
pub struct RowData {
    pub degree: u64,
    pub kernel: SubgroupSet,
    pub center: SubgroupSet,
    /// `[Z(χ), G]`.
    pub comm: SubgroupSet,
}

/// A bundled semi-extraspecial group used as an isoclinism reference.
#[derive(Clone, Debug)]
pub struct Comparator {
    pub name: String,
    pub group: FiniteGroup,
    pub prime: usize,
    pub central_quotient_order: usize,
    pub derived_order: usize,
}

impl Comparator {
    /// `None` unless `group` is a nonabelian p-group.
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Option<Self> {
        if group.is_abelian() {
            return None;
        }
        let prime = group.p_group_prime()?;
        Some(Comparator {
            name: name.into(),
            prime,
            central_quotient_order: group.order() / group.center().len(),
            derived_order: group.derived_subgroup().len(),
            group,
        })
    }
}

/// Everything the verifiers share about one group: its table, the
/// per-row subgroups, and lazily computed lattice data.
pub struct GroupContext {
    name: String,
    group: FiniteGroup,
    table: Arc<CharacterTable>,
    limits: Limits,
    center: SubgroupSet,
    derived: SubgroupSet,
    rows: Vec<RowData>,
    degrees: Vec<u64>,
    gvz: std::result::Result<GvzEvidence, Error>,
    defect: Option<Witness>,
    comparators: Arc<Vec<Comparator>>,
    normals: OnceLock<Vec<SubgroupSet>>,
    lifted: Mutex<BTreeMap<SubgroupSet, SubgroupSet>>,
}

impl GroupContext {
    pub fn new(name: impl Into<String>, group: FiniteGroup, limits: Limits) -> Result<Self> {
        let table = character_table(&group)?;
        Ok(Self::with_table(name, group, table, limits))
    }

    /// Uses `table` as given, even if it is not the table of `group`.
    pub fn with_table(name: impl Into<String>, group: FiniteGroup, table: Arc<CharacterTable>, limits: Limits) -> Self {
        let rows = (0..table.len())
            .map(|r| {
                let center = center_of(&table, r);
                RowData {
                    degree: table.row(r).degree,
                    kernel: kernel_of(&table, r),
                    comm: group.commutator_subgroup(&center),
                    center,
                }
            })
            .collect();
        GroupContext {
            name: name.into(),
            center: group.center(),
            derived: group.derived_subgroup(),
            degrees: degree_set(&table),
            gvz: is_gvz(&table),
            defect: numeric_defect(&table),
            rows,
            table,
            limits,
            group,
            comparators: crate::catalog::semi_extraspecial_comparators(),
            normals: OnceLock::new(),
            lifted: Mutex::new(BTreeMap::new()),
        }
    }

    /// The same group with one table value corrupted.
    pub fn with_injected_fault(self) -> Self {
        let bad = Arc::new(self.table.with_injected_fault());
        Self::with_table(self.name, self.group, bad, self.limits).with_comparators(self.comparators)
    }

    pub fn with_comparators(mut self, comparators: Arc<Vec<Comparator>>) -> Self {
        self.comparators = comparators;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn center(&self) -> &SubgroupSet {
        &self.center
    }

    pub fn derived(&self) -> &SubgroupSet {
        &self.derived
    }

    pub fn rows(&self) -> &[RowData] {
        &self.rows
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn nonlinear(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.rows[r].degree > 1).collect()
    }

    pub fn gvz(&self) -> std::result::Result<&GvzEvidence, &Error> {
        self.gvz.as_ref()
    }

    pub fn comparators(&self) -> &[Comparator] {
        &self.comparators
    }

    /// A numerical orthogonality failure of the table, if any.
    pub fn table_defect(&self) -> Option<&Witness> {
        self.defect.as_ref()
    }

    pub fn normals(&self) -> Result<&[SubgroupSet]> {
        if let Some(v) = self.normals.get() {
            return Ok(v);
        }
        let v = normal_subgroups(&self.group, self.limits.normal_lattice_cap)?;
        Ok(self.normals.get_or_init(|| v))
    }

    /// `Z_N` with `Z_N / N = Z(G/N)`, computed through the quotient group.
    pub fn lifted_center(&self, n: &SubgroupSet) -> Result<SubgroupSet> {
        if let Some(z) = self.lifted.lock().unwrap().get(n) {
            return Ok(z.clone());
        }
        let q = self.group.quotient(n)?;
        let z = q.preimage(&q.group.center());
        self.lifted.lock().unwrap().insert(n.clone(), z.clone());
        Ok(z)
    }

    /// Normal subgroups `N` with `G′ ⊄ N` and `[Z(χ), G] ⊆ N` for some
    /// nonlinear `χ`, each with the rows that make it admissible.
    pub fn admissible(&self) -> Result<Vec<(SubgroupSet, Vec<usize>)>> {
        let nl = self.nonlinear();
        Ok(self
            .normals()?
            .iter()
            .filter(|n| !self.derived.is_subset(n))
            .filter_map(|n| {
                let rows: Vec<usize> = nl.iter().copied().filter(|&r| self.rows[r].comm.is_subset(n)).collect();
                (!rows.is_empty()).then(|| (n.clone(), rows))
            })
            .collect())
    }

    /// `Ok` when the group is GVZ; otherwise the reason.
    pub fn require_gvz(&self) -> std::result::Result<(), String> {
        if self.group.is_abelian() {
            return Err("abelian; GVZ is defined for nonabelian groups".into());
        }
        match &self.gvz {
            Ok(ev) if ev.holds => Ok(()),
            Ok(ev) => {
                let r = ev.first_failure().expect("a failing row exists");
                let w = r.witness.as_ref().expect("failing rows carry a witness");
                Err(format!(
                    "not GVZ: chi_{} is {} at class {} outside Z(chi)",
                    r.row, w.value, w.class
                ))
            }
            Err(e) => Err(format!("GVZ test inconsistent: {e}")),
        }
    }

    /// `Ok` when the group is GVZ with exactly two character degrees.
    pub fn require_gvz_two_degrees(&self) -> std::result::Result<(), String> {
        self.require_gvz()?;
        self.require_two_degrees()
    }

    pub fn require_two_degrees(&self) -> std::result::Result<(), String> {
        if self.degrees.len() == 2 {
            Ok(())
        } else {
            Err(format!("cd(G) = {} has {} degrees", fmt_degrees(&self.degrees), self.degrees.len()))
        }
    }

    /// The prime when the group is a nonabelian p-group.
    pub fn require_nonabelian_p_group(&self) -> std::result::Result<usize, String> {
        if self.group.is_abelian() {
            return Err("abelian".into());
        }
        self.group
            .p_group_prime()
            .ok_or_else(|| format!("order {} is not a prime power", self.group.order()))
    }

    /// Element labels of a set, abbreviated past sixteen elements.
    pub fn render_set(&self, s: &SubgroupSet) -> String {
        render_set(&self.group, s)
    }
}

pub(crate) fn render_set(g: &FiniteGroup, s: &SubgroupSet) -> String {
    const SHOWN: usize = 16;
    let mut parts: Vec<String> = s.members().iter().take(SHOWN).map(|&x| g.element_label(x)).collect();
    if s.len() > SHOWN {
        parts.push(format!("... ({} elements)", s.len()));
    }
    format!("{{{}}}", parts.join(", "))
}

pub(crate) fn fmt_degrees(d: &[u64]) -> String {
    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// `Σ_c |C_c| χ(c) conj(ψ(c)) = |G| δ` in floating point.
fn numeric_defect(t: &CharacterTable) -> Option<Witness> {
    let cl = t.classes();
    let k = cl.count();
    let vals: Vec<Vec<(f64, f64)>> = t.rows().iter().map(|r| r.values.iter().map(|v| v.to_complex()).collect()).collect();
    let n = t.group_order() as f64;
    for a in 0..vals.len() {
        for b in a..vals.len() {
            let (mut re, mut im) = (0.0, 0.0);
            for c in 0..k {
                let (x, y) = vals[a][c];
                let (u, v) = vals[b][c];
                let s = cl.size(c) as f64;
                re += s * (x * u + y * v);
                im += s * (y * u - x * v);
            }
            let expected = if a == b { n } else { 0.0 };
            if (re - expected).abs() > 1e-6 * n || im.abs() > 1e-6 * n {
                return Some(
                    Witness::new("table_not_orthogonal")
                        .with("rows", format!("chi_{a}, chi_{b}"))
                        .with("inner_product", format!("{:.4}{:+.4}i", re / n, im / n))
                        .with("expected", if a == b { 1 } else { 0 }),
                );
            }
        }
    }
    None
}
