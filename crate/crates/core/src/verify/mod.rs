//! Executable checks of the GVZ-group results on a single finite group.
//!
//! Each result is a [`Verifier`] registered under its theorem id. A verifier
//! first evaluates the result's hypotheses on the group; if they hold it
//! computes both sides of the claim independently and reports any
//! counterexample as a [`Witness`].

mod checks;
mod context;
pub mod predicates;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use checks::nl_quotient_violations;
pub use context::{Comparator, GroupContext, RowData};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "L_class2")]
    Class2,
    #[serde(rename = "L_center_eq")]
    CenterEq,
    #[serde(rename = "C_N_in_Zchi")]
    NInZchi,
    #[serde(rename = "L_center_ident")]
    CenterIdent,
    #[serde(rename = "L_linear_iff")]
    LinearIff,
    #[serde(rename = "L_quot_center_general")]
    QuotCenterGeneral,
    #[serde(rename = "L_quot_center_gvz")]
    QuotCenterGvz,
    #[serde(rename = "T_elem_abelian")]
    ElemAbelian,
    #[serde(rename = "T_nl_quotient")]
    NlQuotient,
    #[serde(rename = "T_equivalences")]
    Equivalences,
    #[serde(rename = "T_pgroup")]
    PGroup,
    #[serde(rename = "T_thm1_equiv")]
    Thm1Equiv,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Class2,
        TheoremId::CenterEq,
        TheoremId::NInZchi,
        TheoremId::CenterIdent,
        TheoremId::LinearIff,
        TheoremId::QuotCenterGeneral,
        TheoremId::QuotCenterGvz,
        TheoremId::ElemAbelian,
        TheoremId::NlQuotient,
        TheoremId::Equivalences,
        TheoremId::PGroup,
        TheoremId::Thm1Equiv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Class2 => "L_class2",
            TheoremId::CenterEq => "L_center_eq",
            TheoremId::NInZchi => "C_N_in_Zchi",
            TheoremId::CenterIdent => "L_center_ident",
            TheoremId::LinearIff => "L_linear_iff",
            TheoremId::QuotCenterGeneral => "L_quot_center_general",
            TheoremId::QuotCenterGvz => "L_quot_center_gvz",
            TheoremId::ElemAbelian => "T_elem_abelian",
            TheoremId::NlQuotient => "T_nl_quotient",
            TheoremId::Equivalences => "T_equivalences",
            TheoremId::PGroup => "T_pgroup",
            TheoremId::Thm1Equiv => "T_thm1_equiv",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// A structured counterexample: what kind of failure, and the objects
/// involved, rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub fields: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(kind: impl Into<String>) -> Self {
        Witness {
            kind: kind.into(),
            fields: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.fields.insert(key.to_string(), value.to_string());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (k, v) in &self.fields {
            write!(f, "; {k} = {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub group_name: String,
    pub hypotheses_met: bool,
    /// Why the hypotheses fail, when they do.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis_detail: Option<String>,
    pub conclusion_holds: Option<bool>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock durations; kept out of serialized output.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.conclusion_holds == Some(false)
    }
}

/// What a verifier found, before the registry turns it into a report.
#[derive(Clone, Debug, Default)]
pub struct Findings {
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    HypothesesNotMet(String),
    Checked(Findings),
}

pub trait Verifier: Send + Sync {
    fn id(&self) -> TheoremId;

    /// Short lowercase alias accepted by the CLI, e.g. `class_two`.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn verify(&self, ctx: &GroupContext) -> Result<Outcome>;
}

/// Verifiers by theorem id, in a fixed run order.
pub struct VerifierRegistry {
    verifiers: Vec<Box<dyn Verifier>>,
}

impl VerifierRegistry {
    pub fn empty() -> Self {
        VerifierRegistry { verifiers: Vec::new() }
    }

    /// Every built-in verifier, in theorem-id order.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        for v in checks::all() {
            r.register(v);
        }
        r
    }

    /// Adds a verifier, replacing any previous one with the same id.
    pub fn register(&mut self, v: Box<dyn Verifier>) {
        self.verifiers.retain(|old| old.id() != v.id());
        self.verifiers.push(v);
        self.verifiers.sort_by_key(|v| v.id());
    }

    pub fn ids(&self) -> Vec<TheoremId> {
        self.verifiers.iter().map(|v| v.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Verifier> {
        self.verifiers.iter().map(|v| v.as_ref())
    }

    /// Looks up by theorem id (`L_class2`) or alias (`class_two`).
    pub fn get(&self, name: &str) -> Option<&dyn Verifier> {
        self.iter()
            .find(|v| v.id().as_str().eq_ignore_ascii_case(name) || v.name().eq_ignore_ascii_case(name))
    }

    /// The named verifiers, or all of them when `names` is empty.
    pub fn select(&self, names: &[String]) -> Result<Vec<&dyn Verifier>> {
        if names.is_empty() {
            return Ok(self.iter().collect());
        }
        let mut out: Vec<&dyn Verifier> = Vec::new();
        for n in names {
            let v = self.get(n).ok_or_else(|| Error::UnknownTheorem(n.clone()))?;
            if !out.iter().any(|o| o.id() == v.id()) {
                out.push(v);
            }
        }
        out.sort_by_key(|v| v.id());
        Ok(out)
    }

    /// Runs one verifier. A table that fails a numerical orthogonality check
    /// makes every applicable verifier fail, whatever its own logic found.
    pub fn run(&self, v: &dyn Verifier, ctx: &GroupContext) -> Result<VerificationReport> {
        let start = Instant::now();
        let outcome = v.verify(ctx)?;
        let elapsed = start.elapsed();
        let mut report = VerificationReport {
            theorem_id: v.id(),
            group_name: ctx.name().to_string(),
            hypotheses_met: false,
            hypothesis_detail: None,
            conclusion_holds: None,
            witnesses: Vec::new(),
            notes: Vec::new(),
            timings: vec![("verify".to_string(), elapsed)],
        };
        match outcome {
            Outcome::HypothesesNotMet(why) => report.hypothesis_detail = Some(why),
            Outcome::Checked(mut f) => {
                if let Some(w) = ctx.table_defect() {
                    f.witnesses.push(w.clone());
                }
                report.hypotheses_met = true;
                report.conclusion_holds = Some(f.witnesses.is_empty());
                report.witnesses = f.witnesses;
                report.notes = f.notes;
            }
        }
        Ok(report)
    }

    pub fn run_selected(&self, names: &[String], ctx: &GroupContext) -> Result<Vec<VerificationReport>> {
        self.select(names)?.into_iter().map(|v| self.run(v, ctx)).collect()
    }
}

impl Default for VerifierRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

/// Every standard verifier on one group, in theorem-id order.
pub fn run_all(ctx: &GroupContext) -> Result<Vec<VerificationReport>> {
    VerifierRegistry::standard().run_selected(&[], ctx)
}
