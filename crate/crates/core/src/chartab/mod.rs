//! Exact irreducible character tables.

mod coeffs;
mod dixon;
pub mod modp;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

pub use coeffs::ClassMultCoeffs;
pub use dixon::{dixon_prime, irreducible_eigenbasis_mod_p, lift_characters};

use crate::cyclotomic::CyclotomicValue;
use crate::error::Result;
use crate::group::{ConjugacyClasses, FiniteGroup};

/// One irreducible character: its degree and its value on each class, with
/// eigenvalue multiplicities as cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<CyclotomicValue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    order: usize,
    classes: ConjugacyClasses,
    rows: Vec<Character>,
}

impl CharacterTable {
    /// Rows are sorted by degree, then by value coefficients in descending
    /// lexicographic order, which puts the principal character first.
    pub(crate) fn from_rows(order: usize, classes: ConjugacyClasses, mut rows: Vec<Character>) -> Self {
        rows.sort_by(|a, b| {
            a.degree.cmp(&b.degree).then_with(|| {
                let ka = a.values.iter().map(|v| v.coeffs());
                let kb = b.values.iter().map(|v| v.coeffs());
                kb.cmp(ka)
            })
        });
        CharacterTable { order, classes, rows }
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Character {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicValue {
        &self.rows[row].values[class]
    }

    /// The order `e` of the root of unity all values are expressed in.
    pub fn root_order(&self) -> u32 {
        self.classes.exponent() as u32
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// `Σ_c |C_c| χ(c) ψ(c⁻¹) = |G| δ_χψ`, checked exactly for all pairs.
    pub fn first_orthogonality_holds(&self) -> bool {
        let k = self.classes.count();
        let e = self.root_order();
        for (a, chi) in self.rows.iter().enumerate() {
            for (b, psi) in self.rows.iter().enumerate().skip(a) {
                let mut sum = CyclotomicValue::zero(e);
                for c in 0..k {
                    let term = &chi.values[c] * &psi.values[self.classes.inverse_class(c)];
                    let size = CyclotomicValue::integer(e, self.classes.size(c) as i64);
                    sum = &sum + &(&term * &size);
                }
                let expected = if a == b { self.order as i64 } else { 0 };
                if !sum.equals_integer(expected) {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_χ χ(c) χ(d⁻¹) = δ_cd |G| / |C_c|`, checked exactly for all class pairs.
    pub fn second_orthogonality_holds(&self) -> bool {
        let k = self.classes.count();
        let e = self.root_order();
        for c in 0..k {
            for d in c..k {
                let dinv = self.classes.inverse_class(d);
                let mut sum = CyclotomicValue::zero(e);
                for chi in &self.rows {
                    sum = &sum + &(&chi.values[c] * &chi.values[dinv]);
                }
                let expected = if c == d { (self.order / self.classes.size(c)) as i64 } else { 0 };
                if !sum.equals_integer(expected) {
                    return false;
                }
            }
        }
        true
    }

    /// `χ(g⁻¹) = conj(χ(g))` on every entry.
    pub fn inverse_values_are_conjugates(&self) -> bool {
        self.rows.iter().all(|chi| {
            (0..self.classes.count())
                .all(|c| chi.values[self.classes.inverse_class(c)].equals(&chi.values[c].conjugate()))
        })
    }

    /// A copy with the value of `row` at `class` replaced.
    pub fn with_value(&self, row: usize, class: usize, value: CyclotomicValue) -> CharacterTable {
        let mut t = self.clone();
        t.rows[row].values[class] = value;
        t
    }

    /// A copy with one value deliberately corrupted, for exercising failure
    /// reporting: the last row at the last class becomes `0`, or `χ(1)` if it
    /// was already zero.
    pub fn with_injected_fault(&self) -> CharacterTable {
        let mut t = self.clone();
        let e = self.root_order();
        let row = t.rows.last_mut().expect("tables are never empty");
        let c = row.values.len() - 1;
        row.values[c] = if row.values[c].is_zero() {
            CyclotomicValue::integer(e, row.degree as i64)
        } else {
            CyclotomicValue::zero(e)
        };
        t
    }

    /// Class sizes header followed by one line per character, with exact
    /// values and decimal approximations.
    pub fn render(&self, g: &FiniteGroup) -> String {
        let k = self.classes.count();
        let mut out = String::new();
        let _ = writeln!(out, "order {}, {} classes, values in Z[z], z = e^(2*pi*i/{})", self.order, k, self.root_order());
        for c in 0..k {
            let rep = self.classes.rep(c);
            let _ = writeln!(
                out,
                "  class {c}: size {}, order {}, rep {}",
                self.classes.size(c),
                g.elem_order(rep),
                g.element_label(rep)
            );
        }
        for (i, chi) in self.rows.iter().enumerate() {
            let _ = writeln!(out, "chi_{i} (degree {}):", chi.degree);
            for (c, v) in chi.values.iter().enumerate() {
                let _ = writeln!(out, "  [{c}] {v}  ~ {}", v.approx());
            }
        }
        out
    }
}

fn compute(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let cmc = ClassMultCoeffs::new(g, &classes);
    let p = dixon_prime(g.order(), classes.exponent());
    let eig = irreducible_eigenbasis_mod_p(&cmc, p)?;
    lift_characters(g, &classes, &eig, p)
}

type Memo = Mutex<HashMap<u64, Vec<(FiniteGroup, Arc<CharacterTable>)>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The character table of `g`, memoized by Cayley table.
///
/// Concurrent callers may compute the same table twice; the later insert wins
/// and both results are equal.
pub fn character_table(g: &FiniteGroup) -> Result<Arc<CharacterTable>> {
    let key = g.table_hash();
    if let Some(bucket) = memo().lock().unwrap().get(&key) {
        if let Some((_, t)) = bucket.iter().find(|(h, _)| h == g) {
            return Ok(Arc::clone(t));
        }
    }
    let table = Arc::new(compute(g)?);
    let mut guard = memo().lock().unwrap();
    let bucket = guard.entry(key).or_default();
    bucket.retain(|(h, _)| h != g);
    bucket.push((g.clone(), Arc::clone(&table)));
    Ok(table)
}
