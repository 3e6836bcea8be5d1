//! Group constructors, the bundled catalog, `.grp` files and reports.

mod field;
mod grpfile;
pub mod report;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use field::SmallField;
pub use grpfile::{cayley_file_text, parse_cycles, parse_group_file, perm_file_text, read_group_file};

use crate::error::{Error, Result};
use crate::group::{prime_power_base, FiniteGroup, Permutation, SubgroupSet};
use crate::verify::predicates::semi_extraspecial;
use crate::verify::Comparator;

const M16_GRP: &str = include_str!("../../data/m16.grp");
const E27_MINUS_GRP: &str = include_str!("../../data/e27minus.grp");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeKind {
    Cyclic(usize),
    /// Invariant factors.
    Abelian(Vec<usize>),
    /// Dihedral group of the given order `2n`.
    Dihedral(usize),
    /// Dicyclic group of the given order `4n`.
    Dicyclic(usize),
    Symmetric(usize),
    /// Extraspecial group of order `p³`; `plus` selects exponent `p`
    /// (for `p = 2`: D8 rather than Q8).
    Extraspecial { p: usize, plus: bool },
    /// Upper unitriangular 3×3 matrices over GF(q).
    Heisenberg(usize),
    DirectProduct(Box<GroupRecipe>, Box<GroupRecipe>),
    /// `A × B` modulo `{(aᵏ, b⁻ᵏ)}` for central elements `a ∈ A`, `b ∈ B`
    /// of equal order, given as element indices of the built factors.
    CentralProduct {
        left: Box<GroupRecipe>,
        right: Box<GroupRecipe>,
        left_central: usize,
        right_central: usize,
    },
    PermGens { degree: usize, gens: Vec<Permutation> },
    Cayley(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecipe {
    pub name: String,
    pub kind: RecipeKind,
}

impl GroupRecipe {
    pub fn new(name: impl Into<String>, kind: RecipeKind) -> Self {
        GroupRecipe { name: name.into(), kind }
    }

    /// The order the recipe promises, when it is known without building
    /// (saturating at `usize::MAX`).
    pub fn expected_order(&self) -> Option<usize> {
        match &self.kind {
            RecipeKind::Cyclic(n) | RecipeKind::Dihedral(n) | RecipeKind::Dicyclic(n) => Some(*n),
            RecipeKind::Abelian(f) => Some(f.iter().fold(1usize, |a, &b| a.saturating_mul(b))),
            RecipeKind::Symmetric(n) => Some((1..=*n).fold(1usize, |a, b| a.saturating_mul(b))),
            RecipeKind::Extraspecial { p, .. } => Some(p.saturating_pow(3)),
            RecipeKind::Heisenberg(q) => Some(q.saturating_pow(3)),
            RecipeKind::DirectProduct(a, b) => Some(a.expected_order()?.saturating_mul(b.expected_order()?)),
            RecipeKind::Cayley(rows) => Some(rows.len()),
            RecipeKind::CentralProduct { .. } | RecipeKind::PermGens { .. } => None,
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        if self.expected_order().is_some_and(|n| n > max_order) {
            return Err(Error::OrderExceeded { cap: max_order });
        }
        match &self.kind {
            RecipeKind::Cyclic(n) => {
                positive(*n, "cyclic order")?;
                Ok(cyclic(*n))
            }
            RecipeKind::Abelian(factors) => {
                let mut g = FiniteGroup::trivial();
                for &f in factors {
                    positive(f, "invariant factor")?;
                    g = g.direct_product(&cyclic(f));
                }
                Ok(g)
            }
            RecipeKind::Dihedral(m) => dihedral(*m),
            RecipeKind::Dicyclic(m) => dicyclic(*m),
            RecipeKind::Symmetric(n) => symmetric(*n, max_order),
            RecipeKind::Extraspecial { p, plus } => extraspecial(*p, *plus),
            RecipeKind::Heisenberg(q) => heisenberg(*q),
            RecipeKind::DirectProduct(a, b) => Ok(a.build(max_order)?.direct_product(&b.build(max_order)?)),
            RecipeKind::CentralProduct {
                left,
                right,
                left_central,
                right_central,
            } => {
                let a = left.build(max_order)?;
                let b = right.build(max_order)?;
                let g = central_product(&a, &b, *left_central, *right_central)?;
                if g.order() > max_order {
                    return Err(Error::OrderExceeded { cap: max_order });
                }
                Ok(g)
            }
            RecipeKind::PermGens { gens, .. } => FiniteGroup::close_generators(gens, max_order),
            RecipeKind::Cayley(rows) => FiniteGroup::from_cayley_table(rows),
        }
    }

    /// Recipe string accepted by [`parse_recipe`], where one exists.
    pub fn spec(&self) -> Option<String> {
        Some(match &self.kind {
            RecipeKind::Cyclic(n) => format!("cyclic:{n}"),
            RecipeKind::Abelian(f) => {
                let parts: Vec<String> = f.iter().map(usize::to_string).collect();
                format!("abelian:{}", parts.join(","))
            }
            RecipeKind::Dihedral(n) => format!("dihedral:{n}"),
            RecipeKind::Dicyclic(n) => format!("dicyclic:{n}"),
            RecipeKind::Symmetric(n) => format!("symmetric:{n}"),
            RecipeKind::Extraspecial { p, plus } => format!("extraspecial:{p}:{}", if *plus { '+' } else { '-' }),
            RecipeKind::Heisenberg(q) => format!("heisenberg:{q}"),
            RecipeKind::DirectProduct(a, b) => format!("{} x {}", a.spec()?, b.spec()?),
            _ => return None,
        })
    }
}

impl fmt::Display for GroupRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spec() {
            Some(s) if s != self.name => write!(f, "{} [{s}]", self.name),
            _ => f.write_str(&self.name),
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::BadRecipe(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn_trusted(n, |a, b| (a + b) % n)
}

/// Element `rⁱsʲ` at index `i + n·j`.
fn dihedral(m: usize) -> Result<FiniteGroup> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::BadRecipe(format!("dihedral order must be even and at least 2, got {m}")));
    }
    let n = m / 2;
    Ok(FiniteGroup::from_fn_trusted(m, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let r = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        r + n * ((j + l) % 2)
    }))
}

/// Element `aⁱxʲ` at index `i + 2n·j`, with `a^{2n} = 1`, `x² = aⁿ`, `aˣ = a⁻¹`.
fn dicyclic(m: usize) -> Result<FiniteGroup> {
    if m < 4 || !m.is_multiple_of(4) {
        return Err(Error::BadRecipe(format!("dicyclic order must be a positive multiple of 4, got {m}")));
    }
    let n = m / 4;
    let t = 2 * n;
    Ok(FiniteGroup::from_fn_trusted(m, |x, y| {
        let (i, j) = (x % t, x / t);
        let (k, l) = (y % t, y / t);
        match (j, l) {
            (0, _) => (i + k) % t + t * l,
            (1, 0) => (i + t - k) % t + t,
            _ => (i + t - k + n) % t,
        }
    }))
}

fn symmetric(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial());
    }
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()])?;
    let swap = Permutation::from_cycles(n, &[vec![0, 1]])?;
    FiniteGroup::close_generators(&[cycle, swap], max_order)
}

fn extraspecial(p: usize, plus: bool) -> Result<FiniteGroup> {
    if prime_power_base(p) != Some(p) {
        return Err(Error::BadRecipe(format!("extraspecial needs a prime, got {p}")));
    }
    match (p, plus) {
        (2, true) => dihedral(8),
        (2, false) => dicyclic(8),
        (_, true) => heisenberg(p),
        _ => {
            // Z_{p²} ⋊ Z_p with the generator acting as multiplication by 1 + p
            let m = p * p;
            let u = 1 + p;
            let upow: Vec<usize> = (0..p).scan(1, |acc, _| {
                let cur = *acc;
                *acc = *acc * u % m;
                Some(cur)
            }).collect();
            Ok(FiniteGroup::from_fn_trusted(m * p, |x, y| {
                let (i, j) = (x % m, x / m);
                let (k, l) = (y % m, y / m);
                (i + upow[j] * k) % m + m * ((j + l) % p)
            }))
        }
    }
}

/// Triples `(a, b, c)` at index `a·q² + b·q + c` with
/// `(a,b,c)(a′,b′,c′) = (a+a′, b+b′, c+c′+ab′)`.
fn heisenberg(q: usize) -> Result<FiniteGroup> {
    let f = SmallField::new(q)?;
    let q2 = q * q;
    Ok(FiniteGroup::from_fn_trusted(q2 * q, |x, y| {
        let (a, b, c) = (x / q2, x / q % q, x % q);
        let (a2, b2, c2) = (y / q2, y / q % q, y % q);
        let na = f.add(a, a2);
        let nb = f.add(b, b2);
        let nc = f.add(f.add(c, c2), f.mul(a, b2));
        na * q2 + nb * q + nc
    }))
}

fn central_product(a: &FiniteGroup, b: &FiniteGroup, za: usize, zb: usize) -> Result<FiniteGroup> {
    if za >= a.order() || zb >= b.order() {
        return Err(Error::BadRecipe("central element index out of range".into()));
    }
    if !a.center().contains(za) || !b.center().contains(zb) {
        return Err(Error::BadRecipe("identified elements must be central".into()));
    }
    if a.elem_order(za) != b.elem_order(zb) {
        return Err(Error::BadRecipe("identified elements must have equal order".into()));
    }
    let g = a.direct_product(b);
    let nb = b.order();
    let zb_inv = b.inv(zb);
    let n = SubgroupSet::from_members(
        g.order(),
        (0..a.elem_order(za)).map(|k| a.pow(za, k) * nb + b.pow(zb_inv, k)),
    );
    Ok(g.quotient(&n)?.group)
}

/// Parses a recipe string: `cyclic:n`, `abelian:a,b,..`, `dihedral:2n`,
/// `dicyclic:4n`, `symmetric:n`, `extraspecial:p:+` or `:-`, `heisenberg:q`,
/// products `A x B`, or the name of a bundled group.
pub fn parse_recipe(s: &str) -> Result<GroupRecipe> {
    let s = s.trim();
    if let Some(r) = bundled_catalog().into_iter().find(|r| r.name == s) {
        return Ok(r);
    }
    if let Some((l, r)) = s.split_once(" x ") {
        let a = parse_recipe(l)?;
        let b = parse_recipe(r)?;
        return Ok(GroupRecipe::new(s, RecipeKind::DirectProduct(Box::new(a), Box::new(b))));
    }
    let bad = || Error::BadRecipe(format!("cannot parse recipe {s:?}"));
    let (kind, args) = s.split_once(':').ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let kind = match kind.trim() {
        "cyclic" => RecipeKind::Cyclic(num(args)?),
        "abelian" => RecipeKind::Abelian(args.split(',').map(num).collect::<Result<_>>()?),
        "dihedral" => RecipeKind::Dihedral(num(args)?),
        "dicyclic" => RecipeKind::Dicyclic(num(args)?),
        "symmetric" => RecipeKind::Symmetric(num(args)?),
        "heisenberg" => RecipeKind::Heisenberg(num(args)?),
        "extraspecial" => {
            let (p, sign) = args.split_once(':').ok_or_else(bad)?;
            let plus = match sign.trim() {
                "+" | "plus" => true,
                "-" | "minus" => false,
                _ => return Err(bad()),
            };
            RecipeKind::Extraspecial { p: num(p)?, plus }
        }
        _ => {
            if let Some(r) = bundled_catalog().into_iter().find(|r| r.name.eq_ignore_ascii_case(s)) {
                return Ok(r);
            }
            return Err(bad());
        }
    };
    Ok(GroupRecipe::new(s, kind))
}

/// Invariant-factor lists `d₁ | d₂ | … ` with product `n` and `d₁ > 1`.
fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in min.max(2)..=rest {
            if !rest.is_multiple_of(d) || prefix.last().is_some_and(|&l| d % l != 0) {
                continue;
            }
            // every later factor is a multiple of d
            let later = rest / d;
            if later != 1 && !later.is_multiple_of(d) {
                continue;
            }
            prefix.push(d);
            go(later, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

fn abelian_recipe(factors: Vec<usize>) -> GroupRecipe {
    if factors.len() <= 1 {
        let n = factors.first().copied().unwrap_or(1);
        return GroupRecipe::new(format!("C{n}"), RecipeKind::Cyclic(n));
    }
    let name: Vec<String> = factors.iter().map(|f| format!("C{f}")).collect();
    GroupRecipe::new(name.join("x"), RecipeKind::Abelian(factors))
}

fn perm_data(text: &str) -> GroupRecipe {
    parse_group_file(text).expect("bundled data files parse")
}

fn named(name: &str, kind: RecipeKind) -> GroupRecipe {
    GroupRecipe::new(name, kind)
}

fn product(name: &str, a: GroupRecipe, b: GroupRecipe) -> GroupRecipe {
    named(name, RecipeKind::DirectProduct(Box::new(a), Box::new(b)))
}

/// The shipped test subjects: every abelian group of order at most 32, then
/// the nonabelian groups in a fixed order.
pub fn bundled_catalog() -> Vec<GroupRecipe> {
    let mut out: Vec<GroupRecipe> = (1..=32)
        .flat_map(invariant_factor_lists)
        .map(abelian_recipe)
        .collect();

    let d8 = || named("D8", RecipeKind::Dihedral(8));
    let q8 = || named("Q8", RecipeKind::Dicyclic(8));
    let c = |n: usize| named(&format!("C{n}"), RecipeKind::Cyclic(n));
    let e27 = || named("E27+", RecipeKind::Heisenberg(3));
    // the element r² (index 2) is central in both D8 and Q8 as built here
    let central = |name: &str, a: GroupRecipe, b: GroupRecipe| {
        named(
            name,
            RecipeKind::CentralProduct {
                left: Box::new(a),
                right: Box::new(b),
                left_central: 2,
                right_central: 2,
            },
        )
    };

    out.extend([
        named("S3", RecipeKind::Symmetric(3)),
        d8(),
        q8(),
        named("D10", RecipeKind::Dihedral(10)),
        named("Dic12", RecipeKind::Dicyclic(12)),
        named("D16", RecipeKind::Dihedral(16)),
        named("Q16", RecipeKind::Dicyclic(16)),
        perm_data(M16_GRP),
        product("D8xC2", d8(), c(2)),
        product("Q8xC2", q8(), c(2)),
        product("D8xC3", d8(), c(3)),
        named("S4", RecipeKind::Symmetric(4)),
        e27(),
        perm_data(E27_MINUS_GRP),
        central("E32+", d8(), d8()),
        central("E32-", d8(), q8()),
        product("E27+xC3", e27(), c(3)),
        named("Heis4", RecipeKind::Heisenberg(4)),
        product("D8xE27+", d8(), e27()),
    ]);
    out
}

/// Bundled nonabelian p-groups that are semi-extraspecial.
pub fn semi_extraspecial_comparators() -> Arc<Vec<Comparator>> {
    static CACHE: OnceLock<Arc<Vec<Comparator>>> = OnceLock::new();
    Arc::clone(CACHE.get_or_init(|| {
        let list = bundled_catalog()
            .into_iter()
            .filter_map(|r| {
                let g = r.build(crate::Limits::default().max_order).ok()?;
                if g.is_abelian() || g.p_group_prime().is_none() {
                    return None;
                }
                semi_extraspecial(&g, crate::Limits::default().normal_lattice_cap)
                    .ok()?
                    .then(|| Comparator::new(r.name.clone(), g))?
            })
            .collect();
        Arc::new(list)
    }))
}
