//! Slow, independent reference computations on raw Cayley tables, for
//! cross-checking the exact engine in tests.
//!
//! Everything here takes `rows[x][y] = x·y` and shares no code with the
//! library under test.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;

fn identity(rows: &[Vec<usize>]) -> usize {
    (0..rows.len())
        .find(|&e| (0..rows.len()).all(|x| rows[e][x] == x && rows[x][e] == x))
        .expect("group has an identity")
}

fn inverses(rows: &[Vec<usize>]) -> Vec<usize> {
    let e = identity(rows);
    (0..rows.len())
        .map(|x| (0..rows.len()).find(|&y| rows[x][y] == e).expect("group has inverses"))
        .collect()
}

fn element_order(rows: &[Vec<usize>], x: usize) -> usize {
    let e = identity(rows);
    let mut y = x;
    let mut k = 1;
    while y != e {
        y = rows[y][x];
        k += 1;
    }
    k
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conjugacy classes, each sorted, ordered by smallest member.
pub fn conjugacy_classes(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let inv = inverses(rows);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|g| rows[rows[inv[g]][x]][g]).collect();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

fn closure(rows: &[Vec<usize>], seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(identity(rows));
    loop {
        let mut grown = set.clone();
        for &a in &set {
            for &b in &set {
                grown.insert(rows[a][b]);
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// Every subgroup, found by adjoining one element at a time starting from
/// the trivial subgroup. Sorted by (order, members).
pub fn all_subgroups(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let trivial = closure(rows, &BTreeSet::new());
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![trivial];
    found.insert(frontier[0].iter().copied().collect());
    while let Some(h) = frontier.pop() {
        for g in 0..n {
            if h.contains(&g) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(g);
            let k = closure(rows, &seed);
            let key: Vec<usize> = k.iter().copied().collect();
            if found.insert(key) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub fn is_normal(rows: &[Vec<usize>], h: &[usize]) -> bool {
    let inv = inverses(rows);
    let set: BTreeSet<usize> = h.iter().copied().collect();
    (0..rows.len()).all(|g| h.iter().all(|&x| set.contains(&rows[rows[inv[g]][x]][g])))
}

/// Normal subgroups by filtering [`all_subgroups`].
pub fn normal_subgroups(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    all_subgroups(rows).into_iter().filter(|h| is_normal(rows, h)).collect()
}

/// Characters of an abelian group as homomorphisms into the `e`-th roots of
/// unity, `e` the exponent: `values[x] = j` means `χ(x) = exp(2πi j/e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTable {
    pub exponent: usize,
    pub rows: Vec<Vec<usize>>,
}

/// `None` for nonabelian input.
pub fn abelian_dual_table(rows: &[Vec<usize>]) -> Option<DualTable> {
    let n = rows.len();
    if (0..n).any(|x| (0..n).any(|y| rows[x][y] != rows[y][x])) {
        return None;
    }
    let e = (0..n).fold(1, |acc, x| {
        let o = element_order(rows, x);
        acc / gcd(acc, o) * o
    });
    // greedy generating set
    let mut gens = Vec::new();
    let mut span = closure(rows, &BTreeSet::new());
    for x in 0..n {
        if !span.contains(&x) {
            gens.push(x);
            span = closure(rows, &gens.iter().copied().collect());
        }
    }
    // try every assignment of exponents to generators and keep the
    // consistent ones
    let mut table = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        if let Some(values) = extend_homomorphism(rows, &gens, &assignment, e) {
            table.push(values);
        }
        let mut i = 0;
        loop {
            if i == assignment.len() {
                table.sort();
                return Some(DualTable { exponent: e, rows: table });
            }
            assignment[i] += 1;
            if assignment[i] < e {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn extend_homomorphism(rows: &[Vec<usize>], gens: &[usize], images: &[usize], e: usize) -> Option<Vec<usize>> {
    let n = rows.len();
    let id = identity(rows);
    let mut val: Vec<Option<usize>> = vec![None; n];
    val[id] = Some(0);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        let vx = val[x].unwrap();
        for (&g, &j) in gens.iter().zip(images) {
            let y = rows[x][g];
            let vy = (vx + j) % e;
            match val[y] {
                None => {
                    val[y] = Some(vy);
                    queue.push(y);
                }
                Some(v) if v != vy => return None,
                Some(_) => {}
            }
        }
    }
    val.into_iter().collect()
}

/// Floating-point character table, as values per element, one row per
/// irreducible character, from eigenvectors of a fixed generic combination
/// of class-sum matrices.
pub fn numeric_character_table(rows: &[Vec<usize>]) -> Vec<Vec<Complex64>> {
    let n = rows.len();
    let classes = conjugacy_classes(rows);
    let k = classes.len();
    let mut class_of = vec![0; n];
    for (c, members) in classes.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }
    let inv = inverses(rows);

    // (M_i)[j][t] = #{(x, y) ∈ C_i × C_j : xy = z_t}; the central characters
    // ω_t = |C_t| χ(z_t) / χ(1) are common eigenvectors; irrational weights
    // make the combination separate them
    let weights: Vec<f64> = (0..k).map(|i| ((i + 2) as f64).sqrt()).collect();
    let mut m = DMatrix::<f64>::zeros(k, k);
    for (t, ct) in classes.iter().enumerate() {
        let z = ct[0];
        for (i, ci) in classes.iter().enumerate() {
            for &x in ci {
                let j = class_of[rows[inv[x]][z]];
                m[(j, t)] += weights[i];
            }
        }
    }

    let eigenvalues = m.complex_eigenvalues();
    let mc: DMatrix<Complex64> = m.map(|x| Complex64::new(x, 0.0));
    let mut table = Vec::with_capacity(k);
    for lambda in eigenvalues.iter() {
        let shift = *lambda + Complex64::new(1e-9, 1e-9);
        let a = &mc - DMatrix::<Complex64>::identity(k, k) * shift;
        let lu = a.lu();
        let mut v = nalgebra::DVector::<Complex64>::from_element(k, Complex64::new(1.0, 0.0));
        for _ in 0..4 {
            v = lu.solve(&v).expect("shifted matrix is invertible");
            let norm = v.norm();
            v /= Complex64::new(norm, 0.0);
        }
        let id_class = class_of[identity(rows)];
        let v0 = v[id_class];
        let omega: Vec<Complex64> = v.iter().map(|x| x / v0).collect();
        let sizes: Vec<f64> = classes.iter().map(|c| c.len() as f64).collect();
        let s: Complex64 = (0..k)
            .map(|t| {
                let tbar = class_of[inv[classes[t][0]]];
                omega[t] * omega[tbar] / sizes[t]
            })
            .sum();
        let degree = (n as f64 / s.re).sqrt();
        let row: Vec<Complex64> = (0..n)
            .map(|x| {
                let t = class_of[x];
                omega[t] * degree / sizes[t]
            })
            .collect();
        table.push(row);
    }
    table
}
