//! Dixon–Schneider: common eigenvectors of the class-sum matrices over
//! GF(p), then exact recovery of character values by a discrete Fourier
//! transform over the powers of each class representative.

use num_bigint::BigInt;

use super::coeffs::ClassMultCoeffs;
use super::modp::{char_poly, eval_poly, is_prime, kernel, rref, Fp, Matrix};
use super::{Character, CharacterTable};
use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, FiniteGroup};

/// Smallest prime `p ≡ 1 (mod e)` with `p² ≥ 4·|G|`.
///
/// `p ≡ 1 (mod e)` puts the e-th roots of unity in GF(p) and keeps `p` prime
/// to |G|; `p ≥ 2√|G|` separates a degree `d ≤ √|G|` from `p − d`, so the
/// degree is recovered uniquely from `d² mod p`.
pub fn dixon_prime(order: usize, e: usize) -> u64 {
    let (order, e) = (order as u64, e as u64);
    let mut p = e + 1;
    loop {
        if is_prime(p) && p * p >= 4 * order {
            return p;
        }
        p += e;
    }
}

/// One simultaneous eigenvector of all class-sum matrices per irreducible
/// character, normalised to `1` at the identity class. Entry `t` of the
/// vector for `χ` is the central character value `|C_t| χ(g_t) / χ(1)` mod p.
pub fn irreducible_eigenbasis_mod_p(cmc: &ClassMultCoeffs, p: u64) -> Result<Vec<Vec<u64>>> {
    let f = Fp::new(p);
    let k = cmc.class_count();
    // (M_i)[j][t] = a[i][j][t]; right eigenvectors carry the central characters
    let matrices: Vec<Matrix> = (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|t| cmc.get(i, j, t) % p).collect()).collect())
        .collect();

    let mut identity_basis: Matrix = (0..k).map(|r| (0..k).map(|c| u64::from(r == c)).collect()).collect();
    rref(f, &mut identity_basis);
    let mut pending = vec![identity_basis];
    let mut done: Vec<Vec<u64>> = Vec::new();

    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            done.push(space.into_iter().next().unwrap());
            continue;
        }
        let mut split = None;
        for m in matrices.iter().skip(1) {
            let parts = eigenspaces(f, m, &space)?;
            if parts.len() > 1 {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => pending.extend(parts),
            None => return Err(Error::SplitFailed { dim: space.len() }),
        }
    }

    done.into_iter()
        .map(|v| {
            if v[0] == 0 {
                return Err(Error::LiftInconsistent("eigenvector vanishes at the identity class".into()));
            }
            let inv = f.inv(v[0]);
            Ok(v.into_iter().map(|x| f.mul(x, inv)).collect())
        })
        .collect()
}

/// Eigenspace decomposition of `m` restricted to the invariant subspace
/// spanned by the rows of `space` (kept in reduced row echelon form).
fn eigenspaces(f: Fp, m: &Matrix, space: &Matrix) -> Result<Vec<Matrix>> {
    let dim = space.len();
    let k = m.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect();
    // restricted[r'][r] = coordinate r' of m·b_r
    let mut restricted = vec![vec![0u64; dim]; dim];
    for (r, b) in space.iter().enumerate() {
        let image: Vec<u64> = (0..k)
            .map(|j| (0..k).fold(0, |acc, t| f.add(acc, f.mul(m[j][t], b[t]))))
            .collect();
        for (rp, &pc) in pivots.iter().enumerate() {
            restricted[rp][r] = image[pc];
        }
    }
    let cp = char_poly(f, &restricted);
    let mut parts = Vec::new();
    let mut covered = 0;
    for lambda in 0..f.p {
        if eval_poly(f, &cp, lambda) != 0 {
            continue;
        }
        let shifted: Matrix = (0..dim)
            .map(|i| (0..dim).map(|j| f.sub(restricted[i][j], if i == j { lambda } else { 0 })).collect())
            .collect();
        let coords = kernel(f, &shifted);
        covered += coords.len();
        let mut sub: Matrix = coords
            .iter()
            .map(|u| {
                (0..k)
                    .map(|c| (0..dim).fold(0, |acc, r| f.add(acc, f.mul(u[r], space[r][c]))))
                    .collect()
            })
            .collect();
        rref(f, &mut sub);
        parts.push(sub);
    }
    if covered != dim {
        // not diagonalisable over GF(p): wrong prime or broken coefficients
        return Err(Error::SplitFailed { dim });
    }
    Ok(parts)
}

/// Recovers exact characters from the mod-p central characters.
pub fn lift_characters(
    g: &FiniteGroup,
    classes: &ConjugacyClasses,
    eigvecs: &[Vec<u64>],
    p: u64,
) -> Result<CharacterTable> {
    let f = Fp::new(p);
    let n = g.order();
    let k = classes.count();
    let e = classes.exponent();
    let theta = f.pow(f.primitive_root(), (p - 1) / e as u64);
    let inv_e = f.inv(f.from_usize(e));
    let theta_pows: Vec<u64> = (0..e as u64).map(|j| f.pow(theta, j)).collect();
    let max_degree = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1);

    let mut rows = Vec::with_capacity(k);
    for omega in eigvecs {
        let mut s = 0u64;
        for c in 0..k {
            let term = f.mul(
                f.mul(omega[c], omega[classes.inverse_class(c)]),
                f.inv(f.from_usize(classes.size(c))),
            );
            s = f.add(s, term);
        }
        if s == 0 {
            return Err(Error::LiftInconsistent("norm of central character vanishes".into()));
        }
        let d2 = f.mul(f.from_usize(n), f.inv(s));
        let degree = (1..=max_degree)
            .find(|&d| n.is_multiple_of(d) && f.mul(d as u64, d as u64) == d2)
            .ok_or_else(|| Error::LiftInconsistent(format!("no degree with square {d2} mod {p}")))?;
        let dm = degree as u64;
        let chi_modp: Vec<u64> = (0..k)
            .map(|c| f.mul(f.mul(dm, omega[c]), f.inv(f.from_usize(classes.size(c)))))
            .collect();
        let mut values = Vec::with_capacity(k);
        for c in 0..k {
            let mut mult = Vec::with_capacity(e);
            for j in 0..e {
                let mut acc = 0u64;
                for step in 0..e {
                    let chi = chi_modp[classes.power_class(c, step)];
                    let exp = ((e - j) * step) % e;
                    acc = f.add(acc, f.mul(chi, theta_pows[exp]));
                }
                let m = f.mul(acc, inv_e);
                if m > dm {
                    return Err(Error::LiftInconsistent(format!(
                        "multiplicity {m} exceeds degree {degree} at class {c}"
                    )));
                }
                mult.push(m);
            }
            if mult.iter().sum::<u64>() != dm {
                return Err(Error::LiftInconsistent(format!("multiplicities at class {c} do not sum to {degree}")));
            }
            values.push(CyclotomicValue::new(e as u32, mult.into_iter().map(BigInt::from).collect()));
        }
        rows.push(Character {
            degree: dm,
            values,
        });
    }
    let total: usize = rows.iter().map(|r| (r.degree * r.degree) as usize).sum();
    if total != n {
        return Err(Error::LiftInconsistent(format!("sum of squared degrees is {total}, not {n}")));
    }
    Ok(CharacterTable::from_rows(n, classes.clone(), rows))
}
