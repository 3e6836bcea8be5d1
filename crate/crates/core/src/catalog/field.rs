use crate::error::{Error, Result};
use crate::group::prime_power_base;

/// GF(pⁿ) for small pⁿ, with elements encoded as integers `Σ cᵢ pⁱ` over a
/// fixed polynomial basis.
///
/// Moduli: x²+x+1 for GF(4), x³+x+1 for GF(8), x²+1 for GF(9).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallField {
    p: usize,
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl SmallField {
    pub fn new(q: usize) -> Result<Self> {
        let p = prime_power_base(q).ok_or_else(|| Error::BadRecipe(format!("{q} is not a prime power")))?;
        let n = (q as f64).log(p as f64).round() as usize;
        // monic modulus, low degree first, without the leading 1
        let modulus: Vec<usize> = match (p, n) {
            (_, 1) => vec![0],
            (2, 2) => vec![1, 1],
            (2, 3) => vec![1, 1, 0],
            (3, 2) => vec![1, 0],
            _ => return Err(Error::BadRecipe(format!("no field of order {q} is built in"))),
        };
        let digits = |x: usize| -> Vec<usize> { (0..n).map(|i| x / p.pow(i as u32) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);

                let mut prod = vec![0usize; 2 * n];
                for i in 0..n {
                    for j in 0..n {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^n = -Σ modulus[i] x^i
                for k in (n..2 * n).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        prod[k - n + i] = (prod[k - n + i] + (p - m % p) * c) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..n]);
            }
        }
        Ok(SmallField { p, n, add, mul })
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.n as u32)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &SmallField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert!((0..q).any(|b| f.add(a, b) == 0));
            if a != 0 {
                assert!((0..q).any(|b| f.mul(a, b) == 1), "no inverse for {a} in GF({q})");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13] {
            check_axioms(&SmallField::new(q).unwrap());
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(16).is_err());
    }
}
