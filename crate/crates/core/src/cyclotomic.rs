//! Exact arithmetic in `Z[ζₑ]`, `ζₑ = exp(2πi/e)`.
//!
//! A value is a coefficient vector `c` of length `e` standing for
//! `Σⱼ c[j]·ζₑʲ`. The representation is not unique; two vectors denote the
//! same number exactly when their difference vanishes modulo the cyclotomic
//! polynomial `Φₑ`. Character values produced by lifting keep their
//! eigenvalue multiplicities as coefficients, and reduction only happens
//! when values are compared.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients of `Φₑ(x)`, lowest degree first.
///
/// Computed as `(xᵉ − 1) / Π_{d | e, d < e} Φ_d(x)` by exact division.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    assert!(e >= 1, "cyclotomic polynomial order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        num = divide_exact(&num, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(e, num.clone());
    num
}

/// Exact quotient of integer polynomials with a monic divisor.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    q
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    e: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicValue {
    pub fn new(e: u32, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), e as usize, "coefficient vector must have length e");
        CyclotomicValue { e, coeffs }
    }

    pub fn from_i64s(e: u32, coeffs: &[i64]) -> Self {
        Self::new(e, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(e: u32) -> Self {
        CyclotomicValue {
            e,
            coeffs: vec![BigInt::zero(); e as usize],
        }
    }

    pub fn integer(e: u32, n: i64) -> Self {
        let mut v = Self::zero(e);
        v.coeffs[0] = BigInt::from(n);
        v
    }

    /// `ζₑʲ`.
    pub fn root(e: u32, j: u32) -> Self {
        let mut v = Self::zero(e);
        v.coeffs[(j % e) as usize] = BigInt::one();
        v
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.e == other.e {
            Ok(())
        } else {
            Err(Error::MixedOrder(self.e, other.e))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cyclic convolution of the coefficient vectors.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let e = self.e as usize;
        let mut out = vec![BigInt::zero(); e];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + j) % e] += a * b;
            }
        }
        Ok(CyclotomicValue { e: self.e, coeffs: out })
    }

    /// The same number written in `Z[ζ_f]`, for `e | f`.
    pub fn embed(&self, f: u32) -> Result<Self> {
        if !f.is_multiple_of(self.e) {
            return Err(Error::MixedOrder(self.e, f));
        }
        let step = (f / self.e) as usize;
        let mut out = vec![BigInt::zero(); f as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j * step] = c.clone();
        }
        Ok(CyclotomicValue { e: f, coeffs: out })
    }

    /// Complex conjugate: `ζʲ ↦ ζ⁻ʲ`.
    pub fn conjugate(&self) -> Self {
        let e = self.e as usize;
        let mut out = vec![BigInt::zero(); e];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[(e - j) % e] = c.clone();
        }
        CyclotomicValue { e: self.e, coeffs: out }
    }

    /// Remainder of `Σ c[j] xʲ` modulo `Φₑ`, of length `deg Φₑ`.
    pub fn reduced(&self) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(self.e);
        let deg = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for i in (deg..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut r[i]);
            for (j, &p) in phi.iter().enumerate().take(deg) {
                if p != 0 {
                    r[i - deg + j] -= &c * p;
                }
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero) || self.reduced().iter().all(Zero::is_zero)
    }

    /// Exact equality of the denoted numbers.
    pub fn equals(&self, other: &Self) -> bool {
        self.e == other.e && (self.coeffs == other.coeffs || (self - other).is_zero())
    }

    pub fn equals_integer(&self, n: i64) -> bool {
        self.equals(&Self::integer(self.e, n))
    }

    /// `a · a_inv == target`, with `a_inv` the value at the inverse element
    /// (that is, the complex conjugate of `a` for character values).
    pub fn abs_squared_equals(a: &Self, a_inv: &Self, target: u64) -> bool {
        let prod = a * a_inv;
        let t = Self {
            e: a.e,
            coeffs: {
                let mut c = vec![BigInt::zero(); a.e as usize];
                c[0] = BigInt::from(target);
                c
            },
        };
        prod.equals(&t)
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.reduced();
        if r.iter().skip(1).all(Zero::is_zero) {
            Some(r.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// Floating-point evaluation `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.e as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let t = 2.0 * std::f64::consts::PI * j as f64 / e;
                (re + c * t.cos(), im + c * t.sin())
            })
    }

    /// Decimal approximation to four places, e.g. `-1.0000` or `0.5000+0.8660i`.
    pub fn approx(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 5e-5 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.4}")
        } else if im > 0.0 {
            format!("{re:.4}+{im:.4}i")
        } else {
            format!("{re:.4}-{:.4}i", -im)
        }
    }
}

/// Printed as `Σ c_j*z^j` over the nonzero coefficients of the reduced
/// form (`j < φ(e)`), `z = e^(2πi/e)`.
impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.reduced().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            write!(f, "{mag}*z^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        /// Panics when the orders differ; use the `try_` form to get an error.
        impl $trait for &CyclotomicValue {
            type Output = CyclotomicValue;
            fn $method(self, rhs: &CyclotomicValue) -> CyclotomicValue {
                self.$try(rhs).expect("cyclotomic operands must share an order")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ₁₀₅ is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for e in 1..=60u32 {
            let phi = (1..=e).filter(|k| num_integer::gcd(*k, e) == 1).count();
            assert_eq!(cyclotomic_polynomial(e).len() - 1, phi, "e = {e}");
        }
    }

    #[test]
    fn ring_examples() {
        let i = CyclotomicValue::root(4, 1);
        assert!((&i * &i).equals_integer(-1));
        assert_eq!(&i * &i, CyclotomicValue::root(4, 2));
        let a = CyclotomicValue::from_i64s(6, &[3, -1, 0, 2, 5, 1]);
        assert!((&a + &-&a).is_zero());
        let s = CyclotomicValue::from_i64s(3, &[1, 1, 1]);
        let b = CyclotomicValue::from_i64s(3, &[4, -2, 7]);
        assert!((&s * &b).is_zero());
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = CyclotomicValue::integer(3, 1);
        let b = CyclotomicValue::integer(4, 1);
        assert_eq!(a.try_add(&b), Err(Error::MixedOrder(3, 4)));
        assert_eq!(a.try_mul(&b), Err(Error::MixedOrder(3, 4)));
    }

    #[test]
    fn conjugation() {
        let real = CyclotomicValue::from_i64s(4, &[2, 1, 0, 1]);
        assert_eq!(real.conjugate(), real);
        assert_eq!(CyclotomicValue::root(4, 1).conjugate(), CyclotomicValue::root(4, 3));
    }

    #[test]
    fn zero_tests() {
        assert!(CyclotomicValue::zero(5).is_zero());
        assert!(CyclotomicValue::from_i64s(2, &[1, 1]).is_zero());
        for p in [2u32, 3, 5, 7, 11] {
            assert!(CyclotomicValue::from_i64s(p, &vec![1; p as usize]).is_zero());
        }
        assert!(!CyclotomicValue::from_i64s(4, &[1, 1, 1, 0]).is_zero());
    }

    #[test]
    fn modulus_tests() {
        let d = CyclotomicValue::integer(3, 2);
        assert!(CyclotomicValue::abs_squared_equals(&d, &d, 4));
        let z = CyclotomicValue::zero(3);
        assert!(!CyclotomicValue::abs_squared_equals(&z, &z, 4));
        let m1 = CyclotomicValue::from_i64s(3, &[0, 1, 1]);
        assert!(CyclotomicValue::abs_squared_equals(&m1, &m1, 1));
    }

    #[test]
    fn display_format() {
        assert_eq!(CyclotomicValue::from_i64s(4, &[2, 0, -1, 1]).to_string(), "3*z^0 - 1*z^1");
        assert_eq!(CyclotomicValue::from_i64s(6, &[0, 0, 1, 0, 1, 0]).to_string(), "-1*z^0");
        assert_eq!(CyclotomicValue::zero(4).to_string(), "0");
        assert_eq!(CyclotomicValue::from_i64s(3, &[0, 1, 1]).approx(), "-1.0000");
        assert_eq!(CyclotomicValue::root(3, 1).approx(), "-0.5000+0.8660i");
    }

    fn value(e: u32) -> impl Strategy<Value = CyclotomicValue> {
        prop::collection::vec(-4i64..=4, e as usize).prop_map(move |c| CyclotomicValue::from_i64s(e, &c))
    }

    fn triple() -> impl Strategy<Value = (CyclotomicValue, CyclotomicValue, CyclotomicValue)> {
        (1u32..=24).prop_flat_map(|e| (value(e), value(e), value(e)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            prop_assert!((&(&a * &b) * &c).equals(&(&a * &(&b * &c))));
            prop_assert!((&a * &(&b + &c)).equals(&(&(&a * &b) + &(&a * &c))));
            prop_assert!((&a * &b).equals(&(&b * &a)));
            prop_assert!((&a * &b).conjugate().equals(&(&a.conjugate() * &b.conjugate())));
        }

        #[test]
        fn zero_test_agrees_with_numeric_evaluation(
            e in 1u32..=30,
            seed in prop::collection::vec(-3i64..=3, 30),
            make_zero in any::<bool>(),
        ) {
            let mut v = CyclotomicValue::from_i64s(e, &seed[..e as usize]);
            if make_zero {
                // subtract the reduced form, leaving a multiple of Φₑ
                let r = v.reduced();
                let mut c = v.coeffs().to_vec();
                for (j, x) in r.iter().enumerate() {
                    c[j] -= x;
                }
                v = CyclotomicValue::new(e, c);
            }
            let (re, im) = v.to_complex();
            prop_assert_eq!(v.is_zero(), re.hypot(im) < 1e-6);
        }
    }
}
