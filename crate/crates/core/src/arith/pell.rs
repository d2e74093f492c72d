use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::is_prime;
use super::squares::isqrt;
use crate::error::{Error, Result};

/// Fundamental unit `u + v*sqrt(l)` of norm `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellUnit {
    pub u: BigUint,
    pub v: BigUint,
}

impl PellUnit {
    /// `u^2 - l*v^2`.
    pub fn norm(&self, l: u64) -> BigInt {
        let u = BigInt::from(self.u.clone());
        let v = BigInt::from(self.v.clone());
        &u * &u - BigInt::from(l) * &v * &v
    }
}

/// Fundamental unit of `Q(sqrt(l))` for `l = 2` or a prime `l ≡ 1 (mod 8)`.
///
/// Walks the convergents of the continued fraction of `sqrt(l)` until one
/// satisfies `h^2 - l*k^2 = ±1`. For `l ≡ 1 (mod 8)` a unit `(u + v*sqrt(l))/2`
/// with `u, v` odd would need `u^2 - l*v^2 ≡ 0 (mod 8)`, which is incompatible
/// with norm `±4`, so the solution over `Z[sqrt(l)]` is already fundamental in
/// the maximal order.
pub fn pell_fundamental_unit(l: u64) -> Result<PellUnit> {
    if !(l == 2 || (l % 8 == 1 && is_prime(l))) {
        return Err(Error::NotOneModEight(l));
    }
    let a0 = isqrt(l);
    let l_big = BigInt::from(l);
    let (mut m, mut d, mut a) = (0u64, 1u64, a0);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        let norm = &h * &h - &l_big * &k * &k;
        if norm == -BigInt::one() {
            return Ok(PellUnit {
                u: h.magnitude().clone(),
                v: k.magnitude().clone(),
            });
        }
        if norm.is_one() {
            return Err(Error::PellNormPlusOne(l));
        }
        m = d * a - m;
        d = (l - m * m) / d;
        a = (a0 + m) / d;
        let a_big = BigInt::from(a);
        (h_prev, h) = (h.clone(), &a_big * &h + &h_prev);
        (k_prev, k) = (k.clone(), &a_big * &k + &k_prev);
    }
}

/// Element `(a + b*sqrt(l))/2` of the ring of integers of `Q(sqrt(l))`,
/// `l ≡ 1 (mod 4)`; `a` and `b` always share parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticInteger {
    l: u64,
    a: BigInt,
    b: BigInt,
}

impl QuadraticInteger {
    /// `x + y*sqrt(l)`.
    pub fn new(l: u64, x: BigInt, y: BigInt) -> Self {
        debug_assert_eq!(l % 4, 1);
        QuadraticInteger { l, a: x * 2, b: y * 2 }
    }

    /// `(a + b*sqrt(l))/2`; `None` unless `a ≡ b (mod 2)`.
    pub fn from_halves(l: u64, a: BigInt, b: BigInt) -> Option<Self> {
        if a.is_odd() != b.is_odd() {
            return None;
        }
        Some(QuadraticInteger { l, a, b })
    }

    pub fn sqrt_l(l: u64) -> Self {
        Self::new(l, BigInt::zero(), BigInt::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = BigInt::from(self.l);
        let a = &self.a * &other.a + &l * &self.b * &other.b;
        let b = &self.a * &other.b + &self.b * &other.a;
        // both numerators are divisible by 2 because l ≡ 1 (mod 4)
        QuadraticInteger {
            l: self.l,
            a: a / 2,
            b: b / 2,
        }
    }

    pub fn sub_integer(&self, n: i64) -> Self {
        QuadraticInteger {
            l: self.l,
            a: &self.a - BigInt::from(2 * n),
            b: self.b.clone(),
        }
    }

    /// Whether `self ∈ m * O_k`.
    pub fn is_divisible_by(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        let (qa, ra) = self.a.div_rem(&m);
        let (qb, rb) = self.b.div_rem(&m);
        ra.is_zero() && rb.is_zero() && qa.is_odd() == qb.is_odd()
    }
}

/// Checks `ε₀·sqrt(l) ≡ 1 (mod 4 O_k)` for a prime `l ≡ 1 (mod 8)`.
pub fn unit_congruence_check(l: u64) -> Result<bool> {
    if l % 8 != 1 || !is_prime(l) {
        return Err(Error::NotOneModEight(l));
    }
    let unit = pell_fundamental_unit(l)?;
    let eps = QuadraticInteger::new(l, BigInt::from(unit.u), BigInt::from(unit.v));
    let product = eps.mul(&QuadraticInteger::sqrt_l(l));
    Ok(product.sub_integer(1).is_divisible_by(4))
}
