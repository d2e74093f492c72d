use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use super::{is_prime, pow_mod, reduce};
use crate::error::{Error, Result};

/// A value in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = reduce(a, p);
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Jacobi symbol `(a/m)` for odd `m >= 1`, as the product of Legendre symbols
/// over the prime factorization of `m` (with multiplicity).
pub fn jacobi(a: i64, m: u64) -> Result<i8> {
    if m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    let mut acc = 1i8;
    let mut rest = m;
    while rest > 1 {
        let p = smallest_prime_factor(rest);
        acc *= legendre(a, p)?;
        rest /= p;
    }
    Ok(acc)
}

// odd n > 1 only
fn smallest_prime_factor(n: u64) -> u64 {
    if is_prime(n) {
        return n;
    }
    let mut d = 3;
    while n % d != 0 {
        d += 2;
    }
    d
}

/// Rational quartic residue symbol `(a/p)_4 = a^((p-1)/4) mod p`, defined for
/// primes `p ≡ 1 (mod 4)` and quadratic residues `a`.
pub fn quartic_symbol(a: i64, p: u64) -> Result<Sign> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(Error::NotOneModFour(p));
    }
    if legendre(a, p)? != 1 {
        return Err(Error::NotQuadraticResidue { a, p });
    }
    let r = pow_mod(reduce(a, p), (p - 1) / 4, p);
    debug_assert!(r == 1 || r == p - 1);
    Ok(if r == 1 { Sign::Plus } else { Sign::Minus })
}

/// `(-1)^((l-1)/8)` for primes `l ≡ 1 (mod 8)`.
pub fn eighth_character(l: u64) -> Result<Sign> {
    if l % 8 != 1 || !is_prime(l) {
        return Err(Error::NotOneModEight(l));
    }
    Ok(Sign::from_parity((l - 1) / 8 % 2 == 1))
}

/// The symbol `(p/2)_4` for primes `p ≡ 1 (mod 8)`, taken as `(-1)^((p-1)/8)`.
pub fn quartic_symbol_at_two(p: u64) -> Result<Sign> {
    eighth_character(p)
}
