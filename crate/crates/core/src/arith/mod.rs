//! Integer primitives: primality, squarefree factorization, residue symbols,
//! sums of two squares and the fundamental unit of `Q(sqrt(l))`.
//!
//! Residue computations work on machine words with `u128` intermediates; the
//! fundamental unit and the ring arithmetic in `O_k` use arbitrary precision
//! because Pell coefficients grow exponentially in `sqrt(l)`.

mod pell;
mod squares;
mod symbols;

pub use pell::{pell_fundamental_unit, unit_congruence_check, PellUnit, QuadraticInteger};
pub use squares::{two_squares, TwoSquares};
pub use symbols::{eighth_character, jacobi, legendre, quartic_symbol, quartic_symbol_at_two, Sign};

use crate::error::{Error, Result};

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed integer into `[0, m)`.
pub(crate) fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

// First twelve primes: Miller-Rabin with these bases is exact below 3.3e24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sorted distinct prime factors of a squarefree `n`.
///
/// Trial division with an early exit once the cofactor is prime.
pub fn factor_squarefree(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let mut push = |p: u64, rest: &mut u64| -> Result<()> {
        *rest /= p;
        if *rest % p == 0 {
            return Err(Error::NotSquarefree { n, prime: p });
        }
        primes.push(p);
        Ok(())
    };
    if rest % 2 == 0 {
        push(2, &mut rest)?;
    }
    // a composite odd cofactor always has a prime factor >= d below its root
    let mut d = 3u64;
    while rest > 1 && !is_prime(rest) {
        while rest % d != 0 {
            d += 2;
        }
        push(d, &mut rest)?;
        d += 2;
    }
    if rest > 1 {
        primes.push(rest);
    }
    Ok(primes)
}

/// `true` iff `n >= 1` has no repeated prime factor.
pub fn is_squarefree(n: u64) -> bool {
    factor_squarefree(n).is_ok()
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
