use serde::{Deserialize, Serialize};

use super::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// `l = b^2 + c^2` with `c` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSquares {
    pub b: u64,
    pub c: u64,
}

/// Two-squares decomposition of `l = 2` or a prime `l ≡ 1 (mod 4)`, by
/// Cornacchia's reduction seeded with a square root of `-1` modulo `l`.
pub fn two_squares(l: u64) -> Result<TwoSquares> {
    if l == 2 {
        return Ok(TwoSquares { b: 1, c: 1 });
    }
    if l % 4 != 1 || !is_prime(l) {
        return Err(Error::NoTwoSquares(l));
    }
    let root = sqrt_minus_one(l);
    let (mut r0, mut r1) = (l, root);
    while r1.saturating_mul(r1) > l {
        (r0, r1) = (r1, r0 % r1);
    }
    let x = r1;
    let y = isqrt(l - x * x);
    debug_assert_eq!(x * x + y * y, l);
    let (b, c) = if x % 2 == 1 { (y, x) } else { (x, y) };
    Ok(TwoSquares { b, c })
}

fn sqrt_minus_one(p: u64) -> u64 {
    // z^((p-1)/4) squares to z^((p-1)/2) = -1 for any non-residue z
    let exp = (p - 1) / 4;
    (2..p)
        .map(|z| pow_mod(z, exp, p))
        .find(|&x| mul_mod(x, x, p) == p - 1)
        .expect("p ≡ 1 (mod 4) has a non-residue")
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}
