//! The quadratic subfield `k = Q(sqrt(l))`.
//!
//! Construction assumes, without computing it, that the class number of `k`
//! is odd; for prime `l` this holds classically. The norm of the fundamental
//! unit is checked to be `-1`.

use serde::{Deserialize, Serialize};

use crate::arith::{
    eighth_character, is_prime, legendre, pell_fundamental_unit, quartic_symbol, two_squares,
    PellUnit, Sign, TwoSquares,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseField {
    pub l: u64,
    pub unit: PellUnit,
    pub squares: TwoSquares,
    /// `(-1)^((l-1)/8)`; `None` for `l = 2`.
    pub eighth: Option<Sign>,
    /// `(2/l)_4`; `None` for `l = 2`.
    pub two_quartic: Option<Sign>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplittingKind {
    Ramified,
    Split,
    Inert,
}

impl BaseField {
    pub fn is_two(&self) -> bool {
        self.l == 2
    }

    /// `(2/l)_4 · (-1)^((l-1)/8)`, the value of `(ε₀, 2)` at a prime above 2
    /// when `l ≡ 1 (mod 8)`.
    pub fn two_adic_sign(&self) -> Option<Sign> {
        Some(self.two_quartic? * self.eighth?)
    }
}

/// Validates `l` and computes the data of `k`.
pub fn make_basefield(l: u64) -> Result<BaseField> {
    if l == 2 {
        return Ok(BaseField {
            l,
            unit: pell_fundamental_unit(2)?,
            squares: two_squares(2)?,
            eighth: None,
            two_quartic: None,
        });
    }
    if !is_prime(l) {
        return Err(Error::LNotPrime(l));
    }
    match l % 8 {
        1 => {}
        5 => return Err(Error::LDeferred(l)),
        _ => return Err(Error::LWrongClass(l)),
    }
    let unit = pell_fundamental_unit(l)?;
    assert_eq!(unit.norm(l), (-1).into(), "fundamental unit of Q(sqrt({l})) must have norm -1");
    let squares = two_squares(l)?;
    assert_eq!(squares.b % 4, 0);
    Ok(BaseField {
        l,
        unit,
        squares,
        eighth: Some(eighth_character(l)?),
        two_quartic: Some(quartic_symbol(2, l)?),
    })
}

/// Decomposition of the rational prime `p` in `k`.
pub fn splitting_in_k(p: u64, k: &BaseField) -> Result<SplittingKind> {
    if !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p == k.l {
        return Ok(SplittingKind::Ramified);
    }
    if p == 2 {
        // l ≡ 1 (mod 8) here
        return Ok(SplittingKind::Split);
    }
    Ok(match legendre(k.l as i64, p)? {
        1 => SplittingKind::Split,
        _ => SplittingKind::Inert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn construct_17() {
        let k = make_basefield(17).unwrap();
        assert_eq!((k.unit.u.clone(), k.unit.v.clone()), (BigUint::from(4u8), BigUint::from(1u8)));
        assert_eq!(k.squares, TwoSquares { b: 4, c: 1 });
        assert_eq!(k.eighth, Some(Sign::Plus));
    }

    #[test]
    fn construct_2() {
        let k = make_basefield(2).unwrap();
        assert_eq!((k.unit.u.clone(), k.unit.v.clone()), (BigUint::from(1u8), BigUint::from(1u8)));
        assert_eq!(k.squares, TwoSquares { b: 1, c: 1 });
        assert!(k.two_adic_sign().is_none());
    }

    #[test]
    fn rejects_out_of_scope() {
        assert_eq!(make_basefield(21), Err(Error::LNotPrime(21)));
        assert_eq!(make_basefield(1), Err(Error::LNotPrime(1)));
        assert_eq!(make_basefield(13), Err(Error::LDeferred(13)));
        assert_eq!(make_basefield(7), Err(Error::LWrongClass(7)));
        assert_eq!(make_basefield(3), Err(Error::LWrongClass(3)));
        assert!(make_basefield(5).unwrap_err().to_string().contains("studied separately"));
    }

    #[test]
    fn accepted_set_below_bound() {
        for l in 1..3000u64 {
            let expected = l == 2 || (is_prime(l) && l % 8 == 1);
            assert_eq!(make_basefield(l).is_ok(), expected, "l = {l}");
        }
    }

    #[test]
    fn splitting_examples() {
        let k41 = make_basefield(41).unwrap();
        assert_eq!(splitting_in_k(2, &k41), Ok(SplittingKind::Split));
        assert_eq!(splitting_in_k(89, &k41), Ok(SplittingKind::Inert));
        assert_eq!(splitting_in_k(41, &k41), Ok(SplittingKind::Ramified));
        let k2 = make_basefield(2).unwrap();
        assert_eq!(splitting_in_k(2, &k2), Ok(SplittingKind::Ramified));
        assert_eq!(splitting_in_k(7, &k2), Ok(SplittingKind::Split));
        assert_eq!(splitting_in_k(3, &k2), Ok(SplittingKind::Inert));
        assert_eq!(splitting_in_k(9, &k2), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn splitting_matches_square_roots() {
        for l in [2u64, 17, 41, 97] {
            let k = make_basefield(l).unwrap();
            for p in (3..2000).filter(|&p| is_prime(p) && p != l) {
                let has_root = (0..p).any(|x| x * x % p == l % p);
                let kind = splitting_in_k(p, &k).unwrap();
                assert_eq!(kind == SplittingKind::Split, has_root, "p = {p}, l = {l}");
            }
        }
    }
}
