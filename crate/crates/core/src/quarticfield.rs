//! The quartic field `K = Q(sqrt(n·ε₀·sqrt(l)))`: factorization shape of
//! `n`, canonical form `Q(sqrt(a(l + b·sqrt(l))))`, conductor, reality and
//! the primes of `k` ramified in `K`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{factor_squarefree, gcd, Sign};
use crate::basefield::{splitting_in_k, BaseField, SplittingKind};
use crate::error::{Error, Result};

/// Odd prime factors of `n` sorted by residue mod 4 and behaviour in `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FactorizationShape {
    /// 2 when `n` is even.
    pub delta: u8,
    pub ones_split: Vec<u64>,
    pub ones_inert: Vec<u64>,
    pub threes_split: Vec<u64>,
    pub threes_inert: Vec<u64>,
}

impl FactorizationShape {
    pub fn of(factors: &[u64], k: &BaseField) -> Result<Self> {
        let mut shape = FactorizationShape {
            delta: 1,
            ..Default::default()
        };
        for &p in factors {
            if p == 2 {
                shape.delta = 2;
                continue;
            }
            let split = splitting_in_k(p, k)? == SplittingKind::Split;
            let bucket = match (p % 4 == 1, split) {
                (true, true) => &mut shape.ones_split,
                (true, false) => &mut shape.ones_inert,
                (false, true) => &mut shape.threes_split,
                (false, false) => &mut shape.threes_inert,
            };
            bucket.push(p);
        }
        Ok(shape)
    }

    /// Number of primes `≡ 1 (mod 4)`.
    pub fn t(&self) -> usize {
        self.ones_split.len() + self.ones_inert.len()
    }

    /// Number of primes `≡ 3 (mod 4)`.
    pub fn s(&self) -> usize {
        self.threes_split.len() + self.threes_inert.len()
    }

    pub fn t1(&self) -> usize {
        self.ones_inert.len()
    }

    pub fn t2(&self) -> usize {
        self.ones_split.len()
    }

    pub fn s1(&self) -> usize {
        self.threes_inert.len()
    }

    pub fn s2(&self) -> usize {
        self.threes_split.len()
    }

    /// Number of primes of `k` above the primes `≡ 1 (mod 4)`.
    pub fn h(&self) -> usize {
        2 * self.ones_split.len() + self.ones_inert.len()
    }

    pub fn is_even(&self) -> bool {
        self.delta == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticField {
    pub k: BaseField,
    pub n: u64,
    pub factors: Vec<u64>,
    pub shape: FactorizationShape,
    /// Odd squarefree coefficient of the canonical form.
    pub a: u64,
    /// `b` for odd `n`, `c` for even `n` (the two forms define the same field).
    pub b_used: u64,
    pub e: u8,
    pub conductor: BigUint,
}

impl QuarticField {
    pub fn l(&self) -> u64 {
        self.k.l
    }
}

/// Validates `n` against `k` and builds `K`.
pub fn make_quarticfield(n: u64, k: &BaseField) -> Result<QuarticField> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if k.is_two() && n % 2 == 0 {
        return Err(Error::EvenNWithLTwo(n));
    }
    let factors = factor_squarefree(n)?;
    if gcd(n, k.l) != 1 {
        return Err(Error::NotCoprime { n, l: k.l });
    }
    let shape = FactorizationShape::of(&factors, k)?;
    let (a, b_used) = if shape.is_even() {
        (n / 2, k.squares.c)
    } else {
        (n, k.squares.b)
    };
    let e = conductor_exponent(a, b_used, k.l)?;
    let conductor = (BigUint::from(1u8) << e) * a * k.l;
    Ok(QuarticField {
        k: k.clone(),
        n,
        factors,
        shape,
        a,
        b_used,
        e,
        conductor,
    })
}

/// Exponent of 2 in the conductor `2^e·|a|·l` of `Q(sqrt(a(l + b·sqrt(l))))`.
pub fn conductor_exponent(a: u64, b_used: u64, l: u64) -> Result<u8> {
    let err = Error::ConductorCase { a, b: b_used, l };
    if a % 2 == 0 {
        return Err(err);
    }
    if l % 8 == 2 {
        return Ok(3);
    }
    if l % 4 != 1 {
        return Err(err);
    }
    if b_used % 2 == 1 {
        return Ok(3);
    }
    match (a % 4 + b_used % 4) % 4 {
        3 => Ok(2),
        1 => Ok(0),
        _ => Err(err),
    }
}

/// Hasse's product `S = ∏_{p | f} s_p` with `s_2 = -1` and
/// `s_p = (-1)^((p-1)/e_p)` for odd `p`.
pub fn hasse_product(field: &QuarticField) -> Sign {
    let mut s = if field.e > 0 { Sign::Minus } else { Sign::Plus };
    if field.l() != 2 {
        // l is totally ramified: e_l = 4
        s = s * Sign::from_parity((field.l() - 1) / 4 % 2 == 1);
    }
    for &p in field.factors.iter().filter(|&&p| p != 2) {
        s = s * Sign::from_parity((p - 1) / 2 % 2 == 1);
    }
    s
}

/// Whether `K` is real. When `8 ∤ f` this is decided by [`hasse_product`];
/// when `8 | f` real and imaginary fields share the conductor and `K` is real
/// exactly when `a > 0`, which holds for every `n > 0`.
pub fn reality_check(field: &QuarticField) -> bool {
    if field.e == 3 {
        field.a > 0
    } else {
        hasse_product(field) == Sign::Plus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaceKind {
    /// The prime `(sqrt(l))`; for `l = 2` it is also the only prime above 2.
    SqrtL,
    /// Both primes above 2 when `l ≡ 1 (mod 8)`.
    TwoAdicPair,
    InertPrime,
    SplitPair,
}

impl PlaceKind {
    /// Number of primes of `k` the entry stands for.
    pub fn width(self) -> usize {
        match self {
            PlaceKind::SqrtL | PlaceKind::InertPrime => 1,
            PlaceKind::TwoAdicPair | PlaceKind::SplitPair => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Place {
    pub kind: PlaceKind,
    /// Rational prime below.
    pub prime: u64,
}

/// Finite primes of `k` ramified in `K`. `K` is totally real, so no infinite
/// place ramifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub places: Vec<Place>,
    pub mu: usize,
}

pub fn ramification_profile(field: &QuarticField) -> RamificationProfile {
    let l = field.l();
    let mut places = vec![Place {
        kind: PlaceKind::SqrtL,
        prime: l,
    }];
    if l != 2 && field.e > 0 {
        places.push(Place {
            kind: PlaceKind::TwoAdicPair,
            prime: 2,
        });
    }
    for &p in field.factors.iter().filter(|&&p| p != 2) {
        let kind = match splitting_in_k(p, &field.k).expect("factors are prime") {
            SplittingKind::Split => PlaceKind::SplitPair,
            _ => PlaceKind::InertPrime,
        };
        places.push(Place { kind, prime: p });
    }
    let mu = places.iter().map(|p| p.kind.width()).sum();
    RamificationProfile { places, mu }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basefield::make_basefield;

    fn field(n: u64, l: u64) -> QuarticField {
        make_quarticfield(n, &make_basefield(l).unwrap()).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        let f = field(1, 257);
        assert_eq!((f.a, f.e, f.conductor.clone()), (1, 0, BigUint::from(257u32)));
        let f = field(2, 17);
        assert_eq!((f.a, f.e, f.conductor.clone()), (1, 3, BigUint::from(136u32)));
        // b = 4 for 137 = 4^2 + 11^2, and 83 + 4 ≡ 3 (mod 4)
        let f = field(83, 137);
        assert_eq!(f.b_used, 4);
        assert_eq!((f.a, f.e, f.conductor.clone()), (83, 2, BigUint::from(4u64 * 83 * 137)));
        let f = field(61 * 47, 2);
        assert_eq!((f.a, f.e, f.conductor.clone()), (61 * 47, 3, BigUint::from(16u64 * 61 * 47)));
    }

    #[test]
    fn rejects_bad_n() {
        let k = make_basefield(41).unwrap();
        assert_eq!(make_quarticfield(12, &k), Err(Error::NotSquarefree { n: 12, prime: 2 }));
        assert_eq!(make_quarticfield(82, &k), Err(Error::NotCoprime { n: 82, l: 41 }));
        assert_eq!(make_quarticfield(0, &k), Err(Error::Zero));
        let k2 = make_basefield(2).unwrap();
        assert_eq!(make_quarticfield(6, &k2), Err(Error::EvenNWithLTwo(6)));
    }

    #[test]
    fn conductor_exponent_cases() {
        assert_eq!(conductor_exponent(1, 16, 257), Ok(0));
        assert_eq!(conductor_exponent(3 * 7 * 11, 4, 41), Ok(2));
        assert_eq!(conductor_exponent(1, 1, 2), Ok(3));
        assert_eq!(conductor_exponent(1, 5, 41), Ok(3));
        assert!(conductor_exponent(2, 4, 41).is_err());
        assert!(conductor_exponent(1, 4, 7).is_err());
    }

    #[test]
    fn shape_counts() {
        // 613 ≡ 1 (mod 4) splits in Q(sqrt(17))
        let f = field(2 * 613 * 3 * 7, 17);
        assert_eq!(f.shape.delta, 2);
        assert_eq!(f.shape.ones_split, vec![613]);
        assert_eq!(f.shape.h(), 2);
        assert_eq!(f.shape.s(), 2);
    }

    #[test]
    fn hasse_product_examples() {
        assert_eq!(hasse_product(&field(1, 257)), Sign::Plus);
        assert!(reality_check(&field(1, 257)));
        // p ≡ 1 (mod 4): every s_p = +1
        let f = field(89 * 97, 41);
        assert_eq!(f.e, 0);
        assert_eq!(hasse_product(&f), Sign::Plus);
        // three primes ≡ 3 (mod 4), 4 || f: s_2 = -1 cancels (-1)^3
        let f = field(67 * 71 * 83, 97);
        assert_eq!(f.e, 2);
        assert_eq!(hasse_product(&f), Sign::Plus);
        // 8 | f: S is not decisive, the field is still real
        let f = field(2, 17);
        assert_eq!(hasse_product(&f), Sign::Minus);
        assert!(reality_check(&f));
    }

    #[test]
    fn profile_examples() {
        let p = ramification_profile(&field(89, 41));
        assert_eq!(p.mu, 2);
        assert_eq!(p.places[1].kind, PlaceKind::InertPrime);
        let p = ramification_profile(&field(2, 17));
        assert_eq!(p.mu, 3);
        assert_eq!(p.places[1].kind, PlaceKind::TwoAdicPair);
        let p = ramification_profile(&field(613, 17));
        assert_eq!(p.mu, 3);
        assert_eq!(p.places[1].kind, PlaceKind::SplitPair);
        let p = ramification_profile(&field(1, 2));
        assert_eq!(p.mu, 1);
    }
}
