//! Closed-form rank by case analysis on the shape of `n`.
//!
//! Notation: `t1`/`t2` count inert/split primes `p ≡ 1 (mod 4)`,
//! `s1`/`s2` count inert/split primes `q ≡ 3 (mod 4)`, `h = t1 + 2·t2`,
//! `s = s1 + s2`, `δ = 2` for even `n`. "agree" means every split `p`
//! satisfies `(p/l)₄ = (l/p)₄` (for `l = 2`: `(2/p)₄ = (p/2)₄`).
//! `E = (2/l)₄·(-1)^((l-1)/8)`.
//!
//! | case_id                               | rank                         |
//! |---------------------------------------|------------------------------|
//! | `L1mod8/trivial`                      | 0                            |
//! | `L1mod8/two/Eplus`                    | 2                            |
//! | `L1mod8/two/Eminus`                   | 1                            |
//! | `L1mod8/pOnly/d1/agree`               | h                            |
//! | `L1mod8/pOnly/d1/disagree`            | h - 1                        |
//! | `L1mod8/pOnly/d2/Eplus/agree`         | h + 2                        |
//! | `L1mod8/pOnly/d2/Eplus/disagree`      | h + 1                        |
//! | `L1mod8/pOnly/d2/Eminus`              | h + 1                        |
//! | `L1mod8/qOnly/tOdd/{inert,split}`     | s1 + 2·s2                    |
//! | `L1mod8/qOnly/tEven/dδ/inert`         | s - 1 + 2(δ-1)               |
//! | `L1mod8/qOnly/tEven/dδ/split`         | s1 + 2·s2 - 2 + 2(δ-1)       |
//! | `L1mod8/mixed/sOdd/{inert,split}`     | h + s1 + 2·s2                |
//! | `L1mod8/mixed/sEven/dδ/inert`         | h + s - 1 + 2(δ-1)           |
//! | `L1mod8/mixed/sEven/dδ/split`         | h + s1 + 2·s2 - 2 + 2(δ-1)   |
//! | `L2/trivial`                          | 0                            |
//! | `L2/pOnly/agree`                      | h                            |
//! | `L2/pOnly/disagree`                   | h - 1                        |
//! | `L2/qOnly/inert`                      | s - 1                        |
//! | `L2/qOnly/split`                      | s1 + 2·s2 - 2                |
//! | `L2/mixed/inert`                      | h + s - 1                    |
//! | `L2/mixed/split`                      | h + s1 + 2·s2 - 2            |
//!
//! In the q-branches, `inert` means `s2 = 0` and `split` means `s2 ≥ 1`;
//! `tOdd`/`tEven` is the parity of the number of `q` factors.

use crate::arith::Sign;
use crate::error::Result;
use crate::quarticfield::QuarticField;

use super::matrix::split_p_sign;
use super::{RankPath, RankResult};

/// Whether every split `p ≡ 1 (mod 4)` of `n` passes the quartic test.
pub fn split_primes_agree(field: &QuarticField) -> Result<bool> {
    for &p in &field.shape.ones_split {
        if split_p_sign(p, field.l())? == Sign::Minus {
            return Ok(false);
        }
    }
    Ok(true)
}

fn agree_tag(agree: bool) -> &'static str {
    if agree {
        "agree"
    } else {
        "disagree"
    }
}

pub fn rank_closed_form(field: &QuarticField) -> Result<RankResult> {
    let sh = &field.shape;
    let (h, s, s1, s2, t) = (sh.h() as i64, sh.s() as i64, sh.s1() as i64, sh.s2() as i64, sh.t());
    let d2 = if sh.is_even() { 2 } else { 0 };
    let qtag = if s2 == 0 { "inert" } else { "split" };
    let (rank, case_id): (i64, String) = if field.k.is_two() {
        if field.n == 1 {
            (0, "L2/trivial".into())
        } else if s == 0 {
            let agree = split_primes_agree(field)?;
            (h - i64::from(!agree), format!("L2/pOnly/{}", agree_tag(agree)))
        } else {
            let branch = if t == 0 { "qOnly" } else { "mixed" };
            let rank = if s2 == 0 { h + s - 1 } else { h + s1 + 2 * s2 - 2 };
            (rank, format!("L2/{branch}/{qtag}"))
        }
    } else {
        let e_plus = field.k.two_adic_sign() == Some(Sign::Plus);
        let etag = if e_plus { "Eplus" } else { "Eminus" };
        if field.n == 1 {
            (0, "L1mod8/trivial".into())
        } else if field.n == 2 {
            (if e_plus { 2 } else { 1 }, format!("L1mod8/two/{etag}"))
        } else if s == 0 {
            let agree = split_primes_agree(field)?;
            if !sh.is_even() {
                (h - i64::from(!agree), format!("L1mod8/pOnly/d1/{}", agree_tag(agree)))
            } else if !e_plus {
                (h + 1, "L1mod8/pOnly/d2/Eminus".into())
            } else {
                (h + 1 + i64::from(agree), format!("L1mod8/pOnly/d2/Eplus/{}", agree_tag(agree)))
            }
        } else {
            let (branch, parity) = if t == 0 { ("qOnly", "t") } else { ("mixed", "s") };
            if s % 2 == 1 {
                (h + s1 + 2 * s2, format!("L1mod8/{branch}/{parity}Odd/{qtag}"))
            } else {
                let rank = if s2 == 0 { h + s - 1 + d2 } else { h + s1 + 2 * s2 - 2 + d2 };
                (rank, format!("L1mod8/{branch}/{parity}Even/d{}/{qtag}", sh.delta))
            }
        }
    };
    let mu = counted_mu(field);
    let r_star = rank - mu as i64 + 3;
    debug_assert!((0..=2).contains(&r_star), "{case_id}: r* = {r_star}");
    Ok(RankResult {
        mu,
        r_star: r_star as u8,
        rank: rank as u32,
        case_id,
        path: RankPath::ClosedForm,
    })
}

/// `μ` from the shape counts alone.
fn counted_mu(field: &QuarticField) -> usize {
    let sh = &field.shape;
    let two_adic = !field.k.is_two() && (sh.is_even() || sh.s() % 2 == 1);
    1 + 2 * usize::from(two_adic) + sh.h() + sh.s1() + 2 * sh.s2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basefield::make_basefield;
    use crate::quarticfield::make_quarticfield;

    fn closed(n: u64, l: u64) -> RankResult {
        rank_closed_form(&make_quarticfield(n, &make_basefield(l).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let r = closed(2 * 97, 41);
        assert_eq!((r.rank, r.case_id.as_str()), (3, "L1mod8/pOnly/d2/Eplus/agree"));
        let r = closed(61 * 47, 2);
        assert_eq!((r.rank, r.case_id.as_str()), (1, "L2/mixed/split"));
        let r = closed(881, 2);
        assert_eq!((r.rank, r.case_id.as_str()), (2, "L2/pOnly/agree"));
        let r = closed(83, 137);
        assert_eq!((r.rank, r.case_id.as_str(), r.r_star), (1, "L1mod8/qOnly/tOdd/inert", 0));
        assert_eq!(closed(1, 257).case_id, "L1mod8/trivial");
        assert_eq!(closed(2, 1889).rank, 2);
        assert_eq!(closed(2, 1913).rank, 1);
    }

    #[test]
    fn mu_counts() {
        assert_eq!(closed(89, 41).mu, 2);
        assert_eq!(closed(2, 17).mu, 3);
        assert_eq!(closed(613, 17).mu, 3);
        assert_eq!(closed(59, 2).mu, 2);
    }
}
