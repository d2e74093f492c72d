//! 2-rank of the class group of `K` from the ambiguous class number formula
//! `r₂ = μ + r* - 3`.

mod classify;
mod closed;
mod matrix;

pub use classify::{classify_shapes, match_shape, DeltaReq, QuarticReq, ShapeDescriptor, ShapePattern};
pub use closed::{rank_closed_form, split_primes_agree};
pub use matrix::{r_star, symbol_matrix, Column, Entry, Row, SymbolMatrix};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quarticfield::{ramification_profile, QuarticField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankPath {
    Generic,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankResult {
    pub mu: usize,
    pub r_star: u8,
    pub rank: u32,
    pub case_id: String,
    pub path: RankPath,
}

/// Rank from the ramified places and the symbol matrix. The `case_id` is
/// filled in from the closed-form dispatch so both paths report the branch.
pub fn rank_generic(field: &QuarticField) -> Result<RankResult> {
    let mu = ramification_profile(field).mu;
    let r_star = r_star(&symbol_matrix(field)?)?;
    let rank = (mu + r_star as usize)
        .checked_sub(3)
        .expect("at least one place ramifies, and two when r* < 2") as u32;
    Ok(RankResult {
        mu,
        r_star,
        rank,
        case_id: closed::rank_closed_form(field)?.case_id,
        path: RankPath::Generic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basefield::make_basefield;
    use crate::quarticfield::make_quarticfield;

    fn generic(n: u64, l: u64) -> RankResult {
        rank_generic(&make_quarticfield(n, &make_basefield(l).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(generic(1, 257).rank, 0);
        assert_eq!(generic(613, 17).rank, 2);
        assert_eq!(generic(37 * 41 * 61, 89).rank, 3);
        assert_eq!(generic(59, 2).rank, 0);
        assert_eq!(generic(769 * 977, 2).rank, 3);
        assert_eq!(generic(83, 137).r_star, 0);
        assert_eq!(generic(89, 41).r_star, 2);
    }
}
