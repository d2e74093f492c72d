//! Shape descriptors: for each target rank, the list of shapes of `n`
//! (counts of each prime class plus symbol conditions) giving that rank.
//! Each descriptor is a union of exact [`ShapePattern`]s.

use serde::{Deserialize, Serialize};

use crate::arith::Sign;
use crate::basefield::BaseField;
use crate::error::Result;
use crate::quarticfield::{make_quarticfield, QuarticField};

use super::closed::split_primes_agree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaReq {
    One,
    Two,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticReq {
    Any,
    /// Every split `p ≡ 1 (mod 4)` passes the quartic test.
    AllAgree,
    SomeDisagree,
}

/// Exact prime-class counts of `n` plus symbol conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapePattern {
    pub delta: DeltaReq,
    pub p_inert: usize,
    pub p_split: usize,
    pub q_inert: usize,
    pub q_split: usize,
    /// Required value of `(2/l)₄·(-1)^((l-1)/8)`.
    pub two_adic: Option<Sign>,
    pub quartic: QuarticReq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeDescriptor {
    /// `L1/r<rank>/<item>` or `L2/r<rank>/<item>`.
    pub id: String,
    pub rank: u8,
    pub description: String,
    pub alternatives: Vec<ShapePattern>,
}

impl ShapePattern {
    pub fn matches(&self, field: &QuarticField) -> Result<bool> {
        let sh = &field.shape;
        let delta_ok = match self.delta {
            DeltaReq::One => !sh.is_even(),
            DeltaReq::Two => sh.is_even(),
            DeltaReq::Any => true,
        };
        let counts = (sh.t1(), sh.t2(), sh.s1(), sh.s2());
        if !delta_ok || counts != (self.p_inert, self.p_split, self.q_inert, self.q_split) {
            return Ok(false);
        }
        if let Some(e) = self.two_adic {
            if field.k.two_adic_sign() != Some(e) {
                return Ok(false);
            }
        }
        Ok(match self.quartic {
            QuarticReq::Any => true,
            QuarticReq::AllAgree => split_primes_agree(field)?,
            QuarticReq::SomeDisagree => !split_primes_agree(field)?,
        })
    }
}

impl ShapeDescriptor {
    pub fn matches(&self, field: &QuarticField) -> Result<bool> {
        for alt in &self.alternatives {
            if alt.matches(field)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Whether `n` over `k` has the shape of `descriptor`.
pub fn match_shape(n: u64, k: &BaseField, descriptor: &ShapeDescriptor) -> Result<bool> {
    descriptor.matches(&make_quarticfield(n, k)?)
}

// (delta, p_inert, p_split, q_inert, q_split, E, quartic)
type Row = (DeltaReq, usize, usize, usize, usize, Option<Sign>, QuarticReq);

fn descriptor(family: &str, rank: u8, item: usize, description: &str, rows: &[Row]) -> ShapeDescriptor {
    ShapeDescriptor {
        id: format!("{family}/r{rank}/{item}"),
        rank,
        description: description.to_string(),
        alternatives: rows
            .iter()
            .map(|&(delta, p_inert, p_split, q_inert, q_split, two_adic, quartic)| ShapePattern {
                delta,
                p_inert,
                p_split,
                q_inert,
                q_split,
                two_adic,
                quartic,
            })
            .collect(),
    }
}

/// Descriptors whose union is exactly `{n : rank = target_rank}`.
/// Ranks above 3 have no descriptors.
pub fn classify_shapes(k: &BaseField, target_rank: u8) -> Vec<ShapeDescriptor> {
    use DeltaReq::{Any, One, Two};
    use QuarticReq::{AllAgree as Agree, Any as Q, SomeDisagree as Dis};
    const P: Option<Sign> = Some(Sign::Plus);
    const M: Option<Sign> = Some(Sign::Minus);
    const N: Option<Sign> = None;

    let items: Vec<(&str, Vec<Row>)> = match (k.is_two(), target_rank) {
        (false, 0) => vec![("n = 1", vec![(One, 0, 0, 0, 0, N, Q)])],
        (false, 1) => vec![
            ("n = p, p inert or p split with (p/l)_4 != (l/p)_4", vec![(One, 1, 0, 0, 0, N, Q), (One, 0, 1, 0, 0, N, Dis)]),
            ("n = 2, E = -1", vec![(Two, 0, 0, 0, 0, M, Q)]),
            ("n = δq, q inert", vec![(Any, 0, 0, 1, 0, N, Q)]),
            ("n = q1q2, some q inert", vec![(One, 0, 0, 2, 0, N, Q), (One, 0, 0, 1, 1, N, Q)]),
        ],
        (false, 2) => vec![
            ("n = p1p2, both inert or one split with (p/l)_4 != (l/p)_4", vec![(One, 2, 0, 0, 0, N, Q), (One, 1, 1, 0, 0, N, Dis)]),
            ("n = p, p split, (p/l)_4 = (l/p)_4", vec![(One, 0, 1, 0, 0, N, Agree)]),
            ("n = 2p, p inert, E = -1", vec![(Two, 1, 0, 0, 0, M, Q)]),
            ("n = 2, E = +1", vec![(Two, 0, 0, 0, 0, P, Q)]),
            ("n = δq, q split", vec![(Any, 0, 0, 0, 1, N, Q)]),
            ("n = q1q2, both split", vec![(One, 0, 0, 0, 2, N, Q)]),
            ("n = δpq, p and q inert", vec![(Any, 1, 0, 1, 0, N, Q)]),
            ("n = pq1q2, p inert, some q inert", vec![(One, 1, 0, 2, 0, N, Q), (One, 1, 0, 1, 1, N, Q)]),
        ],
        (false, 3) => vec![
            ("n = 2p, p inert with E = +1, or p split with E = -1 or (p/l)_4 != (l/p)_4", vec![
                (Two, 1, 0, 0, 0, P, Q),
                (Two, 0, 1, 0, 0, M, Q),
                (Two, 0, 1, 0, 0, P, Dis),
            ]),
            ("n = p1p2, both split with some (p/l)_4 != (l/p)_4, or one split with (p/l)_4 = (l/p)_4", vec![
                (One, 0, 2, 0, 0, N, Dis),
                (One, 1, 1, 0, 0, N, Agree),
            ]),
            ("n = 2p1p2, both inert, E = -1", vec![(Two, 2, 0, 0, 0, M, Q)]),
            ("n = p1p2p3, all inert or one split with (p/l)_4 != (l/p)_4", vec![(One, 3, 0, 0, 0, N, Q), (One, 2, 1, 0, 0, N, Dis)]),
            ("n = δq1q2q3, all inert", vec![(Any, 0, 0, 3, 0, N, Q)]),
            ("n = q1q2q3q4, at most one split", vec![(One, 0, 0, 4, 0, N, Q), (One, 0, 0, 3, 1, N, Q)]),
            ("n = 2q1q2, some q inert", vec![(Two, 0, 0, 2, 0, N, Q), (Two, 0, 0, 1, 1, N, Q)]),
            ("n = δp1p2q, all inert", vec![(Any, 2, 0, 1, 0, N, Q)]),
            ("n = δpq, (p/l) != (q/l)", vec![(Any, 1, 0, 0, 1, N, Q), (Any, 0, 1, 1, 0, N, Q)]),
            ("n = p1p2q1q2, p's inert, at most one q split", vec![(One, 2, 0, 2, 0, N, Q), (One, 2, 0, 1, 1, N, Q)]),
            ("n = pq1q2, p split with at most one q split, or p inert with both q split", vec![
                (One, 0, 1, 2, 0, N, Q),
                (One, 0, 1, 1, 1, N, Q),
                (One, 1, 0, 0, 2, N, Q),
            ]),
        ],
        (true, 0) => vec![
            ("n = 1", vec![(One, 0, 0, 0, 0, N, Q)]),
            ("n = q", vec![(One, 0, 0, 1, 0, N, Q), (One, 0, 0, 0, 1, N, Q)]),
        ],
        (true, 1) => vec![
            ("n = p, (2/p) = -1 or (2/p)_4 != (p/2)_4", vec![(One, 1, 0, 0, 0, N, Q), (One, 0, 1, 0, 0, N, Dis)]),
            ("n = q1q2, some (2/q) = -1", vec![(One, 0, 0, 2, 0, N, Q), (One, 0, 0, 1, 1, N, Q)]),
            ("n = pq, (2/p) = -1", vec![(One, 1, 0, 1, 0, N, Q), (One, 1, 0, 0, 1, N, Q)]),
        ],
        (true, 2) => vec![
            ("n = p, (2/p) = 1, (2/p)_4 = (p/2)_4", vec![(One, 0, 1, 0, 0, N, Agree)]),
            ("n = p1p2, both (2/p) = -1 or one split with (2/p)_4 != (p/2)_4", vec![(One, 2, 0, 0, 0, N, Q), (One, 1, 1, 0, 0, N, Dis)]),
            ("n = q1q2, both (2/q) = 1", vec![(One, 0, 0, 0, 2, N, Q)]),
            ("n = q1q2q3, at most one (2/q) = 1", vec![(One, 0, 0, 3, 0, N, Q), (One, 0, 0, 2, 1, N, Q)]),
            ("n = p1p2q, both (2/p) = -1", vec![(One, 2, 0, 1, 0, N, Q), (One, 2, 0, 0, 1, N, Q)]),
            ("n = pq, (2/p) = 1", vec![(One, 0, 1, 1, 0, N, Q), (One, 0, 1, 0, 1, N, Q)]),
            ("n = pq1q2, (2/p) = -1, some (2/q) = -1", vec![(One, 1, 0, 2, 0, N, Q), (One, 1, 0, 1, 1, N, Q)]),
        ],
        (true, 3) => vec![
            ("n = p1p2, both split with some (2/p)_4 != (p/2)_4, or one split with (2/p)_4 = (p/2)_4", vec![
                (One, 0, 2, 0, 0, N, Dis),
                (One, 1, 1, 0, 0, N, Agree),
            ]),
            ("n = p1p2p3, all (2/p) = -1 or one split with (2/p)_4 != (p/2)_4", vec![(One, 3, 0, 0, 0, N, Q), (One, 2, 1, 0, 0, N, Dis)]),
            ("n = q1q2q3, exactly one (2/q) = -1", vec![(One, 0, 0, 1, 2, N, Q)]),
            ("n = q1q2q3q4, at most one (2/q) = 1", vec![(One, 0, 0, 4, 0, N, Q), (One, 0, 0, 3, 1, N, Q)]),
            ("n = p1p2p3q, all (2/p) = -1", vec![(One, 3, 0, 1, 0, N, Q), (One, 3, 0, 0, 1, N, Q)]),
            ("n = pq1q2q3, (2/p) = -1, at most one (2/q) = 1", vec![(One, 1, 0, 3, 0, N, Q), (One, 1, 0, 2, 1, N, Q)]),
            ("n = p1p2q1q2, both (2/p) = -1, some (2/q) = -1", vec![(One, 2, 0, 2, 0, N, Q), (One, 2, 0, 1, 1, N, Q)]),
            ("n = pq1q2, (2/p) = 1 with some (2/q) = -1, or (2/p) = -1 with both (2/q) = 1", vec![
                (One, 0, 1, 2, 0, N, Q),
                (One, 0, 1, 1, 1, N, Q),
                (One, 1, 0, 0, 2, N, Q),
            ]),
            ("n = p1p2q, (2/p1) != (2/p2)", vec![(One, 1, 1, 1, 0, N, Q), (One, 1, 1, 0, 1, N, Q)]),
        ],
        _ => vec![],
    };
    let family = if k.is_two() { "L2" } else { "L1" };
    items
        .iter()
        .enumerate()
        .map(|(i, (desc, rows))| descriptor(family, target_rank, i + 1, desc, rows))
        .collect()
}
