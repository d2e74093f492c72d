//! 2-rank of the class group of real cyclic quartic fields
//! `K = Q(sqrt(n·ε₀·sqrt(l)))` where `l = 2` or `l` is a prime `≡ 1 (mod 8)`.
//!
//! The rank is obtained from the ambiguous class number formula
//! `r₂(H) = μ + r* - 3`, computed along two independent routes: a table of
//! local norm residue symbols ([`rank::rank_generic`]) and the closed-form
//! case analysis ([`rank::rank_closed_form`]). The closed-form statements are
//! also inverted into shape descriptors ([`rank::classify_shapes`]).

pub mod arith;
pub mod basefield;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod quarticfield;
pub mod rank;

pub use basefield::{make_basefield, splitting_in_k, BaseField, SplittingKind};
pub use error::{Error, Result};
pub use quarticfield::{make_quarticfield, FactorizationShape, QuarticField, RamificationProfile};
pub use rank::{rank_closed_form, rank_generic, RankResult};
