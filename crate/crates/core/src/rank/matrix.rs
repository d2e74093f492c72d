//! Local norm residue symbols `(x, d / P)` for `x ∈ {-1, ε₀, -ε₀}` at the
//! primes `P` of `k` ramified in `K = k(sqrt(d))`, `d = n·ε₀·sqrt(l)`.
//!
//! Rows are first filled from explicit local evaluations. Entries with no
//! explicit value are left [`Entry::Unknown`] and then settled by the product
//! formula: `K` is totally real and every unramified symbol of a unit is
//! trivial, so the entries of one row multiply to `+1`.

use serde::{Deserialize, Serialize};

use crate::arith::{quartic_symbol, quartic_symbol_at_two, Sign};
use crate::error::{Error, Result};
use crate::quarticfield::{ramification_profile, PlaceKind, QuarticField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Entry {
    Plus,
    Minus,
    /// The two conjugate columns of a pair carry opposite signs; which one is
    /// `-1` depends on labelling.
    OppositePair,
    Unknown,
}

impl Entry {
    fn of(sign: Sign) -> Entry {
        match sign {
            Sign::Plus => Entry::Plus,
            Sign::Minus => Entry::Minus,
        }
    }
}

impl std::ops::Mul for Entry {
    type Output = Entry;

    fn mul(self, rhs: Entry) -> Entry {
        use Entry::*;
        match (self, rhs) {
            (Unknown, _) | (_, Unknown) | (OppositePair, OppositePair) => Unknown,
            (OppositePair, _) | (_, OppositePair) => OppositePair,
            (Plus, x) | (x, Plus) => x,
            (Minus, Minus) => Plus,
        }
    }
}

/// One prime ideal of `k`. A pair place gives two columns, `conjugate` 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub kind: PlaceKind,
    pub prime: u64,
    pub conjugate: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolMatrix {
    pub columns: Vec<Column>,
    pub row_minus1: Vec<Entry>,
    pub row_eps: Vec<Entry>,
    pub row_minus_eps: Vec<Entry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Row {
    MinusOne,
    Eps,
    MinusEps,
}

impl Row {
    pub const ALL: [Row; 3] = [Row::MinusOne, Row::Eps, Row::MinusEps];

    pub fn name(self) -> &'static str {
        match self {
            Row::MinusOne => "-1",
            Row::Eps => "eps",
            Row::MinusEps => "-eps",
        }
    }
}

impl SymbolMatrix {
    pub fn row(&self, row: Row) -> &[Entry] {
        match row {
            Row::MinusOne => &self.row_minus1,
            Row::Eps => &self.row_eps,
            Row::MinusEps => &self.row_minus_eps,
        }
    }

    /// Column index ranges, one per place.
    fn places(&self) -> Vec<std::ops::Range<usize>> {
        let mut out: Vec<std::ops::Range<usize>> = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            match out.last_mut() {
                Some(r) if c.conjugate == 1 => r.end = i + 1,
                _ => out.push(i..i + 1),
            }
        }
        out
    }

    /// Product of a row over all columns, or `None` while an entry is unknown.
    pub fn row_product(&self, row: Row) -> Option<Sign> {
        let entries = self.row(row);
        let mut acc = Sign::Plus;
        for r in self.places() {
            acc = acc * place_product(&entries[r])?;
        }
        Some(acc)
    }

    pub fn has_unknown(&self) -> bool {
        self.row_minus1
            .iter()
            .chain(&self.row_eps)
            .chain(&self.row_minus_eps)
            .any(|&e| e == Entry::Unknown)
    }

    /// Settles unknown entries with the product formula and recomputes the
    /// `-ε₀` row. A pair whose product is forced to `-1` becomes
    /// [`Entry::OppositePair`]; a forced `+1` on a pair stays unknown.
    pub fn resolve(&self) -> SymbolMatrix {
        let places = self.places();
        let fill = |entries: &[Entry]| {
            let mut out = entries.to_vec();
            let unknown: Vec<_> = places
                .iter()
                .filter(|r| entries[r.start..r.end].contains(&Entry::Unknown))
                .collect();
            if let [r] = unknown.as_slice() {
                let rest = places
                    .iter()
                    .filter(|q| q.start != r.start)
                    .try_fold(Sign::Plus, |acc, q| Some(acc * place_product(&entries[q.clone()])?));
                if let Some(needed) = rest {
                    match (r.len(), needed) {
                        (1, s) => out[r.start] = Entry::of(s),
                        (_, Sign::Minus) => out[r.start..r.end].fill(Entry::OppositePair),
                        _ => {}
                    }
                }
            }
            out
        };
        let row_minus1 = fill(&self.row_minus1);
        let row_eps = fill(&self.row_eps);
        let row_minus_eps = row_minus1.iter().zip(&row_eps).map(|(&a, &b)| a * b).collect();
        SymbolMatrix {
            columns: self.columns.clone(),
            row_minus1,
            row_eps,
            row_minus_eps,
        }
    }
}

fn place_product(entries: &[Entry]) -> Option<Sign> {
    if entries.iter().all(|&e| e == Entry::OppositePair) && entries.len() == 2 {
        return Some(Sign::Minus);
    }
    entries.iter().try_fold(Sign::Plus, |acc, &e| match e {
        Entry::Plus => Some(acc),
        Entry::Minus => Some(-acc),
        _ => None,
    })
}

/// `(ε₀, d)` at a prime of `k` above a split `p ≡ 1 (mod 4)`.
pub(crate) fn split_p_sign(p: u64, l: u64) -> Result<Sign> {
    if l == 2 {
        Ok(quartic_symbol(2, p)? * quartic_symbol_at_two(p)?)
    } else {
        Ok(quartic_symbol(p as i64, l)? * quartic_symbol(l as i64, p)?)
    }
}

/// Raw matrix from explicit local evaluations, before resolution.
pub fn symbol_matrix(field: &QuarticField) -> Result<SymbolMatrix> {
    let profile = ramification_profile(field);
    let l = field.l();
    let s = field.shape.s();
    let s_sign = Sign::from_parity(s % 2 == 1);
    let mut m = SymbolMatrix {
        columns: Vec::new(),
        row_minus1: Vec::new(),
        row_eps: Vec::new(),
        row_minus_eps: Vec::new(),
    };
    for place in &profile.places {
        let (minus1, eps) = match place.kind {
            PlaceKind::SqrtL if l == 2 && s % 2 == 1 => (Entry::Plus, Entry::Unknown),
            PlaceKind::SqrtL => (Entry::Plus, Entry::Plus),
            PlaceKind::TwoAdicPair => {
                let eps = match (field.shape.is_even(), s % 2) {
                    (true, 0) => Entry::of(field.k.two_adic_sign().expect("l ≡ 1 (mod 8)")),
                    _ => Entry::Unknown,
                };
                (Entry::of(s_sign), eps)
            }
            PlaceKind::InertPrime if place.prime % 4 == 1 => (Entry::Plus, Entry::Plus),
            PlaceKind::InertPrime => (Entry::Plus, Entry::Minus),
            PlaceKind::SplitPair if place.prime % 4 == 1 => {
                (Entry::Plus, Entry::of(split_p_sign(place.prime, l)?))
            }
            PlaceKind::SplitPair => (Entry::Minus, Entry::OppositePair),
        };
        for conjugate in 0..place.kind.width() as u8 {
            m.columns.push(Column {
                kind: place.kind,
                prime: place.prime,
                conjugate,
            });
            m.row_minus1.push(minus1);
            m.row_eps.push(eps);
            m.row_minus_eps.push(minus1 * eps);
        }
    }
    Ok(m)
}

/// `r*`: how many of `-1`, `ε₀`, `-ε₀` are norms from `K`, as the
/// `F_2`-dimension of the group they span with the squares.
pub fn r_star(m: &SymbolMatrix) -> Result<u8> {
    let m = m.resolve();
    let is_norm = |row: Row| -> Result<bool> {
        let entries = m.row(row);
        if entries.iter().all(|&e| e == Entry::Plus) {
            return Ok(true);
        }
        let blocked = entries
            .iter()
            .any(|&e| e == Entry::Minus || e == Entry::OppositePair);
        if !blocked {
            return Err(Error::UnresolvedSymbol { row: row.name() });
        }
        Ok(false)
    };
    let minus1 = is_norm(Row::MinusOne)?;
    let eps = is_norm(Row::Eps)?;
    let minus_eps = is_norm(Row::MinusEps)?;
    Ok(match (minus1, eps, minus_eps) {
        (true, true, _) => 2,
        (false, false, false) => 0,
        _ => 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basefield::make_basefield;
    use crate::quarticfield::make_quarticfield;

    fn matrix(n: u64, l: u64) -> SymbolMatrix {
        symbol_matrix(&make_quarticfield(n, &make_basefield(l).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn trivial_n() {
        let m = matrix(1, 17);
        assert_eq!(m.columns.len(), 1);
        assert_eq!(m.row_minus1, vec![Entry::Plus]);
        assert_eq!(m.row_eps, vec![Entry::Plus]);
        assert_eq!(r_star(&m), Ok(2));
        assert_eq!(r_star(&matrix(1, 257)), Ok(2));
    }

    #[test]
    fn two_adic_sign_at_1913() {
        let m = matrix(2, 1913);
        assert_eq!(m.columns[1].kind, PlaceKind::TwoAdicPair);
        assert_eq!(m.row_eps[1..], [Entry::Minus, Entry::Minus]);
        assert_eq!(r_star(&m), Ok(1));
    }

    #[test]
    fn inert_q_blocks_eps() {
        let m = matrix(83, 137);
        let q = m.columns.iter().position(|c| c.prime == 83).unwrap();
        assert_eq!(m.row_eps[q], Entry::Minus);
        assert_eq!(r_star(&m), Ok(0));
    }

    #[test]
    fn inert_p_is_neutral() {
        assert_eq!(r_star(&matrix(89, 41)), Ok(2));
    }

    #[test]
    fn unknown_two_adic_pair_resolves_to_opposite() {
        // δ = 1, one q: the 2-adic ε₀ pair must multiply to -1
        let m = matrix(83, 137);
        assert!(m.has_unknown());
        let r = m.resolve();
        assert!(!r.has_unknown());
        assert_eq!(r.row_eps[1..3], [Entry::OppositePair, Entry::OppositePair]);
        for row in Row::ALL {
            assert_eq!(r.row_product(row), Some(Sign::Plus));
        }
    }

    #[test]
    fn sqrt_two_column_resolves_to_exact_sign() {
        let m = matrix(59, 2);
        assert_eq!(m.row_eps[0], Entry::Unknown);
        assert_eq!(m.resolve().row_eps[0], Entry::Minus);
        assert_eq!(r_star(&m), Ok(1));
    }

    #[test]
    fn split_q_is_opposite_pair() {
        let m = matrix(79, 97);
        let cols: Vec<_> = m.columns.iter().filter(|c| c.prime == 79).collect();
        assert_eq!(cols.len(), 2);
        assert_eq!(m.row_minus1[3..5], [Entry::Minus, Entry::Minus]);
        assert_eq!(m.row_eps[3..5], [Entry::OppositePair, Entry::OppositePair]);
        assert_eq!(m.row_minus_eps[3..5], [Entry::OppositePair, Entry::OppositePair]);
    }

    #[test]
    fn entry_algebra() {
        assert_eq!(Entry::Minus * Entry::OppositePair, Entry::OppositePair);
        assert_eq!(Entry::Minus * Entry::Minus, Entry::Plus);
        assert_eq!(Entry::OppositePair * Entry::OppositePair, Entry::Unknown);
        assert_eq!(Entry::Plus * Entry::Unknown, Entry::Unknown);
    }

    #[test]
    fn unresolvable_row_is_an_error() {
        let m = SymbolMatrix {
            columns: vec![
                Column { kind: PlaceKind::SqrtL, prime: 17, conjugate: 0 },
                Column { kind: PlaceKind::TwoAdicPair, prime: 2, conjugate: 0 },
                Column { kind: PlaceKind::TwoAdicPair, prime: 2, conjugate: 1 },
            ],
            row_minus1: vec![Entry::Plus; 3],
            row_eps: vec![Entry::Plus, Entry::Unknown, Entry::Unknown],
            row_minus_eps: vec![Entry::Plus, Entry::Unknown, Entry::Unknown],
        };
        assert_eq!(r_star(&m), Err(Error::UnresolvedSymbol { row: "eps" }));
    }
}
