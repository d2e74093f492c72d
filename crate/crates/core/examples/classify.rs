//! Shape descriptors for a target rank and the smallest `n` matching each.
//!
//! ```text
//! cargo run --example classify -- <l> <rank>
//! ```

use quartic_rank::cli::admissible_n;
use quartic_rank::rank::classify_shapes;
use quartic_rank::{make_basefield, make_quarticfield};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (l, rank) = match args[..] {
        [l, rank] => (l, rank as u8),
        _ => (17, 3),
    };
    let k = make_basefield(l).unwrap();
    let fields: Vec<_> = admissible_n(&k, 20_000)
        .into_iter()
        .map(|n| make_quarticfield(n, &k).unwrap())
        .collect();
    for d in classify_shapes(&k, rank) {
        let first: Vec<_> = fields
            .iter()
            .filter(|f| d.matches(f).unwrap())
            .take(4)
            .map(|f| f.factors.iter().map(u64::to_string).collect::<Vec<_>>().join("·"))
            .collect();
        println!("{:<9} {}\n          e.g. {}", d.id, d.description, first.join(", "));
    }
}
