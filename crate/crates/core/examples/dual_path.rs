//! Compares the symbol-matrix rank with the closed-form rank for every
//! admissible `n` up to a bound and tallies the closed-form branches hit.
//!
//! ```text
//! cargo run --release --example dual_path -- <l> <n_max>
//! ```

use std::collections::BTreeMap;

use quartic_rank::cli::admissible_n;
use quartic_rank::{make_basefield, make_quarticfield, rank_closed_form, rank_generic};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (l, n_max) = match args[..] {
        [l, n_max] => (l, n_max),
        _ => (41, 5000),
    };
    let k = make_basefield(l).unwrap();
    let mut branches: BTreeMap<String, usize> = BTreeMap::new();
    let mut disagreements = 0;
    for n in admissible_n(&k, n_max) {
        let field = make_quarticfield(n, &k).unwrap();
        let g = rank_generic(&field).unwrap();
        let c = rank_closed_form(&field).unwrap();
        if g.rank != c.rank {
            disagreements += 1;
            println!("n = {n}: generic {} closed {} ({})", g.rank, c.rank, c.case_id);
        }
        *branches.entry(c.case_id).or_default() += 1;
    }
    for (case_id, count) in &branches {
        println!("{case_id:<36} {count:>6}");
    }
    println!("disagreements: {disagreements}");
}
