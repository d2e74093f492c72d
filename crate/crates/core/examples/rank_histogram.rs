//! Distribution of ranks over all admissible `n` below a bound, computed in
//! parallel.
//!
//! ```text
//! cargo run --release --example rank_histogram -- <l> <n_max>
//! ```

use std::collections::BTreeMap;

use quartic_rank::cli::enumerate_rows;
use quartic_rank::make_basefield;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (l, n_max) = match args[..] {
        [l, n_max] => (l, n_max),
        _ => (2, 100_000),
    };
    let rows = enumerate_rows(&make_basefield(l).unwrap(), n_max, None).unwrap();
    let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
    for row in &rows {
        *hist.entry(row.rank).or_default() += 1;
    }
    println!("l = {l}, {} fields with n <= {n_max}", rows.len());
    for (rank, count) in hist {
        println!("rank {rank:>2}: {count:>7} ({:.2}%)", 100.0 * count as f64 / rows.len() as f64);
    }
}
