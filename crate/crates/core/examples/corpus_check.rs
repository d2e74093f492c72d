//! Runs both rank computations over the bundled worked examples.
//!
//! ```text
//! cargo run --example corpus_check
//! ```

use quartic_rank::corpus::{load_corpus, verify_corpus};
use quartic_rank::{make_basefield, make_quarticfield, rank_generic};

fn main() {
    let corpus = load_corpus();
    for e in &corpus {
        let field = make_quarticfield(e.n(), &make_basefield(e.l).unwrap()).unwrap();
        let r = rank_generic(&field).unwrap();
        let n = match e.n_factors.len() {
            0 => "1".to_string(),
            _ => e.n_factors.iter().map(u64::to_string).collect::<Vec<_>>().join("·"),
        };
        println!("{n:>14} | {:>4} | {:<9} | rank {} | {}", e.l, e.quoted_type, r.rank, r.case_id);
    }
    let report = verify_corpus(&corpus, None);
    println!("{} entries, {} failures", report.checked, report.failures.len());
}
