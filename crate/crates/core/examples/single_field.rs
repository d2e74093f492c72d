//! Canonical form, conductor and ramified primes of one field.
//!
//! ```text
//! cargo run --example single_field -- <n> <l>
//! ```

use quartic_rank::quarticfield::{hasse_product, ramification_profile, reality_check};
use quartic_rank::{make_basefield, make_quarticfield, rank_generic};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, l) = match args[..] {
        [n, l] => (n, l),
        _ => (2 * 71 * 83, 97),
    };
    let k = make_basefield(l).expect("admissible l");
    let field = make_quarticfield(n, &k).expect("admissible n");
    let sh = &field.shape;
    println!("K = Q(sqrt({n}·eps0·sqrt({l})))  factors {:?}", field.factors);
    println!("  = Q(sqrt({}·({l} + {}·sqrt({l}))))", field.a, field.b_used);
    println!("conductor 2^{}·{}·{l} = {}", field.e, field.a, field.conductor);
    println!("Hasse product {}  real: {}", hasse_product(&field), reality_check(&field));
    println!(
        "p split {:?}  p inert {:?}  q split {:?}  q inert {:?}",
        sh.ones_split, sh.ones_inert, sh.threes_split, sh.threes_inert
    );
    let profile = ramification_profile(&field);
    for place in &profile.places {
        println!("  ramified: {:?} over {}", place.kind, place.prime);
    }
    let r = rank_generic(&field).unwrap();
    println!("mu = {}  r* = {}  rank = {}  ({})", r.mu, r.r_star, r.rank, r.case_id);
}
