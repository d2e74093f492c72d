//! Data of `k = Q(sqrt(l))` for a few admissible `l`: fundamental unit,
//! `l = b² + c²` and the 2-adic sign `E = (2/l)₄·(-1)^((l-1)/8)`.
//!
//! ```text
//! cargo run --example base_field -- 17 41 1913
//! ```

use quartic_rank::arith::unit_congruence_check;
use quartic_rank::make_basefield;

fn main() {
    let ls: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ls = if ls.is_empty() { vec![2, 17, 41, 73, 89, 97, 1753, 1889, 1913] } else { ls };
    for l in ls {
        match make_basefield(l) {
            Ok(k) => {
                let e = k.two_adic_sign().map_or("-".to_string(), |s| s.to_string());
                let congruence = if k.is_two() { "-".to_string() } else { unit_congruence_check(l).unwrap().to_string() };
                println!(
                    "l = {l:>5}  eps0 = {} + {}·sqrt(l)  b = {:>3}  c = {:>3}  E = {e}  eps0·sqrt(l) ≡ 1 (mod 4): {congruence}",
                    k.unit.u, k.unit.v, k.squares.b, k.squares.c
                );
            }
            Err(e) => println!("l = {l:>5}  rejected: {e}"),
        }
    }
}
