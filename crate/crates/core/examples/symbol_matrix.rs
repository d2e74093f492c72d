//! Norm residue symbols of `-1`, `ε₀`, `-ε₀` at the ramified primes, before
//! and after the product-formula resolution.
//!
//! ```text
//! cargo run --example symbol_matrix -- <n> <l>
//! ```

use quartic_rank::rank::{r_star, symbol_matrix, Entry, Row, SymbolMatrix};
use quartic_rank::{make_basefield, make_quarticfield};

fn cell(e: Entry) -> &'static str {
    match e {
        Entry::Plus => "+1",
        Entry::Minus => "-1",
        Entry::OppositePair => "±",
        Entry::Unknown => "?",
    }
}

fn show(title: &str, m: &SymbolMatrix) {
    println!("{title}");
    let header: Vec<String> = m
        .columns
        .iter()
        .map(|c| format!("{}{}", c.prime, if c.conjugate == 1 { "'" } else { "" }))
        .collect();
    println!("  {:>5} {}", "", header.iter().map(|h| format!("{h:>6}")).collect::<String>());
    for row in Row::ALL {
        let cells: String = m.row(row).iter().map(|&e| format!("{:>6}", cell(e))).collect();
        println!("  {:>5} {cells}", row.name());
    }
}

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, l) = match args[..] {
        [n, l] => (n, l),
        _ => (83, 137),
    };
    let field = make_quarticfield(n, &make_basefield(l).unwrap()).unwrap();
    let m = symbol_matrix(&field).unwrap();
    show(&format!("n = {n}, l = {l}: local evaluations"), &m);
    show("after the product formula", &m.resolve());
    println!("r* = {}", r_star(&m).unwrap());
}
