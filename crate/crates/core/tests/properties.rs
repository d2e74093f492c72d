use proptest::prelude::*;

use quartic_rank::arith::{factor_squarefree, is_prime, is_squarefree, jacobi, legendre, quartic_symbol, Sign};
use quartic_rank::quarticfield::{ramification_profile, reality_check};
use quartic_rank::rank::{classify_shapes, r_star, symbol_matrix, Entry, Row};
use quartic_rank::{make_basefield, make_quarticfield, rank_closed_form, rank_generic, QuarticField};

fn l_values() -> Vec<u64> {
    std::iter::once(2)
        .chain((9..3000).step_by(8).filter(|&l| is_prime(l)))
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn field_strategy(n_max: u64) -> impl Strategy<Value = QuarticField> {
    (prop::sample::select(l_values()), 1..=n_max)
        .prop_filter("admissible n", |&(l, n)| gcd(n, l) == 1 && is_squarefree(n))
        .prop_map(|(l, n)| make_quarticfield(n, &make_basefield(l).unwrap()).unwrap())
}

fn has_sqrt(a: u64, p: u64) -> bool {
    (0..p).any(|x| x * x % p == a % p)
}

/// Ramified primes of `k` counted from scratch: `sqrt(l)`, both primes above
/// 2 when `n` is even or `n ≡ 3 (mod 4)`, and one or two primes above each odd
/// `p | n` by brute-force square roots of `l`.
fn mu_oracle(n: u64, l: u64) -> usize {
    let mut mu = 1;
    if l != 2 && (n % 2 == 0 || n % 4 == 3) {
        mu += 2;
    }
    for p in (3..=n).filter(|&p| n % p == 0 && is_prime(p)) {
        mu += if has_sqrt(l, p) { 2 } else { 1 };
    }
    mu
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn paths_agree_beyond_the_sweep(field in field_strategy(200_000)) {
        let g = rank_generic(&field).unwrap();
        let c = rank_closed_form(&field).unwrap();
        prop_assert_eq!(g.rank, c.rank, "n = {}, l = {}, {}", field.n, field.l(), c.case_id);
        prop_assert_eq!(g.mu, c.mu);
        prop_assert_eq!(g.r_star, c.r_star);
        prop_assert!(g.r_star <= 2);
        prop_assert_eq!(g.rank as usize, g.mu + g.r_star as usize - 3);
    }

    #[test]
    fn mu_matches_oracle(field in field_strategy(20_000)) {
        prop_assert_eq!(ramification_profile(&field).mu, mu_oracle(field.n, field.l()));
    }

    #[test]
    fn symbol_rows_multiply_to_one(field in field_strategy(200_000)) {
        let raw = symbol_matrix(&field).unwrap();
        for row in Row::ALL {
            if let Some(p) = raw.row_product(row) {
                prop_assert_eq!(p, Sign::Plus, "raw {:?} row, n = {}, l = {}", row, field.n, field.l());
            }
        }
        let resolved = raw.resolve();
        prop_assert!(!resolved.has_unknown());
        for row in Row::ALL {
            prop_assert_eq!(resolved.row_product(row), Some(Sign::Plus));
        }
        for ((&a, &b), &c) in raw.row_minus1.iter().zip(&raw.row_eps).zip(&raw.row_minus_eps) {
            prop_assert_eq!(a * b, c);
        }
    }

    #[test]
    fn unknown_entries_never_decide(field in field_strategy(200_000)) {
        let raw = symbol_matrix(&field).unwrap();
        for row in Row::ALL {
            let entries = raw.row(row);
            if entries.contains(&Entry::Unknown) {
                prop_assert!(entries.iter().any(|&e| e == Entry::Minus || e == Entry::OppositePair));
            }
        }
        prop_assert!(r_star(&raw).is_ok());
    }

    #[test]
    fn fields_are_real(field in field_strategy(200_000)) {
        prop_assert!(reality_check(&field));
    }

    #[test]
    fn exactly_one_rank_class_matches(field in field_strategy(5_000)) {
        let rank = rank_generic(&field).unwrap().rank;
        for r in 0..=3u8 {
            let hit = classify_shapes(&field.k, r).iter().any(|d| d.matches(&field).unwrap());
            prop_assert_eq!(hit, rank == r as u32, "n = {}, l = {}, r = {}", field.n, field.l(), r);
        }
    }

    #[test]
    fn rank_zero_characterisation(field in field_strategy(5_000)) {
        let zero = rank_generic(&field).unwrap().rank == 0;
        let expected = field.n == 1 || (field.l() == 2 && field.n % 4 == 3 && is_prime(field.n));
        prop_assert_eq!(zero, expected);
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..10_000_000) {
        match factor_squarefree(n) {
            Ok(f) => {
                prop_assert_eq!(f.iter().product::<u64>(), n);
                prop_assert!(f.iter().all(|&p| is_prime(p)));
                prop_assert!(f.windows(2).all(|w| w[0] < w[1]));
            }
            Err(_) => prop_assert!((2..=n).take_while(|d| d * d <= n).any(|d| n % (d * d) == 0)),
        }
    }

    #[test]
    fn jacobi_is_multiplicative(a in -500i64..500, m1 in (0u64..300).prop_map(|x| 2 * x + 1), m2 in (0u64..300).prop_map(|x| 2 * x + 1)) {
        prop_assert_eq!(jacobi(a, m1 * m2).unwrap(), jacobi(a, m1).unwrap() * jacobi(a, m2).unwrap());
    }

    #[test]
    fn quartic_symbol_is_multiplicative(p in prop::sample::select((5..3000u64).filter(|&p| p % 4 == 1 && is_prime(p)).collect::<Vec<_>>()), x in 1u64..100_000, y in 1u64..100_000) {
        prop_assume!(x % p != 0 && y % p != 0);
        let (a, b) = ((x * x % p) as i64, (y * y % p) as i64);
        prop_assert_eq!(legendre(a, p).unwrap(), 1);
        prop_assert_eq!(
            quartic_symbol(a * b, p).unwrap(),
            quartic_symbol(a, p).unwrap() * quartic_symbol(b, p).unwrap()
        );
    }
}
