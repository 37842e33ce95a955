//! Cross-module invariants: the digit-function biconditional, Euler
//! consistency, the Lemma-2 identity between interval counts and class
//! numbers, representative independence of aggregated tables, and the
//! multiset partition of the residue set.

use digitfreq::classnum::{class_number_forms, field_class_number, Method};
use digitfreq::expansion::{
    aggregate_frequencies, coset_representatives, digit_frequencies, period_digits,
    smallest_member_representatives,
};
use digitfreq::modular::{
    legendre_symbol, mod_pow, qr_table, residue_interval_counts, theta, PrimeProfile,
};
use digitfreq::primes::primes_in_range;
use digitfreq::theorems::{delta_lemma2, delta_theorem1, delta_theorem2};
use proptest::prelude::*;

/// theta_b(l) = k holds iff kp < bl < (k+1)p, for every l, exhaustively.
#[test]
fn digit_function_biconditional_small() {
    for p in primes_in_range(2, 400) {
        if p == 2 {
            continue;
        }
        for b in 2..=16u64 {
            if b % p == 0 {
                continue;
            }
            for l in 1..p {
                let digit = theta(b, p, l as i64).unwrap();
                for k in 0..b {
                    let inside = k * p < b * l && b * l < (k + 1) * p;
                    assert_eq!(digit == k, inside, "p={p} b={b} l={l} k={k}");
                    assert_ne!(b * l, k * p, "no boundary degeneracy");
                }
            }
        }
    }
}

/// Legendre symbol equals Euler's criterion for all p <= 1000.
#[test]
fn euler_consistency_to_1000() {
    for p in primes_in_range(3, 1001) {
        for a in 0..p {
            let sym = legendre_symbol(a as i64, p);
            let e = mod_pow(a, (p - 1) / 2, p);
            let expected = if a == 0 {
                0
            } else if e == 1 {
                1
            } else {
                -1
            };
            assert_eq!(sym, expected, "a={a} p={p}");
        }
    }
}

/// The long-division digits equal theta applied to an independently
/// maintained power chain m * b^(j-1) mod p: all m for p <= 1000, a spread
/// of numerators up to 2000.
#[test]
fn long_division_equals_theta_chain() {
    for p in primes_in_range(3, 2000) {
        for base in [8u64, 10] {
            if base % p == 0 {
                continue;
            }
            let numerators: Vec<u64> = if p <= 1000 {
                (1..p).collect()
            } else {
                vec![1, 2, 3, p - 2, p - 1]
            };
            for m in numerators {
                let period = period_digits(m, p, base).unwrap();
                let mut power = m;
                for &d in &period.digits {
                    assert_eq!(theta(base, p, power as i64).unwrap(), d as u64);
                    power = power * base % p;
                }
                assert_eq!(power, m, "chain returns to m after one period");
            }
        }
    }
}

/// Lemma-2 identity: the delta vector computed from class numbers equals
/// q_count - n_count of the residue interval counts, for every
/// p = 3 mod 4 below 10^4 regardless of the order of 10.
#[test]
fn lemma2_deltas_equal_interval_counts() {
    for p in primes_in_range(11, 10_000) {
        if p % 4 != 3 {
            continue;
        }
        let h1 = field_class_number(p, Method::Forms).unwrap().h;
        let h2 = field_class_number(5 * p, Method::Forms).unwrap().h;
        let delta = delta_lemma2(p, h1, h2).unwrap().assert_integral().unwrap();
        let counts = residue_interval_counts(p, 10).unwrap();
        for k in 0..5 {
            assert_eq!(
                delta[k],
                counts.q_counts[k] as i64 - counts.n_counts[k] as i64,
                "p={p} k={k}"
            );
        }
    }
}

/// The specialized tables agree with the master formula on every prime
/// below 10^4, in the branch chi(10) selects.
#[test]
fn specialized_tables_match_master_formula() {
    for p in primes_in_range(7, 10_000) {
        if p % 4 != 3 || p % 5 == 0 {
            continue;
        }
        let h1 = field_class_number(p, Method::Forms).unwrap().h;
        let h2 = field_class_number(5 * p, Method::Forms).unwrap().h;
        let master = delta_lemma2(p, h1, h2).unwrap().values;
        if legendre_symbol(10, p) == 1 {
            assert_eq!(delta_theorem1(p, h1, h2).unwrap().values, master, "p={p}");
        } else {
            assert_eq!(delta_theorem2(p, h1, h2).unwrap().values, master, "p={p}");
        }
    }
}

/// The aggregated table is independent of the representative system:
/// primitive-root powers, smallest member per coset, and a shifted system
/// all give the same counts.
#[test]
fn aggregate_is_representative_independent() {
    let aggregate_with = |p: u64, reps: &[u64]| -> Vec<u64> {
        let mut counts = vec![0u64; 10];
        for &m in reps {
            for &d in &period_digits(m, p, 10).unwrap().digits {
                counts[d as usize] += 1;
            }
        }
        counts
    };
    let mut applicable = 0;
    for p in primes_in_range(7, 2000) {
        if p % 4 != 3 || p % 5 == 0 {
            continue;
        }
        let profile = PrimeProfile::new(p, 10).unwrap();
        if !profile.base_is_qr {
            continue;
        }
        let canonical = coset_representatives(p, 10).unwrap();
        let smallest = smallest_member_representatives(p, 10).unwrap();
        assert_eq!(canonical.len(), smallest.len(), "p={p}");
        let reference = aggregate_frequencies(p, 10).unwrap().counts;
        assert_eq!(aggregate_with(p, &canonical), reference, "p={p} canonical");
        assert_eq!(aggregate_with(p, &smallest), reference, "p={p} smallest");
        // shift each representative by a different power of 10
        let shifted: Vec<u64> = canonical
            .iter()
            .enumerate()
            .map(|(i, &r)| r * mod_pow(10, 1 + i as u64, p) % p)
            .collect();
        assert_eq!(aggregate_with(p, &shifted), reference, "p={p} shifted");
        applicable += 1;
    }
    assert!(applicable > 50, "only {applicable} applicable primes");
}

/// The numbers m * 10^(j-1) mod p, over one period per representative,
/// run through the residue set Q exactly once each.
#[test]
fn representative_orbits_partition_residues() {
    for p in primes_in_range(7, 2000) {
        if p % 4 != 3 || p % 5 == 0 {
            continue;
        }
        let profile = PrimeProfile::new(p, 10).unwrap();
        if !profile.base_is_qr {
            continue;
        }
        let mut hits = vec![0u32; p as usize];
        for m in coset_representatives(p, 10).unwrap() {
            let mut x = m;
            for _ in 0..profile.order_of_base {
                hits[x as usize] += 1;
                x = x * 10 % p;
            }
        }
        let qr = qr_table(p);
        for l in 1..p as usize {
            assert_eq!(hits[l], u32::from(qr[l]), "p={p} l={l}");
        }
    }
}

/// Class numbers h(-p) are odd for every p = 3 mod 4 up to 10^4.
#[test]
fn h_of_minus_p_is_odd_to_10000() {
    for p in primes_in_range(7, 10_000) {
        if p % 4 != 3 {
            continue;
        }
        let h = class_number_forms(-(p as i64)).unwrap();
        assert_eq!(h % 2, 1, "h(-{p}) = {h} must be odd");
    }
}

fn odd_primes_to(limit: u64) -> Vec<u64> {
    primes_in_range(3, limit)
}

proptest! {
    /// Legendre symbols are completely multiplicative in the top argument.
    #[test]
    fn legendre_multiplicative(
        p in prop::sample::select(odd_primes_to(500)),
        a in 1i64..10_000,
        b in 1i64..10_000,
    ) {
        prop_assert_eq!(
            legendre_symbol(a * b, p),
            legendre_symbol(a, p) * legendre_symbol(b, p)
        );
    }

    /// One period has length ord_p(b) and its frequency table counts every
    /// position exactly once.
    #[test]
    fn period_length_is_order(
        p in prop::sample::select(odd_primes_to(3000)),
        m_seed in 1u64..u64::MAX,
        base in prop::sample::select(vec![8u64, 10]),
    ) {
        prop_assume!(base % p != 0);
        let m = 1 + m_seed % (p - 1);
        let period = period_digits(m, p, base).unwrap();
        let order = digitfreq::modular::multiplicative_order(base, p).unwrap();
        prop_assert_eq!(period.digits.len() as u64, order);
        prop_assert_eq!(digit_frequencies(&period).total() as usize, period.digits.len());
    }

    /// The remainder sequence returns to m at the period length and never
    /// before (pure periodicity).
    #[test]
    fn remainder_sequence_returns_exactly_once(
        p in prop::sample::select(odd_primes_to(2000)),
        m_seed in 1u64..u64::MAX,
    ) {
        prop_assume!(p % 5 != 0);
        let m = 1 + m_seed % (p - 1);
        let period = period_digits(m, p, 10).unwrap();
        let mut r = m;
        for (j, _) in period.digits.iter().enumerate() {
            r = r * 10 % p;
            if j + 1 < period.digits.len() {
                prop_assert_ne!(r, m, "early return at step {}", j + 1);
            }
        }
        prop_assert_eq!(r, m);
    }
}
