use cogrowth_core::arith::{
    density_scan, f_segment, f_sign, factorize, gauss_identity_check, is_prime, m_of_n, m_segment, qf_scan,
    GaussOutcome,
};
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn max_square_divisor(n: u64) -> u64 {
    (1..).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(d * d)).last().unwrap()
}

fn trial_division_is_prime(p: u128) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[test]
fn factorizations_reassemble() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n: u128 = rng.gen_range(1..=100_000_000_000_000);
        let f = factorize(n).unwrap();
        assert_eq!(f.product(), Some(n));
        for &(p, e) in &f.0 {
            assert!(e >= 1 && is_prime(p), "{n}: {p}");
        }
        assert!(f.0.windows(2).all(|w| w[0].0 < w[1].0));
    }
}

#[test]
fn primality_agrees_with_trial_division() {
    for n in 0..20_000u128 {
        assert_eq!(is_prime(n), trial_division_is_prime(n), "{n}");
    }
    assert!(is_prime((1 << 61) - 1));
    // Carmichael numbers and strong pseudoprimes to small bases.
    for n in [561u128, 41041, 825265, 2_152_302_898_747, 3_474_749_660_383, 341_550_071_728_321] {
        assert!(!is_prime(n), "{n}");
    }
}

#[test]
fn square_parts_match_direct_search() {
    let sieved = m_segment(1, 100_001);
    for n in 1..=100_000u64 {
        let want = max_square_divisor(n);
        assert_eq!(m_of_n(u128::from(n)).unwrap() as u64, want, "{n}");
        assert_eq!(u64::from(sieved[n as usize - 1]), want, "{n}");
    }
}

#[test]
fn f_matches_definition_and_sieve() {
    let sieved = f_segment(1, 20_001);
    for n in 1..=20_000u64 {
        let odd = n >> n.trailing_zeros();
        let want = if max_square_divisor(odd) % 4 == 1 { 1 } else { -1 };
        assert_eq!(f_sign(u128::from(n)).unwrap(), want, "{n}");
        assert_eq!(sieved[n as usize - 1], want, "{n}");
    }
}

#[test]
fn f_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000);
        if a.gcd(&b) != 1 {
            continue;
        }
        let fab = f_sign(u128::from(a) * u128::from(b)).unwrap();
        assert_eq!(fab, f_sign(u128::from(a)).unwrap() * f_sign(u128::from(b)).unwrap(), "{a} {b}");
        checked += 1;
    }
}

proptest! {
    #[test]
    fn square_part_scales(n in 1u64..100_000, k in 1u64..1_000) {
        let squarefree = max_square_divisor(n) == 1;
        prop_assume!(squarefree && n.gcd(&k) == 1);
        let nk = u128::from(n) * u128::from(k) * u128::from(k);
        prop_assert_eq!(m_of_n(nk).unwrap(), m_of_n(u128::from(n)).unwrap() * u128::from(k));
    }
}

#[test]
fn gauss_identity_holds() {
    assert_eq!(gauss_identity_check(100_000), GaussOutcome::Pass);
}

#[test]
fn density_small_values_by_factorization() {
    for x in [1u64, 10, 1000, 54_321] {
        let count = (1..=x).filter(|&n| m_of_n(u128::from(n)).unwrap() % 4 == 1).count() as u64;
        assert_eq!(density_scan(x).count, count, "X={x}");
    }
    assert_eq!(density_scan(10).density, 0.7);
    assert_eq!(density_scan(1).density, 1.0);
}

#[test]
fn density_near_limit() {
    // 3/8 + 3G/π² with G the Catalan constant.
    let catalan = 0.915_965_594_177_219_f64;
    let limit = 3.0 / 8.0 + 3.0 * catalan / (std::f64::consts::PI * std::f64::consts::PI);
    assert!((limit - 0.65342).abs() < 5e-6);
    let d = density_scan(10_000_000).density;
    assert!((d - 0.65342).abs() < 0.002, "{d}");
}

#[test]
fn qf_sums_are_monotone_and_bounded() {
    let limits = [2u64, 50, 1_000, 10_000, 100_000, 1_000_000, 10_000_000];
    let scans: Vec<_> = limits.iter().map(|&l| qf_scan(l)).collect();
    for w in scans.windows(2) {
        assert!(w[0].sum <= w[1].sum);
        assert!(w[1].members.starts_with(&w[0].members));
    }
    assert!(scans[5].sum_f64() < 0.25);
    for s in &scans {
        for &q in &s.members {
            assert_eq!(f_sign(u128::from(q)).unwrap(), -1);
            assert_eq!(factorize(u128::from(q)).unwrap().0.len(), 1);
        }
    }
    // Brute force over all prime powers below 10^4.
    let brute: Vec<u64> = (2..=10_000u64)
        .filter(|&q| factorize(u128::from(q)).unwrap().0.len() == 1 && f_sign(u128::from(q)).unwrap() == -1)
        .collect();
    assert_eq!(scans[3].members, brute);
}

#[test]
fn primes_three_mod_four_have_negative_squares() {
    for p in (3..1000u128).filter(|&p| p % 4 == 3 && is_prime(p)) {
        assert_eq!(f_sign(p * p).unwrap(), -1, "{p}");
    }
}
