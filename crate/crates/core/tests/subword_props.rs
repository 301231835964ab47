use cogrowth_core::arith::{f_segment, odd_part_residue_sign};
use cogrowth_core::subword::{
    complexity_profile, crt_witness, decode, saturation_scan, signs_from_bits, verify_certificate, Construction,
    WitnessOptions,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_window_bounds(p: &[u64]) {
    for w in p.windows(2) {
        assert!(w[0] <= w[1] && w[1] <= 2 * w[0], "{p:?}");
    }
}

fn catalan_parity(len: usize) -> Vec<bool> {
    (0..len).map(|n| (n + 1).is_power_of_two()).collect()
}

#[test]
fn catalan_parity_rule_matches_convolution() {
    let n = 600;
    let mut c = vec![true];
    for k in 0..n - 1 {
        let odd = (0..=k).filter(|&i| c[i] && c[k - i]).count() % 2 == 1;
        c.push(odd);
    }
    assert_eq!(c, catalan_parity(n));
}

#[test]
fn catalan_mod_two_has_low_complexity() {
    let seq = signs_from_bits(&catalan_parity(100_000));
    let p = complexity_profile(&seq, 12).unwrap();
    assert_window_bounds(&p);
    assert!(p[7] < 100, "{p:?}");
    let distinct: std::collections::BTreeSet<&[i8]> = seq.windows(8).collect();
    assert_eq!(p[7], distinct.len() as u64);
    assert_eq!(p[7], 13);
}

#[test]
fn f_and_contrast_profiles() {
    let f = f_segment(1, 1_000_001);
    let p = complexity_profile(&f, 16).unwrap();
    assert_window_bounds(&p);
    assert_eq!(&p[..4], &[2, 4, 8, 16]);
    let contrast: Vec<i8> = (1..=1_000_000u128).map(odd_part_residue_sign).collect();
    let q = complexity_profile(&contrast, 16).unwrap();
    assert_window_bounds(&q);
    assert!(q[15] < p[15]);
}

#[test]
fn periodic_sequences_stabilise() {
    let pattern = [1i8, 1, -1, 1, -1, -1, -1];
    let seq: Vec<i8> = pattern.iter().copied().cycle().take(5_000).collect();
    let p = complexity_profile(&seq, 20).unwrap();
    assert_window_bounds(&p);
    assert!(p[6..].iter().all(|&v| v == pattern.len() as u64), "{p:?}");
}

proptest! {
    #[test]
    fn random_sequences_respect_window_bounds(bits in prop::collection::vec(any::<bool>(), 24..400)) {
        // In a finite word only the final window can fail to extend, so
        // p(n+1) >= p(n) - 1 is the sharp lower bound.
        let p = complexity_profile(&signs_from_bits(&bits), 12).unwrap();
        for w in p.windows(2) {
            prop_assert!(w[0] <= w[1] + 1 && w[1] <= 2 * w[0]);
        }
    }
}

#[test]
fn saturation_grows_with_the_window() {
    for n in [3usize, 5, 6] {
        let mut last = 0;
        for x in [10u64, 100, 1_000, 100_000, 1_000_000] {
            let s = saturation_scan(n, x).unwrap();
            assert!(s.count() >= last);
            last = s.count();
        }
    }
}

#[test]
fn scan_matches_direct_windows() {
    let f = f_segment(1, 50_001);
    for n in 1..=6 {
        let s = saturation_scan(n, 50_000).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for w in f.windows(n) {
            seen.insert(w.to_vec());
        }
        assert_eq!(s.count() as usize, seen.len());
        for code in s.missing() {
            assert!(!seen.contains(&decode(code, n)));
        }
    }
}

#[test]
fn random_blocks_receive_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = WitnessOptions::default();
    for _ in 0..100 {
        let block: Vec<i8> = (0..6).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        let cert = crt_witness(&block, &opts).unwrap();
        assert!(verify_certificate(&cert).unwrap(), "{block:?}");
    }
}

#[test]
fn forced_construction_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let opts = WitnessOptions {
        force_crt: true,
        ..WitnessOptions::default()
    };
    for _ in 0..10 {
        let block: Vec<i8> = (0..5).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        let cert = crt_witness(&block, &opts).unwrap();
        assert!(matches!(cert.trace, Construction::Crt(_)));
        assert!(verify_certificate(&cert).unwrap(), "{block:?}");
        let mut bumped = cert.clone();
        bumped.x += 1u32;
        let _ = verify_certificate(&bumped).unwrap();
    }
}
