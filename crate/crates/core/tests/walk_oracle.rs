use cogrowth_core::walk::{
    brute_force_closed, count_closed, count_reduced_split, Column, CountTable, GeneratorSet, RingSpec, Serial,
    Storage, WalkOptions,
};
use num_bigint::BigUint;

fn opts(pruning: bool, storage: Storage) -> WalkOptions {
    WalkOptions {
        pruning,
        storage,
        ..WalkOptions::default()
    }
}

fn dp_tables(gens: &GeneratorSet, n: usize, o: &WalkOptions) -> (CountTable, CountTable) {
    let c = count_closed(gens, n, RingSpec::Exact, o, &Serial).unwrap();
    let r = count_reduced_split(gens, n, RingSpec::Exact, o, &Serial).unwrap();
    (c, r)
}

#[test]
fn dp_matches_brute_force_up_to_ten() {
    let gens = GeneratorSet::vh_standard();
    let brute = brute_force_closed(&gens, 10).unwrap();
    let (c, r) = dp_tables(&gens, 10, &WalkOptions::default());
    assert_eq!(c.int("c"), brute.int("c"));
    for name in ["r", "r1", "r2", "r3"] {
        assert_eq!(r.int(name), brute.int(name), "column {name}");
    }
}

#[test]
fn other_t_weights_match_brute_force() {
    for w in [1, 3] {
        let gens = GeneratorSet::vh_with_t_weight(w);
        let brute = brute_force_closed(&gens, 9).unwrap();
        let (c, r) = dp_tables(&gens, 9, &WalkOptions::default());
        assert_eq!(c.int("c"), brute.int("c"));
        assert_eq!(r.int("r2"), brute.int("r2"));
        assert_eq!(r.int("r3"), brute.int("r3"));
    }
}

#[test]
fn h3_lazy_matches_brute_force() {
    let gens = GeneratorSet::h3_lazy();
    let brute = brute_force_closed(&gens, 7).unwrap();
    let c = count_closed(&gens, 7, RingSpec::Exact, &WalkOptions::default(), &Serial).unwrap();
    assert_eq!(c.int("c"), brute.int("c"));
    assert_eq!(c.int("c").unwrap()[2], BigUint::from(5u32));
}

#[test]
fn storage_and_pruning_do_not_change_counts() {
    let gens = GeneratorSet::vh_standard();
    let reference = dp_tables(&gens, 14, &WalkOptions::default());
    for (p, s) in [
        (false, Storage::Dense),
        (true, Storage::Sparse),
        (false, Storage::Sparse),
    ] {
        let other = dp_tables(&gens, 14, &opts(p, s));
        assert_eq!(reference, other, "pruning={p} storage={s:?}");
    }
}

#[test]
fn modular_lane_is_reduced_exact_lane() {
    let gens = GeneratorSet::vh_standard();
    let (c, r) = dp_tables(&gens, 16, &WalkOptions::default());
    for k in [1, 7, 24, 32] {
        let cm = count_closed(&gens, 16, RingSpec::Mod2k(k), &WalkOptions::default(), &Serial).unwrap();
        let rm = count_reduced_split(&gens, 16, RingSpec::Mod2k(k), &WalkOptions::default(), &Serial).unwrap();
        assert_eq!(cm, c.reduce_mod2k(k));
        assert_eq!(rm, r.reduce_mod2k(k));
    }
}

#[test]
fn structural_invariants() {
    let gens = GeneratorSet::vh_standard();
    let (c, r) = dp_tables(&gens, 20, &WalkOptions::default());
    let two24 = BigUint::from(1u32 << 24);
    let zero = BigUint::from(0u32);
    let get = |t: &CountTable, n: &str| t.int(n).unwrap().to_vec();
    let (cc, rr, r1, r2, r3) = (get(&c, "c"), get(&r, "r"), get(&r, "r1"), get(&r, "r2"), get(&r, "r3"));
    for l in 0..=20 {
        assert_eq!(rr[l], &r1[l] + &r2[l] + &r3[l]);
        if l % 2 == 1 {
            assert_eq!(cc[l], zero);
            assert_eq!(rr[l], zero);
        }
        assert_eq!(&r3[l] % &two24, zero, "2^24 | r3({l})");
        assert!(rr[l] <= cc[l]);
    }
}

#[test]
fn probability_lane_matches_exact_counts() {
    let gens = GeneratorSet::vh_standard();
    let exact = count_closed(&gens, 12, RingSpec::Exact, &WalkOptions::default(), &Serial).unwrap();
    let real = count_closed(&gens, 12, RingSpec::Real, &WalkOptions::default(), &Serial).unwrap();
    let Column::Real(p) = real.column("c").unwrap() else { panic!() };
    for (l, (x, q)) in exact.int("c").unwrap().iter().zip(p).enumerate() {
        let expected = x.to_string().parse::<f64>().unwrap() / 10f64.powi(l as i32);
        assert!((q - expected).abs() <= 1e-12 * expected.max(1e-300), "ℓ={l}");
    }
}
