use cogrowth_core::dioph::{
    count_abcc, enumerate_sn, enumerate_sn_brute, orbit, orbit_decompose, sigma, tau, AbccMethod, OrbitType,
};

#[test]
fn fast_enumeration_matches_brute_force() {
    for n in (1..=120).chain([199, 240, 255, 300]) {
        let mut brute = enumerate_sn_brute(n);
        brute.sort_unstable();
        assert_eq!(enumerate_sn(n), brute, "n={n}");
    }
}

#[test]
fn generators_act_on_solutions() {
    for n in 1..=200 {
        let all = enumerate_sn(n);
        for &q in &all {
            assert_eq!(q.iter().sum::<u64>(), n);
            assert_eq!(q[0] * q[1], q[2] * q[3]);
            assert!(all.binary_search(&sigma(q)).is_ok());
            assert!(all.binary_search(&tau(q)).is_ok());
            assert_eq!(sigma(sigma(q)), q);
            assert_eq!(tau(tau(q)), q);
            assert_eq!(8 % orbit(q).len(), 0);
        }
    }
}

#[test]
fn orbit_decomposition_up_to_2000() {
    let known = [(4, 1), (6, 4), (8, 5), (9, 4)];
    for (n, size) in known {
        assert_eq!(enumerate_sn(n).len(), size);
    }
    for n in 1..=2000u64 {
        let d = orbit_decompose(n);
        assert!(d.reconstructs, "n={n}");
        assert!(d.fixed_formula_holds && d.abab_formula_holds, "n={n}");
        assert_eq!(d.stats.other, 0);
        assert_eq!(d.stats.abcc, count_abcc(n, AbccMethod::ClosedForm), "n={n}");
        let rest = d.stats.total as i64
            - i64::from(n % 4 == 0)
            - 4 * i64::from(n % 2 == 0) * ((n as i64 - 1) / 4)
            - 4 * count_abcc(n, AbccMethod::ClosedForm) as i64;
        assert!(rest >= 0 && rest % 8 == 0, "n={n}");
        for o in &d.orbits {
            let members = orbit(o.representative);
            assert_eq!(members[0], o.representative);
            let expected = match o.kind {
                OrbitType::Fixed => 1,
                OrbitType::Free => 8,
                _ => 4,
            };
            assert_eq!(o.size, expected);
        }
    }
}

#[test]
fn abcc_counts_agree() {
    for n in 1..=10_000 {
        let brute = count_abcc(n, AbccMethod::Brute);
        assert_eq!(brute, count_abcc(n, AbccMethod::Totient), "n={n}");
        assert_eq!(brute, count_abcc(n, AbccMethod::ClosedForm), "n={n}");
    }
    for n in 10_001..=100_000 {
        assert_eq!(
            count_abcc(n, AbccMethod::Totient),
            count_abcc(n, AbccMethod::ClosedForm),
            "n={n}"
        );
    }
}
