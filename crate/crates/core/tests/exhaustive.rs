mod common;

use common::{all_sed_pairs, literal_neighborhood_sum, naive_min};
use sedgraph::blowup::{apex_augment, blow_up, restricted_class_check, BlowupSpec};
use sedgraph::graph::{check_adjacent_vertex_sum_lemma, verify_sed, vertex_sums};
use sedgraph::solver::{solve_g, verify_lower_bounds, SearchConfig, SearchMode};

#[test]
fn solver_matches_naive_enumeration() {
    for n in 1..=5 {
        for (mode, restricted) in [
            (SearchMode::All, false),
            (SearchMode::RestrictedClass, true),
        ] {
            let want = naive_min(n, restricted);
            let got = solve_g(&SearchConfig::new(n).mode(mode)).unwrap();
            assert_eq!(got.g_value, want, "n={n} {mode:?}");
        }
    }
}

#[test]
fn g_of_three_is_zero() {
    assert_eq!(naive_min(3, false), 0);
    assert_eq!(solve_g(&SearchConfig::new(3)).unwrap().g_value, 0);
}

#[test]
fn witnesses_are_valid_and_g_is_monotone() {
    let mut prev = i64::MAX;
    let mut results = Vec::new();
    for n in 1..=6 {
        for mode in [SearchMode::All, SearchMode::RestrictedClass] {
            let r = solve_g(&SearchConfig::new(n).mode(mode).workers(3)).unwrap();
            let w = r.witness.as_ref().unwrap();
            let report = verify_sed(w);
            assert!(report.is_sed);
            assert_eq!(report.total_weight, r.g_value);
            assert!(check_adjacent_vertex_sum_lemma(w).unwrap());
            if mode == SearchMode::RestrictedClass {
                assert!(restricted_class_check(w));
            } else {
                assert!(r.g_value <= prev, "g({n}) > g({})", n - 1);
                prev = r.g_value;
            }
            results.push(r);
        }
    }
    verify_lower_bounds(&results).unwrap();
}

#[test]
fn worker_count_does_not_change_g() {
    for n in [4, 5, 6] {
        let values: Vec<i64> = [1, 2, 4, 8]
            .into_iter()
            .map(|w| solve_g(&SearchConfig::new(n).workers(w)).unwrap().g_value)
            .collect();
        assert!(values.windows(2).all(|p| p[0] == p[1]), "n={n}: {values:?}");
    }
}

#[test]
fn every_small_sed_pair_satisfies_adjacent_sum_lemma() {
    for n in 1..=5 {
        for g in all_sed_pairs(n) {
            assert!(check_adjacent_vertex_sum_lemma(&g).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn blowups_of_small_sed_pairs() {
    for n in 1..=4 {
        for g in all_sed_pairs(n) {
            let s0 = vertex_sums(&g);
            let nonneg = |v: usize| s0[v] >= 0;
            for k in 1..=4 {
                let spec = BlowupSpec::new(k).unwrap();
                let b = blow_up(&g, spec);
                assert_eq!(b.edge_count(), k * k * g.edge_count());
                assert_eq!(b.total_weight(), (k * k) as i64 * g.total_weight());

                let sb = vertex_sums(&b);
                for v in 0..b.n() {
                    assert_eq!(sb[v], k as i64 * s0[v / k]);
                }
                let report = verify_sed(&b);
                for (i, e) in b.edges().iter().enumerate() {
                    let sum = report.edge_neighborhood_sums[i];
                    assert_eq!(sum, literal_neighborhood_sum(&b, i));
                    assert!(sum >= 0);
                    if sum == 0 {
                        assert_eq!(e.w.value(), 1);
                        assert!(nonneg(e.u / k) && nonneg(e.v / k));
                    }
                }

                let aug = apex_augment(&b);
                let r = verify_sed(&aug);
                assert!(r.is_sed, "k={k} g={g:?}");
                assert_eq!(
                    r.total_weight,
                    (k * k) as i64 * g.total_weight() + (n * k) as i64
                );
            }
        }
    }
}
