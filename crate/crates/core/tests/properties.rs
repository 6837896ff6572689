use chorded_spectra_core::canon::canonical_form;
use chorded_spectra_core::cycles::{find_s_chorded_k_cycle, has_chorded_cycle, validate_witness};
use chorded_spectra_core::families::{family, FamilySpec};
use chorded_spectra_core::graph6::{graph6_decode, graph6_encode};
use chorded_spectra_core::spectral::{char_poly, spectral_radius};
use chorded_spectra_core::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn rho(g: &Graph) -> f64 {
    spectral_radius(g).unwrap().rho
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chorded_cycles_survive_adding_edges(g in graph(10), extra in prop::collection::vec((0usize..10, 0usize..10), 1..5)) {
        let mut big = g.clone();
        for (u, v) in extra {
            let (u, v) = (u % g.order(), v % g.order());
            if u != v {
                big.add_edge(u, v);
            }
        }
        if has_chorded_cycle(&g).is_some() {
            prop_assert!(has_chorded_cycle(&big).is_some());
        }
    }

    #[test]
    fn witnesses_validate(g in graph(11)) {
        if let Some(w) = has_chorded_cycle(&g) {
            prop_assert!(validate_witness(&g, &w, 1).is_ok());
        }
    }

    #[test]
    fn fewer_chords_asked_still_found(g in graph(9), s in 1usize..6, len in 4usize..9) {
        if find_s_chorded_k_cycle(&g, s, len).is_some() {
            for t in 0..s {
                prop_assert!(find_s_chorded_k_cycle(&g, t, len).is_some());
            }
        }
    }

    #[test]
    fn spectral_lower_bounds(g in graph(12)) {
        let r = rho(&g);
        let (n, m) = (g.order() as f64, g.size() as f64);
        prop_assert!(r >= 2.0 * m / n - 1e-9);
        prop_assert!(r >= (g.max_degree() as f64).sqrt() - 1e-9);
    }

    #[test]
    fn char_poly_vanishes_at_radius(g in graph(12)) {
        let p = char_poly(&g).unwrap();
        prop_assert!(p.relative_residual(rho(&g)) <= 1e-6);
    }

    #[test]
    fn graph6_round_trip(g in graph(16)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(12), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
    }
}

#[test]
fn minimum_degree_three_forces_chorded_cycle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let mut seen = 0;
    while seen < 300 {
        let n = rng.gen_range(4..=14);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.35) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.min_degree() >= 3 {
            seen += 1;
            let w = has_chorded_cycle(&g).expect("δ ≥ 3 forces a chorded cycle");
            validate_witness(&g, &w, 1).unwrap();
        }
    }
}

#[test]
fn complete_bipartite_radius() {
    for a in 1..=10 {
        for b in a..=10 {
            let g = family(&FamilySpec::CompleteBipartite { a, b }).unwrap();
            assert!(
                (rho(&g) - ((a * b) as f64).sqrt()).abs() <= 1e-9,
                "K_{a},{b}"
            );
        }
    }
}
