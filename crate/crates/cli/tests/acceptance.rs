//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use chorded_spectra::parallel::extremal_spectral_parallel;
use chorded_spectra_core::canon::canonical_form;
use chorded_spectra_core::cycles::{
    chorded_cycle_oracle, has_chorded_cycle, has_k_minus_chorded_cycle, validate_witness,
};
use chorded_spectra_core::enumerate::{EnumerationLimits, EnumerationMode, Enumerator, GraphClass};
use chorded_spectra_core::families::{family, FamilySpec, Fixture};
use chorded_spectra_core::graph6::{graph6_decode, graph6_encode};
use chorded_spectra_core::lab::{
    check_k_chorded_extremal, judge_chorded_extremal, verify_bound, BoundClaim,
};
use chorded_spectra_core::spectral::{
    char_poly, perron_vector, quotient_matrix, spectral_radius, theta, LargestRoot,
};
use chorded_spectra_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rho(g: &Graph) -> f64 {
    spectral_radius(g).unwrap().rho
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.2..0.6);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// `ρ(bigger) > ρ(smaller)`, settled exactly when the floats are close.
fn strictly_larger(bigger: &Graph, smaller: &Graph) -> bool {
    let (a, b) = (rho(bigger), rho(smaller));
    if a - b > 1e-9 {
        return true;
    }
    let mut ra = LargestRoot::of_char_poly(&char_poly(bigger).unwrap(), a).unwrap();
    let mut rb = LargestRoot::of_char_poly(&char_poly(smaller).unwrap(), b).unwrap();
    ra.cmp_exact(&mut rb) == Ordering::Greater
}

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(format!("{detail} ({:.2}s)", t.as_secs_f64()))
    } else {
        Err(format!(
            "{detail}, but took {:.2}s > {:.0}s",
            t.as_secs_f64(),
            limit.as_secs_f64()
        ))
    }
}

fn threshold_reproduction() -> Outcome {
    let start = Instant::now();
    for m in 4..=8 {
        let r = rho(&family(&FamilySpec::ChordFreeExtremal { m }).unwrap());
        let th = theta(m).unwrap();
        if (r - th).abs() > 1e-9 {
            return Err(format!("m={m}: rho {r} vs theta {th}"));
        }
    }
    for m in 4..=100 {
        let r = rho(&family(&FamilySpec::Star { leaves: m }).unwrap());
        if (r - (m as f64).sqrt()).abs() > 1e-9 {
            return Err(format!("K_1,{m}: rho {r}"));
        }
    }
    within(
        Duration::from_secs(1),
        start,
        "theta(4..8) and sqrt(4..100) to 1e-9".into(),
    )
}

fn fixture_radii() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(String, Graph, f64)> = [
        (Fixture::H1, 2.8156),
        (Fixture::H2, 2.7321),
        (Fixture::H3, 2.5035),
        (Fixture::F1, 2.4728),
        (Fixture::F2, 2.618),
        (Fixture::F3, 2.4562),
    ]
    .into_iter()
    .map(|(f, v)| (f.name().to_string(), f.graph(), v))
    .collect();
    for (m, v) in [(6, 2.5141), (7, 2.6813), (8, 2.8434)] {
        let g = family(&FamilySpec::BookStar {
            matching: 1,
            isolated: m - 3,
        })
        .unwrap();
        cases.push((format!("K1+(K2+{}K1)", m - 3), g, v));
    }
    for (name, g, v) in &cases {
        let r = rho(g);
        if (r - v).abs() > 1e-4 {
            return Err(format!("{name}: rho {r:.6} vs {v}"));
        }
    }
    within(
        Duration::from_secs(1),
        start,
        format!("{} radii to 1e-4", cases.len()),
    )
}

fn exhaustive_chorded_extremal() -> Outcome {
    let start = Instant::now();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut summary = Vec::new();
    for m in 4..=10 {
        let report = extremal_spectral_parallel(
            m,
            GraphClass::ChordedCycleFree,
            EnumerationLimits::default(),
            jobs,
        )
        .map_err(|e| format!("m={m}: {e}"))?;
        let v = judge_chorded_extremal(&report).map_err(|e| format!("m={m}: {e}"))?;
        if !v.pass {
            return Err(format!("m={m}: {v:?}"));
        }
        if m == 9
            && !(report.exact_ties && report.argmax.len() == 4 && report.max_rho.round() == 3.0)
        {
            return Err(format!("m=9 tie not certified: {report:?}"));
        }
        summary.push(format!(
            "{m}:{}/{}",
            report.argmax.len(),
            report.graph_count
        ));
    }
    within(
        Duration::from_secs(300),
        start,
        format!(
            "m=4..10 extremal sets and thresholds match (m:argmax/graphs {})",
            summary.join(" ")
        ),
    )
}

fn check_detector(g: &Graph) -> Result<(), String> {
    let found = has_chorded_cycle(g);
    let oracle = chorded_cycle_oracle(g, 1, None).map_err(|e| e.to_string())?;
    if found.is_some() != oracle {
        return Err(format!("disagreement on {}", graph6_encode(g)));
    }
    if let Some(w) = found {
        validate_witness(g, &w, 1).map_err(|e| format!("{}: {e}", graph6_encode(g)))?;
    }
    Ok(())
}

fn detector_equivalence() -> Outcome {
    let start = Instant::now();
    let mut unlabeled = 0;
    for n in 0..=7 {
        let all = Enumerator::new(
            EnumerationMode::Order(n),
            GraphClass::All,
            EnumerationLimits::default(),
        )
        .unwrap()
        .collect();
        for g in &all {
            check_detector(g)?;
        }
        unlabeled += all.len();
    }
    if unlabeled != 1 + 1 + 2 + 4 + 11 + 34 + 156 + 1044 {
        return Err(format!(
            "expected 1253 graphs on <= 7 vertices, got {unlabeled}"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let n = rng.gen_range(8..=12);
        let p = rng.gen_range(0.1..0.5);
        check_detector(&random_graph(&mut rng, n, p))?;
    }
    within(
        Duration::from_secs(120),
        start,
        format!("{unlabeled} unlabeled graphs on <= 7 vertices and 10000 random graphs on 8..12"),
    )
}

fn bound_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(77);

    // adding an edge to a connected graph strictly increases the radius
    let mut added = 0;
    while added < 500 {
        let g = random_connected(&mut rng);
        let n = g.order();
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let Some(&(u, v)) = non_edges.choose(&mut rng) else {
            continue;
        };
        let mut h = g.clone();
        h.add_edge(u, v);
        if !strictly_larger(&h, &g) {
            return Err(format!(
                "edge addition did not increase rho: {} + {u}{v}",
                graph6_encode(&g)
            ));
        }
        added += 1;
    }

    // moving neighbours from v to u with x_u >= x_v strictly increases it
    let (mut rotated, mut ambiguous) = (0, 0);
    while rotated < 500 {
        let g = random_connected(&mut rng);
        let x = perron_vector(&g).unwrap();
        let n = g.order();
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let (u, v) = if x[a] >= x[b] { (a, b) } else { (b, a) };
        // too close to tell which entry is larger from floats
        if x[u] - x[v] < 1e-8 && x[u] != x[v] {
            ambiguous += 1;
            continue;
        }
        let movable: Vec<usize> = g
            .neighbors(v)
            .filter(|&w| w != u && !g.has_edge(u, w))
            .collect();
        if movable.is_empty() {
            continue;
        }
        let count = rng.gen_range(1..=movable.len());
        let moved: Vec<usize> = movable.choose_multiple(&mut rng, count).copied().collect();
        let mut h = g.clone();
        for &w in &moved {
            h.remove_edge(v, w);
            h.add_edge(u, w);
        }
        if !strictly_larger(&h, &g) {
            return Err(format!(
                "rotation did not increase rho: {} u={u} v={v} S={moved:?}",
                graph6_encode(&g)
            ));
        }
        rotated += 1;
    }

    // equitable quotients share the radius
    let mut instances: Vec<(Graph, Vec<Vec<usize>>)> = Vec::new();
    for k in 1..=5 {
        for t in 1..=6 {
            let g = family(&FamilySpec::CliqueJoin {
                clique: k,
                independent: t,
            })
            .unwrap();
            instances.push((g, vec![(0..k).collect(), (k..k + t).collect()]));
        }
    }
    while instances.len() < 60 {
        let parts: Vec<usize> = (0..rng.gen_range(2..=4))
            .map(|_| rng.gen_range(1..=4))
            .collect();
        let g = family(&FamilySpec::CompleteMultipartite {
            parts: parts.clone(),
        })
        .unwrap();
        let mut next = 0;
        let partition = parts
            .iter()
            .map(|&p| {
                next += p;
                (next - p..next).collect()
            })
            .collect();
        instances.push((g, partition));
    }
    for t in 1..=4 {
        for s in 0..=5 {
            let g = family(&FamilySpec::BookStar {
                matching: t,
                isolated: s,
            })
            .unwrap();
            let mut partition = vec![vec![0], (1..=2 * t).collect::<Vec<_>>()];
            if s > 0 {
                partition.push((2 * t + 1..=2 * t + s).collect());
            }
            instances.push((g, partition));
        }
    }
    while instances.len() < 100 {
        let g = random_connected(&mut rng);
        let partition = (0..g.order()).map(|v| vec![v]).collect();
        instances.push((g, partition));
    }
    for (g, partition) in &instances {
        let q = quotient_matrix(g, partition).map_err(|e| e.to_string())?;
        if !q.equitable {
            return Err(format!("partition of {} not equitable", graph6_encode(g)));
        }
        let (l, r) = (q.spectral_radius(), rho(g));
        if (l - r).abs() > 1e-9 {
            return Err(format!("{}: lambda(B) {l} vs rho {r}", graph6_encode(g)));
        }
    }
    within(
        Duration::from_secs(120),
        start,
        format!(
            "500 edge additions, 500 rotations ({ambiguous} near-tied draws skipped), {} equitable quotients",
            instances.len()
        ),
    )
}

fn brute_force_bounds() -> Outcome {
    let start = Instant::now();
    let lim = EnumerationLimits::default();
    let mut claims = Vec::new();
    for n in 5..=7 {
        for k in 3..=5 {
            if n > k {
                claims.push(BoundClaim::EgPath { n, k });
            }
        }
    }
    for n in 3..=7 {
        for k in 2..=4 {
            claims.push(BoundClaim::CycleBound { n, k });
        }
    }
    for n in 3..=7 {
        claims.push(BoundClaim::OreBound { n });
    }
    for n in 4..=8 {
        claims.push(BoundClaim::PropDoubly { n });
    }
    for c in &claims {
        let v = verify_bound(*c, lim).map_err(|e| format!("{}: {e}", c.claim_id()))?;
        if !v.pass {
            return Err(format!("{}: {v:?}", c.claim_id()));
        }
    }
    within(
        Duration::from_secs(300),
        start,
        format!("{} verdicts pass", claims.len()),
    )
}

fn k_chorded_certificates() -> Outcome {
    let start = Instant::now();
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for (k, m) in [(2, 9), (2, 11), (3, 12), (3, 15), (4, 16)] {
        if chorded_spectra_core::families::clique_join_independent_count(k, m).is_none() {
            skipped.push(format!("({k},{m})"));
            continue;
        }
        let v = check_k_chorded_extremal(k, m, 50, 7).map_err(|e| format!("({k},{m}): {e}"))?;
        let g = family(&FamilySpec::clique_join_for_size(k, m).unwrap()).unwrap();
        if !v.pass || has_k_minus_chorded_cycle(&g, k).is_some() {
            return Err(format!("({k},{m}): {v:?}"));
        }
        checked.push(format!("({k},{m})"));
    }
    within(
        Duration::from_secs(60),
        start,
        format!(
            "certified {}; not integral, skipped {}",
            checked.join(" "),
            skipped.join(" ")
        ),
    )
}

fn fuzz_graph6_and_canon() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..10_000 {
        let n = if i % 10 == 0 {
            rng.gen_range(60..=70)
        } else {
            rng.gen_range(0..=20)
        };
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let back = graph6_decode(&graph6_encode(&g)).map_err(|e| e.to_string())?;
        if back != g {
            return Err(format!("graph6 round trip changed {}", graph6_encode(&g)));
        }
    }
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        if canonical_form(&g) != canonical_form(&g.permute(&perm)) {
            return Err(format!(
                "canonical form not invariant on {}",
                graph6_encode(&g)
            ));
        }
    }
    within(
        Duration::from_secs(30),
        start,
        "10000 round trips, 10000 relabelings".into(),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("threshold reproduction", threshold_reproduction),
        ("fixture radii", fixture_radii),
        (
            "exhaustive chorded-cycle-free extremal sets",
            exhaustive_chorded_extremal,
        ),
        ("detector/oracle equivalence", detector_equivalence),
        ("spectral bound properties", bound_properties),
        ("brute-force edge bounds", brute_force_bounds),
        ("k-chorded equality certificates", k_chorded_certificates),
        ("graph6 and canonical-form fuzz", fuzz_graph6_and_canon),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
