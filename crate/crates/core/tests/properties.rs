use proptest::prelude::*;

use mpart::format::{parse_graph, parse_matrix, write_graph, write_matrix};
use mpart::random::{
    check_neighborhood_lemma, exact_membership_probability, sample_type, simulate_membership, CheckMode, LemmaId,
    Model, RandomSpec, Scenario,
};
use mpart::solver::{brute_force_has_embedding, canonical_form, find_embedding, VariableOrder};
use mpart::types::NeighborhoodIndex;
use mpart::{
    is_edge_homomorphism, is_embedding, is_type_homomorphism, matrix_from_type, type_from_matrix, EdgeColor, Entry,
    PartitionMatrix, Rational, SimpleGraph, SolverConfig, TypeGraph, VertexColor, VertexMap,
};

fn graph_strategy(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn type_strategy(min: usize, max: usize) -> impl Strategy<Value = TypeGraph> {
    (min..=max).prop_flat_map(|n| {
        (proptest::collection::vec(any::<bool>(), n), proptest::collection::vec(0..3usize, n * n)).prop_map(
            move |(blue, colors)| {
                let vertices = blue.iter().map(|&b| if b { VertexColor::Blue } else { VertexColor::Red }).collect();
                TypeGraph::from_fn(vertices, |u, v| EdgeColor::ALL[colors[u * n + v]])
            },
        )
    })
}

fn permute(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    SimpleGraph::from_edges(g.order(), &edges).unwrap()
}

/// Every map from `0..domain` into `0..target`.
fn all_maps(domain: usize, target: usize) -> impl Iterator<Item = VertexMap> {
    let total = target.pow(domain as u32);
    (0..total).map(move |mut code| {
        let image = (0..domain)
            .map(|_| {
                let d = code % target;
                code /= target;
                d
            })
            .collect();
        VertexMap::new(image)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn friendliness_agrees_between_matrix_and_type(ty in type_strategy(0, 6)) {
        let m = matrix_from_type(&ty);
        prop_assert_eq!(m.is_friendly(), ty.is_friendly());
        prop_assert_eq!(type_from_matrix(&m), ty);
    }
}

proptest! {
    #[test]
    fn matrix_text_round_trip(ty in type_strategy(0, 7)) {
        let m = matrix_from_type(&ty);
        let text = write_matrix(&m);
        let back: PartitionMatrix = parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(write_matrix(&back), text);
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy(8)) {
        let text = write_graph(&g);
        prop_assert_eq!(&parse_graph(&text).unwrap(), &g);
    }

    #[test]
    fn diagonal_entries_are_vertex_colours(ty in type_strategy(1, 6)) {
        let m = matrix_from_type(&ty);
        for v in 0..ty.order() {
            let expected = if ty.vertex_color(v) == VertexColor::Red { Entry::Zero } else { Entry::One };
            prop_assert_eq!(m.get(v, v), expected);
        }
    }

    #[test]
    fn neighbourhood_index_matches_definition_and_shrinks(ty in type_strategy(1, 10), picks in proptest::collection::vec(0..10usize, 1..5)) {
        let set: Vec<usize> = picks.iter().map(|p| p % ty.order()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let index = NeighborhoodIndex::new(&ty);
        let direct = ty.common_neighborhood(&set);
        let fast: Vec<usize> = index.neighborhood(&set).ones().collect();
        prop_assert_eq!(&direct, &fast);
        // A ⊆ B ⇒ N(B) ⊆ N(A) ∪ (B \ A), i.e. a larger set only restricts.
        let sub = &set[..set.len() - 1];
        let larger = ty.common_neighborhood(sub);
        for v in &direct {
            prop_assert!(larger.contains(v));
        }
        prop_assert!(direct.len() <= ty.order());
    }

    #[test]
    fn composition_of_embedding_and_type_homomorphism(g in graph_strategy(5), sigma in type_strategy(1, 3), tau in type_strategy(1, 4)) {
        let Some(psi) = find_embedding(&g, &sigma, &SolverConfig::default()).embedding().cloned() else {
            return Ok(());
        };
        for phi in all_maps(sigma.order(), tau.order()) {
            if is_type_homomorphism(&sigma, &tau, &phi) {
                prop_assert!(is_edge_homomorphism(&sigma, &tau, &phi));
                prop_assert!(is_embedding(&g, &tau, &psi.then(&phi)));
            }
        }
    }

    #[test]
    fn solver_matches_brute_force(g in graph_strategy(6), tau in type_strategy(1, 4)) {
        let truth = brute_force_has_embedding(&g, &tau).unwrap();
        for fc in [false, true] {
            for vo in [VariableOrder::Static, VariableOrder::MostConstrained] {
                let report = find_embedding(&g, &tau, &SolverConfig { forward_checking: fc, variable_order: vo, node_limit: None });
                prop_assert_eq!(report.decided(), Some(truth));
                if let Some(psi) = report.embedding() {
                    prop_assert!(is_embedding(&g, &tau, psi));
                }
            }
        }
    }

    #[test]
    fn embeddability_is_hereditary(g in graph_strategy(6), tau in type_strategy(1, 4)) {
        if let Some(psi) = find_embedding(&g, &tau, &SolverConfig::default()).embedding() {
            for v in 0..g.order() {
                let keep: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
                let restricted = VertexMap::new(keep.iter().map(|&u| psi.get(u)).collect());
                prop_assert!(is_embedding(&g.remove_vertex(v), &tau, &restricted));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(7), seed in any::<u64>()) {
        let mut rng = mpart::random::SplitMix64::new(seed);
        let pool: Vec<usize> = (0..g.order()).collect();
        let perm = rng.choose_distinct(&pool, g.order());
        let h = permute(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form(&g).to_graph().size(), g.size());
    }

    #[test]
    fn lemma_witness_sizes_bounded(n in 2usize..7, seed in any::<u64>()) {
        let tau = sample_type(&RandomSpec::new(n, Model::Friendly, seed).unwrap());
        for lemma in [LemmaId::Nsize, LemmaId::Nsize3] {
            let r = check_neighborhood_lemma(&tau, lemma, CheckMode::Exhaustive).unwrap();
            for w in [&r.worst_i, &r.worst_ii].into_iter().flatten() {
                prop_assert!(w.size <= tau.order());
            }
        }
    }
}

fn scenario_matrix() -> Vec<Scenario> {
    use VertexColor::*;
    let mut out = vec![Scenario::two_pairs(), Scenario::two_pairs_and_cross()];
    for model in [Model::General, Model::Friendly] {
        for candidate in [Red, Blue] {
            out.push(Scenario { model, candidate, constraint_colors: vec![Red, Blue, Red], sets: vec![vec![0, 1, 2]] });
            out.push(Scenario {
                model,
                candidate,
                constraint_colors: vec![Red, Red, Red, Red, Red, Red, Blue, Blue, Blue],
                sets: vec![(0..9).collect()],
            });
            out.push(Scenario {
                model,
                candidate,
                constraint_colors: vec![Red, Red, Blue, Blue],
                sets: vec![vec![0, 1], vec![2, 3], vec![1, 3]],
            });
        }
    }
    out
}

#[test]
fn exact_probability_matches_simulation() {
    for (k, s) in scenario_matrix().iter().enumerate() {
        let p = exact_membership_probability::<f64>(s).unwrap().value;
        let trials = 200_000;
        let hits = simulate_membership(s, trials, 1000 + k as u64).unwrap();
        let freq = hits as f64 / trials as f64;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt().max(1e-12);
        assert!((freq - p).abs() <= 4.0 * sigma, "scenario {k}: exact {p}, simulated {freq}");
    }
}

#[test]
fn adding_constraint_sets_never_raises_probability() {
    for s in scenario_matrix() {
        let mut growing = Scenario { sets: vec![], ..s.clone() };
        let mut prev = Rational::from_integer(1);
        for set in &s.sets {
            growing.sets.push(set.clone());
            let p = exact_membership_probability::<Rational>(&growing).unwrap().value;
            assert!(p <= prev);
            assert!(p >= Rational::from_integer(0));
            prev = p;
        }
    }
}

#[test]
fn general_model_colour_frequencies() {
    // Each edge colour within 4 sigma of 1/3 over 200 seeds of T(100).
    let mut counts = [0u64; 3];
    let mut pairs = 0u64;
    for seed in 0..200 {
        let ty = sample_type(&RandomSpec::new(100, Model::General, seed).unwrap());
        for (i, c) in EdgeColor::ALL.into_iter().enumerate() {
            counts[i] += ty.count_edges(c) as u64;
        }
        pairs += 4950;
    }
    let p = 1.0 / 3.0;
    let sigma = (p * (1.0 - p) / pairs as f64).sqrt();
    for c in counts {
        assert!((c as f64 / pairs as f64 - p).abs() <= 4.0 * sigma, "{counts:?}");
    }
}
