mod support;

use binedge::graph::{
    admissible_paths, all_admissible_paths, canonical_form, enumerate_connected_graphs, labeled_code, Graph,
};
use proptest::prelude::*;

fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|b| (1..b).map(move |a| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let pairs = (2..=n).flat_map(|b| (1..b).map(move |a| (a, b)));
            Graph::new(n, pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e)).unwrap()
        })
    })
}

#[test]
fn enumeration_matches_brute_force_classes() {
    for n in 1..=5 {
        let ours: Vec<u64> = enumerate_connected_graphs(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap().code)
            .collect();
        let brute: Vec<u64> = support::brute_connected_classes(n).into_iter().collect();
        assert_eq!(ours, brute, "n = {n}");
    }
}

#[test]
fn enumeration_counts_up_to_seven() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn representatives_realize_their_codes() {
    for g in enumerate_connected_graphs(6).unwrap() {
        assert_eq!(labeled_code(&g), canonical_form(&g).unwrap().code);
    }
}

#[test]
fn closed_labeling_search_matches_permutation_scan() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n) {
            let found = g.find_closed_labeling().unwrap();
            assert_eq!(found.is_some(), support::closed_under_some_labeling(&g), "{g:?}");
            if let Some(sigma) = found {
                assert!(support::literally_closed(&g.relabel(&sigma).unwrap()));
            }
            assert_eq!(g.is_closed_with_labeling(), support::literally_closed(&g));
        }
    }
}

#[test]
fn closed_classes_at_six() {
    for g in enumerate_connected_graphs(6).unwrap() {
        assert_eq!(g.find_closed_labeling().unwrap().is_some(), support::closed_under_some_labeling(&g));
    }
}

#[test]
fn admissible_paths_match_exhaustive_search() {
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            for j in 2..=n {
                for i in 1..j {
                    let ours: Vec<Vec<usize>> =
                        admissible_paths(&g, i, j).unwrap().iter().map(|p| p.vertices().to_vec()).collect();
                    assert_eq!(ours, support::brute_admissible_paths(&g, i, j), "{g:?} {i} {j}");
                }
            }
        }
    }
}

#[test]
fn closedness_examples() {
    let claw = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
    assert_eq!(claw.find_closed_labeling().unwrap(), None);
    assert_eq!(Graph::cycle(4).unwrap().find_closed_labeling().unwrap(), None);
    let relabeled_path = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
    assert!(!relabeled_path.is_closed_with_labeling());
    assert!(relabeled_path.find_closed_labeling().unwrap().is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_label_invariant(g in arb_graph(6), seed in any::<u64>()) {
        let n = g.n();
        let perms = support::permutations(n);
        let sigma = &perms[(seed % perms.len() as u64) as usize];
        let h = g.relabel(sigma).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().code, support::brute_canonical_code(&g));
    }

    #[test]
    fn every_admissible_path_is_admissible(g in arb_graph(7)) {
        for p in all_admissible_paths(&g) {
            prop_assert!(p.is_admissible_in(&g));
            prop_assert!(p.vertices().windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn closed_labelings_are_closed(g in arb_graph(7)) {
        if let Some(sigma) = g.find_closed_labeling().unwrap() {
            prop_assert!(support::literally_closed(&g.relabel(&sigma).unwrap()));
        }
    }
}
