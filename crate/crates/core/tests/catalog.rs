use coalition_core::catalog::{
    all_graphs, all_graphs_up_to, all_trees, build_f1, f1_members, is_in_f1, is_isomorphic, trees_by_pruefer,
    F1Params,
};
use coalition_core::{coalition_number_bnb, make_named, Error, SolverConfig};

#[test]
fn leaf_family_members_attain_their_order() {
    let mut seen = 0;
    for p in 0..=5usize {
        for q in [0usize, 2, 3, 4, 5] {
            if p + q == 0 || p + q > 7 {
                continue;
            }
            for g in f1_members(p, q).unwrap() {
                let n = g.order();
                assert!(n <= 10);
                assert!(is_in_f1(&g).is_some());
                let r = coalition_number_bnb(&g, &SolverConfig::default()).unwrap();
                assert_eq!(r.value, n, "{g:?}");
                seen += 1;
            }
        }
    }
    assert!(seen > 100, "only {seen} members generated");
}

#[test]
fn leaf_family_recognition_needs_no_full_vertex() {
    // The paw has a full vertex, so it falls outside the family even though
    // its coalition number equals its order.
    let paw = make_named("paw").unwrap();
    assert_eq!(coalition_number_bnb(&paw, &SolverConfig::default()).unwrap().value, 4);
    assert!(is_in_f1(&paw).is_none());
}

#[test]
fn leaf_family_rejects_bad_parameters() {
    let mut params = F1Params::new(1, 3);
    params.q_edges = vec![(0, 1), (0, 2)];
    assert!(matches!(build_f1(&params), Err(Error::BadF1Params(_))));
    params.q_edges = vec![(0, 1)];
    assert!(build_f1(&params).is_ok());
    params.y_to_p = vec![1];
    assert!(matches!(build_f1(&params), Err(Error::BadF1Params(_))));
}

#[test]
fn class_counts_through_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| all_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044, 12346]);
    assert_eq!(all_graphs_up_to(3, |_| true).unwrap().len(), 1 + 2 + 4);
    assert!(matches!(all_graphs(9), Err(Error::TooLargeForEnumeration { .. })));
}

#[test]
fn small_tree_lists() {
    let four = all_trees(4).unwrap();
    assert_eq!(four.len(), 2);
    for spec in ["P4", "K1,3"] {
        let t = make_named(spec).unwrap();
        assert!(four.iter().any(|g| is_isomorphic(g, &t)));
    }
    let five = all_trees(5).unwrap();
    for spec in ["P5", "S(2,1)", "K1,4"] {
        let t = make_named(spec).unwrap();
        assert!(five.iter().any(|g| is_isomorphic(g, &t)));
    }
    assert_eq!(all_trees(10).unwrap().len(), 106);
    assert_eq!(trees_by_pruefer(9).unwrap().len(), 47);
}
