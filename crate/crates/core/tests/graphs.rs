use std::collections::BTreeSet;

use proptest::prelude::*;
use sullivan::graphs::*;

/// Every vertex bijection, filtered by edge preservation.
fn brute_aut(g: &SimpleGraph) -> BTreeSet<Vec<usize>> {
    fn rec(g: &SimpleGraph, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut BTreeSet<Vec<usize>>) {
        let n = g.len();
        if cur.len() == n {
            let ok = (0..n).all(|a| (0..n).all(|b| g.adjacent(a, b) == g.adjacent(cur[a], cur[b])));
            if ok {
                out.insert(cur.clone());
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(g, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(g, &mut Vec::new(), &mut vec![false; g.len()], &mut out);
    out
}

fn fast_aut(g: &SimpleGraph) -> BTreeSet<Vec<usize>> {
    automorphisms(g).unwrap().elements.iter().map(|p| p.images().to_vec()).collect()
}

fn group_axioms(g: &FiniteGroup) {
    let n = g.order();
    let e = g.identity();
    for a in 0..n {
        assert_eq!(g.mul(a, e), a);
        assert_eq!(g.mul(a, g.inverse(a)), e);
        for b in 0..n {
            for c in 0..n {
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}

#[test]
fn builtin_orders() {
    let cases = [
        ("P3", 2),
        ("K3", 6),
        ("C4", 8),
        ("asym6", 1),
        ("star4", 6),
        ("C5", 10),
        ("K4", 24),
        ("z3_nine", 3),
        ("petersen", 120),
    ];
    for (name, order) in cases {
        let g = builtin::by_name(name).unwrap();
        let aut = automorphisms(&g).unwrap();
        assert_eq!(aut.order(), order, "{name}");
        group_axioms(&aut.group);
        if g.len() <= 8 {
            assert_eq!(fast_aut(&g), brute_aut(&g), "{name}");
        }
    }
}

#[test]
fn asymmetric_graph_has_six_vertices() {
    let g = builtin::asymmetric6();
    assert_eq!(g.len(), 6);
    assert_eq!(brute_aut(&g).len(), 1);
}

#[test]
fn z3_nine_group_is_cyclic() {
    let g = builtin::z3_nine();
    assert_eq!(g.len(), 9);
    let aut = automorphisms(&g).unwrap();
    assert!(FiniteGroup::cyclic(3).isomorphism_to(&aut.group).is_some());
    for p in &aut.elements {
        assert!(g.is_automorphism(p));
    }
}

#[test]
fn presets_satisfy_axioms() {
    for (name, order) in [("trivial", 1), ("Z2", 2), ("Z3", 3), ("Z5", 5), ("S3", 6), ("D4", 8), ("S4", 24)] {
        let g = FiniteGroup::preset(name).unwrap();
        assert_eq!(g.order(), order);
        group_axioms(&g);
        assert!(g.generates(&g.small_generating_set()));
    }
    assert!(FiniteGroup::preset("Q8x").is_err());
}

#[test]
fn non_groups_rejected() {
    assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]).is_err());
    assert!(FiniteGroup::from_table(vec![]).is_err());
    assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
}

#[test]
fn frucht_realizes_small_groups() {
    for name in ["trivial", "Z3", "S3", "Z4", "Z5"] {
        let g = FiniteGroup::preset(name).unwrap();
        let gens = g.small_generating_set();
        let graph = frucht_graph(&g, &gens).unwrap();
        let aut = automorphisms(&graph).unwrap();
        assert_eq!(aut.order(), g.order(), "{name}");
        assert!(g.isomorphism_to(&aut.group).is_some(), "{name}");
    }
}

#[test]
fn realize_prefers_catalog_graphs() {
    let r = realize_group(&FiniteGroup::preset("Z3").unwrap().spec(None)).unwrap();
    assert_eq!(r.source, "z3_nine");
    let r = realize_group(&FiniteGroup::preset("S3").unwrap().spec(None)).unwrap();
    assert_eq!(r.graph.len(), 3);
    let aut = automorphisms(&r.graph).unwrap();
    assert!(FiniteGroup::symmetric(3).is_isomorphism(&aut.group, &r.isomorphism));
}

#[test]
fn graph_json_round_trip() {
    let g = builtin::petersen();
    assert_eq!(SimpleGraph::from_json_str(&g.to_json_string()).unwrap(), g);
    assert!(SimpleGraph::from_json_str(r#"{"vertices":["a"],"edges":[["a","a"]]}"#).is_err());
}

/// `None` when the mask gives a disconnected graph.
fn graph_from_mask(n: usize, mask: u32) -> Option<SimpleGraph> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    SimpleGraph::from_indices((0..n).map(|i| format!("v{i}")).collect(), &edges).ok()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 4096, ..ProptestConfig::default() })]

    #[test]
    fn automorphisms_match_brute_force(n in 2usize..=7, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        let fast = fast_aut(&g);
        prop_assert_eq!(&fast, &brute_aut(&g));
        let aut = automorphisms(&g).unwrap();
        prop_assert_eq!(aut.group.order(), fast.len());
    }
}

#[test]
fn disconnected_and_tiny_graphs_rejected() {
    assert!(graph_from_mask(4, 0b000001).is_none());
    assert!(SimpleGraph::from_indices(vec!["a".into()], &[]).is_err());
}
