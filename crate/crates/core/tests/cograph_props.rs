use proptest::prelude::*;
use rand::seq::SliceRandom;
use tclq_core::cograph::{compute_ecc, compute_tcl, is_p4_free, Cotree, CotreeNode};
use tclq_core::generate::{random_cotree, rng};
use tclq_core::{solver_pmc, vcc};

/// Binarizes by merging random pairs of children; original nodes keep their
/// indices as the tops of their chains.
fn random_binarization(t: &Cotree, seed: u64) -> Cotree {
    let mut r = rng(seed);
    let mut out = t.clone();
    for i in 0..t.nodes.len() {
        let (mut kids, join) = match &t.nodes[i] {
            CotreeNode::Leaf(_) => continue,
            CotreeNode::Union(k) => (k.clone(), false),
            CotreeNode::Join(k) => (k.clone(), true),
        };
        let make = |a, b| {
            if join {
                CotreeNode::Join(vec![a, b])
            } else {
                CotreeNode::Union(vec![a, b])
            }
        };
        while kids.len() > 2 {
            kids.shuffle(&mut r);
            let a = kids.pop().unwrap();
            let b = kids.pop().unwrap();
            out.nodes.push(make(a, b));
            kids.push(out.nodes.len() - 1);
        }
        out.nodes[i] = make(kids[0], kids[1]);
    }
    out
}

fn named_edges(t: &Cotree) -> std::collections::BTreeSet<(String, String)> {
    let g = t.to_graph();
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (t.names[u].clone(), t.names[v].clone());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn arb_cotree(max_n: usize) -> impl Strategy<Value = Cotree> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_cotree(&mut rng(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ecc_is_vcc_at_every_node(t in arb_cotree(10)) {
        let b = t.binarize();
        let g = b.to_graph();
        let ecc = compute_ecc(&b).unwrap();
        prop_assert_eq!(ecc.visits, b.size());
        for (x, s) in b.leaf_sets().into_iter().enumerate() {
            prop_assert_eq!(ecc.values[x], vcc(&g, s).0);
        }
    }

    #[test]
    fn tcl_matches_general_solver_at_every_node(t in arb_cotree(8)) {
        let b = t.binarize();
        let g = b.to_graph();
        let tcl = compute_tcl(&b).unwrap();
        prop_assert_eq!(tcl.visits, b.size());
        for (x, s) in b.leaf_sets().into_iter().enumerate() {
            let (h, _) = g.induced_subgraph(s);
            prop_assert_eq!(tcl.values[x], solver_pmc::compute_tcl(&h).unwrap().0);
        }
    }

    #[test]
    fn rebinarization_keeps_original_node_values(t in arb_cotree(10), seed in any::<u64>()) {
        let a = t.binarize();
        let b = random_binarization(&t, seed);
        prop_assert!(b.is_binary());
        let (ea, eb) = (compute_ecc(&a).unwrap(), compute_ecc(&b).unwrap());
        let (ta, tb) = (compute_tcl(&a).unwrap(), compute_tcl(&b).unwrap());
        for x in 0..t.nodes.len() {
            prop_assert_eq!(ea.values[x], eb.values[x]);
            prop_assert_eq!(ta.values[x], tb.values[x]);
        }
    }

    #[test]
    fn realized_graphs_are_p4_free(t in arb_cotree(12)) {
        prop_assert!(is_p4_free(&t.to_graph()));
        prop_assert_eq!(t.binarize().to_graph(), t.to_graph());
    }

    #[test]
    fn text_round_trip(t in arb_cotree(10)) {
        let back = Cotree::parse(&t.to_string()).unwrap();
        prop_assert_eq!(back.n(), t.n());
        prop_assert_eq!(named_edges(&back), named_edges(&t));
    }
}

#[test]
fn fixed_examples() {
    let c4 = Cotree::parse("(1 (0 a b) (0 c d))").unwrap().binarize();
    let g = c4.to_graph();
    assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    assert_eq!(compute_ecc(&c4).unwrap().root(&c4), 2);
    assert_eq!(compute_tcl(&c4).unwrap().root(&c4), 2);

    let two_k2 = Cotree::parse("(0 (1 a b) (1 c d))").unwrap();
    assert_eq!(two_k2.to_graph().edges(), vec![(0, 1), (2, 3)]);

    let k3 = Cotree::parse("(1 (1 a b) c)").unwrap();
    assert_eq!(k3.to_graph().m(), 3);
    assert_eq!(compute_ecc(&k3).unwrap().root(&k3), 1);

    let two_k3 = Cotree::parse("(0 (1 (1 a b) c) (1 (1 d e) f))").unwrap();
    assert_eq!(compute_ecc(&two_k3).unwrap().root(&two_k3), 2);
    assert_eq!(compute_tcl(&two_k3).unwrap().root(&two_k3), 1);

    let k4 = Cotree::parse("(1 a (1 b (1 c d)))").unwrap();
    assert_eq!(compute_tcl(&k4).unwrap().root(&k4), 1);

    let k1 = Cotree::parse("a").unwrap();
    assert_eq!((k1.to_graph().n(), k1.to_graph().m()), (1, 0));
    assert_eq!(compute_tcl(&k1).unwrap().root(&k1), 1);
}

#[test]
fn random_cotrees_are_varied() {
    let mut r = rng(7);
    let sizes: Vec<usize> = (0..20)
        .map(|_| random_cotree(&mut r, 10).to_graph().m())
        .collect();
    assert!(sizes.iter().any(|&m| m != sizes[0]));
}
