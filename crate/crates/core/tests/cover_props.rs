use num_bigint::BigUint;
use proptest::prelude::*;
use tclq_core::generate::{nonisomorphic_graphs, random_graph, rng};
use tclq_core::ie::{
    alpha_table, chromatic_from_covers, chromatic_from_partitions, ie_chromatic_with_construction,
    ie_count_covers, ie_count_ordered_partitions, ie_count_partitions, ie_counters,
};
use tclq_core::oracle::{brute_chromatic, OracleBudget};
use tclq_core::{fast_table, lawler_table, vcc, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.05f64..0.95)
        .prop_map(|(n, seed, p)| random_graph(&mut rng(seed), n, p))
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn lawler_and_fast_agree_exhaustively() {
    for n in 0..=7 {
        for g in nonisomorphic_graphs(n) {
            let a = lawler_table(&g, false).unwrap();
            let b = fast_table(&g).unwrap();
            assert_eq!(a.values(), b.values(), "{:?}", g.edges());
        }
    }
}

#[test]
fn table_examples() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(lawler_table(&c4, false).unwrap().value(c4.vertices()), 2);
    assert_eq!(
        lawler_table(&Graph::complete(4), false)
            .unwrap()
            .value(VertexSet::full(4)),
        1
    );
    assert_eq!(lawler_table(&c5, false).unwrap().value(c5.vertices()), 3);
    assert_eq!(
        fast_table(&c5).unwrap().values(),
        lawler_table(&c5, false).unwrap().values()
    );
    let g = random_graph(&mut rng(1), 8, 0.5);
    assert_eq!(
        fast_table(&g).unwrap().values(),
        lawler_table(&g, false).unwrap().values()
    );

    let (k, parts) = vcc(&c4, c4.vertices());
    assert_eq!(k, 2);
    assert!(parts.iter().all(|p| p.len() == 2 && c4.is_clique(*p)));
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(vcc(&star, star.vertices()).0, 3);
    assert!(matches!(
        lawler_table(&Graph::empty(25), false),
        Err(tclq_core::Error::CapacityExceeded { .. })
    ));
}

#[test]
fn counting_examples() {
    let k1 = Graph::empty(1);
    let k2 = Graph::complete(2);
    assert_eq!(ie_count_covers(&k2, 1).unwrap(), big(0));
    assert_eq!(ie_count_covers(&k2, 2).unwrap(), big(1));
    assert_eq!(ie_count_covers(&k1, 1).unwrap(), big(1));
    assert_eq!(ie_count_covers(&Graph::complete(3), 3).unwrap(), big(1));
    assert_eq!(ie_count_partitions(&k1, 1).unwrap(), big(1));
    assert_eq!(ie_count_partitions(&k2, 1).unwrap(), big(0));
    assert_eq!(ie_count_partitions(&k2, 2).unwrap(), big(1));
    assert_eq!(ie_count_ordered_partitions(&k2, 2).unwrap(), big(2));
    assert_eq!(ie_count_partitions(&Graph::empty(2), 1).unwrap(), big(1));

    let (k, colour) = ie_chromatic_with_construction(&Graph::complete(3)).unwrap();
    assert_eq!(k, 3);
    assert_eq!(
        colour
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
        3
    );
    assert_eq!(
        ie_chromatic_with_construction(&Graph::empty(4)).unwrap(),
        (1, vec![0; 4])
    );
}

/// 2K2 has four maximal independent sets and
/// `c = [0, 0, 2, 4, 1]` by brute force: the count drops from `k = 3` to
/// `k = |M|`, so monotonicity only holds up to the superset bound below.
#[test]
fn cover_counts_of_two_k2() {
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let c = ie_counters(&g, 4).unwrap().c;
    assert_eq!(c, [0u64, 0, 2, 4, 1].map(big).to_vec());
}

fn brute_partitions(g: &Graph) -> Vec<u64> {
    // Restricted growth strings: vertex v gets a class in 0..=max+1.
    fn go(g: &Graph, v: usize, class: &mut Vec<usize>, used: usize, out: &mut Vec<u64>) {
        if v == g.n() {
            out[used] += 1;
            return;
        }
        for c in 0..=used {
            if (0..v).all(|u| class[u] != c || !g.has_edge(u, v)) {
                class.push(c);
                go(g, v + 1, class, used.max(c + 1), out);
                class.pop();
            }
        }
    }
    let mut out = vec![0; g.n() + 1];
    go(g, 0, &mut Vec::new(), 0, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tables_agree_and_match_brute_force(g in arb_graph(11)) {
        let a = lawler_table(&g, false).unwrap();
        let b = fast_table(&g).unwrap();
        prop_assert_eq!(a.values(), b.values());
        let chi = brute_chromatic(&g.complement(), OracleBudget::with_max_n(12)).unwrap();
        prop_assert_eq!(a.value(g.vertices()), chi);
        prop_assert_eq!(vcc(&g, g.vertices()).0, chi);
        prop_assert_eq!(chromatic_from_covers(&g.complement()).unwrap(), chi);
        prop_assert_eq!(chromatic_from_partitions(&g.complement()).unwrap(), chi);
    }

    #[test]
    fn tables_are_monotone_and_reconstruct(g in arb_graph(10)) {
        for t in [lawler_table(&g, false).unwrap(), fast_table(&g).unwrap()] {
            prop_assert_eq!(t.value(VertexSet::EMPTY), 0);
            for s in g.vertices().subsets() {
                prop_assert!(t.value(s) <= s.len());
                for v in s {
                    prop_assert!(t.value(s.without(v)) <= t.value(s));
                }
                let parts = t.partition(&g, s);
                prop_assert_eq!(parts.len(), t.value(s));
                prop_assert_eq!(parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p), s);
                prop_assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), s.len());
                prop_assert!(parts.iter().all(|&p| g.is_clique(p)));
            }
        }
    }

    #[test]
    fn pmc_marks_match_the_predicate(g in arb_graph(8)) {
        let t = lawler_table(&g, true).unwrap();
        for s in g.vertices().subsets() {
            prop_assert_eq!(t.is_pmc(s), Some(g.is_pmc(s)));
        }
    }

    #[test]
    fn alpha_counts_disjoint_mis(g in arb_graph(9)) {
        let alpha = alpha_table(&g).unwrap();
        let mis = g.enumerate_maximal_independent_sets();
        prop_assert_eq!(alpha[0], mis.len() as u64);
        for s in g.vertices().subsets() {
            let direct = mis.iter().filter(|m| !m.intersects(s)).count() as u64;
            prop_assert_eq!(alpha[s.index()], direct);
        }
    }

    #[test]
    fn partition_counts_match_enumeration(g in arb_graph(8)) {
        let brute = brute_partitions(&g);
        for (k, &expect) in brute.iter().enumerate() {
            prop_assert_eq!(ie_count_partitions(&g, k).unwrap(), big(expect));
        }
    }

    /// Each k-cover has |M| - k supersets of size k + 1, and each
    /// (k+1)-cover contains at most k + 1 k-covers.
    #[test]
    fn cover_counts_grow_by_supersets(g in arb_graph(8)) {
        let m = g.enumerate_maximal_independent_sets().len();
        let c = ie_counters(&g, m).unwrap().c;
        for k in 1..m {
            prop_assert!(&c[k + 1] * big(k as u64 + 1) >= &c[k] * big((m - k) as u64));
        }
        prop_assert_eq!(&c[m], &big(1));
    }

    #[test]
    fn constructive_colouring_is_proper(g in arb_graph(10)) {
        let (k, colour) = ie_chromatic_with_construction(&g).unwrap();
        prop_assert_eq!(k, brute_chromatic(&g, OracleBudget::default()).unwrap());
        let used: std::collections::BTreeSet<usize> = colour.iter().copied().collect();
        prop_assert!(used.into_iter().eq(0..k));
        prop_assert!(g.edges().iter().all(|&(u, v)| colour[u] != colour[v]));
    }
}
