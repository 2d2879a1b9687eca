use covpoly::graph::{canonical_key, graph6};
use covpoly::invariants::InvariantReport;
use covpoly::specializations::{from_eep, to_eep};
use covpoly::{Engine, Multigraph};
use num_bigint::BigInt;
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |e| Multigraph::new(n, e).unwrap())
    })
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p);
            Multigraph::new(n, edges).unwrap()
        })
    })
}

fn relabeled(g: &Multigraph, seed: u64) -> Multigraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut s = seed;
    for i in (1..perm.len()).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    g.relabel(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn table_is_consistent(g in multigraph(7, 10)) {
        let table = Engine::default().coefficient_table(&g);
        let total: BigInt = table.entries().map(|(_, c)| c.clone()).sum();
        prop_assert_eq!(total, BigInt::from(1u64) << g.m());
        let s = g.component_stats();
        prop_assert_eq!(s.k, s.c + s.i);
        prop_assert_eq!(table.get(g.n() as u32, 0, 0), BigInt::from(1));
        prop_assert_eq!(table.get(s.k as u32, g.m() as u32, s.c as u32), BigInt::from(1));
    }

    #[test]
    fn ccp_multiplies_over_disjoint_union(a in multigraph(5, 6), b in multigraph(4, 6)) {
        let mut engine = Engine::default();
        prop_assert_eq!(engine.ccp(&a.disjoint_union(&b)), &engine.ccp(&a) * &engine.ccp(&b));
    }

    #[test]
    fn ccp_and_key_ignore_labels(g in multigraph(8, 12), seed in any::<u64>()) {
        let h = relabeled(&g, seed);
        let mut engine = Engine::default();
        prop_assert_eq!(engine.ccp(&g), engine.ccp(&h));
        prop_assert_eq!(canonical_key(&g, 8).unwrap(), canonical_key(&h, 8).unwrap());
    }

    #[test]
    fn eep_round_trips(g in multigraph(7, 9)) {
        let mut engine = Engine::default();
        let table = engine.coefficient_table(&g);
        prop_assert_eq!(from_eep(&to_eep(&table)), table.to_poly());
    }

    #[test]
    fn reports_match_graph(g in simple_graph(8)) {
        let c = Engine::default().ccp(&g);
        prop_assert_eq!(InvariantReport::from_polynomial(&c).unwrap(), InvariantReport::from_graph(&g));
    }

    #[test]
    fn graph6_round_trips(g in simple_graph(12)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }
}
