use covpoly::engine::{
    ccp_bruteforce, ccp_bruteforce_hypergraph, eep_expansion_oracle, family_formula, kmatching_coefficient,
    EdgeSelection, Reductions,
};
use covpoly::graph::{family, FamilyKind};
use covpoly::poly::tri::{mono, x, y, z};
use covpoly::{Engine, EngineConfig, Hypergraph, Multigraph, TriPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::new(n, edges).unwrap()
}

fn random_hypergraph(rng: &mut ChaCha8Rng) -> Hypergraph {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=6);
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let arity = rng.gen_range(1..=4.min(n));
            (0..arity).map(|_| rng.gen_range(0..n)).collect()
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

fn from_eep(xi: &TriPoly) -> TriPoly {
    xi.substitute(2, &(mono(1, 1, 1, 1) - mono(1, 1, 1, 0))).unwrap()
}

#[test]
fn recurrence_matches_definition_on_random_multigraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut engine = Engine::default();
    for _ in 0..1000 {
        let g = random_multigraph(&mut rng, 8, 12);
        assert_eq!(engine.ccp(&g), ccp_bruteforce(&g, 20).unwrap(), "{g:?}");
    }
}

#[test]
fn every_reduction_setting_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let settings = [
        Reductions { pendant: false, articulation: false, bridge: false, component_split: false },
        Reductions { pendant: true, articulation: true, bridge: false, component_split: true },
        Reductions { pendant: false, articulation: false, bridge: true, component_split: true },
        Reductions { pendant: true, articulation: true, bridge: true, component_split: false },
    ];
    let mut engines: Vec<Engine> = settings
        .iter()
        .map(|&reductions| Engine::new(EngineConfig { reductions, ..EngineConfig::default() }))
        .collect();
    for _ in 0..400 {
        let g = random_multigraph(&mut rng, 7, 10);
        let want = ccp_bruteforce(&g, 20).unwrap();
        for e in &mut engines {
            assert_eq!(e.ccp(&g), want, "{:?} {g:?}", e.config().reductions);
        }
    }
}

#[test]
fn edge_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let g = random_multigraph(&mut rng, 8, 12);
        let want = Engine::default().ccp(&g);
        let first = EngineConfig { edge_selection: EdgeSelection::FirstEdge, ..EngineConfig::default() };
        assert_eq!(Engine::new(first).ccp(&g), want);
        for seed in 0..10 {
            let cfg = EngineConfig { edge_selection: EdgeSelection::Random(seed), ..EngineConfig::default() };
            assert_eq!(Engine::new(cfg).ccp(&g), want);
        }
    }
}

#[test]
fn eep_matches_expansion_and_substitution() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut engine = Engine::default();
    for _ in 0..500 {
        let g = random_multigraph(&mut rng, 7, 8);
        let xi = engine.eep(&g);
        assert_eq!(xi, eep_expansion_oracle(&g).unwrap(), "{g:?}");
        assert_eq!(from_eep(&xi), engine.ccp(&g));
    }
}

#[test]
fn hypergraph_recurrence_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut engine = Engine::default();
    for _ in 0..500 {
        let h = random_hypergraph(&mut rng);
        assert_eq!(engine.ccp_hypergraph(&h), ccp_bruteforce_hypergraph(&h, 20).unwrap(), "{h:?}");
    }
}

#[test]
fn family_closed_forms() {
    let mut engine = Engine::default();
    for n in 0..=9 {
        for kind in [FamilyKind::Path, FamilyKind::Star] {
            assert_eq!(family_formula(kind, n).unwrap(), engine.ccp(&family(kind, n).unwrap()), "{kind} {n}");
        }
        if n >= 1 {
            let c = family(FamilyKind::Cycle, n).unwrap();
            assert_eq!(family_formula(FamilyKind::Cycle, n).unwrap(), engine.ccp(&c), "cycle {n}");
        }
        if n <= 7 {
            let k = family(FamilyKind::Complete, n).unwrap();
            assert_eq!(family_formula(FamilyKind::Complete, n).unwrap(), engine.ccp(&k), "complete {n}");
        }
    }
}

#[test]
fn cycle_matching_coefficients() {
    let mut engine = Engine::default();
    for n in 2..=9usize {
        let c = engine.ccp(&family(FamilyKind::Cycle, n).unwrap());
        for k in 1..n {
            let want = kmatching_coefficient(n, k).unwrap();
            let got = c.coeff(&[(n - k) as i32, k as i32, k as i32]);
            assert_eq!(got, want, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn loops_and_parallel_edges() {
    let mut engine = Engine::default();
    let lp = Multigraph::new(1, [(0, 0)]).unwrap();
    assert_eq!(engine.ccp(&lp), x() + mono(1, 1, 1, 1));
    assert_eq!(ccp_bruteforce(&lp, 20).unwrap(), x() + mono(1, 1, 1, 1));
    let c2 = family(FamilyKind::Cycle, 2).unwrap();
    let want = mono(1, 2, 0, 0) + mono(2, 1, 1, 1) + mono(1, 1, 2, 1);
    assert_eq!(engine.ccp(&c2), want);
    assert_eq!(ccp_bruteforce(&c2, 20).unwrap(), want);
    assert_eq!(engine.eep(&lp), &x() * &(mono(1, 0, 0, 0) + y()) + z());
}
