//! Cross-checking suites behind `covpoly verify`.
//!
//! Cases are generated up front from the seed and run on a worker pool; the
//! reported counterexample is always the lowest-indexed failing case, so the
//! output does not depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::ValueEnum;
use covpoly::engine::{
    articulation_join, bridge_reduction, ccp_bruteforce, ccp_bruteforce_hypergraph, cycle_recurrence, family_formula,
    path_recurrence, star_recurrence, StarTerm,
};
use covpoly::forest::check_conversions;
use covpoly::atlas::free_trees;
use covpoly::graph::{edgelist, family, FamilyKind};
use covpoly::specializations::{
    chromatic, cover_and_independence_bruteforce, from_eep, independence, proper_colorings_bruteforce, to_eep,
    vertex_cover,
};
use covpoly::{Engine, EngineConfig, Hypergraph, Multigraph};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Oracles,
    Families,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mutant {
    /// Star recurrence with `(yz − z)` in place of `(yz − y)`.
    Star,
}

const RANDOM_CASES: usize = 200;
const FAMILY_BOUND: usize = 9;
const COMPLETE_BOUND: usize = 7;

enum Check {
    StarRecurrence(usize),
    PathRecurrence(usize),
    CycleRecurrence(usize),
    RoundTrip(Multigraph),
    Articulation(Multigraph, Multigraph),
    Bridge(Multigraph, Multigraph),
    Conversions(Multigraph),
    BruteForce(Multigraph),
    Colorings(Multigraph),
    Covers(Multigraph),
    Hyper(Hypergraph),
    Family(FamilyKind, usize),
}

struct Case {
    suite: &'static str,
    check: Check,
}

#[derive(Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub case: String,
    pub detail: String,
    /// The failing input as edge-list text.
    pub graph: String,
}

#[derive(Serialize)]
pub struct Outcome {
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<Counterexample>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serializes")
    }

    pub fn to_text(&self) -> String {
        match &self.first_failure {
            None => format!("pass: {} cases, seed {}", self.cases, self.seed),
            Some(f) => format!(
                "FAIL: {} of {} cases, seed {}\nfirst failure: {} / {}: {}\ncounterexample:\n{}",
                self.failures,
                self.cases,
                self.seed,
                f.suite,
                f.case,
                f.detail,
                f.graph.trim_end()
            ),
        }
    }
}

fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::new(n, edges).expect("endpoints in range")
}

fn random_simple(rng: &mut ChaCha8Rng, max_n: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.2..0.8);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Multigraph::new(n, edges).expect("endpoints in range")
}

fn random_hypergraph(rng: &mut ChaCha8Rng) -> Hypergraph {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=6);
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let arity = rng.gen_range(1..=4.min(n));
            let mut e: Vec<usize> = (0..n).collect();
            for i in 0..arity {
                let j = rng.gen_range(i..n);
                e.swap(i, j);
            }
            e.truncate(arity);
            e
        })
        .collect();
    Hypergraph::new(n, edges).expect("endpoints in range")
}

/// `g` and `h` sharing vertex 0 of each. Loops of `h` at its vertex 0 are dropped.
fn glue(g: &Multigraph, h: &Multigraph) -> (Multigraph, Multigraph) {
    let shift = g.n() - 1;
    let map = |v: usize| if v == 0 { 0 } else { v + shift };
    let h = Multigraph::new(h.n(), h.edges().iter().filter(|e| !(e.a == 0 && e.b == 0)).map(|e| (e.a, e.b)))
        .expect("subset of valid edges");
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.a, e.b))
        .chain(h.edges().iter().map(|e| (map(e.a), map(e.b))));
    (Multigraph::new(g.n() + h.n() - 1, edges).expect("endpoints in range"), h)
}

fn cases(suite: Suite, seed: u64) -> Vec<Case> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Identities) {
        let push = |out: &mut Vec<Case>, check| out.push(Case { suite: "identities", check });
        for n in 0..=FAMILY_BOUND {
            push(&mut out, Check::StarRecurrence(n));
            push(&mut out, Check::PathRecurrence(n));
        }
        for n in 1..=FAMILY_BOUND {
            push(&mut out, Check::CycleRecurrence(n));
        }
        for _ in 0..RANDOM_CASES {
            push(&mut out, Check::RoundTrip(random_multigraph(&mut rng, 7, 10)));
        }
        for _ in 0..RANDOM_CASES / 4 {
            let a = random_multigraph(&mut rng, 5, 6);
            let b = random_multigraph(&mut rng, 5, 6);
            push(&mut out, Check::Articulation(a.clone(), b.clone()));
            push(&mut out, Check::Bridge(a, b));
        }
        for n in 1..=8 {
            for t in free_trees(n).expect("within the tree cap") {
                push(&mut out, Check::Conversions(t));
            }
        }
    }
    if want(Suite::Oracles) {
        let push = |out: &mut Vec<Case>, check| out.push(Case { suite: "oracles", check });
        for _ in 0..RANDOM_CASES {
            push(&mut out, Check::BruteForce(random_multigraph(&mut rng, 8, 12)));
        }
        for _ in 0..RANDOM_CASES / 2 {
            push(&mut out, Check::Colorings(random_simple(&mut rng, 6)));
        }
        for _ in 0..RANDOM_CASES / 2 {
            push(&mut out, Check::Covers(random_multigraph(&mut rng, 8, 10)));
        }
        for _ in 0..RANDOM_CASES {
            push(&mut out, Check::Hyper(random_hypergraph(&mut rng)));
        }
    }
    if want(Suite::Families) {
        for kind in [FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star, FamilyKind::Complete] {
            let top = if kind == FamilyKind::Complete { COMPLETE_BOUND } else { FAMILY_BOUND };
            let low = usize::from(kind == FamilyKind::Cycle);
            for n in low..=top {
                out.push(Case {
                    suite: "families",
                    check: Check::Family(kind, n),
                });
            }
        }
    }
    out
}

fn ok(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn fam(kind: FamilyKind, n: usize) -> Multigraph {
    family(kind, n).expect("family member exists")
}

/// Name, counterexample text and result of a case.
type CaseResult = (String, String, Result<(), String>);

fn run_case(check: &Check, engine: &mut Engine, mutant: Option<Mutant>) -> CaseResult {
    let cap = engine.config().brute_force_edge_cap;
    match check {
        Check::StarRecurrence(n) => {
            let term = if mutant == Some(Mutant::Star) { StarTerm::Misprinted } else { StarTerm::Corrected };
            let g = fam(FamilyKind::Star, *n);
            let r = ok(star_recurrence(*n, term) == engine.ccp(&g), || "star recurrence disagrees with the engine".into());
            (format!("star recurrence S{n}"), edgelist::write_multigraph(&g), r)
        }
        Check::PathRecurrence(n) => {
            let g = fam(FamilyKind::Path, *n);
            let r = ok(path_recurrence(*n) == engine.ccp(&g), || "path recurrence disagrees with the engine".into());
            (format!("path recurrence P{n}"), edgelist::write_multigraph(&g), r)
        }
        Check::CycleRecurrence(n) => {
            let g = fam(FamilyKind::Cycle, *n);
            let r = match cycle_recurrence(*n) {
                Ok(p) => ok(p == engine.ccp(&g), || "cycle recurrence disagrees with the engine".into()),
                Err(e) => Err(e.to_string()),
            };
            (format!("cycle recurrence C{n}"), edgelist::write_multigraph(&g), r)
        }
        Check::RoundTrip(g) => {
            let table = engine.coefficient_table(g);
            let xi = engine.eep(g);
            let r = ok(to_eep(&table) == xi, || "to_eep differs from the eep recurrence".into())
                .and_then(|_| ok(from_eep(&xi) == table.to_poly(), || "from_eep does not recover C".into()));
            ("eep round trip".into(), edgelist::write_multigraph(g), r)
        }
        Check::Articulation(a, b) => {
            let (joined, b) = glue(a, b);
            let parts = [a, &b].map(|g| (engine.ccp(g), engine.ccp(&g.delete_vertex(0).expect("vertex 0 exists"))));
            let r = match articulation_join(&parts[0].0, &parts[0].1, &parts[1].0, &parts[1].1) {
                Ok(p) => ok(p == engine.ccp(&joined), || "articulation join disagrees".into()),
                Err(e) => Err(e.to_string()),
            };
            ("articulation join".into(), edgelist::write_multigraph(&joined), r)
        }
        Check::Bridge(a, b) => {
            let apart = a.disjoint_union(b);
            let v2 = a.n();
            let edges = apart.edges().iter().map(|e| (e.a, e.b)).chain([(0, v2)]);
            let g = Multigraph::new(apart.n(), edges).expect("endpoints in range");
            let e = g.edges().iter().position(|e| (e.a, e.b) == (0, v2)).expect("bridge present");
            let minus = engine.ccp(&apart);
            let c1 = engine.ccp(&g.delete_vertex(0).expect("vertex exists"));
            let c2 = engine.ccp(&g.delete_vertex(v2).expect("vertex exists"));
            let dagger = engine.ccp(&g.extract_edge(e).expect("edge exists"));
            let r = match bridge_reduction(&minus, &c1, &c2, &dagger) {
                Ok(p) => ok(p == engine.ccp(&g), || "bridge reduction disagrees".into()),
                Err(e) => Err(e.to_string()),
            };
            ("bridge reduction".into(), edgelist::write_multigraph(&g), r)
        }
        Check::Conversions(t) => {
            let r = check_conversions(t, engine).map_err(|e| e.to_string());
            ("forest conversions".into(), edgelist::write_multigraph(t), r)
        }
        Check::BruteForce(g) => {
            let r = match ccp_bruteforce(g, cap) {
                Ok(p) => ok(p == engine.ccp(g), || "engine differs from the definition".into()),
                Err(e) => Err(e.to_string()),
            };
            ("brute force".into(), edgelist::write_multigraph(g), r)
        }
        Check::Colorings(g) => {
            let chi = chromatic(&engine.ccp(g));
            let r = (0..=4u32).try_for_each(|q| {
                let got = chi.evaluate_int(&[BigInt::from(q)]).map_err(|e| e.to_string())?;
                let want = proper_colorings_bruteforce(g, q);
                ok(got == want, || format!("chromatic({q}) = {got}, but {want} colorings"))
            });
            ("proper colorings".into(), edgelist::write_multigraph(g), r)
        }
        Check::Covers(g) => {
            let table = engine.coefficient_table(g);
            let (cover, indep) = cover_and_independence_bruteforce(g);
            let r = ok(vertex_cover(&table) == cover, || "vertex cover polynomial differs".into())
                .and_then(|_| ok(independence(&table) == indep, || "independence polynomial differs".into()));
            ("covers and independent sets".into(), edgelist::write_multigraph(g), r)
        }
        Check::Hyper(h) => {
            let r = match ccp_bruteforce_hypergraph(h, cap) {
                Ok(p) => ok(p == engine.ccp_hypergraph(h), || "hypergraph recurrence differs from the definition".into()),
                Err(e) => Err(e.to_string()),
            };
            ("hypergraph brute force".into(), edgelist::write(h), r)
        }
        Check::Family(kind, n) => {
            let g = fam(*kind, *n);
            let got = engine.ccp(&g);
            let r = match family_formula(*kind, *n) {
                Ok(p) => ok(p == got, || "closed form disagrees with the engine".into()),
                Err(e) => Err(e.to_string()),
            }
            .and_then(|_| match ccp_bruteforce(&g, cap) {
                Ok(p) => ok(p == got, || "engine differs from the definition".into()),
                Err(_) => Ok(()),
            });
            (format!("{kind} {n}"), edgelist::write_multigraph(&g), r)
        }
    }
}

pub fn run(suite: Suite, mutant: Option<Mutant>, seed: u64, workers: usize, cfg: &EngineConfig) -> Outcome {
    let cases = cases(suite, seed);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<CaseResult>>> = Mutex::new((0..cases.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers.max(1) {
            s.spawn(|| {
                let mut engine = Engine::new(cfg.clone());
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(case) = cases.get(i) else { break };
                    let r = run_case(&case.check, &mut engine, mutant);
                    results.lock().expect("no worker panics")[i] = Some(r);
                }
            });
        }
    });
    let results = results.into_inner().expect("no worker panics");
    let mut failures = 0;
    let mut first_failure = None;
    for (case, r) in cases.iter().zip(results) {
        let (name, graph, r) = r.expect("every case ran");
        if let Err(detail) = r {
            failures += 1;
            first_failure.get_or_insert(Counterexample {
                suite: case.suite,
                case: name,
                detail,
                graph,
            });
        }
    }
    Outcome {
        seed,
        cases: cases.len(),
        failures,
        first_failure,
    }
}
