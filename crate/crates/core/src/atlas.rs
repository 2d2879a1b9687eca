//! Enumeration of unlabeled trees and small simple graphs, and searches for
//! non-isomorphic graphs that share a polynomial.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::engine::{Engine, EngineConfig};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_key, graph6, CanonicalKey, Multigraph};
use crate::specializations::{bivariate_chromatic, chromatic, potts};

pub const MAX_TREE_ORDER: usize = 14;

/// Vertex cap for canonical labeling of general graphs during searches.
pub const SEARCH_CANONICAL_CAP: usize = 16;

/// Largest order accepted by [`simple_graphs`].
pub const MAX_GENERATED_ORDER: usize = 9;

fn canonical(g: &Multigraph) -> Result<(CanonicalKey, Multigraph)> {
    let key = canonical_key(g, SEARCH_CANONICAL_CAP)?;
    let (form, _) = canonical_form(g, SEARCH_CANONICAL_CAP)?;
    Ok((key, form))
}

/// One tree per isomorphism class on `n` vertices, canonically labeled and
/// sorted by canonical key.
pub fn free_trees(n: usize) -> Result<Vec<Multigraph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::CapExceeded {
            what: "tree order (1..=14)",
            cap: MAX_TREE_ORDER,
            got: n,
        });
    }
    let mut level: BTreeMap<CanonicalKey, Multigraph> = BTreeMap::new();
    let k1 = Multigraph::empty(1);
    level.insert(canonical(&k1)?.0, k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            // a new leaf on each vertex; every tree on `size` vertices arises this way
            for v in 0..size - 1 {
                let edges = t.edges().iter().map(|e| (e.a, e.b)).chain([(v, size - 1)]);
                let child = Multigraph::new(size, edges)?;
                let (key, form) = canonical(&child)?;
                next.entry(key).or_insert(form);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// All simple graphs on `n` vertices with at most `max_m` edges, one per
/// isomorphism class, ordered by edge count and then canonical key.
/// Generated level by level by adding one edge and discarding isomorphic copies.
pub fn simple_graphs(n: usize, max_m: usize) -> Result<Vec<Multigraph>> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::CapExceeded {
            what: "generated graph order",
            cap: MAX_GENERATED_ORDER,
            got: n,
        });
    }
    let top = (n * n.saturating_sub(1) / 2).min(max_m);
    let empty = Multigraph::empty(n);
    let mut level: BTreeMap<CanonicalKey, Multigraph> = BTreeMap::new();
    level.insert(canonical(&empty)?.0, empty);
    let mut out: Vec<Multigraph> = level.values().cloned().collect();
    for _ in 1..=top {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if g.edges().iter().any(|e| e.a == u && e.b == v) {
                        continue;
                    }
                    let edges = g.edges().iter().map(|e| (e.a, e.b)).chain([(u, v)]);
                    let child = Multigraph::new(n, edges)?;
                    let (key, form) = canonical(&child)?;
                    next.entry(key).or_insert(form);
                }
            }
        }
        out.extend(next.values().cloned());
        level = next;
    }
    Ok(out)
}

/// The polynomial a collision search compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fingerprint {
    Ccp,
    Eep,
    BivariateChromatic,
    Chromatic,
    Potts,
}

impl Fingerprint {
    pub const ALL: [Fingerprint; 5] = [
        Fingerprint::Ccp,
        Fingerprint::Eep,
        Fingerprint::BivariateChromatic,
        Fingerprint::Chromatic,
        Fingerprint::Potts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fingerprint::Ccp => "ccp",
            Fingerprint::Eep => "eep",
            Fingerprint::BivariateChromatic => "bivariate_chromatic",
            Fingerprint::Chromatic => "chromatic",
            Fingerprint::Potts => "potts",
        }
    }

    /// Canonical JSON of the polynomial.
    pub fn compute(self, g: &Multigraph, engine: &mut Engine) -> String {
        match self {
            Fingerprint::Ccp => engine.ccp(g).to_json(),
            Fingerprint::Eep => engine.eep(g).to_json(),
            Fingerprint::BivariateChromatic => bivariate_chromatic(&engine.coefficient_table(g)).to_json(),
            Fingerprint::Chromatic => chromatic(&engine.ccp(g)).to_json(),
            Fingerprint::Potts => potts(&engine.ccp(g)).to_json(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fingerprint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fingerprint::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown fingerprint {s:?}")))
    }
}

/// A canonically labeled graph as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphEntry {
    pub n: usize,
    pub m: usize,
    /// Hex of the canonical key.
    pub key: String,
    pub graph6: Option<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphEntry {
    fn new(key: &CanonicalKey, form: &Multigraph) -> Self {
        Self {
            n: form.n(),
            m: form.m(),
            key: key.to_hex(),
            graph6: graph6::encode(form).ok(),
            edges: form.edges().iter().map(|e| (e.a, e.b)).collect(),
        }
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::new(self.n, self.edges.iter().copied()).expect("entry edges are in range")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bucket {
    pub n: usize,
    pub m: usize,
    pub polynomial: serde_json::Value,
    pub graphs: Vec<GraphEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub classes: usize,
    pub collision_buckets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionSummary {
    pub graphs: usize,
    pub classes: usize,
    /// Number of polynomial classes of each size.
    pub class_sizes: BTreeMap<usize, usize>,
    pub collision_buckets: usize,
    pub colliding_pairs: usize,
    /// `(n, m)` of the first colliding bucket in `(n, m)` order.
    pub minimal_pair: Option<(usize, usize)>,
    pub by_order: Vec<OrderSummary>,
}

/// Graphs grouped by polynomial; only buckets with two or more
/// non-isomorphic graphs are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionReport {
    pub fingerprint: Fingerprint,
    pub summary: CollisionSummary,
    pub buckets: Vec<Bucket>,
}

impl CollisionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        writeln!(out, "fingerprint: {}", self.fingerprint).unwrap();
        writeln!(out, "{:>4} {:>8} {:>8} {:>8}", "n", "graphs", "classes", "buckets").unwrap();
        for row in &s.by_order {
            writeln!(out, "{:>4} {:>8} {:>8} {:>8}", row.n, row.graphs, row.classes, row.collision_buckets).unwrap();
        }
        writeln!(
            out,
            "total: {} graphs, {} classes, {} collision buckets, {} colliding pairs",
            s.graphs, s.classes, s.collision_buckets, s.colliding_pairs
        )
        .unwrap();
        match s.minimal_pair {
            Some((n, m)) => writeln!(out, "first collision: n = {n}, m = {m}").unwrap(),
            None => writeln!(out, "no collisions").unwrap(),
        }
        out
    }
}

struct Evaluated {
    key: CanonicalKey,
    entry: GraphEntry,
    prints: Vec<String>,
}

/// Canonicalizes and fingerprints every graph on `workers` threads, each with
/// its own engine. Output order follows the input.
fn evaluate(graphs: &[Multigraph], prints: &[Fingerprint], workers: usize, cfg: &EngineConfig) -> Result<Vec<Evaluated>> {
    let next = AtomicUsize::new(0);
    let workers = workers.max(1).min(graphs.len().max(1));
    let mut gathered: Vec<(usize, Result<Evaluated>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut engine = Engine::new(cfg.clone());
                    let mut done = Vec::new();
                    loop {
                        let idx = next.fetch_add(1, Ordering::Relaxed);
                        let Some(g) = graphs.get(idx) else { break };
                        let item = canonical(g).map(|(key, form)| Evaluated {
                            entry: GraphEntry::new(&key, &form),
                            prints: prints.iter().map(|p| p.compute(&form, &mut engine)).collect(),
                            key,
                        });
                        done.push((idx, item));
                    }
                    done
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    gathered.sort_by_key(|(idx, _)| *idx);
    gathered.into_iter().map(|(_, r)| r).collect()
}

/// Distinct isomorphism classes, keyed by canonical key.
fn distinct(items: Vec<Evaluated>) -> BTreeMap<CanonicalKey, Evaluated> {
    let mut out = BTreeMap::new();
    for item in items {
        out.entry(item.key.clone()).or_insert(item);
    }
    out
}

/// Buckets the graphs by `fingerprint`. Isomorphic inputs count once.
pub fn collide(graphs: &[Multigraph], fingerprint: Fingerprint, workers: usize, cfg: &EngineConfig) -> Result<CollisionReport> {
    let classes = distinct(evaluate(graphs, &[fingerprint], workers, cfg)?);
    let mut buckets: BTreeMap<(usize, usize, String), Vec<GraphEntry>> = BTreeMap::new();
    for item in classes.into_values() {
        let slot = (item.entry.n, item.entry.m, item.prints[0].clone());
        buckets.entry(slot).or_default().push(item.entry);
    }
    let mut class_sizes = BTreeMap::new();
    let mut by_order: BTreeMap<usize, OrderSummary> = BTreeMap::new();
    let mut listed = Vec::new();
    let mut total = 0;
    for ((n, m, print), mut entries) in buckets.iter().map(|(k, v)| (k.clone(), v.clone())) {
        entries.sort();
        total += entries.len();
        *class_sizes.entry(entries.len()).or_insert(0) += 1;
        let row = by_order.entry(n).or_insert(OrderSummary {
            n,
            graphs: 0,
            classes: 0,
            collision_buckets: 0,
        });
        row.graphs += entries.len();
        row.classes += 1;
        if entries.len() >= 2 {
            row.collision_buckets += 1;
            listed.push(Bucket {
                n,
                m,
                polynomial: serde_json::from_str(&print).expect("fingerprints are JSON"),
                graphs: entries,
            });
        }
    }
    let colliding_pairs = listed.iter().map(|b| b.graphs.len() * (b.graphs.len() - 1) / 2).sum();
    let summary = CollisionSummary {
        graphs: total,
        classes: buckets.len(),
        class_sizes,
        collision_buckets: listed.len(),
        colliding_pairs,
        minimal_pair: listed.first().map(|b| (b.n, b.m)),
        by_order: by_order.into_values().collect(),
    };
    Ok(CollisionReport {
        fingerprint,
        summary,
        buckets: listed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPair {
    pub n: usize,
    pub m: usize,
    pub pair: (GraphEntry, GraphEntry),
}

/// The first collision in `(n, m)` order, with the two smallest graphs of its
/// bucket by canonical key. Graphs are processed one `(n, m)` group at a time
/// so the scan stops as soon as a group collides.
pub fn minimal_pair_scan(
    graphs: &[Multigraph],
    fingerprint: Fingerprint,
    workers: usize,
    cfg: &EngineConfig,
) -> Result<Option<MinimalPair>> {
    let mut groups: BTreeMap<(usize, usize), Vec<Multigraph>> = BTreeMap::new();
    for g in graphs {
        groups.entry((g.n(), g.m())).or_default().push(g.clone());
    }
    for ((n, m), group) in groups {
        let report = collide(&group, fingerprint, workers, cfg)?;
        if let Some(bucket) = report.buckets.into_iter().next() {
            let mut it = bucket.graphs.into_iter();
            let a = it.next().expect("bucket has two graphs");
            let b = it.next().expect("bucket has two graphs");
            return Ok(Some(MinimalPair { n, m, pair: (a, b) }));
        }
    }
    Ok(None)
}

/// Pairs of non-isomorphic graphs that `a` does not distinguish but `b` does.
pub fn crosscheck_distinctive_power(
    graphs: &[Multigraph],
    a: Fingerprint,
    b: Fingerprint,
    workers: usize,
    cfg: &EngineConfig,
) -> Result<Vec<(GraphEntry, GraphEntry)>> {
    let classes = distinct(evaluate(graphs, &[a, b], workers, cfg)?);
    let mut by_a: BTreeMap<&str, Vec<&Evaluated>> = BTreeMap::new();
    for item in classes.values() {
        by_a.entry(item.prints[0].as_str()).or_default().push(item);
    }
    let mut out = BTreeSet::new();
    for bucket in by_a.values() {
        for (i, x) in bucket.iter().enumerate() {
            for y in &bucket[i + 1..] {
                if x.prints[1] != y.prints[1] {
                    let (p, q) = if x.entry <= y.entry { (x, y) } else { (y, x) };
                    out.insert((p.entry.clone(), q.entry.clone()));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};

    #[test]
    fn tree_counts() {
        let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(free_trees(n + 1).unwrap().len(), w, "n = {}", n + 1);
        }
        assert!(free_trees(0).is_err());
        assert!(free_trees(15).is_err());
    }

    #[test]
    fn graph_counts() {
        let totals = [1, 2, 4, 11, 34, 156];
        for (n, &w) in totals.iter().enumerate() {
            assert_eq!(simple_graphs(n + 1, usize::MAX).unwrap().len(), w, "n = {}", n + 1);
        }
        let by_m: Vec<usize> = (0..=6)
            .map(|m| simple_graphs(5, 10).unwrap().iter().filter(|g| g.m() == m).count())
            .collect();
        assert_eq!(by_m, [1, 1, 2, 4, 6, 6, 6]);
    }

    #[test]
    fn collisions_small() {
        let cfg = EngineConfig::default();
        let trees = free_trees(5).unwrap();
        let report = collide(&trees, Fingerprint::Chromatic, 2, &cfg).unwrap();
        assert_eq!(report.summary.collision_buckets, 1);
        assert_eq!(report.buckets[0].graphs.len(), 3);
        assert_eq!(report.summary.colliding_pairs, 3);
        let report = collide(&trees, Fingerprint::Ccp, 2, &cfg).unwrap();
        assert_eq!(report.summary.collision_buckets, 0);
        assert!(report.summary_text().contains("no collisions"));
        let single = [family(FamilyKind::Path, 4).unwrap()];
        assert!(crosscheck_distinctive_power(&single, Fingerprint::Chromatic, Fingerprint::Ccp, 1, &cfg)
            .unwrap()
            .is_empty());
        let pairs = crosscheck_distinctive_power(&trees, Fingerprint::Chromatic, Fingerprint::Ccp, 3, &cfg).unwrap();
        assert_eq!(pairs.len(), 3);
        let dup = [family(FamilyKind::Path, 3).unwrap(), family(FamilyKind::Star, 2).unwrap()];
        assert_eq!(collide(&dup, Fingerprint::Ccp, 1, &cfg).unwrap().summary.graphs, 1);
    }
}
