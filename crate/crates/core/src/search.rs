//! Exhaustive scans over small labeled graphs and digraphs.
//!
//! Enumeration is by adjacency bitmask: bit `t` of a mask selects pair `t` of
//! [`vertex_pairs`]/[`arc_pairs`], and masks run `0, 1, 2, ...`, so every
//! labeled simple structure appears exactly once in a fixed order. No
//! isomorphism rejection is attempted: the predicates are label-invariant, so
//! duplicate isomorphs cost only time, and labeled counts double as a
//! cross-check (for example Cayley's formula for trees).
//!
//! [`run_search`] additionally short-cuts two downward-closed undirected
//! classes instead of filtering the full power set: trees are generated from
//! Prüfer sequences and forests by a depth-first scan over edge slots that
//! prunes as soon as a cycle would close. Either way each structure is
//! re-decoded from its bitmask before evaluation, so witnesses are rendered
//! identically on every path, and results are merged and sorted so output is
//! independent of worker scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::graphs::{vertex_pairs, AnyGraph, Digraph, Graph};
use crate::inequalities::{
    digraph_walk_inequality, zagreb_inequality, Applicability, InequalityReport, ZagrebReport,
};
use crate::orderings::{ordering_relation, OrderingVerdict};
use crate::walks::walk_profile;

/// Largest `max_n` accepted without [`SearchSpec::override_cap`].
pub const DEFAULT_UNDIRECTED_CAP: usize = 8;
/// Largest `max_n` accepted without [`SearchSpec::override_cap`] for digraphs.
pub const DEFAULT_DIRECTED_CAP: usize = 5;
/// Absolute ceiling: undirected masks must fit in 64 bits (n=11 -> 55 bits).
pub const MAX_UNDIRECTED_N: usize = 11;
/// Absolute ceiling: directed masks must fit in 64 bits (n=8 -> 56 bits).
pub const MAX_DIRECTED_N: usize = 8;

/// Which structures to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    Connected,
    Tree,
    Forest,
    Bipartite,
    Chemical,
    DegreeBalanced,
}

/// What to look for.
///
/// `ZagrebViolation` and `WalkIneqViolation` hunt for counterexamples (the
/// latter is a theorem-backed bug detector and must never match);
/// `ZagrebEquality` collects equality cases; `OrderingCensus` only tallies
/// how the walk vectors `e_k` and `s_l` are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    ZagrebViolation,
    ZagrebEquality,
    WalkIneqViolation { k: usize, l: usize },
    OrderingCensus { k: usize, l: usize },
}

impl Predicate {
    /// True for predicates whose matches indicate a violated inequality.
    pub fn is_violation_hunt(&self) -> bool {
        matches!(
            self,
            Predicate::ZagrebViolation | Predicate::WalkIneqViolation { .. }
        )
    }
}

/// A complete description of one search.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub directed: bool,
    pub min_n: usize,
    pub max_n: usize,
    pub class_filter: ClassFilter,
    pub predicate: Predicate,
    /// Maximum number of witnesses to keep (matches beyond it are counted).
    pub limit: usize,
    /// Lifts the default size cap; the 64-bit mask ceiling still applies.
    pub override_cap: bool,
}

/// Report attached to a witness, depending on the predicate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum WitnessReport {
    Zagreb(ZagrebReport),
    Inequality(InequalityReport),
}

/// One matching structure: its edge-list text and the report that matched.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub graph: String,
    pub report: WitnessReport,
}

/// Outcome of a search.
///
/// `examined` counts structures passing the class filter, `matched` all
/// predicate matches (even beyond `limit`). `witnesses` holds the first
/// matches in enumeration order, smallest structures first. `summary` carries
/// per-class tallies: ordering census buckets (`both`, `similarly_only`,
/// `conversely_only`, `neither`) for `OrderingCensus`, otherwise the class
/// flags of the matched structures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub examined: u64,
    pub matched: u64,
    pub witnesses: Vec<Witness>,
    pub summary: BTreeMap<String, u64>,
}

/// Checks range bounds, caps and filter/predicate compatibility.
pub fn validate(spec: &SearchSpec) -> Result<(), Error> {
    if spec.min_n < 1 || spec.min_n > spec.max_n {
        return Err(Error::InvalidSearchSpec {
            msg: format!("need 1 <= min_n <= max_n, got {}..={}", spec.min_n, spec.max_n),
        });
    }
    if spec.directed {
        if matches!(
            spec.class_filter,
            ClassFilter::Tree | ClassFilter::Forest | ClassFilter::Bipartite | ClassFilter::Chemical
        ) {
            return Err(Error::InvalidSearchSpec {
                msg: format!("class filter {:?} applies to undirected graphs only", spec.class_filter),
            });
        }
        if matches!(
            spec.predicate,
            Predicate::ZagrebViolation | Predicate::ZagrebEquality
        ) {
            return Err(Error::InvalidSearchSpec {
                msg: "Zagreb predicates apply to undirected graphs only".into(),
            });
        }
    } else if spec.class_filter == ClassFilter::DegreeBalanced {
        return Err(Error::InvalidSearchSpec {
            msg: "class filter DegreeBalanced applies to digraphs only".into(),
        });
    }
    let (default_cap, hard_cap, kind) = if spec.directed {
        (DEFAULT_DIRECTED_CAP, MAX_DIRECTED_N, "directed")
    } else {
        (DEFAULT_UNDIRECTED_CAP, MAX_UNDIRECTED_N, "undirected")
    };
    if spec.max_n > hard_cap {
        return Err(Error::CapExceeded {
            msg: format!("max_n {} exceeds the {kind} ceiling of {hard_cap}", spec.max_n),
        });
    }
    if spec.max_n > default_cap && !spec.override_cap {
        return Err(Error::CapExceeded {
            msg: format!(
                "max_n {} exceeds the default {kind} cap of {default_cap}; pass the override to proceed",
                spec.max_n
            ),
        });
    }
    Ok(())
}

/// Streams every structure in range passing the class filter, in mask order.
///
/// This is the reference enumeration: a plain filtered scan of all bitmasks.
/// [`run_search`] agrees with it but may generate restricted classes directly.
pub fn enumerate(spec: &SearchSpec) -> Result<impl Iterator<Item = AnyGraph>, Error> {
    validate(spec)?;
    let SearchSpec {
        directed,
        min_n,
        max_n,
        class_filter,
        ..
    } = *spec;
    Ok((min_n..=max_n).flat_map(move |n| {
        (0..1u64 << mask_bits(directed, n)).filter_map(move |mask| {
            let g = decode(directed, n, mask);
            class_passes(class_filter, &g).then_some(g)
        })
    }))
}

/// Runs the search to completion; see [`run_search_with_progress`].
pub fn run_search(spec: &SearchSpec) -> Result<SearchResult, Error> {
    run_search_with_progress(spec, |_, _, _| {})
}

/// Runs the search, invoking `progress(n, examined, matched)` with cumulative
/// counts after each completed vertex count.
pub fn run_search_with_progress<F>(spec: &SearchSpec, mut progress: F) -> Result<SearchResult, Error>
where
    F: FnMut(usize, u64, u64),
{
    validate(spec)?;
    let mut acc = Accumulator::new(spec.limit);
    for n in spec.min_n..=spec.max_n {
        let level = if spec.directed {
            scan_masks(spec, n)
        } else {
            match spec.class_filter {
                ClassFilter::Tree => scan_trees(spec, n),
                ClassFilter::Forest => scan_forests(spec, n),
                _ => scan_masks(spec, n),
            }
        };
        acc = Accumulator::merge(acc, level);
        progress(n, acc.examined, acc.matched);
    }
    Ok(acc.finish())
}

fn mask_bits(directed: bool, n: usize) -> usize {
    if directed {
        n * (n - 1)
    } else {
        n * (n - 1) / 2
    }
}

fn decode(directed: bool, n: usize, mask: u64) -> AnyGraph {
    if directed {
        AnyGraph::Directed(Digraph::from_arc_mask(n, mask))
    } else {
        AnyGraph::Undirected(Graph::from_edge_mask(n, mask))
    }
}

fn class_passes(filter: ClassFilter, g: &AnyGraph) -> bool {
    match (filter, g) {
        (ClassFilter::All, _) => true,
        (ClassFilter::Connected, AnyGraph::Undirected(g)) => g.classify().connected,
        (ClassFilter::Connected, AnyGraph::Directed(d)) => d.underlying_connected(),
        (ClassFilter::Tree, AnyGraph::Undirected(g)) => g.classify().tree,
        (ClassFilter::Forest, AnyGraph::Undirected(g)) => g.classify().forest,
        (ClassFilter::Bipartite, AnyGraph::Undirected(g)) => g.classify().bipartite,
        (ClassFilter::Chemical, AnyGraph::Undirected(g)) => g.classify().chemical,
        (ClassFilter::DegreeBalanced, AnyGraph::Directed(d)) => d.is_degree_balanced(),
        // Kind mismatches are rejected by validate.
        _ => unreachable!("filter/kind mismatch slipped past validation"),
    }
}

/// Partial result with bounded witness storage.
struct Accumulator {
    examined: u64,
    matched: u64,
    /// `(n, mask, witness)`, compacted to the lexicographically least `limit`.
    matches: Vec<(usize, u64, Witness)>,
    summary: BTreeMap<String, u64>,
    limit: usize,
}

impl Accumulator {
    fn new(limit: usize) -> Self {
        Accumulator {
            examined: 0,
            matched: 0,
            matches: Vec::new(),
            summary: BTreeMap::new(),
            limit,
        }
    }

    fn bump(&mut self, key: &str) {
        *self.summary.entry(key.to_string()).or_insert(0) += 1;
    }

    fn record(&mut self, n: usize, mask: u64, witness: Witness) {
        self.matched += 1;
        self.matches.push((n, mask, witness));
        if self.matches.len() > 2 * self.limit + 64 {
            self.compact();
        }
    }

    /// Keeps only the `limit` lexicographically least matches. Discarded
    /// entries are dominated by every kept one, so merging compacted
    /// accumulators still yields the globally least `limit`.
    fn compact(&mut self) {
        self.matches.sort_by_key(|&(n, mask, _)| (n, mask));
        self.matches.truncate(self.limit);
    }

    fn merge(mut a: Self, b: Self) -> Self {
        a.examined += b.examined;
        a.matched += b.matched;
        a.matches.extend(b.matches);
        for (k, v) in b.summary {
            *a.summary.entry(k).or_insert(0) += v;
        }
        if a.matches.len() > 2 * a.limit + 64 {
            a.compact();
        }
        a
    }

    fn finish(mut self) -> SearchResult {
        self.compact();
        SearchResult {
            examined: self.examined,
            matched: self.matched,
            witnesses: self.matches.into_iter().map(|(_, _, w)| w).collect(),
            summary: self.summary,
        }
    }
}

/// Evaluates the predicate on a structure already past the class filter.
fn examine(spec: &SearchSpec, n: usize, mask: u64, g: &AnyGraph, acc: &mut Accumulator) {
    acc.examined += 1;
    match spec.predicate {
        Predicate::ZagrebViolation | Predicate::ZagrebEquality => {
            let graph = g.as_undirected().expect("validated as undirected");
            if graph.edge_count() == 0 {
                return;
            }
            let report = zagreb_inequality(graph).expect("graph has edges");
            let is_match = match spec.predicate {
                Predicate::ZagrebViolation => !report.holds,
                _ => report.equality,
            };
            if is_match {
                tally_match_classes(g, acc);
                acc.record(
                    n,
                    mask,
                    Witness {
                        graph: g.to_edge_list(),
                        report: WitnessReport::Zagreb(report),
                    },
                );
            }
        }
        Predicate::WalkIneqViolation { k, l } => {
            let report = digraph_walk_inequality(g, k, l);
            if report.applicable != Applicability::None && !report.holds {
                tally_match_classes(g, acc);
                acc.record(
                    n,
                    mask,
                    Witness {
                        graph: g.to_edge_list(),
                        report: WitnessReport::Inequality(report),
                    },
                );
            }
        }
        Predicate::OrderingCensus { k, l } => {
            let ending = walk_profile(g, k).ending;
            let starting = walk_profile(g, l).starting;
            let verdict =
                ordering_relation(&ending, &starting).expect("walk vectors share the vertex index");
            acc.bump(census_key(&verdict));
        }
    }
}

fn census_key(v: &OrderingVerdict) -> &'static str {
    match (v.similarly, v.conversely) {
        (true, true) => "both",
        (true, false) => "similarly_only",
        (false, true) => "conversely_only",
        (false, false) => "neither",
    }
}

fn tally_match_classes(g: &AnyGraph, acc: &mut Accumulator) {
    match g {
        AnyGraph::Undirected(g) => {
            let f = g.classify();
            for (key, on) in [
                ("connected", f.connected),
                ("tree", f.tree),
                ("forest", f.forest),
                ("bipartite", f.bipartite),
                ("complete_bipartite", f.complete_bipartite),
                ("regular", f.regular),
                ("chemical", f.chemical),
            ] {
                if on {
                    acc.bump(key);
                }
            }
        }
        AnyGraph::Directed(d) => {
            if d.is_degree_balanced() {
                acc.bump("degree_balanced");
            }
            if d.underlying_connected() {
                acc.bump("connected");
            }
        }
    }
}

/// Full bitmask scan at one vertex count, partitioned across workers.
fn scan_masks(spec: &SearchSpec, n: usize) -> Accumulator {
    let total = 1u64 << mask_bits(spec.directed, n);
    let chunk = 1u64 << 16;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = Accumulator::new(spec.limit);
            let lo = c * chunk;
            let hi = (lo + chunk).min(total);
            for mask in lo..hi {
                let g = decode(spec.directed, n, mask);
                if class_passes(spec.class_filter, &g) {
                    examine(spec, n, mask, &g, &mut local);
                }
            }
            local
        })
        .reduce(|| Accumulator::new(spec.limit), Accumulator::merge)
}

/// Index of the unordered pair `(u, v)`, `u < v`, in [`vertex_pairs`] order.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Generates every labeled tree on `n` vertices exactly once via Prüfer
/// sequences, re-encoding each as an edge bitmask.
fn scan_trees(spec: &SearchSpec, n: usize) -> Accumulator {
    let mut acc = Accumulator::new(spec.limit);
    if n == 1 {
        let g = decode(false, 1, 0);
        examine(spec, 1, 0, &g, &mut acc);
        return acc;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        let mut mask = 0u64;
        for (u, v) in prufer_edges(&seq, n) {
            mask |= 1 << pair_index(n, u, v);
        }
        let g = decode(false, n, mask);
        debug_assert!(class_passes(ClassFilter::Tree, &g));
        examine(spec, n, mask, &g, &mut acc);

        // Odometer over sequences in [0, n)^(n-2).
        let mut pos = 0;
        loop {
            if pos == seq.len() {
                return acc;
            }
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

/// Standard Prüfer decoding: repeatedly join the smallest remaining leaf to
/// the next sequence symbol, then connect the last two leaves.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&i| deg[i] == 1).expect("a leaf always remains");
        edges.push((leaf.min(v), leaf.max(v)));
        deg[leaf] -= 1;
        deg[v] -= 1;
    }
    let mut last = (0..n).filter(|&i| deg[i] == 1);
    let a = last.next().expect("two leaves remain");
    let b = last.next().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Depth-first scan over edge slots that only ever extends acyclic subsets,
/// visiting every labeled forest exactly once.
fn scan_forests(spec: &SearchSpec, n: usize) -> Accumulator {
    struct Dfs<'a> {
        spec: &'a SearchSpec,
        n: usize,
        pairs: Vec<(usize, usize)>,
        dsu: RollbackDsu,
        acc: Accumulator,
    }
    impl Dfs<'_> {
        fn rec(&mut self, idx: usize, mask: u64) {
            if idx == self.pairs.len() {
                let g = decode(false, self.n, mask);
                debug_assert!(class_passes(ClassFilter::Forest, &g));
                let (spec, n) = (self.spec, self.n);
                examine(spec, n, mask, &g, &mut self.acc);
                return;
            }
            self.rec(idx + 1, mask);
            let (u, v) = self.pairs[idx];
            if let Some(undo) = self.dsu.union(u, v) {
                self.rec(idx + 1, mask | 1 << idx);
                self.dsu.undo(undo);
            }
        }
    }
    let mut dfs = Dfs {
        spec,
        n,
        pairs: vertex_pairs(n),
        dsu: RollbackDsu::new(n),
        acc: Accumulator::new(spec.limit),
    };
    dfs.rec(0, 0);
    dfs.acc
}

/// Union-find without path compression so unions can be rolled back on
/// backtrack; union by size keeps finds logarithmic.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the sets of `a` and `b`; `None` if already joined, otherwise an
    /// undo token `(child_root, parent_root)`.
    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        Some((rb, ra))
    }

    fn undo(&mut self, (child, parent): (usize, usize)) {
        self.parent[child] = child;
        self.size[parent] -= self.size[child];
    }
}
