//! Walk counting on graphs and digraphs.
//!
//! [`walk_profile`] raises the adjacency matrix to the k-th power and reads
//! off row sums (walks starting at each vertex), column sums (walks ending at
//! each vertex) and the total. [`walk_profile_oracle`] recomputes the same
//! numbers by propagating a count vector along adjacency lists, one step at a
//! time, sharing no code with the matrix route; the two must always agree and
//! the test suites compare them exhaustively on small structures.

use num::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::graphs::{AnyGraph, Digraph, Graph};
use crate::matrices::RationalMatrix;
use crate::rational::{serde_str, BigInt};

/// Exact walk counts of one length on one structure.
///
/// `starting[v]` counts k-step walks starting at `v`, `ending[v]` those
/// ending at `v`, and `total` all of them. For length 0 every vertex carries
/// exactly one (empty) walk, so both vectors are all ones and the total is
/// the vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkProfile {
    pub k: usize,
    #[serde(serialize_with = "serde_str::bigint_vec")]
    pub starting: Vec<BigInt>,
    #[serde(serialize_with = "serde_str::bigint_vec")]
    pub ending: Vec<BigInt>,
    #[serde(serialize_with = "serde_str::bigint")]
    pub total: BigInt,
}

/// Anything walks can be counted on.
pub trait Walkable {
    fn vertex_count(&self) -> usize;
    fn adjacency(&self) -> RationalMatrix;
    /// Out-neighbor lists, one entry per arc (or per edge direction).
    fn out_lists(&self) -> Vec<Vec<usize>>;
    /// In-neighbor lists, one entry per arc (or per edge direction).
    fn in_lists(&self) -> Vec<Vec<usize>>;
    /// True when starting and ending counts coincide by symmetry.
    fn is_undirected(&self) -> bool;
}

impl Walkable for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }

    fn adjacency(&self) -> RationalMatrix {
        self.adjacency_matrix()
    }

    fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); Graph::vertex_count(self)];
        for &(u, v) in self.edges() {
            lists[u].push(v);
            lists[v].push(u);
        }
        lists
    }

    fn in_lists(&self) -> Vec<Vec<usize>> {
        self.out_lists()
    }

    fn is_undirected(&self) -> bool {
        true
    }
}

impl Walkable for Digraph {
    fn vertex_count(&self) -> usize {
        Digraph::vertex_count(self)
    }

    fn adjacency(&self) -> RationalMatrix {
        self.adjacency_matrix()
    }

    fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); Digraph::vertex_count(self)];
        for &(u, v) in self.arcs() {
            lists[u].push(v);
        }
        lists
    }

    fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); Digraph::vertex_count(self)];
        for &(u, v) in self.arcs() {
            lists[v].push(u);
        }
        lists
    }

    fn is_undirected(&self) -> bool {
        false
    }
}

impl Walkable for AnyGraph {
    fn vertex_count(&self) -> usize {
        AnyGraph::vertex_count(self)
    }

    fn adjacency(&self) -> RationalMatrix {
        self.adjacency_matrix()
    }

    fn out_lists(&self) -> Vec<Vec<usize>> {
        match self {
            AnyGraph::Undirected(g) => g.out_lists(),
            AnyGraph::Directed(d) => d.out_lists(),
        }
    }

    fn in_lists(&self) -> Vec<Vec<usize>> {
        match self {
            AnyGraph::Undirected(g) => g.in_lists(),
            AnyGraph::Directed(d) => d.in_lists(),
        }
    }

    fn is_undirected(&self) -> bool {
        matches!(self, AnyGraph::Undirected(_))
    }
}

/// Counts k-step walks via the k-th adjacency power.
pub fn walk_profile<G: Walkable + ?Sized>(g: &G, k: usize) -> WalkProfile {
    let power = g.adjacency().power(k);
    let (starting, ending, total) = power
        .integer_sums()
        .expect("adjacency powers have integer entries");
    let ending = if g.is_undirected() { starting.clone() } else { ending };
    WalkProfile {
        k,
        starting,
        ending,
        total,
    }
}

/// Counts k-step walks by dynamic programming over adjacency lists; a fully
/// independent implementation used to cross-check [`walk_profile`].
pub fn walk_profile_oracle<G: Walkable + ?Sized>(g: &G, k: usize) -> WalkProfile {
    let n = g.vertex_count();
    let starting = propagate(&g.out_lists(), n, k);
    let ending = propagate(&g.in_lists(), n, k);
    let mut total = BigInt::zero();
    for s in &starting {
        total += s;
    }
    debug_assert_eq!(total, ending.iter().sum::<BigInt>());
    WalkProfile {
        k,
        starting,
        ending,
        total,
    }
}

/// One count per vertex after `k` propagation steps along `lists`, starting
/// from the all-ones vector (each vertex carries one empty walk).
fn propagate(lists: &[Vec<usize>], n: usize, k: usize) -> Vec<BigInt> {
    let mut current = vec![BigInt::one(); n];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); n];
        for (v, neighbors) in lists.iter().enumerate() {
            for &w in neighbors {
                next[v] += &current[w];
            }
        }
        current = next;
    }
    current
}

impl WalkProfile {
    /// The total as a `u64` when it fits; test convenience.
    pub fn total_u64(&self) -> Option<u64> {
        self.total.to_u64()
    }
}
