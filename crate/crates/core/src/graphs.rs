//! Undirected multigraphs and directed graphs: construction, parsing, degree
//! data and structural classification.
//!
//! Vertices are `0..n`. Undirected edges are unordered pairs with `u != v`
//! (loops rejected); parallel edges are kept with multiplicity. Directed arcs
//! are ordered pairs and may be loops. Both kinds share a plain edge-list text
//! format, one structure per document.

use serde::Serialize;

use crate::error::Error;
use crate::matrices::RationalMatrix;
use crate::rational::{BigInt, Rational};

/// An undirected multigraph without loops.
///
/// Edges are normalized to `(min, max)` order but kept in insertion order,
/// so multiplicity is simply repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A directed multigraph; loops are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

/// Either kind of graph, as produced by [`parse_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

/// Structural class membership computed by [`Graph::classify`].
///
/// `chemical` means simple with maximum degree at most 4. `complete_bipartite`
/// requires a bipartition `(X, Y)` with `|X|, |Y| >= 1` and exactly all cross
/// pairs present. Flags requiring simplicity are false on multigraphs with
/// parallel edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphClassFlags {
    pub connected: bool,
    pub tree: bool,
    pub forest: bool,
    pub bipartite: bool,
    pub complete_bipartite: bool,
    pub regular: bool,
    pub chemical: bool,
}

impl Graph {
    /// Builds a graph, rejecting loops and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: normalized,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges, counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The edge multiset, each pair in `(min, max)` order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Per-vertex degree; parallel edges count with multiplicity.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Per-vertex sum of neighbor degrees, neighbors counted once per
    /// incident edge. For simple graphs this equals the number of 2-step
    /// walks starting at the vertex.
    pub fn degree_sum_sequence(&self) -> Vec<usize> {
        let deg = self.degree_sequence();
        let mut sums = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            sums[u] += deg[v];
            sums[v] += deg[u];
        }
        sums
    }

    /// True when no edge is repeated.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.edges.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Computes all structural class flags in one pass.
    pub fn classify(&self) -> GraphClassFlags {
        let n = self.n;
        let m = self.edges.len();
        let deg = self.degree_sequence();
        let simple = self.is_simple();

        // Components and acyclicity via union-find over edge instances.
        let mut dsu = DisjointSets::new(n);
        let mut acyclic = true;
        for &(u, v) in &self.edges {
            if !dsu.union(u, v) {
                acyclic = false;
            }
        }
        let connected = dsu.component_count() <= 1;

        // Two-coloring for bipartiteness; side counts feed the
        // complete-bipartite check (meaningful when connected).
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut color = vec![u8::MAX; n];
        let mut bipartite = true;
        let mut side_counts = [0usize; 2];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            side_counts[0] += 1;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        side_counts[color[w] as usize] += 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        bipartite = false;
                    }
                }
            }
        }

        let forest = acyclic;
        let tree = forest && connected && n >= 1;
        let regular = deg.windows(2).all(|w| w[0] == w[1]);
        let chemical = simple && deg.iter().all(|&d| d <= 4);
        let complete_bipartite = simple
            && connected
            && n >= 2
            && bipartite
            && m == side_counts[0] * side_counts[1];

        GraphClassFlags {
            connected,
            tree,
            forest,
            bipartite,
            complete_bipartite,
            regular,
            chemical,
        }
    }

    /// Replaces every edge `{u,v}` by a fresh vertex `x` and edges
    /// `{u,x}, {x,v}`; the result has `n + m` vertices and `2m` edges and is
    /// always simple and bipartite.
    pub fn subdivision(&self) -> Graph {
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            let x = self.n + idx;
            edges.push((u.min(x), u.max(x)));
            edges.push((v.min(x), v.max(x)));
        }
        Graph {
            n: self.n + self.edges.len(),
            edges,
        }
    }

    /// Symmetric adjacency matrix; entry `(i, j)` is the edge multiplicity.
    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let n = self.n;
        let mut counts = vec![0u32; n * n];
        for &(u, v) in &self.edges {
            counts[u * n + v] += 1;
            counts[v * n + u] += 1;
        }
        matrix_from_counts(n, &counts)
    }

    /// Renders the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("undirected {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Decodes a bitmask over [`vertex_pairs`] into a simple graph: bit `t`
    /// set means pair `t` is an edge. Mask order `0, 1, 2, ...` is the
    /// canonical enumeration order for exhaustive scans.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let pairs = vertex_pairs(n);
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph { n, edges }
    }
}

impl Digraph {
    /// Builds a digraph, rejecting out-of-range endpoints; loops are allowed.
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(u, v) in &arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Ok(Digraph { n, arcs })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of arcs, counting multiplicity.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The arc multiset in insertion order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Per-vertex `(in_degrees, out_degrees)`; a loop adds 1 to each.
    pub fn in_out_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut din = vec![0usize; self.n];
        let mut dout = vec![0usize; self.n];
        for &(u, v) in &self.arcs {
            dout[u] += 1;
            din[v] += 1;
        }
        (din, dout)
    }

    /// True when in-degree equals out-degree at every vertex. Connectivity is
    /// deliberately not required.
    pub fn is_degree_balanced(&self) -> bool {
        let (din, dout) = self.in_out_degrees();
        din == dout
    }

    /// True when the underlying undirected structure is connected.
    pub fn underlying_connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v) in &self.arcs {
            if u != v {
                dsu.union(u, v);
            }
        }
        dsu.component_count() <= 1
    }

    /// Adjacency matrix; entry `(i, j)` is the multiplicity of arc `i -> j`.
    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let n = self.n;
        let mut counts = vec![0u32; n * n];
        for &(u, v) in &self.arcs {
            counts[u * n + v] += 1;
        }
        matrix_from_counts(n, &counts)
    }

    /// Renders the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("directed {} {}\n", self.n, self.arcs.len());
        for &(u, v) in &self.arcs {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Decodes a bitmask over [`arc_pairs`] into a loop-free digraph.
    pub fn from_arc_mask(n: usize, mask: u64) -> Digraph {
        let pairs = arc_pairs(n);
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Digraph { n, arcs }
    }
}

impl AnyGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.vertex_count(),
            AnyGraph::Directed(d) => d.vertex_count(),
        }
    }

    /// Edge or arc count, with multiplicity.
    pub fn edge_count(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.edge_count(),
            AnyGraph::Directed(d) => d.arc_count(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn adjacency_matrix(&self) -> RationalMatrix {
        match self {
            AnyGraph::Undirected(g) => g.adjacency_matrix(),
            AnyGraph::Directed(d) => d.adjacency_matrix(),
        }
    }

    pub fn to_edge_list(&self) -> String {
        match self {
            AnyGraph::Undirected(g) => g.to_edge_list(),
            AnyGraph::Directed(d) => d.to_edge_list(),
        }
    }

    /// Borrows the undirected graph or reports a kind mismatch.
    pub fn as_undirected(&self) -> Result<&Graph, Error> {
        match self {
            AnyGraph::Undirected(g) => Ok(g),
            AnyGraph::Directed(_) => Err(Error::WrongGraphKind {
                msg: "operation requires an undirected graph".into(),
            }),
        }
    }

    /// Borrows the digraph or reports a kind mismatch.
    pub fn as_directed(&self) -> Result<&Digraph, Error> {
        match self {
            AnyGraph::Directed(d) => Ok(d),
            AnyGraph::Undirected(_) => Err(Error::WrongGraphKind {
                msg: "operation requires a directed graph".into(),
            }),
        }
    }
}

/// All unordered vertex pairs of `0..n` in lexicographic order; pair `t` of
/// this list corresponds to bit `t` in [`Graph::from_edge_mask`].
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// All ordered vertex pairs `(u, v)` with `u != v` in lexicographic order;
/// pair `t` corresponds to bit `t` in [`Digraph::from_arc_mask`].
pub fn arc_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Parses the edge-list format: a header `undirected <n> <m>` or
/// `directed <n> <m>` followed by `m` lines `<u> <v>`. Repeated lines denote
/// multiplicity; `#` lines and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<AnyGraph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty graph input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(Error::parse(
            header_line,
            "expected header \"undirected <n> <m>\" or \"directed <n> <m>\"",
        ));
    }
    let directed = match tokens[0] {
        "undirected" => false,
        "directed" => true,
        other => {
            return Err(Error::parse(
                header_line,
                format!("unknown graph kind {other:?}"),
            ))
        }
    };
    let n = parse_count(tokens[1], header_line, "vertex count")?;
    let m = parse_count(tokens[2], header_line, "edge count")?;

    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("expected {m} edge lines, input ended early")))?;
        let ends: Vec<&str> = line.split_whitespace().collect();
        if ends.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("expected \"<u> <v>\", found {line:?}"),
            ));
        }
        let u = parse_count(ends[0], line_no, "vertex index")?;
        let v = parse_count(ends[1], line_no, "vertex index")?;
        pairs.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(line_no, "unexpected extra content after edges"));
    }

    if directed {
        Ok(AnyGraph::Directed(Digraph::new(n, pairs)?))
    } else {
        Ok(AnyGraph::Undirected(Graph::new(n, pairs)?))
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize, Error> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("{what} must be a nonnegative integer, found {token:?}")))
}

fn matrix_from_counts(n: usize, counts: &[u32]) -> RationalMatrix {
    let entries = counts
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect();
    RationalMatrix::new(n, entries).expect("count grid is square")
}

/// Union-find with union by size; enough for component counting and cycle
/// detection during classification.
struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets containing `a` and `b`; false when already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    fn component_count(&self) -> usize {
        self.components
    }
}
