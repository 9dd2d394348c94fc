//! The first and second Zagreb indices and their walk-count identities.

use num::Zero;
use serde::Serialize;

use crate::graphs::Graph;
use crate::rational::{serde_str, BigInt};
use crate::walks::walk_profile;

/// Exact Zagreb index values together with the graph's size parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZagrebValues {
    /// Sum of squared degrees.
    #[serde(serialize_with = "serde_str::bigint")]
    pub m1: BigInt,
    /// Sum of degree products over the edge multiset.
    #[serde(serialize_with = "serde_str::bigint")]
    pub m2: BigInt,
    /// Vertex count.
    pub n: usize,
    /// Edge count with multiplicity.
    pub m: usize,
}

/// Which of the four walk identities hold; all four are true for every
/// undirected multigraph, so a false flag indicates an implementation bug.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkIdentityReport {
    /// First Zagreb index equals the number of 2-step walks.
    pub m1_eq_w2: bool,
    /// Twice the second Zagreb index equals the number of 3-step walks.
    pub two_m2_eq_w3: bool,
    /// The number of 0-step walks equals the vertex count.
    pub w0_eq_n: bool,
    /// The number of 1-step walks equals twice the edge count.
    pub w1_eq_2m: bool,
}

impl WalkIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.m1_eq_w2 && self.two_m2_eq_w3 && self.w0_eq_n && self.w1_eq_2m
    }
}

/// Computes both Zagreb indices. Parallel edges contribute to every sum: each
/// endpoint slot raises the degree and each edge instance contributes its own
/// degree product.
pub fn zagreb(g: &Graph) -> ZagrebValues {
    let deg = g.degree_sequence();
    // Degrees stay tiny in exhaustive scans; accumulate in u128 and only fall
    // back to big integers if a pathological multigraph overflows.
    let fast = || -> Option<(u128, u128)> {
        let mut m1: u128 = 0;
        for &d in &deg {
            let d = d as u128;
            m1 = m1.checked_add(d.checked_mul(d)?)?;
        }
        let mut m2: u128 = 0;
        for &(u, v) in g.edges() {
            m2 = m2.checked_add((deg[u] as u128).checked_mul(deg[v] as u128)?)?;
        }
        Some((m1, m2))
    };
    let (m1, m2) = match fast() {
        Some((m1, m2)) => (BigInt::from(m1), BigInt::from(m2)),
        None => {
            let mut m1 = BigInt::zero();
            for &d in &deg {
                m1 += BigInt::from(d) * BigInt::from(d);
            }
            let mut m2 = BigInt::zero();
            for &(u, v) in g.edges() {
                m2 += BigInt::from(deg[u]) * BigInt::from(deg[v]);
            }
            (m1, m2)
        }
    };
    ZagrebValues {
        m1,
        m2,
        n: g.vertex_count(),
        m: g.edge_count(),
    }
}

/// Checks the four identities tying Zagreb indices to walk counts:
/// `M1 = w_2`, `2*M2 = w_3`, `w_0 = n` and `w_1 = 2m`.
pub fn verify_walk_identities(g: &Graph) -> WalkIdentityReport {
    let z = zagreb(g);
    let w0 = walk_profile(g, 0).total;
    let w1 = walk_profile(g, 1).total;
    let w2 = walk_profile(g, 2).total;
    let w3 = walk_profile(g, 3).total;
    WalkIdentityReport {
        m1_eq_w2: z.m1 == w2,
        two_m2_eq_w3: BigInt::from(2) * &z.m2 == w3,
        w0_eq_n: w0 == BigInt::from(z.n),
        w1_eq_2m: w1 == BigInt::from(2 * z.m),
    }
}
