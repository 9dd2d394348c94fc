//! Exact verdict reports for the comparison theorems: the matrix-power
//! entry-sum inequality, its walk-count corollary, the Zagreb index
//! inequality with equality classification, and the sum-symmetric and
//! degree-balanced specializations.
//!
//! Every checker reports the exact left- and right-hand sides, the direction
//! the ordering hypothesis licenses (if any), whether that direction holds,
//! and whether the two sides are exactly equal. When a hypothesis applies,
//! `holds` is theorem-guaranteed; the flag exists so exhaustive searches can
//! treat any `false` as an implementation bug or a genuine counterexample to
//! a conjectured extension.

use num::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::graphs::{Digraph, Graph};
use crate::indices::zagreb;
use crate::matrices::RationalMatrix;
use crate::orderings::{ordering_relation, OrderingVerdict};
use crate::rational::{serde_str, BigInt, Rational};
use crate::walks::{walk_profile, Walkable};

/// Which comparison the ordering hypothesis licenses.
///
/// `Both` arises when the hypothesis vectors are simultaneously similarly and
/// conversely ordered (all pair products zero), which forces exact equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Applicability {
    Le,
    Ge,
    Both,
    None,
}

/// Equality classification for the Zagreb inequality on connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityClass {
    Regular,
    CompleteBipartite,
    Both,
    Other,
    NotApplicable,
}

/// Checker-specific payload carried alongside the shared verdict fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReportDetail {
    MatrixPower {
        k: usize,
        l: usize,
        #[serde(serialize_with = "serde_str::rational_vec")]
        col_sums_k: Vec<Rational>,
        #[serde(serialize_with = "serde_str::rational_vec")]
        row_sums_l: Vec<Rational>,
        ordering: OrderingVerdict,
    },
    WalkCorollary {
        k: usize,
        l: usize,
        #[serde(serialize_with = "serde_str::bigint_vec")]
        ending_k: Vec<BigInt>,
        #[serde(serialize_with = "serde_str::bigint_vec")]
        starting_l: Vec<BigInt>,
        ordering: OrderingVerdict,
    },
    SumSymmetric {
        #[serde(serialize_with = "serde_str::rational_vec")]
        row_sums: Vec<Rational>,
        /// `(Σ r_i)²`, recomputed from the row-sum vector.
        #[serde(serialize_with = "serde_str::rational")]
        cauchy_lhs: Rational,
        /// `n·Σ r_i²`, recomputed from the row-sum vector.
        #[serde(serialize_with = "serde_str::rational")]
        cauchy_rhs: Rational,
    },
    Eulerian {
        #[serde(serialize_with = "serde_str::bigint")]
        w0: BigInt,
        #[serde(serialize_with = "serde_str::bigint")]
        w1: BigInt,
        #[serde(serialize_with = "serde_str::bigint")]
        w2: BigInt,
        /// `w1/w0` when both counts are positive.
        #[serde(serialize_with = "serde_str::rational_opt")]
        ratio_lhs: Option<Rational>,
        /// `w2/w1` when both counts are positive.
        #[serde(serialize_with = "serde_str::rational_opt")]
        ratio_rhs: Option<Rational>,
    },
}

/// Shared verdict shape for all matrix/walk inequality checkers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub applicable: Applicability,
    #[serde(serialize_with = "serde_str::rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serde_str::rational")]
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
    pub detail: ReportDetail,
}

/// Verdict for the Zagreb index inequality `M1/n <= M2/m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZagrebReport {
    #[serde(serialize_with = "serde_str::rational")]
    pub m1_over_n: Rational,
    #[serde(serialize_with = "serde_str::rational")]
    pub m2_over_m: Rational,
    /// Whether the degree and degree-sum sequences are similarly ordered.
    pub hypothesis_similarly_ordered: bool,
    /// Whether `M1/n <= M2/m`; only theorem-backed when the hypothesis holds.
    pub holds: bool,
    pub equality: bool,
    /// Set only for connected graphs attaining equality.
    pub equality_class: EqualityClass,
}

fn applicability(v: &OrderingVerdict) -> Applicability {
    match (v.similarly, v.conversely) {
        (true, true) => Applicability::Both,
        (true, false) => Applicability::Le,
        (false, true) => Applicability::Ge,
        (false, false) => Applicability::None,
    }
}

fn direction_holds(applicable: Applicability, lhs: &Rational, rhs: &Rational) -> bool {
    match applicable {
        Applicability::Le => lhs <= rhs,
        Applicability::Ge => lhs >= rhs,
        Applicability::Both => lhs == rhs,
        Applicability::None => true,
    }
}

/// Compares `S(A^k)·S(A^l)` against `n·S(A^{k+l})`.
///
/// The hypothesis pairs the column sums of `A^k` with the row sums of `A^l`:
/// similarly ordered licenses `<=`, conversely ordered `>=`.
pub fn matrix_power_inequality(a: &RationalMatrix, k: usize, l: usize) -> InequalityReport {
    let ak = a.power(k);
    let al = a.power(l);
    let akl = a.power(k + l);
    let col_sums_k = ak.col_sums();
    let row_sums_l = al.row_sums();
    let ordering = ordering_relation(&col_sums_k, &row_sums_l)
        .expect("column and row sum vectors have equal length");
    let applicable = applicability(&ordering);
    let lhs = ak.entry_sum() * al.entry_sum();
    let rhs = Rational::from_integer(BigInt::from(a.dim())) * akl.entry_sum();
    let holds = direction_holds(applicable, &lhs, &rhs);
    let equality = lhs == rhs;
    InequalityReport {
        applicable,
        lhs,
        rhs,
        holds,
        equality,
        detail: ReportDetail::MatrixPower {
            k,
            l,
            col_sums_k,
            row_sums_l,
            ordering,
        },
    }
}

/// Walk-count form of the matrix-power comparison: `w_k·w_l` against
/// `n·w_{k+l}`, with the hypothesis read off the vectors of walks ending
/// after `k` steps and starting for `l` steps.
pub fn digraph_walk_inequality<G: Walkable + ?Sized>(g: &G, k: usize, l: usize) -> InequalityReport {
    let pk = walk_profile(g, k);
    let pl = walk_profile(g, l);
    let pkl = walk_profile(g, k + l);
    let ordering = ordering_relation(&pk.ending, &pl.starting)
        .expect("walk vectors have equal length");
    let applicable = applicability(&ordering);
    let lhs = Rational::from_integer(&pk.total * &pl.total);
    let rhs = Rational::from_integer(BigInt::from(g.vertex_count()) * &pkl.total);
    let holds = direction_holds(applicable, &lhs, &rhs);
    let equality = lhs == rhs;
    InequalityReport {
        applicable,
        lhs,
        rhs,
        holds,
        equality,
        detail: ReportDetail::WalkCorollary {
            k,
            l,
            ending_k: pk.ending,
            starting_l: pl.starting,
            ordering,
        },
    }
}

/// Compares `M1/n` against `M2/m` and, for connected graphs attaining
/// equality, classifies the graph as regular and/or complete bipartite.
///
/// The verdict is reported even when the similarly-ordered hypothesis fails,
/// so counterexample searches can use it; `holds` then carries no guarantee.
pub fn zagreb_inequality(g: &Graph) -> Result<ZagrebReport, Error> {
    let z = zagreb(g);
    if z.m == 0 {
        return Err(Error::EdgelessGraph);
    }
    let deg = g.degree_sequence();
    let dsum = g.degree_sum_sequence();
    let ordering = ordering_relation(&deg, &dsum).expect("sequences share the vertex index");
    let m1_over_n = Rational::new(z.m1, BigInt::from(z.n));
    let m2_over_m = Rational::new(z.m2, BigInt::from(z.m));
    let holds = m1_over_n <= m2_over_m;
    let equality = m1_over_n == m2_over_m;
    let equality_class = if equality {
        let flags = g.classify();
        if !flags.connected {
            EqualityClass::NotApplicable
        } else {
            match (flags.regular, flags.complete_bipartite) {
                (true, true) => EqualityClass::Both,
                (true, false) => EqualityClass::Regular,
                (false, true) => EqualityClass::CompleteBipartite,
                (false, false) => EqualityClass::Other,
            }
        }
    } else {
        EqualityClass::NotApplicable
    };
    Ok(ZagrebReport {
        m1_over_n,
        m2_over_m,
        hypothesis_similarly_ordered: ordering.similarly,
        holds,
        equality,
        equality_class,
    })
}

/// For a sum-symmetric matrix, compares `S(A)²` against `n·S(A²)`; this
/// direction is unconditional, so `applicable` is always `le`.
pub fn sum_symmetric_inequality(a: &RationalMatrix) -> Result<InequalityReport, Error> {
    if !a.is_sum_symmetric() {
        return Err(Error::NotSumSymmetric);
    }
    let row_sums = a.row_sums();
    let total = a.entry_sum();
    let lhs = &total * &total;
    let rhs = Rational::from_integer(BigInt::from(a.dim())) * (a * a).entry_sum();

    // Independent route via the row-sum vector only.
    let mut sum_r = Rational::zero();
    let mut sum_r2 = Rational::zero();
    for r in &row_sums {
        sum_r += r;
        sum_r2 += r * r;
    }
    let cauchy_lhs = &sum_r * &sum_r;
    let cauchy_rhs = Rational::from_integer(BigInt::from(a.dim())) * sum_r2;

    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    Ok(InequalityReport {
        applicable: Applicability::Le,
        lhs,
        rhs,
        holds,
        equality,
        detail: ReportDetail::SumSymmetric {
            row_sums,
            cauchy_lhs,
            cauchy_rhs,
        },
    })
}

/// For a degree-balanced digraph, compares `w_1²` against `n·w_2`; the
/// equivalent ratio form `w_1/w_0 <= w_2/w_1` is included whenever both
/// denominators are positive.
pub fn eulerian_inequality(d: &Digraph) -> Result<InequalityReport, Error> {
    if !d.is_degree_balanced() {
        return Err(Error::NotDegreeBalanced);
    }
    let w0 = walk_profile(d, 0).total;
    let w1 = walk_profile(d, 1).total;
    let w2 = walk_profile(d, 2).total;
    let lhs = Rational::from_integer(&w1 * &w1);
    let rhs = Rational::from_integer(BigInt::from(d.vertex_count()) * &w2);
    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    let (ratio_lhs, ratio_rhs) = if w0 > BigInt::zero() && w1 > BigInt::zero() {
        (
            Some(Rational::new(w1.clone(), w0.clone())),
            Some(Rational::new(w2.clone(), w1.clone())),
        )
    } else {
        (None, None)
    };
    if let (Some(rl), Some(rr)) = (&ratio_lhs, &ratio_rhs) {
        debug_assert_eq!(rl <= rr, holds, "product and ratio forms must agree");
    }
    Ok(InequalityReport {
        applicable: Applicability::Le,
        lhs,
        rhs,
        holds,
        equality,
        detail: ReportDetail::Eulerian {
            w0,
            w1,
            w2,
            ratio_lhs,
            ratio_rhs,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        crate::parse_rational(s).unwrap()
    }

    fn mat(n: usize, vals: &[i64]) -> RationalMatrix {
        RationalMatrix::from_integers(n, vals).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v)).collect()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn matrix_power_conversely_ordered_example() {
        let a = mat(2, &[0, 2, 1, 0]);
        let r = matrix_power_inequality(&a, 1, 1);
        assert_eq!(r.applicable, Applicability::Ge);
        assert_eq!((r.lhs, r.rhs), (q("9"), q("8")));
        assert!(r.holds && !r.equality);
        match r.detail {
            ReportDetail::MatrixPower {
                col_sums_k,
                row_sums_l,
                ordering,
                ..
            } => {
                assert_eq!(col_sums_k, vec![q("1"), q("2")]);
                assert_eq!(row_sums_l, vec![q("2"), q("1")]);
                assert!(!ordering.similarly && ordering.conversely);
            }
            _ => panic!("wrong detail variant"),
        }
    }

    #[test]
    fn matrix_power_identity_equality() {
        let r = matrix_power_inequality(&RationalMatrix::identity(3), 1, 1);
        assert_eq!(r.applicable, Applicability::Both);
        assert_eq!((r.lhs, r.rhs), (q("9"), q("9")));
        assert!(r.holds && r.equality);
    }

    #[test]
    fn matrix_power_p3_equality() {
        let a = path(3).adjacency_matrix();
        let r = matrix_power_inequality(&a, 1, 2);
        // Row sums of the square are constant, so the hypothesis holds in
        // both directions and forces equality: 4*6 = 3*8.
        assert_eq!(r.applicable, Applicability::Both);
        assert_eq!((r.lhs, r.rhs), (q("24"), q("24")));
        assert!(r.holds && r.equality);
    }

    #[test]
    fn walk_form_directed_cycle() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = digraph_walk_inequality(&d, 1, 1);
        assert_eq!(r.applicable, Applicability::Both);
        assert_eq!((r.lhs, r.rhs), (q("9"), q("9")));
        assert!(r.holds && r.equality);
    }

    #[test]
    fn walk_form_transitive_triple() {
        let d = Digraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let r = digraph_walk_inequality(&d, 1, 1);
        assert_eq!(r.applicable, Applicability::Ge);
        assert_eq!((r.lhs, r.rhs), (q("9"), q("3")));
        assert!(r.holds && !r.equality);
        match r.detail {
            ReportDetail::WalkCorollary {
                ending_k,
                starting_l,
                ..
            } => {
                assert_eq!(ending_k, vec![0.into(), 1.into(), 2.into()]);
                assert_eq!(starting_l, vec![2.into(), 1.into(), 0.into()]);
            }
            _ => panic!("wrong detail variant"),
        }
    }

    #[test]
    fn walk_form_matches_matrix_form_on_p3() {
        let g = path(3);
        let rw = digraph_walk_inequality(&g, 1, 2);
        let rm = matrix_power_inequality(&g.adjacency_matrix(), 1, 2);
        assert_eq!(rw.applicable, rm.applicable);
        assert_eq!((rw.lhs, rw.rhs), (rm.lhs, rm.rhs));
        assert!(rw.holds && rw.equality);
    }

    #[test]
    fn constant_total_degree_forces_converse_ordering() {
        // In a tournament every vertex has the same total degree, so the
        // ending/starting vectors at length 1 are conversely ordered.
        for (n, arcs) in [
            (3, vec![(0, 1), (0, 2), (1, 2)]),
            (4, vec![(0, 1), (0, 2), (3, 0), (1, 2), (3, 1), (2, 3)]),
        ] {
            let d = Digraph::new(n, arcs).unwrap();
            let r = digraph_walk_inequality(&d, 1, 1);
            assert!(
                matches!(r.applicable, Applicability::Ge | Applicability::Both),
                "tournament on {n} vertices reported {:?}",
                r.applicable
            );
            assert!(r.holds);
        }
    }

    #[test]
    fn zagreb_p4_strict() {
        let r = zagreb_inequality(&path(4)).unwrap();
        assert_eq!((r.m1_over_n, r.m2_over_m), (q("5/2"), q("8/3")));
        assert!(r.hypothesis_similarly_ordered);
        assert!(r.holds && !r.equality);
        assert_eq!(r.equality_class, EqualityClass::NotApplicable);
    }

    #[test]
    fn zagreb_c4_equality_both() {
        let r = zagreb_inequality(&cycle(4)).unwrap();
        assert!(r.equality && r.holds);
        assert_eq!(r.equality_class, EqualityClass::Both);
    }

    #[test]
    fn zagreb_star_equality_complete_bipartite() {
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = zagreb_inequality(&star).unwrap();
        assert_eq!((r.m1_over_n, r.m2_over_m), (q("3"), q("3")));
        assert!(r.equality);
        assert_eq!(r.equality_class, EqualityClass::CompleteBipartite);
    }

    #[test]
    fn zagreb_k3_equality_regular() {
        let r = zagreb_inequality(&cycle(3)).unwrap();
        assert!(r.equality);
        assert_eq!(r.equality_class, EqualityClass::Regular);
    }

    #[test]
    fn zagreb_rejects_edgeless() {
        assert_eq!(
            zagreb_inequality(&Graph::new(3, vec![]).unwrap()),
            Err(Error::EdgelessGraph)
        );
    }

    #[test]
    fn zagreb_disconnected_equality_is_not_classified() {
        // A perfect matching on 4 vertices attains equality but is
        // disconnected, so no equality class is assigned.
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let r = zagreb_inequality(&g).unwrap();
        assert!(r.equality);
        assert_eq!(r.equality_class, EqualityClass::NotApplicable);
    }

    #[test]
    fn zagreb_violator_exists_without_hypothesis() {
        // A 5-leaf star plus a disjoint triangle: M1/n = 42/9 > 37/8 = M2/m.
        let mut edges: Vec<_> = (1..=5).map(|v| (0, v)).collect();
        edges.extend([(6, 7), (7, 8), (6, 8)]);
        let g = Graph::new(9, edges).unwrap();
        let r = zagreb_inequality(&g).unwrap();
        assert_eq!((r.m1_over_n, r.m2_over_m), (q("14/3"), q("37/8")));
        assert!(!r.holds && !r.hypothesis_similarly_ordered);
        assert_eq!(r.equality_class, EqualityClass::NotApplicable);
    }

    #[test]
    fn sum_symmetric_examples() {
        let r = sum_symmetric_inequality(&mat(2, &[1, 2, 2, 3])).unwrap();
        assert_eq!(r.applicable, Applicability::Le);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q("64"), q("68")));
        assert!(r.holds && !r.equality);
        match r.detail {
            ReportDetail::SumSymmetric {
                cauchy_lhs,
                cauchy_rhs,
                ..
            } => {
                assert_eq!(cauchy_lhs, r.lhs);
                assert_eq!(cauchy_rhs, r.rhs);
            }
            _ => panic!("wrong detail variant"),
        }

        let r = sum_symmetric_inequality(&mat(2, &[0, 1, 1, 0])).unwrap();
        assert_eq!((r.lhs, r.rhs), (q("4"), q("4")));
        assert!(r.equality);

        let r = sum_symmetric_inequality(&RationalMatrix::zeros(3)).unwrap();
        assert!(r.equality);

        assert_eq!(
            sum_symmetric_inequality(&mat(2, &[0, 2, 1, 0])),
            Err(Error::NotSumSymmetric)
        );
    }

    #[test]
    fn symmetric_even_case_needs_no_hypothesis() {
        // For symmetric matrices and even k+l the comparison holds whether or
        // not the sum vectors are ordered.
        for vals in [
            vec![0i64, 3, 0, 3, 0, -1, 0, -1, 0],
            vec![2, -5, 1, -5, 0, 4, 1, 4, -3],
            vec![0, 1, 1, 1, 0, 1, 1, 1, 0],
        ] {
            let a = mat(3, &vals);
            assert!(a.is_symmetric());
            for (k, l) in [(0, 2), (1, 1), (1, 3), (2, 2), (0, 4)] {
                let r = matrix_power_inequality(&a, k, l);
                assert!(r.lhs <= r.rhs, "failed at k={k}, l={l} for {vals:?}");
            }
        }
    }

    #[test]
    fn eulerian_examples() {
        let r = eulerian_inequality(&Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q("9"), q("9")));
        assert!(r.holds && r.equality);
        match r.detail {
            ReportDetail::Eulerian {
                ratio_lhs, ratio_rhs, ..
            } => {
                assert_eq!(ratio_lhs, Some(q("1")));
                assert_eq!(ratio_rhs, Some(q("1")));
            }
            _ => panic!("wrong detail variant"),
        }

        let r = eulerian_inequality(&Digraph::new(2, vec![]).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q("0"), q("0")));
        match r.detail {
            ReportDetail::Eulerian { ratio_lhs, .. } => assert_eq!(ratio_lhs, None),
            _ => panic!("wrong detail variant"),
        }

        let two_cycles =
            Digraph::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let r = eulerian_inequality(&two_cycles).unwrap();
        assert_eq!((r.lhs, r.rhs), (q("16"), q("16")));
        assert!(r.equality);

        assert_eq!(
            eulerian_inequality(&Digraph::new(2, vec![(0, 1)]).unwrap()),
            Err(Error::NotDegreeBalanced)
        );
    }

    #[test]
    fn reports_serialize_with_sorted_keys_and_string_numbers() {
        let r = matrix_power_inequality(&mat(2, &[0, 2, 1, 0]), 1, 1);
        let json = crate::canonical_json(&r);
        assert!(json.contains("\"applicable\": \"ge\""));
        assert!(json.contains("\"lhs\": \"9\""));
        let z = zagreb_inequality(&path(4)).unwrap();
        let json = crate::canonical_json(&z);
        assert!(json.contains("\"m1_over_n\": \"5/2\""));
        assert!(json.contains("\"equality_class\": \"not_applicable\""));
    }
}
