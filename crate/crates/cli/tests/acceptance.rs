//! Acceptance sweep. Each test covers one numbered criterion and prints a
//! single `PASS` line (visible with `--nocapture`) once it holds; a failed
//! assertion marks the criterion failed.
//!
//! Everything is exact arithmetic, so every comparison below uses tolerance
//! zero.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use walkineq::graphs::{vertex_pairs, Digraph, Graph};
use walkineq::indices::verify_walk_identities;
use walkineq::inequalities::{
    digraph_walk_inequality, eulerian_inequality, matrix_power_inequality,
    sum_symmetric_inequality, zagreb_inequality, ReportDetail,
};
use walkineq::matrices::RationalMatrix;
use walkineq::orderings::{chebyshev_weighted, Direction};
use walkineq::search::{run_search, ClassFilter, Predicate, SearchSpec};
use walkineq::walks::{walk_profile, walk_profile_oracle};
use walkineq::{canonical_json, BigInt, Rational};

fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.random_range(-9..=9), rng.random_range(1..=9))
}

/// Random symmetric matrix with entries in `[-9, 9]` and denominators `<= 9`.
fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut entries = vec![Rational::from_integer(0.into()); n * n];
    for i in 0..n {
        for j in i..n {
            let e = random_rational(rng);
            entries[i * n + j] = e.clone();
            entries[j * n + i] = e;
        }
    }
    RationalMatrix::new(n, entries).unwrap()
}

#[test]
fn criterion_01_walk_identities_on_every_small_graph() {
    let mut graphs = 0u64;
    for n in 1..=7usize {
        let bits = vertex_pairs(n).len();
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            assert!(
                verify_walk_identities(&g).all_hold(),
                "identity failed on {}",
                g.to_edge_list()
            );
            graphs += 1;
        }
    }
    assert_eq!(graphs, 2_131_019);
    println!("PASS: criterion 1 — M1=w2, 2M2=w3, w0=n, w1=2m on all {graphs} graphs with n <= 7");
}

#[test]
fn criterion_02_matrix_and_dp_walk_counts_agree() {
    let mut graphs = 0u64;
    for n in 1..=5usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            for k in 0..=8 {
                assert_eq!(walk_profile(&g, k), walk_profile_oracle(&g, k));
            }
            graphs += 1;
        }
    }
    let mut digraphs = 0u64;
    for n in 1..=5usize {
        let bits = n * (n - 1);
        for mask in 0..1u64 << bits {
            let d = Digraph::from_arc_mask(n, mask);
            for k in 0..=8 {
                assert_eq!(walk_profile(&d, k), walk_profile_oracle(&d, k));
            }
            digraphs += 1;
        }
    }
    assert_eq!((graphs, digraphs), (1_099, 1_052_741));
    println!(
        "PASS: criterion 2 — matrix and DP walk counts agree for {graphs} graphs and \
         {digraphs} digraphs with n <= 5, k <= 8"
    );
}

#[test]
fn criterion_03_ordered_digraph_power_sums_never_violate() {
    let mut checks = 0u64;
    for n in 1..=4usize {
        let bits = n * (n - 1);
        for mask in 0..1u64 << bits {
            let d = Digraph::from_arc_mask(n, mask);
            for k in 0..=4usize {
                for l in 0..=4 - k {
                    let r = digraph_walk_inequality(&d, k, l);
                    // `holds` asserts exactly the direction(s) licensed by the
                    // ordering of e^[k] and s^[l], and is vacuously true when
                    // neither applies.
                    assert!(r.holds, "violation on {} k={k} l={l}", d.to_edge_list());
                    checks += 1;
                }
            }
        }
    }
    println!("PASS: criterion 3 — no licensed direction fails in {checks} digraph checks (n <= 4, k+l <= 4)");
}

#[test]
fn criterion_04_even_exponent_sums_need_no_ordering_hypothesis() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0401);
    for trial in 0..10_000u32 {
        let n = rng.random_range(1..=6);
        let a = random_symmetric(&mut rng, n);
        let total = 2 * rng.random_range(0..=3usize);
        let k = rng.random_range(0..=total);
        let l = total - k;
        let r = matrix_power_inequality(&a, k, l);
        assert!(
            r.lhs <= r.rhs,
            "even-case violation on trial {trial}: n={n} k={k} l={l}\n{}",
            a.to_text()
        );
    }
    println!("PASS: criterion 4 — S(A^k)S(A^l) <= nS(A^{{k+l}}) on 10000 random symmetric matrices, k+l even");
}

#[test]
fn criterion_05_similarly_ordered_hypothesis_implies_zagreb() {
    let mut checked = 0u64;
    for n in 1..=7usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            if g.edge_count() == 0 {
                continue;
            }
            let r = zagreb_inequality(&g).unwrap();
            if r.hypothesis_similarly_ordered {
                assert!(r.holds, "violation on {}", g.to_edge_list());
                checked += 1;
            }
        }
    }
    println!("PASS: criterion 5 — M1/n <= M2/m on all {checked} hypothesis-satisfying graphs with n <= 7");
}

#[test]
fn criterion_06_equality_exactly_on_regular_or_complete_bipartite() {
    let mut checked = 0u64;
    for n in 1..=7usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            if g.edge_count() == 0 {
                continue;
            }
            let flags = g.classify();
            if !flags.connected {
                continue;
            }
            let r = zagreb_inequality(&g).unwrap();
            if !r.hypothesis_similarly_ordered {
                continue;
            }
            let characterized = flags.regular || flags.complete_bipartite;
            assert_eq!(
                r.equality,
                characterized,
                "characterization mismatch on {}",
                g.to_edge_list()
            );
            checked += 1;
        }
    }
    println!("PASS: criterion 6 — equality <=> regular or complete bipartite on {checked} connected graphs with n <= 7");
}

#[test]
fn criterion_07_class_claims_and_reproducible_class_searches() {
    // Trees up to 9 vertices, via the dedicated search path.
    let trees = run_search(&SearchSpec {
        directed: false,
        min_n: 1,
        max_n: 9,
        class_filter: ClassFilter::Tree,
        predicate: Predicate::ZagrebViolation,
        limit: 5,
        override_cap: true,
    })
    .unwrap();
    assert_eq!(trees.matched, 0, "tree violation: {:?}", trees.witnesses);
    assert_eq!(trees.examined, 5_063_362);

    // Connected chemical graphs up to 7 vertices, by direct scan.
    let mut chemical = 0u64;
    for n in 1..=7usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            if g.edge_count() == 0 {
                continue;
            }
            let flags = g.classify();
            if !(flags.connected && flags.chemical) {
                continue;
            }
            assert!(
                zagreb_inequality(&g).unwrap().holds,
                "chemical violation on {}",
                g.to_edge_list()
            );
            chemical += 1;
        }
    }

    // Subdivisions of every graph up to 5 vertices.
    let mut subdivisions = 0u64;
    for n in 1..=5usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..1u64 << bits {
            let g = Graph::from_edge_mask(n, mask);
            if g.edge_count() == 0 {
                continue;
            }
            let s = g.subdivision();
            assert!(
                zagreb_inequality(&s).unwrap().holds,
                "subdivision violation on {}",
                g.to_edge_list()
            );
            subdivisions += 1;
        }
    }

    // Violator hunts over connected graphs and forests complete and are
    // byte-for-byte reproducible; the counts themselves are findings, not
    // fixed expectations.
    let connected_spec = SearchSpec {
        directed: false,
        min_n: 1,
        max_n: 7,
        class_filter: ClassFilter::Connected,
        predicate: Predicate::ZagrebViolation,
        limit: 20,
        override_cap: false,
    };
    let connected_a = canonical_json(&run_search(&connected_spec).unwrap());
    let connected_b = canonical_json(&run_search(&connected_spec).unwrap());
    assert_eq!(connected_a, connected_b);

    let forest_spec = SearchSpec {
        directed: false,
        min_n: 1,
        max_n: 9,
        class_filter: ClassFilter::Forest,
        predicate: Predicate::ZagrebViolation,
        limit: 20,
        override_cap: true,
    };
    let forest_a = canonical_json(&run_search(&forest_spec).unwrap());
    let forest_b = canonical_json(&run_search(&forest_spec).unwrap());
    assert_eq!(forest_a, forest_b);

    let connected_matches: serde_json::Value = serde_json::from_str(&connected_a).unwrap();
    let forest_matches: serde_json::Value = serde_json::from_str(&forest_a).unwrap();
    println!(
        "PASS: criterion 7 — no violation among {} trees (n <= 9), {chemical} connected chemical \
         graphs (n <= 7), {subdivisions} subdivisions (base n <= 5); reproducible hunts found \
         {} connected and {} forest violators",
        trees.examined, connected_matches["matched"], forest_matches["matched"]
    );
}

#[test]
fn criterion_08_eulerian_and_sum_symmetric_corollaries() {
    let mut balanced = 0u64;
    for n in 1..=4usize {
        let bits = n * (n - 1);
        for mask in 0..1u64 << bits {
            let d = Digraph::from_arc_mask(n, mask);
            if !d.is_degree_balanced() {
                continue;
            }
            let r = eulerian_inequality(&d).unwrap();
            assert!(r.holds, "eulerian violation on {}", d.to_edge_list());
            balanced += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x0802);
    for trial in 0..10_000u32 {
        let n = rng.random_range(1..=6);
        let base = random_symmetric(&mut rng, n);
        let mut entries: Vec<Rational> = (0..n * n).map(|i| base.entry(i / n, i % n).clone()).collect();
        // Overlay constant-weight random permutations; they add the same
        // amount to every row and column sum, preserving sum-symmetry.
        for _ in 0..rng.random_range(0..=2u32) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let c = random_rational(&mut rng);
            for (i, &j) in perm.iter().enumerate() {
                entries[i * n + j] += &c;
            }
        }
        let a = RationalMatrix::new(n, entries).unwrap();
        assert!(a.is_sum_symmetric());
        let r = sum_symmetric_inequality(&a).unwrap();
        assert!(r.holds, "sum-symmetric violation on trial {trial}:\n{}", a.to_text());
        match &r.detail {
            ReportDetail::SumSymmetric {
                cauchy_lhs,
                cauchy_rhs,
                ..
            } => {
                assert_eq!(cauchy_lhs, &r.lhs, "route mismatch on trial {trial}");
                assert_eq!(cauchy_rhs, &r.rhs, "route mismatch on trial {trial}");
            }
            _ => panic!("wrong detail variant"),
        }
    }
    println!(
        "PASS: criterion 8 — w1^2 <= n*w2 on {balanced} degree-balanced digraphs (n <= 4); \
         S(A)^2 <= nS(A^2) with Cauchy-route agreement on 10000 random sum-symmetric matrices"
    );
}

#[test]
fn criterion_09_chebyshev_sum_inequality_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0903);
    let random_vec = |rng: &mut ChaCha8Rng, len: usize| -> Vec<Rational> {
        (0..len).map(|_| random_rational(rng)).collect()
    };
    let random_weights = |rng: &mut ChaCha8Rng, len: usize| -> Vec<Rational> {
        (0..len).map(|_| q(rng.random_range(0..=9), rng.random_range(1..=9))).collect()
    };
    let shuffle_both = |rng: &mut ChaCha8Rng, a: &mut Vec<Rational>, b: &mut Vec<Rational>| {
        let mut idx: Vec<usize> = (0..a.len()).collect();
        idx.shuffle(rng);
        *a = idx.iter().map(|&i| a[i].clone()).collect();
        *b = idx.iter().map(|&i| b[i].clone()).collect();
    };

    for _ in 0..10_000u32 {
        let len = rng.random_range(1..=8);
        let mut a = random_vec(&mut rng, len);
        let mut b = random_vec(&mut rng, len);
        a.sort();
        b.sort();
        shuffle_both(&mut rng, &mut a, &mut b);
        let r = chebyshev_weighted(&a, &b, &random_weights(&mut rng, len)).unwrap();
        assert_eq!(r.direction, Direction::Le);
        assert!(r.holds && r.lhs <= r.rhs, "similarly ordered case failed");
    }

    for _ in 0..10_000u32 {
        let len = rng.random_range(1..=8);
        let mut a = random_vec(&mut rng, len);
        let mut b = random_vec(&mut rng, len);
        a.sort();
        b.sort();
        b.reverse();
        shuffle_both(&mut rng, &mut a, &mut b);
        let r = chebyshev_weighted(&a, &b, &random_weights(&mut rng, len)).unwrap();
        assert!(r.holds && r.lhs >= r.rhs, "conversely ordered case failed");
    }

    for _ in 0..10_000u32 {
        let len = rng.random_range(1..=8);
        let constant = random_rational(&mut rng);
        let a = vec![constant; len];
        let b = random_vec(&mut rng, len);
        let r = chebyshev_weighted(&a, &b, &random_weights(&mut rng, len)).unwrap();
        assert!(r.equality && r.lhs == r.rhs, "constant case not an equality");
    }
    println!(
        "PASS: criterion 9 — weighted Chebyshev directions and constant-input equality on \
         3x10000 random instances"
    );
}

#[test]
fn criterion_10_repeated_search_invocations_are_byte_identical() {
    let run = |args: &[&str]| -> Vec<u8> {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_walkineq"))
            .args(args)
            .output()
            .expect("binary should run");
        assert!(out.status.code().is_some());
        out.stdout
    };
    let flag_sets: [&[&str]; 2] = [
        &[
            "search", "--class", "connected", "--max-n", "6", "--predicate", "zagreb-violation",
            "--json",
        ],
        &[
            "search", "--directed", "--max-n", "4", "--predicate", "ordering-census", "--k", "1",
            "--l", "2", "--json",
        ],
    ];
    for args in flag_sets {
        let first = run(args);
        let second = run(args);
        assert!(!first.is_empty());
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
    println!("PASS: criterion 10 — repeated search invocations produce byte-identical JSON");
}
