//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them). Tolerances are pinned
//! here, not configured.
//!
//! The brute-force oracles in this file are self-contained: they share no
//! code with the solvers they check.

use ballswap::cert::Certificate;
use ballswap::checker::{certificate_is_valid, check_certificate};
use ballswap::coloring::{balanced_coloring, make_hamiltonian, wind_coloring};
use ballswap::inequality::{
    exhaustive_check, inequality_sides, rational_matrix, square_case_certificate,
    InequalityInstance, Rat,
};
use ballswap::involution::{balls_route, solve_4parts, solve_balls};
use ballswap::matching::{
    hall_coefficient_bounded, max_bipartite_matching, perfect_matching_with_loops, BipGraph,
    LoopGraph, LoopMatching,
};
use ballswap::model::{
    bracket_after_involution, enumerate_bnk, instance_from_matrix, uniform_matrix, WeightMatrix,
};
use ballswap::oracle::{
    brute_force_involution, verify_equivalence_direction, verify_higgins, verify_weak_balls,
    HigginsVerdict,
};
use ballswap::ratio::rat_from_str;
use ballswap::sample;
use ballswap::tensor::{bigraph_tensor, complete_bipartite};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CRITERION_CLASSES: [(usize, usize); 6] = [(1, 1), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)];

fn pass(criterion: &str, detail: String) {
    println!("[acceptance] {criterion}: PASS — {detail}");
}

/// Criterion 1: every enumerated B_{n,k} member of the desk classes admits a
/// swap involution, found by exhaustive search and checked exactly.
#[test]
fn criterion_01_exhaustive_swap_verification() {
    let mut total = 0usize;
    for (n, k) in CRITERION_CLASSES {
        let members = enumerate_bnk(n, k, None).unwrap();
        for b in &members {
            let g = instance_from_matrix(b);
            let iota = brute_force_involution(&g, 16)
                .unwrap()
                .unwrap_or_else(|| panic!("no involution for {b:?} — counterexample!"));
            assert_eq!(
                bracket_after_involution(&g, &iota),
                uniform_matrix(n, k),
                "bracket identity failed for {b:?}"
            );
        }
        total += members.len();
    }
    pass(
        "criterion 01 (exhaustive swap search)",
        format!("{total} matrices across 6 classes"),
    );
}

/// Criterion 2: the constructive solver succeeds on every covered random
/// instance and agrees with the exhaustive oracle on small ones.
#[test]
fn criterion_02_constructive_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let mut covered: Vec<(usize, usize)> = Vec::new();
    for n in 2..=7usize {
        for k in 1..=30usize {
            if balls_route(n, k).is_some() {
                covered.push((n, k));
            }
        }
    }
    let mut shapes: Vec<(usize, usize)> = (0..500)
        .map(|_| covered[rng.gen_range(0..covered.len())])
        .collect();
    for &k in &[9usize, 15, 21] {
        shapes.extend(std::iter::repeat((6, k)).take(10));
    }

    let mut oracle_checked = 0usize;
    for &(n, k) in &shapes {
        let g = sample::random_biregular_instance(&mut rng, n, k);
        let (iota, cert) =
            solve_balls(&g).unwrap_or_else(|e| panic!("solver failed on covered ({n},{k}): {e}"));
        assert_eq!(bracket_after_involution(&g, &iota), uniform_matrix(n, k));
        assert!(certificate_is_valid(&cert));
        if n * k <= 12 {
            let found = brute_force_involution(&g, 12).unwrap();
            assert!(found.is_some(), "oracle disagrees with solver on ({n},{k})");
            oracle_checked += 1;
        }
    }
    pass(
        "criterion 02 (constructive solver)",
        format!(
            "{} instances, {oracle_checked} oracle cross-checks",
            shapes.len()
        ),
    );
}

/// Criterion 3: balanced colorings keep every vertex's color-degree spread
/// within 1 — exact, no tolerance.
#[test]
fn criterion_03_balanced_coloring_spread() {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for _ in 0..500 {
        let g = sample::random_bipartite_multigraph(&mut rng, 8, 8, 60);
        let m = rng.gen_range(1..=5);
        let coloring = balanced_coloring(&g, m);
        let mut left = vec![vec![0i64; m]; g.left_size];
        let mut right = vec![vec![0i64; m]; g.right_size];
        for (e, &(x, y)) in g.edges.iter().enumerate() {
            left[x][coloring.colors[e]] += 1;
            right[y][coloring.colors[e]] += 1;
        }
        for row in left.iter().chain(right.iter()) {
            let (lo, hi) = (row.iter().min().unwrap(), row.iter().max().unwrap());
            assert!(hi - lo <= 1, "spread {row:?} exceeds 1");
        }
    }
    pass(
        "criterion 03 (balanced coloring spread)",
        "500 multigraphs, spread <= 1".into(),
    );
}

/// Criterion 4: wind colorings satisfy both postconditions, and for
/// |eps| = 2 the repair loop always reaches a single 2n-cycle. (Strict
/// component-count decrease per flip is asserted inside the loop itself;
/// any regression panics here.)
#[test]
fn criterion_04_wind_and_hamiltonian() {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let mut wind_done = 0usize;
    while wind_done < 300 {
        let n = rng.gen_range(2..=7usize);
        let m = rng.gen_range(0..=4u64);
        let eps = [-2i64, -1, 0, 1, 2][rng.gen_range(0..5)];
        let kk = m as i64 * n as i64 + eps;
        if eps.unsigned_abs() >= n as u64 || kk < 1 || kk > 30 {
            continue;
        }
        let k = kk as usize;
        let g = sample::random_biregular_instance(&mut rng, n, k);
        let (coloring, exceptional) = wind_coloring(&g, n, m, eps).unwrap();
        let wv = ballswap::model::bracket_pair(&coloring.colors, &g.right_labels(), n, k);
        assert_eq!(wv, uniform_matrix(n, k));
        assert!(exceptional.is_regular(eps.unsigned_abs()));
        wind_done += 1;
    }

    let mut repair_done = 0usize;
    while repair_done < 200 {
        let n = rng.gen_range(3..=7usize);
        let eps = if rng.gen_bool(0.5) { 2i64 } else { -2 };
        let m = rng.gen_range(if eps > 0 { 0..=4u64 } else { 1..=4u64 });
        let kk = m as i64 * n as i64 + eps;
        if kk < 1 || kk > 30 {
            continue;
        }
        let k = kk as usize;
        let g = sample::random_biregular_instance(&mut rng, n, k);
        let (coloring, _) = wind_coloring(&g, n, m, eps).unwrap();
        let (repaired, exceptional) = make_hamiltonian(&g, &coloring, m, eps).unwrap();
        assert_eq!(exceptional.components().len(), 1);
        assert_eq!(exceptional.cycle_sequence().unwrap().len(), 2 * n);
        let wv = ballswap::model::bracket_pair(&repaired.colors, &g.right_labels(), n, k);
        assert_eq!(wv, uniform_matrix(n, k));
        repair_done += 1;
    }
    pass(
        "criterion 04 (wind + hamiltonian repair)",
        "300 wind instances, 200 repairs to a single 2n-cycle".into(),
    );
}

fn binary_bipgraph_from_code(n: usize, k: usize, code: u32) -> BipGraph {
    let mut m = WeightMatrix::zeros(n, k);
    for bit in 0..(n * k) {
        if code & (1 << bit) != 0 {
            m.set(bit / k, bit % k, 1);
        }
    }
    BipGraph::new(m)
}

fn random_bipgraph(rng: &mut ChaCha8Rng, max_parts: usize) -> BipGraph {
    let n = rng.gen_range(1..=max_parts);
    let k = rng.gen_range(1..=max_parts);
    let mut m = WeightMatrix::zeros(n, k);
    for i in 0..n {
        for j in 0..k {
            if rng.gen_bool(0.5) {
                m.set(i, j, 1);
            }
        }
    }
    BipGraph::new(m)
}

/// Criterion 5: h(G) >= p/q iff the tensor with K_{p,q} has a left-perfect
/// matching, and h is exactly multiplicative over tensor products.
#[test]
fn criterion_05_hall_tensor_equivalence_and_multiplicativity() {
    let equivalence = |g: &BipGraph, p: usize, q: usize| {
        let h = hall_coefficient_bounded(g, 25).unwrap();
        let lhs = h.value >= Rat::new(p as i64, q as i64);
        let product = bigraph_tensor(g, &complete_bipartite(p, q));
        let rhs = max_bipartite_matching(&product).is_left_perfect();
        assert_eq!(lhs, rhs, "h = {:?} vs matching for p/q = {p}/{q}", h.value);
    };

    for code in 0u32..(1 << 9) {
        let g = binary_bipgraph_from_code(3, 3, code);
        for p in 1..=4 {
            for q in 1..=4 {
                equivalence(&g, p, q);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for _ in 0..200 {
        let g = random_bipgraph(&mut rng, 5);
        for p in 1..=4 {
            for q in 1..=4 {
                equivalence(&g, p, q);
            }
        }
    }

    for _ in 0..100 {
        let g = random_bipgraph(&mut rng, 5);
        let h = random_bipgraph(&mut rng, 5);
        let hg = hall_coefficient_bounded(&g, 25).unwrap().value;
        let hh = hall_coefficient_bounded(&h, 25).unwrap().value;
        let hp = hall_coefficient_bounded(&bigraph_tensor(&g, &h), 25)
            .unwrap()
            .value;
        assert_eq!(hp, hg * hh, "multiplicativity failed");
    }
    pass(
        "criterion 05 (Hall tensor laws)",
        "512 + 200 equivalence graphs, 100 multiplicative pairs, exact rationals".into(),
    );
}

/// Criterion 6: the product of two margin-matched matrices always has a
/// perfect matching in its bipartite support graph.
#[test]
fn criterion_06_product_matrices_have_perfect_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let mut tuples = Vec::new();
    for n1 in 1..=6usize {
        for k1 in 1..=6usize {
            for n2 in 1..=6usize {
                // n1*k2 = n2*k1 forces k2.
                if (n2 * k1) % n1 == 0 {
                    let k2 = n2 * k1 / n1;
                    if (1..=6).contains(&k2) {
                        tuples.push((n1, k1, n2, k2));
                    }
                }
            }
        }
    }
    for trial in 0..200 {
        let (n1, k1, n2, k2) = tuples[rng.gen_range(0..tuples.len())];
        let m1 = sample::random_contingency_table(
            &mut rng,
            &vec![k2 as u64; n1],
            &vec![n2 as u64; k1],
            40 * n1 * k1,
        );
        let m2 = sample::random_contingency_table(
            &mut rng,
            &vec![k1 as u64; n2],
            &vec![n1 as u64; k2],
            40 * n2 * k2,
        );
        let product = bigraph_tensor(&BipGraph::new(m1), &BipGraph::new(m2.transpose()));
        assert_eq!(product.left_size(), product.right_size());
        let matching = max_bipartite_matching(&product);
        assert!(
            matching.is_left_perfect(),
            "trial {trial}: no perfect matching for shape ({n1},{k1})x({n2},{k2})"
        );
    }
    pass(
        "criterion 06 (product matchings)",
        "200 matched-margin pairs".into(),
    );
}

/// Criterion 7: the four-parts bijection holds exactly on random covered
/// pairs (equal parts with small shift, and the divisible case).
#[test]
fn criterion_07_four_parts_bijections() {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    let mut done = 0usize;
    while done < 200 {
        let cert = if rng.gen_bool(0.5) {
            // Equal parts, covered shift.
            let n = rng.gen_range(2..=7usize);
            let m = rng.gen_range(0..=3u64);
            let eps = [-2i64, -1, 0, 1, 2][rng.gen_range(0..5)];
            let kk = m as i64 * n as i64 + eps;
            if eps.unsigned_abs() >= n as u64 || kk < 1 || kk > 20 {
                continue;
            }
            let k = kk as usize;
            let g1 = sample::random_biregular_instance(&mut rng, n, k);
            let g2 = sample::random_biregular_instance(&mut rng, n, k);
            solve_4parts(&g1, &g2).unwrap().1
        } else {
            // Divisible case: k1 = m*n1, k2 = m*n2.
            let n1 = rng.gen_range(1..=5usize);
            let n2 = rng.gen_range(1..=5usize);
            let m = rng.gen_range(1..=3usize);
            let (k1, k2) = (m * n1, m * n2);
            let g1 = sample::random_biregular_with_degrees(&mut rng, n1, k1, k2 as u64, n2 as u64);
            let g2 = sample::random_biregular_with_degrees(&mut rng, n2, k2, k1 as u64, n1 as u64);
            solve_4parts(&g1, &g2).unwrap().1
        };
        // Both bracket identities are exactly what the checker recomputes.
        check_certificate(&cert).expect("four-parts certificate must validate");
        done += 1;
    }
    pass(
        "criterion 07 (four-parts bijections)",
        "200 covered pairs, both identities exact".into(),
    );
}

/// Exhaustive loop-aware matching search — the criterion 8 oracle, written
/// independently of the solver.
fn oracle_loop_matching_exists(g: &LoopGraph) -> bool {
    fn rec(g: &LoopGraph, taken: &mut Vec<bool>) -> bool {
        let v = match taken.iter().position(|&t| !t) {
            None => return true,
            Some(v) => v,
        };
        taken[v] = true;
        if g.has_loop(v) && rec(g, taken) {
            taken[v] = false;
            return true;
        }
        for w in v + 1..g.size() {
            if !taken[w] && g.mult.get(v, w) > 0 {
                taken[w] = true;
                if rec(g, taken) {
                    taken[v] = false;
                    taken[w] = false;
                    return true;
                }
                taken[w] = false;
            }
        }
        taken[v] = false;
        false
    }
    rec(g, &mut vec![false; g.size()])
}

/// Criterion 8: loop-aware perfect matching agrees with exhaustive search on
/// 1000 sampled loop graphs, and both outcomes certify.
#[test]
fn criterion_08_loop_matching_oracle_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let mut matched = 0usize;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8usize);
        let edge_p = rng.gen_range(0.1..0.6);
        let loop_p = rng.gen_range(0.0..0.5);
        let g = sample::random_loop_graph(&mut rng, n, edge_p, loop_p);
        let want = oracle_loop_matching_exists(&g);
        let outcome = perfect_matching_with_loops(&g);
        let got = matches!(outcome, LoopMatching::Perfect(_));
        assert_eq!(got, want, "disagreement on {:?}", g.mult);
        assert!(certificate_is_valid(&outcome.certificate(&g)));
        matched += usize::from(got);
    }
    pass(
        "criterion 08 (loop matching vs oracle)",
        format!("1000 graphs, {matched} matchable, full agreement"),
    );
}

/// Criterion 9: the inequality sweep finds no violations at desk scale and
/// the spectral certificate meets its stated tolerances.
#[test]
fn criterion_09_inequality_sweep_and_spectral_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    // 500 random 4x4 / 5x5 integer matrices: full odd-subset scan.
    for trial in 0..500 {
        let size = if trial % 2 == 0 { 4 } else { 5 };
        let m = sample::random_sparse_matrix(&mut rng, size, size, 0.4);
        let report = exhaustive_check(&rational_matrix(&m), None, 50_000_000).unwrap();
        assert!(!report.violated, "violation on random matrix {m:?}");
    }
    // Every enumerated member of the criterion 1 classes.
    for (n, k) in CRITERION_CLASSES {
        for b in enumerate_bnk(n, k, None).unwrap() {
            let report = exhaustive_check(&rational_matrix(&b), None, 50_000_000).unwrap();
            assert!(!report.violated, "violation on B member {b:?}");
        }
    }

    // 200 random square-case spectral certificates at pinned tolerances:
    // |sum lambda| <= 1e-9 * t * kappa, |sum lambda^2 - lhs| <= 1e-6 * max(1, lhs).
    let mut done = 0usize;
    while done < 200 {
        let size = rng.gen_range(3..=12usize);
        let m = sample::random_sparse_matrix(&mut rng, size, size, 0.5);
        let cells: Vec<(usize, usize)> = (0..size)
            .filter(|&i| m.get(i, i) == 0)
            .map(|i| (i, i))
            .collect();
        let t = if cells.len() % 2 == 0 {
            cells.len().saturating_sub(1)
        } else {
            cells.len()
        };
        if t == 0 {
            continue;
        }
        let inst = InequalityInstance::from_integer_matrix(&m, cells[..t].to_vec()).unwrap();
        let report = square_case_certificate(&inst, 1e-9).unwrap();
        let lhs_f = {
            let r = rat_from_str(&report.lhs).unwrap();
            *r.numer() as f64 / *r.denom() as f64
        };
        assert!(report.trace_sum.abs() <= 1e-9 * t as f64 * report.kappa);
        assert!((report.sum_sq - lhs_f).abs() <= 1e-6 * lhs_f.max(1.0));
        assert!(report.holds);
        done += 1;
    }

    // The pinned example: zero-diagonal all-ones 3x3 gives exactly 6 <= 8.
    let matrix: Vec<Vec<Rat>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| Rat::from_integer(i64::from(i != j)))
                .collect()
        })
        .collect();
    let inst = InequalityInstance::new(matrix, vec![(0, 0), (1, 1), (2, 2)]).unwrap();
    let (lhs, rhs) = inequality_sides(&inst);
    assert_eq!(lhs, Rat::from_integer(6));
    assert_eq!(rhs, Rat::from_integer(8));
    pass(
        "criterion 09 (inequality desk sweep)",
        "500 random + all desk-class matrices, 200 spectral certificates".into(),
    );
}

/// Criterion 10: no counterexample across the binary 3x3 sweep, the B_{3,3}
/// sweep, and the exact-Hall equivalence classes. A failure here serializes
/// the certificate into the panic message.
#[test]
fn criterion_10_conjecture_sweeps() {
    let mut vacuous = 0usize;
    for code in 0u32..(1 << 9) {
        let m = binary_bipgraph_from_code(3, 3, code).mult;
        match verify_higgins(&m).unwrap() {
            HigginsVerdict::Vacuous => vacuous += 1,
            HigginsVerdict::Holds(cert) => assert!(certificate_is_valid(&cert)),
            HigginsVerdict::Counterexample(cert) => panic!(
                "counterexample found (exit code 2): {}",
                ballswap::canonical_json(&cert)
            ),
        }
    }
    for b in enumerate_bnk(3, 3, None).unwrap() {
        let (ok, cert) = verify_weak_balls(&b);
        assert!(certificate_is_valid(&cert));
        if !ok {
            panic!(
                "counterexample found (exit code 2): {}",
                ballswap::canonical_json(&cert)
            );
        }
    }
    let mut h_checked = 0usize;
    for (n, k) in [(2usize, 2usize), (2, 3)] {
        for b in enumerate_bnk(n, k, None).unwrap() {
            assert!(
                verify_equivalence_direction(&b).unwrap(),
                "h != 1 for {b:?}"
            );
            h_checked += 1;
        }
    }
    pass(
        "criterion 10 (conjecture sweeps)",
        format!(
            "512 binary, 55 weak-ball members, {h_checked} exact h = 1 checks; {vacuous} vacuous"
        ),
    );
}

/// Criterion 11: every emitted certificate re-validates, and single-index
/// corruptions are rejected without exception.
#[test]
fn criterion_11_certificate_independence_and_mutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    let mut certs: Vec<Certificate> = Vec::new();

    for &(n, k) in &[(2usize, 2usize), (3, 5), (4, 6), (6, 9), (5, 5)] {
        let g = sample::random_biregular_instance(&mut rng, n, k);
        certs.push(solve_balls(&g).unwrap().1);
    }
    let g1 = sample::random_biregular_instance(&mut rng, 3, 4);
    let g2 = sample::random_biregular_instance(&mut rng, 3, 4);
    certs.push(solve_4parts(&g1, &g2).unwrap().1);
    // A perfect and a deficient bipartite matching.
    certs.push(max_bipartite_matching(&BipGraph::new(uniform_matrix(3, 3))).certificate);
    let deficient = BipGraph::new(
        WeightMatrix::from_rows(vec![vec![1, 1, 0], vec![1, 1, 0], vec![1, 1, 0]]).unwrap(),
    );
    certs.push(max_bipartite_matching(&deficient).certificate);
    // Loop matching both ways.
    let looped = LoopGraph::new(WeightMatrix::from_rows(vec![vec![1]]).unwrap()).unwrap();
    certs.push(perfect_matching_with_loops(&looped).certificate(&looped));
    let isolated = LoopGraph::new(WeightMatrix::zeros(3, 3)).unwrap();
    certs.push(perfect_matching_with_loops(&isolated).certificate(&isolated));
    let (_, weak_cert) = verify_weak_balls(&uniform_matrix(2, 3));
    certs.push(weak_cert);

    for cert in &certs {
        check_certificate(cert).unwrap_or_else(|reason| {
            panic!(
                "emitted {} certificate failed validation: {reason}",
                cert.kind()
            )
        });
    }

    // Single-index corruptions, all of which must be rejected.
    let mut mutations = 0usize;
    for cert in &certs {
        for corrupted in corrupt(cert) {
            assert!(
                !certificate_is_valid(&corrupted),
                "corrupted {} certificate slipped through",
                corrupted.kind()
            );
            mutations += 1;
        }
    }
    assert!(mutations >= certs.len());
    pass(
        "criterion 11 (certificate independence)",
        format!(
            "{} certificates re-validated, {mutations} corruptions rejected",
            certs.len()
        ),
    );
}

/// Deterministic single-index corruptions that must invalidate the input.
fn corrupt(cert: &Certificate) -> Vec<Certificate> {
    let mut out = Vec::new();
    match cert {
        Certificate::BallsInvolution {
            instance,
            involution,
            pipeline,
        } => {
            if !involution.is_empty() {
                // Out-of-range index.
                let mut broken = involution.clone();
                broken[0] = involution.len();
                out.push(Certificate::BallsInvolution {
                    instance: instance.clone(),
                    involution: broken,
                    pipeline: pipeline.clone(),
                });
                // Duplicate value: no longer a permutation.
                if involution.len() >= 2 {
                    let mut dup = involution.clone();
                    dup[0] = dup[1];
                    out.push(Certificate::BallsInvolution {
                        instance: instance.clone(),
                        involution: dup,
                        pipeline: pipeline.clone(),
                    });
                }
            }
        }
        Certificate::PartsBijection {
            first,
            second,
            map,
            sigma_first,
            sigma_second,
        } => {
            if map.len() >= 2 {
                let mut dup = map.clone();
                dup[0] = dup[1];
                out.push(Certificate::PartsBijection {
                    first: first.clone(),
                    second: second.clone(),
                    map: dup,
                    sigma_first: sigma_first.clone(),
                    sigma_second: sigma_second.clone(),
                });
            }
        }
        Certificate::Matching {
            graph,
            pairs,
            left_perfect,
        } => {
            if let Some(&(x, _)) = pairs.first() {
                let mut broken = pairs.clone();
                broken[0] = (x, graph.cols); // out of range
                out.push(Certificate::Matching {
                    graph: graph.clone(),
                    pairs: broken,
                    left_perfect: *left_perfect,
                });
            }
            if pairs.len() >= 2 {
                let mut reuse = pairs.clone();
                reuse[0].1 = reuse[1].1; // right vertex used twice
                out.push(Certificate::Matching {
                    graph: graph.clone(),
                    pairs: reuse,
                    left_perfect: *left_perfect,
                });
            }
        }
        Certificate::DeficientSet { graph, subset } => {
            let mut broken = subset.clone();
            if let Some(first) = broken.first_mut() {
                *first = graph.rows; // out of range
            }
            out.push(Certificate::DeficientSet {
                graph: graph.clone(),
                subset: broken,
            });
        }
        Certificate::LoopMatching { graph, pairing } => {
            let mut broken = pairing.clone();
            if let Some(first) = broken.first_mut() {
                *first = graph.rows; // out of range
                out.push(Certificate::LoopMatching {
                    graph: graph.clone(),
                    pairing: broken,
                });
            }
        }
        Certificate::TutteObstruction { graph, removed } => {
            // Add an out-of-range vertex to the removed set.
            let mut broken = removed.clone();
            broken.push(graph.rows);
            out.push(Certificate::TutteObstruction {
                graph: graph.clone(),
                removed: broken,
            });
        }
        Certificate::InequalityViolation {
            matrix,
            cells,
            lhs,
            rhs,
        } => {
            let mut broken = cells.clone();
            if let Some(first) = broken.first_mut() {
                *first = (matrix.len(), 0);
            }
            out.push(Certificate::InequalityViolation {
                matrix: matrix.clone(),
                cells: broken,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }
    out
}

/// The lemma-1 style brackets also hold through the full pipeline when the
/// involution acts on an instance: the end-to-end identity used everywhere.
#[test]
fn end_to_end_involution_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(2000);
    for &(n, k) in &[(3usize, 5usize), (4, 4), (6, 9)] {
        let g = sample::random_biregular_instance(&mut rng, n, k);
        let (iota, _) = solve_balls(&g).unwrap();
        let acted = ballswap::model::apply_involution(&g, &iota).unwrap();
        assert_eq!(ballswap::model::bracket(&acted), uniform_matrix(n, k));
        // Left degrees stay a permutation of the originals.
        let mut a = g.left_degrees();
        let mut b = acted.left_degrees();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
