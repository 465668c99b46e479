//! From colorings to swap involutions: bucket tables, the alignment
//! permutation `alpha`, positional bucket pairing, the n = k board method,
//! and the dispatchers that solve the ball-swap and four-parts problems on
//! every covered parameter class.

use serde::{Deserialize, Serialize};

use crate::cert::{BallsPipeline, Certificate};
use crate::coloring::{
    covered_shift, make_hamiltonian, six_coloring, wind_coloring, Coloring, ExceptionalGraph,
};
use crate::error::{Error, Result};
use crate::matching::{konig_perfect_matching, BipGraph};
use crate::model::{
    bracket, bracket_after_involution, bracket_pair, uniform_matrix, Involution, LabeledBigraph,
    Permutation, WeightMatrix,
};

/// Per-(left, color) edge buckets of a colored instance, with the count
/// matrix `[u, w]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BucketTable {
    pub counts: WeightMatrix,
    pub left_size: usize,
    pub palette: usize,
    buckets: Vec<Vec<usize>>,
}

impl BucketTable {
    pub fn build(g: &LabeledBigraph, coloring: &Coloring) -> Self {
        assert_eq!(coloring.colors.len(), g.edge_count());
        let left_size = g.left_size;
        let palette = coloring.palette;
        let mut buckets = vec![Vec::new(); left_size * palette];
        for (e, &(x, _)) in g.edges.iter().enumerate() {
            buckets[x * palette + coloring.colors[e]].push(e);
        }
        // Edge ids arrive ascending, so each bucket is already sorted.
        let counts = bracket_pair(&g.left_labels(), &coloring.colors, left_size, palette);
        BucketTable {
            counts,
            left_size,
            palette,
            buckets,
        }
    }

    pub fn bucket(&self, left: usize, color: usize) -> &[usize] {
        &self.buckets[left * self.palette + color]
    }
}

/// `counts(i, f) == counts(alpha(f), alpha^-1(i))` for all `i, f` — the exact
/// solvability condition for bucket pairing.
pub fn alpha_condition_holds(counts: &WeightMatrix, alpha: &Permutation) -> bool {
    let n = counts.rows;
    if counts.cols != n || alpha.len() != n {
        return false;
    }
    let inv = alpha.inverse();
    (0..n).all(|i| (0..n).all(|f| counts.get(i, f) == counts.get(alpha.apply(f), inv.apply(i))))
}

fn permutations_lex(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation { map: cur.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

const ALPHA_EXHAUSTIVE_LIMIT: usize = 8;

/// An `alpha` satisfying the bucket-pairing condition for the given counts.
///
/// Structural candidates come from the exceptional graph (identity for no
/// exceptional edges, the matching for 1-regular, reflections of the cycle
/// for a connected 2-regular graph); every candidate is condition-checked
/// before use, and an exhaustive scan over `S_n` (n <= 8) backs up the
/// structure. Failure is a research artifact, not a plain error.
pub fn find_alpha(table: &BucketTable, exceptional: &ExceptionalGraph) -> Result<Permutation> {
    let n = table.left_size;
    if table.palette != n {
        return Err(Error::SizeMismatch(
            "alpha needs a square count matrix".into(),
        ));
    }
    let mut candidates: Vec<Permutation> = Vec::new();

    if exceptional.incidence.total() == 0 {
        candidates.push(Permutation::identity(n));
    } else if exceptional.is_regular(1) {
        // Matching mu: left vertex -> its exceptional color.
        let mu: Vec<usize> = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&f| exceptional.incidence.get(i, f) > 0)
                    .unwrap()
            })
            .collect();
        if let Ok(p) = Permutation::new(mu) {
            candidates.push(p.inverse());
            candidates.push(p);
        }
    } else if exceptional.is_regular(2) {
        if let Ok(seq) = exceptional.cycle_sequence() {
            // Side-swapping involutive symmetries of the 2n-cycle: the n
            // reflections through edge midpoints, plus the antipodal
            // rotation when n is odd.
            let len = seq.len();
            let mut register = |position_map: &dyn Fn(usize) -> usize| {
                let mut alpha = vec![usize::MAX; n];
                for (p, &v) in seq.iter().enumerate() {
                    if v >= n {
                        let image = seq[position_map(p) % len];
                        if image < n {
                            alpha[v - n] = image;
                        }
                    }
                }
                if alpha.iter().all(|&x| x != usize::MAX) {
                    if let Ok(p) = Permutation::new(alpha) {
                        candidates.push(p);
                    }
                }
            };
            for a in (1..len).step_by(2) {
                register(&move |p| (a + len - p % len) % len);
            }
            if n % 2 == 1 {
                register(&move |p| (p + n) % len);
            }
        }
    }
    for cand in &candidates {
        if alpha_condition_holds(&table.counts, cand) {
            return Ok(cand.clone());
        }
    }
    if n <= ALPHA_EXHAUSTIVE_LIMIT {
        for cand in permutations_lex(n) {
            if alpha_condition_holds(&table.counts, &cand) {
                return Ok(cand);
            }
        }
    }
    Err(Error::lemma(
        "alpha-search",
        format!("no alignment permutation exists for the {n}x{n} count matrix"),
        serde_json::json!({ "counts": table.counts, "exceptional": exceptional }),
    ))
}

/// Pair bucket `(i, f)` with bucket `(alpha(f), alpha^-1(i))` index by index;
/// a self-paired bucket pairs first-with-last inward, leaving the middle
/// element fixed when its size is odd. The result satisfies
/// `u(iota(e)) = alpha(w(e))` for every edge.
pub fn pair_buckets(table: &BucketTable, alpha: &Permutation) -> Result<Involution> {
    if !alpha_condition_holds(&table.counts, alpha) {
        return Err(Error::SizeMismatch(
            "alpha does not satisfy the bucket size condition".into(),
        ));
    }
    let n = table.left_size;
    let inv = alpha.inverse();
    let total: usize = table.counts.total() as usize;
    let mut map = vec![usize::MAX; total];
    for i in 0..n {
        for f in 0..n {
            let (ti, tf) = (alpha.apply(f), inv.apply(i));
            let src = table.bucket(i, f);
            let dst = table.bucket(ti, tf);
            debug_assert_eq!(src.len(), dst.len());
            if (i, f) == (ti, tf) {
                let len = src.len();
                for t in 0..len {
                    map[src[t]] = src[len - 1 - t];
                }
            } else if (i, f) < (ti, tf) {
                for (&a, &b) in src.iter().zip(dst.iter()) {
                    map[a] = b;
                    map[b] = a;
                }
            }
        }
    }
    Involution::new(map)
}

/// The `n = k` construction: fill an `n x n` board column by column with
/// perfect matchings of the residual multigraph, then transpose the board.
/// The diagonal gives exactly `n` fixed points.
pub fn board_method(g: &LabeledBigraph) -> Result<Involution> {
    g.validate()?;
    let n = g.left_size;
    if g.right_size != n {
        return Err(Error::InvalidInput(
            "board method needs equal part sizes".into(),
        ));
    }
    if g.biregular_degrees() != Some((n as u64, n as u64)) {
        return Err(Error::InvalidInput(
            "board method needs n-regular instances".into(),
        ));
    }

    // Edge-id pools per (left, right) pair, consumed in ascending order.
    let mut pools: Vec<std::collections::VecDeque<usize>> =
        vec![std::collections::VecDeque::new(); n * n];
    for (e, &(x, y)) in g.edges.iter().enumerate() {
        pools[x * n + y].push_back(e);
    }

    let mut residual = BipGraph::new(bracket(g));
    let mut board = vec![vec![usize::MAX; n]; n];
    for col in 0..n {
        let pi = konig_perfect_matching(&residual)?;
        for i in 0..n {
            let y = pi.apply(i);
            let e = pools[i * n + y]
                .pop_front()
                .expect("pool tracks the residual");
            board[i][col] = e;
            residual.mult.set(i, y, residual.mult.get(i, y) - 1);
        }
    }
    debug_assert_eq!(residual.mult.total(), 0);

    let mut map = vec![usize::MAX; g.edge_count()];
    for i in 0..n {
        for c in 0..n {
            map[board[i][c]] = board[c][i];
        }
    }
    Involution::new(map)
}

/// Which constructive route solved an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BallsRoute {
    Board,
    Wind { m: u64, eps: i64 },
    Six { m: u64 },
}

/// Route selection for `solve_balls`: the board for square instances, wind
/// colorings for `k = mn + eps` with `|eps| <= 2`, and the six-coloring for
/// `n = 6, k = 6m + 3`.
pub fn balls_route(n: usize, k: usize) -> Option<BallsRoute> {
    if n == k {
        return Some(BallsRoute::Board);
    }
    if let Some((m, eps)) = covered_shift(k as u64, n as u64) {
        return Some(BallsRoute::Wind { m, eps });
    }
    if n == 6 && k >= 9 && (k - 3) % 6 == 0 {
        return Some(BallsRoute::Six {
            m: ((k - 3) / 6) as u64,
        });
    }
    None
}

/// A swap involution with `[u o iota, v]` all-ones, plus its certificate.
pub fn solve_balls(g: &LabeledBigraph) -> Result<(Involution, Certificate)> {
    g.validate()?;
    let (n, k) = (g.left_size, g.right_size);
    if g.biregular_degrees() != Some((k as u64, n as u64)) {
        return Err(Error::InvalidInput(format!(
            "instance must be biregular with |E| = n*k = {}",
            n * k
        )));
    }
    let route = balls_route(n, k).ok_or_else(|| {
        Error::Uncovered(format!("no proven construction for (n, k) = ({n}, {k})"))
    })?;

    let (iota, pipeline) = match route {
        BallsRoute::Board => {
            let iota = board_method(g)?;
            (
                iota,
                BallsPipeline {
                    route: "board".into(),
                    base_weight: None,
                    shift: None,
                    coloring: None,
                    alpha: None,
                },
            )
        }
        BallsRoute::Wind { m, eps } => {
            let (coloring, exceptional) = wind_coloring(g, n, m, eps)?;
            let (coloring, exceptional) = if eps.abs() == 2 {
                make_hamiltonian(g, &coloring, m, eps)?
            } else {
                (coloring, exceptional)
            };
            let table = BucketTable::build(g, &coloring);
            let alpha = find_alpha(&table, &exceptional)?;
            let iota = pair_buckets(&table, &alpha)?;
            (
                iota,
                BallsPipeline {
                    route: "wind".into(),
                    base_weight: Some(m),
                    shift: Some(eps),
                    coloring: Some(coloring),
                    alpha: Some(alpha.map),
                },
            )
        }
        BallsRoute::Six { m } => {
            let (coloring, exceptional) = six_coloring(g)?;
            let table = BucketTable::build(g, &coloring);
            let alpha = find_alpha(&table, &exceptional)?;
            let iota = pair_buckets(&table, &alpha)?;
            (
                iota,
                BallsPipeline {
                    route: "six".into(),
                    base_weight: Some(m),
                    shift: Some(3),
                    coloring: Some(coloring),
                    alpha: Some(alpha.map),
                },
            )
        }
    };

    let result = bracket_after_involution(g, &iota);
    if result != uniform_matrix(n, k) {
        return Err(Error::lemma(
            "swap-bracket",
            "constructed involution fails the bracket identity",
            serde_json::json!({ "instance": g, "involution": iota.map, "bracket": result }),
        ));
    }
    let cert = Certificate::BallsInvolution {
        instance: g.clone(),
        involution: iota.map.clone(),
        pipeline,
    };
    Ok((iota, cert))
}

/// Alignment permutations for two count matrices: `sigma` pair with
/// `n1(i, f) == n2(sigma2(f), sigma1^-1(i))` for all `i, f`.
fn sigmas_condition_holds(
    n1: &WeightMatrix,
    n2: &WeightMatrix,
    sigma1: &Permutation,
    sigma2: &Permutation,
) -> bool {
    if n1.rows != n2.cols || n1.cols != n2.rows {
        return false;
    }
    if sigma1.len() != n1.rows || sigma2.len() != n1.cols {
        return false;
    }
    let inv1 = sigma1.inverse();
    (0..n1.rows)
        .all(|i| (0..n1.cols).all(|f| n1.get(i, f) == n2.get(sigma2.apply(f), inv1.apply(i))))
}

const SIGMA_EXHAUSTIVE_LIMIT: usize = 5;

/// Part permutations aligning two exceptional structures of the same shape
/// (both empty, both perfect matchings, or both spanning cycles).
fn find_sigmas(
    t1: &BucketTable,
    x1: &ExceptionalGraph,
    t2: &BucketTable,
    x2: &ExceptionalGraph,
) -> Result<(Permutation, Permutation)> {
    let n1 = t1.left_size; // |L1|, also the palette of t2
    let n2 = t2.left_size;
    let mut candidates: Vec<(Permutation, Permutation)> = Vec::new();

    if x1.incidence.total() == 0 && x2.incidence.total() == 0 {
        candidates.push((Permutation::identity(n1), Permutation::identity(n2)));
    } else if x1.is_regular(1) && x2.is_regular(1) {
        // mu1 : L1 -> L2 (exceptional color of each left vertex of g1),
        // mu2 : L2 -> L1. With sigma2 = id the condition forces
        // sigma1^-1 = mu2 o mu1.
        let mu1: Vec<usize> = (0..n1)
            .map(|i| (0..n2).find(|&f| x1.incidence.get(i, f) > 0).unwrap())
            .collect();
        let mu2: Vec<usize> = (0..n2)
            .map(|i| (0..n1).find(|&f| x2.incidence.get(i, f) > 0).unwrap())
            .collect();
        if let (Ok(m1), Ok(m2)) = (Permutation::new(mu1), Permutation::new(mu2)) {
            let comp = Permutation {
                map: (0..n1).map(|i| m2.apply(m1.apply(i))).collect(),
            };
            candidates.push((comp.inverse(), Permutation::identity(n2)));
        }
    } else if x1.is_regular(2) && x2.is_regular(2) {
        if let (Ok(seq1), Ok(seq2)) = (x1.cycle_sequence(), x2.cycle_sequence()) {
            // Align the two spanning cycles: odd shifts in both directions
            // swap the sides as required.
            let len = seq1.len();
            for dir in [1i64, -1] {
                for t in (1..len).step_by(2) {
                    let mut s1 = vec![usize::MAX; n1];
                    let mut s2 = vec![usize::MAX; n2];
                    let mut ok = true;
                    for (p, &v) in seq1.iter().enumerate() {
                        let q = ((dir * p as i64 + t as i64).rem_euclid(len as i64)) as usize;
                        let w = seq2[q];
                        if v < n1 {
                            // left vertex of g1 -> palette slot of g2
                            if w >= n2 {
                                s1[v] = w - n2;
                            } else {
                                ok = false;
                                break;
                            }
                        } else {
                            // palette color of g1 (an L2 label) -> left of g2
                            if w < n2 {
                                s2[v - n1] = w;
                            } else {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    if let (Ok(p1), Ok(p2)) = (
                        Permutation::new(s1).map(|p| p.inverse()),
                        Permutation::new(s2),
                    ) {
                        candidates.push((p1, p2));
                    }
                }
            }
        }
    }

    for (s1, s2) in &candidates {
        if sigmas_condition_holds(&t1.counts, &t2.counts, s1, s2) {
            return Ok((s1.clone(), s2.clone()));
        }
    }
    if n1 <= SIGMA_EXHAUSTIVE_LIMIT && n2 <= SIGMA_EXHAUSTIVE_LIMIT {
        for s1 in permutations_lex(n1) {
            for s2 in permutations_lex(n2) {
                if sigmas_condition_holds(&t1.counts, &t2.counts, &s1, &s2) {
                    return Ok((s1, s2));
                }
            }
        }
    }
    Err(Error::lemma(
        "sigma-alignment",
        "no part permutations align the two exceptional structures",
        serde_json::json!({ "counts1": t1.counts, "counts2": t2.counts }),
    ))
}

/// A bijection `psi : E1 -> E2` with `[u2 o psi, v1]` and `[u1 o psi^-1, v2]`
/// both all-ones. Covered cases: equal parts with `k = mn + eps`,
/// `|eps| <= 2`, and the case `n1 | k1`.
pub fn solve_4parts(
    g1: &LabeledBigraph,
    g2: &LabeledBigraph,
) -> Result<(Permutation, Certificate)> {
    g1.validate()?;
    g2.validate()?;
    let (n1, k1) = (g1.left_size, g1.right_size);
    let (n2, k2) = (g2.left_size, g2.right_size);
    if n1 * k2 != n2 * k1 {
        return Err(Error::InvalidInput(format!(
            "part sizes must satisfy n1*k2 = n2*k1, got {n1}*{k2} != {n2}*{k1}"
        )));
    }
    if g1.biregular_degrees() != Some((k2 as u64, n2 as u64))
        || g2.biregular_degrees() != Some((k1 as u64, n1 as u64))
    {
        return Err(Error::InvalidInput(
            "instances must be biregular with |E1| = |E2| = n1*k2".into(),
        ));
    }

    let (w1, x1, w2, x2) = if k1 % n1 == 0 {
        let m = (k1 / n1) as u64;
        debug_assert_eq!(k2 % n2, 0);
        let (w1, x1) = wind_coloring(g1, n2, m, 0)?;
        let (w2, x2) = wind_coloring(g2, n1, m, 0)?;
        (w1, x1, w2, x2)
    } else if n1 == n2 && k1 == k2 {
        let n = n1;
        let (m, eps) = covered_shift(k1 as u64, n as u64).ok_or_else(|| {
            Error::Uncovered(format!("(n, k) = ({n}, {k1}) is not a covered pair"))
        })?;
        let (w1, x1) = wind_coloring(g1, n, m, eps)?;
        let (w2, x2) = wind_coloring(g2, n, m, eps)?;
        if eps.abs() == 2 {
            let (w1, x1) = make_hamiltonian(g1, &w1, m, eps)?;
            let (w2, x2) = make_hamiltonian(g2, &w2, m, eps)?;
            (w1, x1, w2, x2)
        } else {
            (w1, x1, w2, x2)
        }
    } else {
        return Err(Error::Uncovered(format!(
            "four-parts needs equal parts with a covered shift or n1 | k1; got ({n1},{k1}) vs ({n2},{k2})"
        )));
    };

    let t1 = BucketTable::build(g1, &w1);
    let t2 = BucketTable::build(g2, &w2);
    let (sigma1, sigma2) = find_sigmas(&t1, &x1, &t2, &x2)?;

    let inv1 = sigma1.inverse();
    let mut map = vec![usize::MAX; g1.edge_count()];
    for i in 0..n1 {
        for f in 0..n2 {
            let src = t1.bucket(i, f);
            let dst = t2.bucket(sigma2.apply(f), inv1.apply(i));
            debug_assert_eq!(src.len(), dst.len());
            for (&a, &b) in src.iter().zip(dst.iter()) {
                map[a] = b;
            }
        }
    }
    let psi = Permutation::new(map)?;

    // Both bracket identities, recounted directly.
    let u2_psi: Vec<usize> = (0..g1.edge_count())
        .map(|e| g2.left_label(psi.apply(e)))
        .collect();
    let b1 = bracket_pair(&u2_psi, &g1.right_labels(), n2, k1);
    let psi_inv = psi.inverse();
    let u1_inv: Vec<usize> = (0..g2.edge_count())
        .map(|e| g1.left_label(psi_inv.apply(e)))
        .collect();
    let b2 = bracket_pair(&u1_inv, &g2.right_labels(), n1, k2);
    if b1 != uniform_matrix(n2, k1) || b2 != uniform_matrix(n1, k2) {
        return Err(Error::lemma(
            "four-parts-bracket",
            "constructed bijection fails a bracket identity",
            serde_json::json!({ "first": g1, "second": g2, "psi": psi.map }),
        ));
    }

    let cert = Certificate::PartsBijection {
        first: g1.clone(),
        second: g2.clone(),
        map: psi.map.clone(),
        sigma_first: Some(sigma1.map),
        sigma_second: Some(sigma2.map),
    };
    Ok((psi, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::certificate_is_valid;
    use crate::model::instance_from_matrix;
    use crate::sample;
    use rand::{Rng, SeedableRng};

    #[test]
    fn alpha_identity_for_constant_counts() {
        let g = instance_from_matrix(&uniform_matrix(3, 6));
        let (coloring, exc) = wind_coloring(&g, 3, 2, 0).unwrap();
        let table = BucketTable::build(&g, &coloring);
        let alpha = find_alpha(&table, &exc).unwrap();
        assert_eq!(alpha.map, vec![0, 1, 2]);
    }

    #[test]
    fn alpha_for_matching_exceptional() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let g = sample::random_biregular_instance(&mut rng, 4, 5);
            let (coloring, exc) = wind_coloring(&g, 4, 1, 1).unwrap();
            let table = BucketTable::build(&g, &coloring);
            let alpha = find_alpha(&table, &exc).unwrap();
            assert!(alpha_condition_holds(&table.counts, &alpha));
        }
    }

    #[test]
    fn alpha_for_cycle_exceptional() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(32);
        for _ in 0..30 {
            let n = rng.gen_range(4..=6usize);
            let k = 2 * n + 2;
            let g = sample::random_biregular_instance(&mut rng, n, k);
            let (coloring, _) = wind_coloring(&g, n, 2, 2).unwrap();
            let (coloring, exc) = make_hamiltonian(&g, &coloring, 2, 2).unwrap();
            let table = BucketTable::build(&g, &coloring);
            let alpha = find_alpha(&table, &exc).unwrap();
            assert!(alpha_condition_holds(&table.counts, &alpha));
        }
    }

    #[test]
    fn pair_buckets_composes_to_alpha_of_coloring() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(33);
        for _ in 0..30 {
            let g = sample::random_biregular_instance(&mut rng, 3, 7);
            let (coloring, exc) = wind_coloring(&g, 3, 2, 1).unwrap();
            let table = BucketTable::build(&g, &coloring);
            let alpha = find_alpha(&table, &exc).unwrap();
            let iota = pair_buckets(&table, &alpha).unwrap();
            for e in 0..g.edge_count() {
                assert_eq!(
                    g.left_label(iota.apply(e)),
                    alpha.apply(coloring.colors[e]),
                    "u(iota(e)) must equal alpha(w(e))"
                );
            }
        }
    }

    #[test]
    fn pair_buckets_fixed_points_from_odd_self_buckets() {
        let g = instance_from_matrix(&uniform_matrix(1, 5));
        let (coloring, exc) = wind_coloring(&g, 1, 5, 0).unwrap();
        let table = BucketTable::build(&g, &coloring);
        let alpha = find_alpha(&table, &exc).unwrap();
        let iota = pair_buckets(&table, &alpha).unwrap();
        assert_eq!(iota.fixed_points(), 1); // single bucket of odd size 5
    }

    #[test]
    fn board_on_trivial_instance() {
        let g = instance_from_matrix(&uniform_matrix(1, 1));
        assert_eq!(board_method(&g).unwrap().map, vec![0]);
    }

    #[test]
    fn board_on_diagonal_two() {
        let b = WeightMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]).unwrap();
        let g = instance_from_matrix(&b);
        let iota = board_method(&g).unwrap();
        assert_eq!(bracket_after_involution(&g, &iota), uniform_matrix(2, 2));
        assert_eq!(iota.fixed_points(), 2);
    }

    #[test]
    fn board_has_n_fixed_points_and_valid_bracket() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(34);
        for _ in 0..30 {
            let n = rng.gen_range(2..=5usize);
            let g = sample::random_biregular_instance(&mut rng, n, n);
            let iota = board_method(&g).unwrap();
            assert_eq!(iota.fixed_points(), n);
            assert_eq!(bracket_after_involution(&g, &iota), uniform_matrix(n, n));
        }
    }

    #[test]
    fn solve_balls_all_covered_routes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(35);
        let shapes = [(2, 2), (2, 5), (3, 5), (4, 6), (5, 13), (7, 23), (6, 9)];
        for &(n, k) in &shapes {
            for _ in 0..5 {
                let g = sample::random_biregular_instance(&mut rng, n, k);
                let (iota, cert) = solve_balls(&g).unwrap();
                assert_eq!(bracket_after_involution(&g, &iota), uniform_matrix(n, k));
                assert!(certificate_is_valid(&cert));
            }
        }
    }

    #[test]
    fn solve_balls_rejects_uncovered() {
        // n = 7, k = 24 = 3*7 + 3: remainder 3 from both sides.
        let g = instance_from_matrix(&uniform_matrix(7, 24));
        assert!(matches!(solve_balls(&g), Err(Error::Uncovered(_))));
    }

    #[test]
    fn four_parts_divisible_case() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(36);
        // n1 = 2, k1 = 4 (m = 2) forces k2 = 2 * n2.
        for &(n2, k2) in &[(3usize, 6usize), (2, 4), (4, 8)] {
            let g1 = sample::random_biregular_with_degrees(&mut rng, 2, 4, k2 as u64, n2 as u64);
            let g2 = sample::random_biregular_with_degrees(&mut rng, n2, k2, 4, 2);
            let (_, cert) = solve_4parts(&g1, &g2).unwrap();
            assert!(certificate_is_valid(&cert));
        }
    }

    #[test]
    fn four_parts_equal_parts_with_shift() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for &(n, k) in &[(3usize, 4usize), (4, 6), (5, 9), (3, 3)] {
            for _ in 0..5 {
                let g1 = sample::random_biregular_instance(&mut rng, n, k);
                let g2 = sample::random_biregular_instance(&mut rng, n, k);
                let (_, cert) = solve_4parts(&g1, &g2).unwrap();
                assert!(certificate_is_valid(&cert));
            }
        }
    }

    #[test]
    fn four_parts_same_instance_divisible() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(38);
        let g = sample::random_biregular_instance(&mut rng, 3, 6);
        let (psi, cert) = solve_4parts(&g, &g).unwrap();
        assert!(certificate_is_valid(&cert));
        assert_eq!(psi.len(), g.edge_count());
    }

    #[test]
    fn four_parts_relabeled_instance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(39);
        let g1 = sample::random_biregular_instance(&mut rng, 4, 4);
        // g2: relabel parts and shuffle edges of g1.
        let left_perm = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        let right_perm = Permutation::new(vec![1, 3, 0, 2]).unwrap();
        let mut edges: Vec<(usize, usize)> = g1
            .edges
            .iter()
            .map(|&(x, y)| (left_perm.apply(x), right_perm.apply(y)))
            .collect();
        use rand::seq::SliceRandom;
        edges.shuffle(&mut rng);
        let g2 = LabeledBigraph::new(4, 4, edges).unwrap();
        let (_, cert) = solve_4parts(&g1, &g2).unwrap();
        assert!(certificate_is_valid(&cert));
    }

    #[test]
    fn four_parts_rejects_mismatched_sizes() {
        let g1 = instance_from_matrix(&uniform_matrix(2, 3));
        let g2 = instance_from_matrix(&uniform_matrix(3, 4));
        assert!(solve_4parts(&g1, &g2).is_err());
    }
}
