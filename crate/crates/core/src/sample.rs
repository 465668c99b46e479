//! Seeded random generators for instances, tables and graphs. Everything is
//! deterministic given the seed, which keeps campaigns replayable.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::matching::LoopGraph;
use crate::model::{instance_from_matrix, LabeledBigraph, WeightMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub const DEFAULT_BURNIN_PER_CELL: usize = 40;

/// Random contingency table with the given margins: northwest-corner start,
/// then a burn-in walk of random 2x2 `+1/-1` moves, which preserve margins
/// and reach every table.
pub fn random_contingency_table<R: Rng>(
    rng: &mut R,
    row_sums: &[u64],
    col_sums: &[u64],
    burnin: usize,
) -> WeightMatrix {
    let rows = row_sums.len();
    let cols = col_sums.len();
    assert!(rows > 0 && cols > 0);
    assert_eq!(
        row_sums.iter().sum::<u64>(),
        col_sums.iter().sum::<u64>(),
        "margins must agree on the total"
    );
    let mut m = WeightMatrix::zeros(rows, cols);
    let mut row_rem = row_sums.to_vec();
    let mut col_rem = col_sums.to_vec();
    for i in 0..rows {
        for j in 0..cols {
            let v = row_rem[i].min(col_rem[j]);
            m.set(i, j, v);
            row_rem[i] -= v;
            col_rem[j] -= v;
        }
    }
    if rows > 1 && cols > 1 {
        for _ in 0..burnin {
            let i1 = rng.gen_range(0..rows);
            let i2 = (i1 + rng.gen_range(1..rows)) % rows;
            let j1 = rng.gen_range(0..cols);
            let j2 = (j1 + rng.gen_range(1..cols)) % cols;
            if rng.gen_bool(0.5) {
                if m.get(i1, j2) > 0 && m.get(i2, j1) > 0 {
                    m.set(i1, j1, m.get(i1, j1) + 1);
                    m.set(i2, j2, m.get(i2, j2) + 1);
                    m.set(i1, j2, m.get(i1, j2) - 1);
                    m.set(i2, j1, m.get(i2, j1) - 1);
                }
            } else if m.get(i1, j1) > 0 && m.get(i2, j2) > 0 {
                m.set(i1, j2, m.get(i1, j2) + 1);
                m.set(i2, j1, m.get(i2, j1) + 1);
                m.set(i1, j1, m.get(i1, j1) - 1);
                m.set(i2, j2, m.get(i2, j2) - 1);
            }
        }
    }
    m
}

/// Random member of `B_{n,k}`.
pub fn random_bnk<R: Rng>(rng: &mut R, n: usize, k: usize, burnin: usize) -> WeightMatrix {
    random_contingency_table(rng, &vec![k as u64; n], &vec![n as u64; k], burnin)
}

/// Random biregular instance on parts `n`, `k` with `n*k` edges: a random
/// `B_{n,k}` table realized as an edge list, then shuffled.
pub fn random_biregular_instance<R: Rng>(rng: &mut R, n: usize, k: usize) -> LabeledBigraph {
    let b = random_bnk(rng, n, k, DEFAULT_BURNIN_PER_CELL * n * k);
    let mut g = instance_from_matrix(&b);
    g.edges.shuffle(rng);
    g
}

/// Random biregular instance with arbitrary uniform degrees: `left` vertices
/// of degree `d_left`, `right` vertices of degree `d_right` (the totals must
/// agree).
pub fn random_biregular_with_degrees<R: Rng>(
    rng: &mut R,
    left: usize,
    right: usize,
    d_left: u64,
    d_right: u64,
) -> LabeledBigraph {
    assert_eq!(left as u64 * d_left, right as u64 * d_right);
    let t = random_contingency_table(
        rng,
        &vec![d_left; left],
        &vec![d_right; right],
        DEFAULT_BURNIN_PER_CELL * left * right,
    );
    let mut g = instance_from_matrix(&t);
    g.edges.shuffle(rng);
    g
}

/// Random bipartite multigraph: uniform part sizes and edge count, uniform
/// endpoints.
pub fn random_bipartite_multigraph<R: Rng>(
    rng: &mut R,
    max_left: usize,
    max_right: usize,
    max_edges: usize,
) -> LabeledBigraph {
    let n = rng.gen_range(1..=max_left);
    let k = rng.gen_range(1..=max_right);
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..k)))
        .collect();
    LabeledBigraph {
        left_size: n,
        right_size: k,
        edges,
    }
}

/// Random loop graph on `n` vertices with independent edge and loop
/// probabilities.
pub fn random_loop_graph<R: Rng>(rng: &mut R, n: usize, edge_p: f64, loop_p: f64) -> LoopGraph {
    let mut m = WeightMatrix::zeros(n, n);
    for v in 0..n {
        if rng.gen_bool(loop_p) {
            m.set(v, v, 1);
        }
        for w in v + 1..n {
            if rng.gen_bool(edge_p) {
                let mult = rng.gen_range(1..=2);
                m.set(v, w, mult);
                m.set(w, v, mult);
            }
        }
    }
    LoopGraph::new(m).expect("construction is symmetric")
}

/// Random color class of the `n = 6` pipeline: six left vertices of degree
/// `2m+1`, `6m+3` right vertices of degree 2.
pub fn random_color_class<R: Rng>(rng: &mut R, m: u64) -> LabeledBigraph {
    let rights = (6 * m + 3) as usize;
    random_biregular_with_degrees(rng, 6, rights, 2 * m + 1, 2)
}

/// Random 0/1 matrix with i.i.d. fair entries.
pub fn random_binary_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> WeightMatrix {
    let mut m = WeightMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.5) {
                m.set(i, j, 1);
            }
        }
    }
    m
}

/// Random non-negative integer matrix with i.i.d. entries: zero with
/// probability `zero_density`, else uniform in `1..=9`.
pub fn random_sparse_matrix<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    zero_density: f64,
) -> WeightMatrix {
    let mut m = WeightMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if !rng.gen_bool(zero_density) {
                m.set(i, j, rng.gen_range(1..=9));
            }
        }
    }
    m
}
