//! Core data model: labeled bipartite multigraphs, count matrices,
//! permutations and involutions on edge indices, and the enumeration of
//! `B_{n,k}` (non-negative integer matrices with row sums `k` and column
//! sums `n`).
//!
//! Parts are disjoint integer ranges; an edge is the pair of its endpoint
//! labels and edge identity is the index into the edge list, so parallel
//! edges are just repeated pairs and involutions are plain index
//! permutations. All arithmetic here is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A labeled bipartite multigraph `(L, R, E, u, v)` with `L = [0, n)` and
/// `R = [0, k)`. `edges[e] = (u(e), v(e))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBigraph {
    #[serde(rename = "n")]
    pub left_size: usize,
    #[serde(rename = "k")]
    pub right_size: usize,
    pub edges: Vec<(usize, usize)>,
}

impl LabeledBigraph {
    pub fn new(left_size: usize, right_size: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = LabeledBigraph {
            left_size,
            right_size,
            edges,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.left_size == 0 || self.right_size == 0 {
            return Err(Error::InvalidInput("parts must be nonempty".into()));
        }
        for (e, &(x, y)) in self.edges.iter().enumerate() {
            if x >= self.left_size || y >= self.right_size {
                return Err(Error::InvalidInput(format!(
                    "edge {e} = ({x},{y}) out of range for parts {}x{}",
                    self.left_size, self.right_size
                )));
            }
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `u(e)`.
    pub fn left_label(&self, e: usize) -> usize {
        self.edges[e].0
    }

    /// `v(e)`.
    pub fn right_label(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn left_labels(&self) -> Vec<usize> {
        self.edges.iter().map(|&(x, _)| x).collect()
    }

    pub fn right_labels(&self) -> Vec<usize> {
        self.edges.iter().map(|&(_, y)| y).collect()
    }

    pub fn left_degrees(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.left_size];
        for &(x, _) in &self.edges {
            d[x] += 1;
        }
        d
    }

    pub fn right_degrees(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.right_size];
        for &(_, y) in &self.edges {
            d[y] += 1;
        }
        d
    }

    /// All left degrees equal and all right degrees equal.
    pub fn is_biregular(&self) -> bool {
        self.biregular_degrees().is_some()
    }

    /// `(left degree, right degree)` when biregular.
    pub fn biregular_degrees(&self) -> Option<(u64, u64)> {
        let ld = self.left_degrees();
        let rd = self.right_degrees();
        let &l0 = ld.first()?;
        let &r0 = rd.first()?;
        if ld.iter().all(|&d| d == l0) && rd.iter().all(|&d| d == r0) {
            Some((l0, r0))
        } else {
            None
        }
    }
}

/// Non-negative integer count matrix. Doubles as the weighted complete
/// bipartite graph whose edge `(x, y)` has the stored weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<u64>>,
}

impl WeightMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        WeightMatrix {
            rows,
            cols,
            data: vec![vec![0; cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<u64>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        if rows == 0 || cols == 0 || data.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput(
                "matrix rows must be nonempty and equal length".into(),
            ));
        }
        Ok(WeightMatrix { rows, cols, data })
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows != self.data.len() || self.data.iter().any(|r| r.len() != self.cols) {
            return Err(Error::SizeMismatch(
                "matrix dims disagree with entry grid".into(),
            ));
        }
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidInput("matrix must be nonempty".into()));
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i][j] = v;
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.data.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut s = vec![0u64; self.cols];
        for row in &self.data {
            for (j, &v) in row.iter().enumerate() {
                s[j] += v;
            }
        }
        s
    }

    pub fn total(&self) -> u64 {
        self.data.iter().flatten().sum()
    }

    pub fn transpose(&self) -> WeightMatrix {
        let mut t = WeightMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j];
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.data[i][j] == self.data[j][i]))
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().flatten().all(|&v| v <= 1)
    }

    /// Membership in `B_{n,k}` for this matrix's own shape `n x k`:
    /// row sums all `k`, column sums all `n`.
    pub fn is_bnk(&self) -> bool {
        self.row_sums().iter().all(|&s| s == self.cols as u64)
            && self.col_sums().iter().all(|&s| s == self.rows as u64)
    }
}

/// All-ones `n x k` matrix (`W_{L,R}`).
pub fn uniform_matrix(n: usize, k: usize) -> WeightMatrix {
    WeightMatrix {
        rows: n,
        cols: k,
        data: vec![vec![1; k]; n],
    }
}

/// Count matrix of two labelings with a common edge-index domain:
/// entry `(a, b)` counts edges with `f(e) = a` and `h(e) = b`.
pub fn bracket_pair(f: &[usize], h: &[usize], f_size: usize, h_size: usize) -> WeightMatrix {
    assert_eq!(f.len(), h.len(), "labelings must share a domain");
    let mut m = WeightMatrix::zeros(f_size, h_size);
    for (&a, &b) in f.iter().zip(h.iter()) {
        m.data[a][b] += 1;
    }
    m
}

/// `[u, v]` of a graph: entry `(x, y)` counts edges with endpoints `(x, y)`.
pub fn bracket(g: &LabeledBigraph) -> WeightMatrix {
    let mut m = WeightMatrix::zeros(g.left_size, g.right_size);
    for &(x, y) in &g.edges {
        m.data[x][y] += 1;
    }
    m
}

/// One concrete instance realizing `bracket(result) = B`, edges emitted in
/// row-major order so downstream certificates are reproducible.
pub fn instance_from_matrix(b: &WeightMatrix) -> LabeledBigraph {
    let mut edges = Vec::with_capacity(b.total() as usize);
    for x in 0..b.rows {
        for y in 0..b.cols {
            for _ in 0..b.data[x][y] {
                edges.push((x, y));
            }
        }
    }
    LabeledBigraph {
        left_size: b.rows,
        right_size: b.cols,
        edges,
    }
}

/// Bijection on `[0, len)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    pub map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput("not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }
}

/// Self-inverse permutation of edge indices; fixed points allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Involution {
    pub map: Vec<usize>,
}

impl Involution {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        for (i, &v) in map.iter().enumerate() {
            if v >= n || map[v] != i {
                return Err(Error::InvalidInput(format!(
                    "map is not an involution at index {i}"
                )));
            }
        }
        Ok(Involution { map })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn fixed_points(&self) -> usize {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i == v)
            .count()
    }
}

/// Labels composed with an index map: `out[e] = labels[pi(e)]`.
pub fn compose_labels(labels: &[usize], pi: &[usize]) -> Vec<usize> {
    pi.iter().map(|&e| labels[e]).collect()
}

/// The left action of an involution: edge `e` keeps its right label and takes
/// the left label of `iota(e)`.
pub fn apply_involution(g: &LabeledBigraph, iota: &Involution) -> Result<LabeledBigraph> {
    if iota.len() != g.edge_count() {
        return Err(Error::SizeMismatch(format!(
            "involution on {} indices applied to {} edges",
            iota.len(),
            g.edge_count()
        )));
    }
    let edges = (0..g.edge_count())
        .map(|e| (g.left_label(iota.apply(e)), g.right_label(e)))
        .collect();
    Ok(LabeledBigraph {
        left_size: g.left_size,
        right_size: g.right_size,
        edges,
    })
}

/// `[u o iota, v]` without materializing the acted-on graph.
pub fn bracket_after_involution(g: &LabeledBigraph, iota: &Involution) -> WeightMatrix {
    let u = compose_labels(&g.left_labels(), &iota.map);
    bracket_pair(&u, &g.right_labels(), g.left_size, g.right_size)
}

// --- enumeration of B_{n,k} -------------------------------------------------

/// Stream every matrix of `B_{n,k}` (row sums `k`, column sums `n`) in
/// ascending row-major lexicographic order, starting from an optional fixed
/// row prefix. Returns the number of matrices visited; stops with
/// `BudgetExceeded` carrying the partial count once `budget` matrices have
/// been emitted and more remain.
pub fn for_each_bnk_with_prefix(
    n: usize,
    k: usize,
    prefix: &[Vec<u64>],
    budget: Option<u64>,
    mut f: impl FnMut(&WeightMatrix),
) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidInput("B_{n,k} needs n, k >= 1".into()));
    }
    if prefix.len() > n || prefix.iter().any(|r| r.len() != k) {
        return Err(Error::InvalidInput("bad row prefix".into()));
    }
    let mut col_rem: Vec<u64> = vec![n as u64; k];
    for (i, row) in prefix.iter().enumerate() {
        if row.iter().sum::<u64>() != k as u64 {
            return Err(Error::InvalidInput(format!("prefix row {i} has wrong sum")));
        }
        for (j, &e) in row.iter().enumerate() {
            if e > col_rem[j] {
                return Err(Error::InvalidInput(format!(
                    "prefix exceeds column budget at ({i},{j})"
                )));
            }
            col_rem[j] -= e;
        }
    }
    let mut grid: Vec<Vec<u64>> = prefix.to_vec();
    let mut count: u64 = 0;
    let mut exceeded = false;
    enumerate_rows(n, k, &mut col_rem, &mut grid, &mut |grid| {
        if let Some(b) = budget {
            if count >= b {
                exceeded = true;
                return false;
            }
        }
        count += 1;
        f(&WeightMatrix {
            rows: n,
            cols: k,
            data: grid.to_vec(),
        });
        true
    });
    if exceeded {
        return Err(Error::BudgetExceeded {
            context: format!("enumerate B_{{{n},{k}}}"),
            progress: count,
        });
    }
    Ok(count)
}

/// Depth-first row filling; `emit` returns false to abort the walk.
fn enumerate_rows(
    n: usize,
    k: usize,
    col_rem: &mut Vec<u64>,
    grid: &mut Vec<Vec<u64>>,
    emit: &mut impl FnMut(&[Vec<u64>]) -> bool,
) -> bool {
    if grid.len() == n {
        debug_assert!(col_rem.iter().all(|&c| c == 0));
        return emit(grid);
    }
    let rows_after = (n - grid.len() - 1) as u64;
    // Entry bounds: e <= min(row_rem, col_rem[j]) and the rows below can give
    // column j at most rows_after * k in total, so e >= col_rem[j] - rows_after*k.
    let mut row = vec![0u64; k];
    enumerate_row_entries(
        0,
        k as u64,
        col_rem,
        rows_after,
        k as u64,
        &mut row,
        &mut |row, col_rem| {
            grid.push(row.to_vec());
            let cont = enumerate_rows(n, k, col_rem, grid, emit);
            grid.pop();
            cont
        },
    )
}

fn enumerate_row_entries(
    j: usize,
    row_rem: u64,
    col_rem: &mut Vec<u64>,
    rows_after: u64,
    row_sum: u64,
    row: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64], &mut Vec<u64>) -> bool,
) -> bool {
    let cols = col_rem.len();
    if j == cols {
        if row_rem != 0 {
            return true;
        }
        let snapshot = row.clone();
        return f(&snapshot, col_rem);
    }
    let suffix: u64 = col_rem[j + 1..].iter().sum();
    let hi = row_rem.min(col_rem[j]);
    let lo = col_rem[j]
        .saturating_sub(rows_after * row_sum)
        .max(row_rem.saturating_sub(suffix));
    if lo > hi {
        return true;
    }
    for e in lo..=hi {
        row[j] = e;
        col_rem[j] -= e;
        let cont = enumerate_row_entries(j + 1, row_rem - e, col_rem, rows_after, row_sum, row, f);
        col_rem[j] += e;
        row[j] = 0;
        if !cont {
            return false;
        }
    }
    true
}

/// Every matrix of `B_{n,k}` in lexicographic row-major order.
pub fn enumerate_bnk(n: usize, k: usize, budget: Option<u64>) -> Result<Vec<WeightMatrix>> {
    let mut out = Vec::new();
    for_each_bnk_with_prefix(n, k, &[], budget, |m| out.push(m.clone()))?;
    Ok(out)
}

/// Valid first rows of `B_{n,k}` members, for prefix-sharded enumeration.
pub fn bnk_first_rows(n: usize, k: usize) -> Vec<Vec<u64>> {
    let mut col_rem = vec![n as u64; k];
    let mut out = Vec::new();
    let mut row = vec![0u64; k];
    enumerate_row_entries(
        0,
        k as u64,
        &mut col_rem,
        (n - 1) as u64,
        k as u64,
        &mut row,
        &mut |row, _| {
            out.push(row.to_vec());
            true
        },
    );
    out
}
