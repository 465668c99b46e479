//! The symmetric product `M (x) M^T` on matrix cells, the tensor product of
//! bipartite multigraphs, and complete bipartite constructors.
//!
//! Cells `(x, y)` of an `n x k` matrix are linearized as `x * k + y`
//! everywhere; the serialized form records this so certificates stay portable.

use serde::{Deserialize, Serialize};

use crate::matching::{BipGraph, LoopGraph};
use crate::model::WeightMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Linearization {
    RowMajor,
}

/// Square `(n*k) x (n*k)` matrix indexed by cell pairs of an `n x k` base
/// matrix. Symmetric by construction; the diagonal entry of cell `(x, y)`
/// is the square of the base entry, so loops sit exactly on the support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellIndexedMatrix {
    pub n: usize,
    pub k: usize,
    pub linearization: Linearization,
    pub data: Vec<Vec<u64>>,
}

impl CellIndexedMatrix {
    pub fn cells(&self) -> usize {
        self.n * self.k
    }

    pub fn cell_index(&self, x: usize, y: usize) -> usize {
        x * self.k + y
    }

    pub fn entry(&self, a: (usize, usize), b: (usize, usize)) -> u64 {
        self.data[self.cell_index(a.0, a.1)][self.cell_index(b.0, b.1)]
    }

    pub fn matrix(&self) -> WeightMatrix {
        WeightMatrix {
            rows: self.cells(),
            cols: self.cells(),
            data: self.data.clone(),
        }
    }

    /// The non-bipartite reading: vertices are cells, loops on the diagonal.
    pub fn loop_graph(&self) -> LoopGraph {
        LoopGraph::new(self.matrix()).expect("symmetric product is symmetric")
    }

    /// The bipartite reading: two disjoint copies of the cell set with this
    /// matrix as bipartite adjacency.
    pub fn bipartite_double_cover(&self) -> BipGraph {
        BipGraph::new(self.matrix())
    }
}

/// `(M (x) M^T)((x1,y1),(x2,y2)) = M(x1,y2) * M(x2,y1)` — not the Kronecker
/// product, but the cell-pair product the conjectures are stated with.
pub fn symmetric_product(m: &WeightMatrix) -> CellIndexedMatrix {
    let (n, k) = (m.rows, m.cols);
    let cells = n * k;
    let mut data = vec![vec![0u64; cells]; cells];
    for x1 in 0..n {
        for y1 in 0..k {
            for x2 in 0..n {
                for y2 in 0..k {
                    data[x1 * k + y1][x2 * k + y2] = m.get(x1, y2) * m.get(x2, y1);
                }
            }
        }
    }
    CellIndexedMatrix {
        n,
        k,
        linearization: Linearization::RowMajor,
        data,
    }
}

/// Tensor product of bipartite multigraphs: left part `L_G x L_H`, right part
/// `R_G x R_H`, multiplicities multiply. Pairs linearize row-major.
pub fn bigraph_tensor(g: &BipGraph, h: &BipGraph) -> BipGraph {
    let (lg, rg) = (g.left_size(), g.right_size());
    let (lh, rh) = (h.left_size(), h.right_size());
    let mut mult = WeightMatrix::zeros(lg * lh, rg * rh);
    for a in 0..lg {
        for c in 0..lh {
            for b in 0..rg {
                for d in 0..rh {
                    mult.set(a * lh + c, b * rh + d, g.mult.get(a, b) * h.mult.get(c, d));
                }
            }
        }
    }
    BipGraph::new(mult)
}

/// `K_{p,q}` as a multiplicity-one bipartite graph.
pub fn complete_bipartite(p: usize, q: usize) -> BipGraph {
    assert!(p >= 1 && q >= 1);
    BipGraph::new(crate::model::uniform_matrix(p, q))
}
