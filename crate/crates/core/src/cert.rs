//! Machine-checkable witnesses emitted by every solver and verifier.
//!
//! Each certificate is self-contained: it embeds the instance it talks
//! about, so `checker::check_certificate` can validate it with no access to
//! the solver that produced it.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::model::LabeledBigraph;
use crate::model::WeightMatrix;

/// Extra solver context recorded alongside a ball-swap involution. Purely
/// informational; the checker only looks at the instance and the involution.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallsPipeline {
    /// `"board"`, `"wind"` or `"six"`.
    pub route: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_weight: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A matching in the bipartite multigraph with multiplicity matrix
    /// `graph` (rows = left part). `left_perfect` claims left coverage.
    Matching {
        graph: WeightMatrix,
        pairs: Vec<(usize, usize)>,
        left_perfect: bool,
    },
    /// A Hall violator: `|N(subset)| < |subset|`.
    DeficientSet {
        graph: WeightMatrix,
        subset: Vec<usize>,
    },
    /// A perfect matching (involution form) in a loop graph given by a
    /// symmetric multiplicity matrix; fixed points must sit on loops.
    LoopMatching {
        graph: WeightMatrix,
        pairing: Vec<usize>,
    },
    /// Removing `removed` leaves more than `|removed|` odd loop-free
    /// components: the graph has no loop-aware perfect matching.
    TutteObstruction {
        graph: WeightMatrix,
        removed: Vec<usize>,
    },
    /// `[u o iota, v]` is all-ones for the embedded instance.
    BallsInvolution {
        instance: LabeledBigraph,
        involution: Vec<usize>,
        pipeline: BallsPipeline,
    },
    /// Edge bijection `map: E1 -> E2` with `[u2 o psi, v1]` and
    /// `[u1 o psi^-1, v2]` both all-ones.
    PartsBijection {
        first: LabeledBigraph,
        second: LabeledBigraph,
        map: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        sigma_first: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        sigma_second: Option<Vec<usize>>,
    },
    /// A violating odd zero-cell subset for the matrix inequality.
    /// Rationals are `"p/q"` strings.
    InequalityViolation {
        matrix: Vec<Vec<String>>,
        cells: Vec<(usize, usize)>,
        lhs: String,
        rhs: String,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Matching { .. } => "matching",
            Certificate::DeficientSet { .. } => "deficient-set",
            Certificate::LoopMatching { .. } => "loop-matching",
            Certificate::TutteObstruction { .. } => "tutte-obstruction",
            Certificate::BallsInvolution { .. } => "balls-involution",
            Certificate::PartsBijection { .. } => "parts-bijection",
            Certificate::InequalityViolation { .. } => "inequality-violation",
        }
    }
}
