//! Independent brute-force oracles and conjecture-level verifiers.
//!
//! Everything here validates the constructive modules from the outside: the
//! backtracking involution search shares no code with the solvers, and every
//! verifier emits a certificate that an external checker can replay. A
//! failed conjecture check is the most valuable possible output, so failures
//! serialize the entire instance.

use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::checker::certificate_is_valid;
use crate::error::{Error, Result};
use crate::exec;
use crate::inequality::{exhaustive_check, rational_matrix};
use crate::involution::{balls_route, solve_balls};
use crate::matching::{
    hall_coefficient_bounded, max_bipartite_matching, perfect_matching_with_loops, LoopMatching,
};
use crate::model::{
    bracket_after_involution, enumerate_bnk, instance_from_matrix, uniform_matrix, Involution,
    LabeledBigraph, WeightMatrix,
};
use crate::tensor::symmetric_product;

pub const BRUTE_FORCE_DEFAULT_EDGES: usize = 12;
pub const BRUTE_FORCE_MAX_EDGES: usize = 16;
const BRUTE_FORCE_NODE_BUDGET: u64 = 200_000_000;

/// Backtracking search for an involution with `[u o iota, v]` all-ones.
/// Returns the first one in deterministic order, or `None` when no such
/// involution exists. Prunes on the residual target matrix: every cell of
/// the all-ones bracket can absorb only one edge.
pub fn brute_force_involution(g: &LabeledBigraph, max_edges: usize) -> Result<Option<Involution>> {
    g.validate()?;
    let (n, k) = (g.left_size, g.right_size);
    let edges = g.edge_count();
    if edges != n * k {
        return Err(Error::InvalidInput("search needs |E| = n*k".into()));
    }
    if edges > max_edges.min(BRUTE_FORCE_MAX_EDGES) {
        return Err(Error::BudgetExceeded {
            context: format!("brute-force involution on {edges} edges"),
            progress: 0,
        });
    }

    let mut residual = uniform_matrix(n, k);
    let mut map = vec![usize::MAX; edges];
    let mut nodes: u64 = 0;

    fn rec(
        g: &LabeledBigraph,
        residual: &mut WeightMatrix,
        map: &mut Vec<usize>,
        nodes: &mut u64,
    ) -> Result<bool> {
        let e = match map.iter().position(|&v| v == usize::MAX) {
            None => return Ok(true),
            Some(e) => e,
        };
        *nodes += 1;
        if *nodes > BRUTE_FORCE_NODE_BUDGET {
            return Err(Error::BudgetExceeded {
                context: "brute-force involution node budget".into(),
                progress: *nodes,
            });
        }
        let (ue, ve) = g.edges[e];
        // Fixed point: e contributes (u(e), v(e)).
        if residual.get(ue, ve) > 0 {
            residual.set(ue, ve, residual.get(ue, ve) - 1);
            map[e] = e;
            if rec(g, residual, map, nodes)? {
                return Ok(true);
            }
            map[e] = usize::MAX;
            residual.set(ue, ve, residual.get(ue, ve) + 1);
        }
        // Swap with a later unassigned edge f: e contributes (u(f), v(e))
        // and f contributes (u(e), v(f)).
        for f in e + 1..g.edge_count() {
            if map[f] != usize::MAX {
                continue;
            }
            let (uf, vf) = g.edges[f];
            let (c1, c2) = ((uf, ve), (ue, vf));
            if c1 == c2 {
                if residual.get(c1.0, c1.1) < 2 {
                    continue;
                }
            } else if residual.get(c1.0, c1.1) < 1 || residual.get(c2.0, c2.1) < 1 {
                continue;
            }
            residual.set(c1.0, c1.1, residual.get(c1.0, c1.1) - 1);
            residual.set(c2.0, c2.1, residual.get(c2.0, c2.1) - 1);
            map[e] = f;
            map[f] = e;
            if rec(g, residual, map, nodes)? {
                return Ok(true);
            }
            map[e] = usize::MAX;
            map[f] = usize::MAX;
            residual.set(c1.0, c1.1, residual.get(c1.0, c1.1) + 1);
            residual.set(c2.0, c2.1, residual.get(c2.0, c2.1) + 1);
        }
        Ok(false)
    }

    if rec(g, &mut residual, &mut map, &mut nodes)? {
        let iota = Involution::new(map).expect("search result is an involution");
        debug_assert_eq!(bracket_after_involution(g, &iota), uniform_matrix(n, k));
        Ok(Some(iota))
    } else {
        Ok(None)
    }
}

/// The weak ball-swap property of one `B_{n,k}` member: the symmetric
/// product, read as a loop graph, has a loop-aware perfect matching.
pub fn verify_weak_balls(b: &WeightMatrix) -> (bool, Certificate) {
    debug_assert!(b.is_bnk());
    let product = symmetric_product(b);
    let graph = product.loop_graph();
    let outcome = perfect_matching_with_loops(&graph);
    let ok = matches!(outcome, LoopMatching::Perfect(_));
    (ok, outcome.certificate(&graph))
}

/// Outcome of the bipartite-vs-ordinary matching comparison for a binary
/// matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum HigginsVerdict {
    /// The bipartite double cover has no perfect matching, so the claim is
    /// vacuous for this matrix.
    Vacuous,
    /// Both matchings exist.
    Holds(Certificate),
    /// The bipartite matching exists but the loop-aware one does not: a
    /// counterexample certificate.
    Counterexample(Certificate),
}

pub fn verify_higgins(m: &WeightMatrix) -> Result<HigginsVerdict> {
    if !m.is_binary() {
        return Err(Error::InvalidInput(
            "verdict is defined for binary matrices".into(),
        ));
    }
    let product = symmetric_product(m);
    let cover = product.bipartite_double_cover();
    if !max_bipartite_matching(&cover).is_left_perfect() {
        return Ok(HigginsVerdict::Vacuous);
    }
    let graph = product.loop_graph();
    let outcome = perfect_matching_with_loops(&graph);
    let cert = outcome.certificate(&graph);
    Ok(match outcome {
        LoopMatching::Perfect(_) => HigginsVerdict::Holds(cert),
        LoopMatching::Obstruction(_) => HigginsVerdict::Counterexample(cert),
    })
}

/// The Hall coefficient of the bipartite double cover of `M (x) M^T` is
/// exactly 1 for every `B_{n,k}` member.
pub fn verify_equivalence_direction(b: &WeightMatrix) -> Result<bool> {
    debug_assert!(b.is_bnk());
    let cover = symmetric_product(b).bipartite_double_cover();
    let h = hall_coefficient_bounded(&cover, 20)?;
    Ok(h.value == num_rational::Rational64::from_integer(1))
}

/// Edges leaving the zero-cell set in the symmetric product:
/// `n*k*t - sum_ij M(x_i, y_j) M(x_j, y_i)`, cross-checked against a direct
/// count in the product graph.
pub fn cut_size(b: &WeightMatrix, cells: &[(usize, usize)]) -> Result<u64> {
    for &(x, y) in cells {
        if x >= b.rows || y >= b.cols {
            return Err(Error::InvalidInput(format!("cell ({x},{y}) out of range")));
        }
        if b.get(x, y) != 0 {
            return Err(Error::InvalidInput(format!(
                "cell ({x},{y}) is not a zero cell"
            )));
        }
    }
    let t = cells.len() as u64;
    let mut cross = 0u64;
    for &(xi, yi) in cells {
        for &(xj, yj) in cells {
            cross += b.get(xi, yj) * b.get(xj, yi);
        }
    }
    let formula = (b.rows * b.cols) as u64 * t - cross;
    debug_assert_eq!(formula, direct_cut_size(b, cells));
    Ok(formula)
}

/// The same quantity counted edge by edge in the product graph; kept as an
/// independent route for tests.
pub fn direct_cut_size(b: &WeightMatrix, cells: &[(usize, usize)]) -> u64 {
    let product = symmetric_product(b);
    let in_set: Vec<usize> = cells
        .iter()
        .map(|&(x, y)| product.cell_index(x, y))
        .collect();
    let total = product.cells();
    let mut outward = 0u64;
    for &c in &in_set {
        for other in 0..total {
            if !in_set.contains(&other) {
                outward += product.data[c][other];
            }
        }
    }
    outward
}

// --- campaign ---------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    /// `(n, k)` classes to sweep; each is enumerated exhaustively.
    pub pairs: Vec<(usize, usize)>,
    pub enum_budget: u64,
    /// Edge cap for the brute-force oracle; larger instances skip it.
    pub brute_force_edges: usize,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            pairs: vec![(2, 2), (2, 3)],
            enum_budget: 1_000_000,
            brute_force_edges: BRUTE_FORCE_DEFAULT_EDGES,
            seed: 0,
        }
    }
}

/// One enumerated matrix's verdicts. `None` entries mean the check was
/// skipped (budget or coverage), never that it failed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignRecord {
    pub n: usize,
    pub k: usize,
    pub index: usize,
    pub matrix: Vec<Vec<u64>>,
    pub weak_balls: bool,
    pub higgins: Option<String>,
    pub brute_force_found: Option<bool>,
    pub solver_ok: Option<bool>,
    pub inequality_ok: bool,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Box<Certificate>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub records: Vec<CampaignRecord>,
    pub total: usize,
    pub violations: usize,
    pub budget_flags: usize,
}

impl CampaignReport {
    /// One JSON line per record; byte-stable for a fixed config.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&crate::canonical_json(r));
            out.push('\n');
        }
        out
    }
}

/// Sweep every enumerated `B_{n,k}` member through all verifiers with
/// cross-agreement checks. Items run in parallel; the report order is the
/// enumeration order, so reports are byte-stable.
pub fn conjecture_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let mut records = Vec::new();
    let mut budget_flags = 0usize;
    for &(n, k) in &config.pairs {
        let members = match enumerate_bnk(n, k, Some(config.enum_budget)) {
            Ok(ms) => ms,
            Err(Error::BudgetExceeded { .. }) => {
                budget_flags += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let batch: Vec<CampaignRecord> = exec::map_collect(members.len(), |idx| {
            campaign_item(n, k, idx, &members[idx], config)
        });
        records.extend(batch);
    }
    let total = records.len();
    let violations = records.iter().filter(|r| r.violation.is_some()).count();
    budget_flags += records
        .iter()
        .filter(|r| r.brute_force_found.is_none() || r.solver_ok.is_none())
        .count();
    Ok(CampaignReport {
        config: config.clone(),
        records,
        total,
        violations,
        budget_flags,
    })
}

fn campaign_item(
    n: usize,
    k: usize,
    index: usize,
    b: &WeightMatrix,
    config: &CampaignConfig,
) -> CampaignRecord {
    let instance = instance_from_matrix(b);
    let mut violation: Option<Box<Certificate>> = None;

    let (weak_ok, weak_cert) = verify_weak_balls(b);
    debug_assert!(certificate_is_valid(&weak_cert));
    if !weak_ok {
        violation = Some(Box::new(weak_cert));
    }

    let higgins = if b.is_binary() {
        match verify_higgins(b) {
            Ok(HigginsVerdict::Vacuous) => Some("vacuous".to_string()),
            Ok(HigginsVerdict::Holds(_)) => Some("holds".to_string()),
            Ok(HigginsVerdict::Counterexample(cert)) => {
                violation.get_or_insert(Box::new(cert));
                Some("counterexample".to_string())
            }
            Err(_) => None,
        }
    } else {
        None
    };

    let brute_force_found = match brute_force_involution(&instance, config.brute_force_edges) {
        Ok(found) => Some(found.is_some()),
        Err(_) => None,
    };
    if brute_force_found == Some(false) {
        // No involution at all: a direct counterexample to the swap claim.
        violation.get_or_insert(Box::new(Certificate::BallsInvolution {
            instance: instance.clone(),
            involution: Vec::new(),
            pipeline: crate::cert::BallsPipeline {
                route: "brute-force-exhausted".into(),
                base_weight: None,
                shift: None,
                coloring: None,
                alpha: None,
            },
        }));
    }

    let solver_ok = if balls_route(n, k).is_some() {
        match solve_balls(&instance) {
            Ok((_, cert)) => Some(certificate_is_valid(&cert)),
            Err(_) => Some(false),
        }
    } else {
        None
    };

    let inequality_ok = {
        let rat = rational_matrix(b);
        match exhaustive_check(&rat, None, 10_000_000) {
            Ok(report) => !report.violated,
            Err(_) => true, // budget skip, not a failure
        }
    };

    // Oracle agreement: wherever both ran, constructive success must match
    // the exhaustive search.
    let consistent = match (brute_force_found, solver_ok) {
        (Some(bf), Some(sv)) => bf && sv,
        _ => true,
    } && weak_ok
        && inequality_ok;

    CampaignRecord {
        n,
        k,
        index,
        matrix: b.data.clone(),
        weak_balls: weak_ok,
        higgins,
        brute_force_found,
        solver_ok,
        inequality_ok,
        consistent,
        violation,
    }
}
