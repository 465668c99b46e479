//! The matrix inequality: exact evaluation of both sides, exhaustive sweeps
//! over odd zero-cell subsets, the spectral certificate for the square case,
//! and a seeded random counterexample search.
//!
//! Both sides of the inequality live in exact rational arithmetic; only the
//! eigenvalue certificate is floating point, and the exact left-hand side
//! stays authoritative there.

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exec;
use crate::model::WeightMatrix;
use crate::ratio::{rat_from_str, rat_to_string};

pub type Rat = Rational64;

/// A matrix with a chosen odd set of distinct zero cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityInstance {
    pub matrix: Vec<Vec<Rat>>,
    pub cells: Vec<(usize, usize)>,
}

impl InequalityInstance {
    pub fn new(matrix: Vec<Vec<Rat>>, cells: Vec<(usize, usize)>) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, |r| r.len());
        if rows == 0 || cols == 0 || matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("matrix must be a nonempty grid".into()));
        }
        if matrix.iter().flatten().any(|v| v.is_negative()) {
            return Err(Error::InvalidInput(
                "matrix entries must be non-negative".into(),
            ));
        }
        if cells.len() % 2 == 0 {
            return Err(Error::InvalidInput(format!(
                "cell count t = {} must be odd",
                cells.len()
            )));
        }
        for (idx, &(x, y)) in cells.iter().enumerate() {
            if x >= rows || y >= cols {
                return Err(Error::InvalidInput(format!("cell ({x},{y}) out of range")));
            }
            if !matrix[x][y].is_zero() {
                return Err(Error::InvalidInput(format!("cell ({x},{y}) is not zero")));
            }
            if cells[..idx].contains(&(x, y)) {
                return Err(Error::InvalidInput(format!("cell ({x},{y}) repeated")));
            }
        }
        Ok(InequalityInstance { matrix, cells })
    }

    pub fn from_integer_matrix(m: &WeightMatrix, cells: Vec<(usize, usize)>) -> Result<Self> {
        InequalityInstance::new(rational_matrix(m), cells)
    }

    pub fn t(&self) -> usize {
        self.cells.len()
    }
}

pub fn rational_matrix(m: &WeightMatrix) -> Vec<Vec<Rat>> {
    m.data
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(v as i64)).collect())
        .collect()
}

/// Maximum l1-norm of the rows.
pub fn norm_inf(matrix: &[Vec<Rat>]) -> Rat {
    matrix
        .iter()
        .map(|row| row.iter().copied().fold(Rat::zero(), |a, b| a + b))
        .max()
        .unwrap_or_else(Rat::zero)
}

/// Maximum l1-norm of the columns.
pub fn norm_one(matrix: &[Vec<Rat>]) -> Rat {
    let cols = matrix.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| matrix.iter().fold(Rat::zero(), |a, row| a + row[j]))
        .max()
        .unwrap_or_else(Rat::zero)
}

/// Exact `(lhs, rhs)`: the double sum of cross products over the chosen
/// cells, and `(t-1) * ||M||_inf * ||M||_1`.
pub fn inequality_sides(inst: &InequalityInstance) -> (Rat, Rat) {
    let lhs = cells_cross_sum(&inst.matrix, &inst.cells);
    let t = inst.t() as i64;
    let rhs = Rat::from_integer(t - 1) * norm_inf(&inst.matrix) * norm_one(&inst.matrix);
    (lhs, rhs)
}

fn cells_cross_sum(matrix: &[Vec<Rat>], cells: &[(usize, usize)]) -> Rat {
    let mut sum = Rat::zero();
    for &(xi, yi) in cells {
        for &(xj, yj) in cells {
            sum += matrix[xi][yj] * matrix[xj][yi];
        }
    }
    sum
}

/// Worst case over all odd subsets of the zero cells.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExhaustiveReport {
    pub zero_cells: usize,
    pub subsets_checked: u64,
    /// Maximum of `lhs - rhs` as `"p/q"`, with the attaining subset;
    /// `None` when the matrix has no zero cells.
    pub max_excess: Option<String>,
    pub worst_cells: Vec<(usize, usize)>,
    pub violated: bool,
}

/// Scan every odd subset of the zero cells of `matrix` with size at most
/// `max_t` (every odd size when `None`) and report the maximum `lhs - rhs`.
/// Subsets are sharded by their first cell and scanned in parallel with a
/// deterministic maximum.
pub fn exhaustive_check(
    matrix: &[Vec<Rat>],
    max_t: Option<usize>,
    budget: u64,
) -> Result<ExhaustiveReport> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let zeros: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .filter(|&(i, j)| matrix[i][j].is_zero())
        .collect();
    let z = zeros.len();
    let cap = max_t.unwrap_or(z).min(z);

    // Subset counts per first element, for the budget check up front.
    let mut total: u64 = 0;
    for first in 0..z {
        total = total.saturating_add(count_odd_subsets_from(z - first - 1, cap));
    }
    if total > budget {
        return Err(Error::BudgetExceeded {
            context: format!("exhaustive inequality scan over {z} zero cells"),
            progress: total,
        });
    }

    let bound = norm_inf(matrix) * norm_one(matrix);

    // (excess, lex-first subset attaining it); max by excess, ties to the
    // lexicographically earlier subset.
    #[derive(Clone)]
    struct Best {
        excess: Rat,
        cells: Vec<(usize, usize)>,
        count: u64,
    }
    let merge = |a: Best, b: Best| -> Best {
        let count = a.count + b.count;
        let mut best = if b.excess > a.excess || (b.excess == a.excess && b.cells < a.cells) {
            b
        } else {
            a
        };
        best.count = count;
        best
    };

    let scan_first = |first: usize| -> Option<Best> {
        let mut best: Option<Best> = None;
        let mut chosen: Vec<(usize, usize)> = vec![zeros[first]];
        fn rec(
            next: usize,
            zeros: &[(usize, usize)],
            cap: usize,
            matrix: &[Vec<Rat>],
            bound: Rat,
            chosen: &mut Vec<(usize, usize)>,
            best: &mut Option<Best>,
        ) {
            if chosen.len() % 2 == 1 && chosen.len() <= cap {
                let lhs = cells_cross_sum(matrix, chosen);
                let rhs = Rat::from_integer(chosen.len() as i64 - 1) * bound;
                let cand = Best {
                    excess: lhs - rhs,
                    cells: chosen.clone(),
                    count: 1,
                };
                *best = Some(match best.take() {
                    None => cand,
                    Some(b) => {
                        let count = b.count + 1;
                        let mut keep = if cand.excess > b.excess
                            || (cand.excess == b.excess && cand.cells < b.cells)
                        {
                            cand
                        } else {
                            b
                        };
                        keep.count = count;
                        keep
                    }
                });
            }
            if chosen.len() >= cap {
                return;
            }
            for i in next..zeros.len() {
                chosen.push(zeros[i]);
                rec(i + 1, zeros, cap, matrix, bound, chosen, best);
                chosen.pop();
            }
        }
        rec(
            first + 1,
            &zeros,
            cap,
            matrix,
            bound,
            &mut chosen,
            &mut best,
        );
        best
    };

    let best = exec::map_reduce(z, scan_first, merge);
    let (max_excess, worst_cells, subsets_checked, violated) = match best {
        None => (None, Vec::new(), 0, false),
        Some(b) => (
            Some(rat_to_string(b.excess)),
            b.cells.clone(),
            b.count,
            b.excess > Rat::zero(),
        ),
    };
    Ok(ExhaustiveReport {
        zero_cells: z,
        subsets_checked,
        max_excess,
        worst_cells,
        violated,
    })
}

/// Odd-size subsets of an `n`-set with size+1 <= cap+... helper: counts odd
/// subsets of `rest` elements extended by one fixed element, sizes up to cap.
fn count_odd_subsets_from(rest: usize, cap: usize) -> u64 {
    // Fixed first element plus j more: total size j+1 odd and <= cap.
    let mut total = 0u64;
    let mut binom = 1u64; // C(rest, 0)
    for j in 0..=rest {
        if (j + 1) % 2 == 1 && j + 1 <= cap {
            total = total.saturating_add(binom);
        }
        binom = binom.saturating_mul((rest - j) as u64) / (j as u64 + 1);
    }
    total
}

/// Violation certificate for a checked instance, if it violates.
pub fn violation_certificate(inst: &InequalityInstance) -> Option<Certificate> {
    let (lhs, rhs) = inequality_sides(inst);
    if lhs <= rhs {
        return None;
    }
    Some(Certificate::InequalityViolation {
        matrix: inst
            .matrix
            .iter()
            .map(|r| r.iter().map(|&v| rat_to_string(v)).collect())
            .collect(),
        cells: inst.cells.clone(),
        lhs: rat_to_string(lhs),
        rhs: rat_to_string(rhs),
    })
}

/// Constraint failures and bound failures are distinct outcomes.
#[derive(Clone, Debug, PartialEq)]
pub enum LambdaCheck {
    Ok,
    ConstraintViolated(String),
    BoundViolated { sum_sq: f64, limit: f64 },
}

/// Check `sum lambda_i = 0`, `|lambda_i| <= kappa` (within `tol`), `t` odd,
/// and then the bound `sum lambda_i^2 <= (t-1) kappa^2`.
pub fn lambdas_bound(lambdas: &[f64], kappa: f64, tol: f64) -> LambdaCheck {
    let t = lambdas.len();
    if t % 2 == 0 {
        return LambdaCheck::ConstraintViolated(format!("t = {t} must be odd"));
    }
    if kappa < 0.0 {
        return LambdaCheck::ConstraintViolated("kappa must be non-negative".into());
    }
    let sum: f64 = lambdas.iter().sum();
    if sum.abs() > tol {
        return LambdaCheck::ConstraintViolated(format!("sum of lambdas {sum} is not 0"));
    }
    if let Some(bad) = lambdas.iter().find(|l| l.abs() > kappa + tol) {
        return LambdaCheck::ConstraintViolated(format!("|{bad}| exceeds kappa = {kappa}"));
    }
    let sum_sq: f64 = lambdas.iter().map(|l| l * l).sum();
    let limit = (t as f64 - 1.0) * kappa * kappa;
    if sum_sq > limit + tol {
        return LambdaCheck::BoundViolated { sum_sq, limit };
    }
    LambdaCheck::Ok
}

/// Spectral certificate for the square case (all row indices distinct, all
/// column indices distinct).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    pub kappa: f64,
    /// Exact lhs as `"p/q"` (authoritative).
    pub lhs: String,
    /// Exact rhs as `"p/q"`.
    pub rhs: String,
    pub trace_sum: f64,
    pub sum_sq: f64,
    pub holds: bool,
}

/// Build `B_ij = sqrt(M(x_i, y_j) M(x_j, y_i))`, take its eigenvalues, and
/// walk the spectral chain: zero trace, `|lambda| <= kappa`, `sum lambda^2`
/// equals the exact lhs, and the `(t-1) kappa^2` bound.
pub fn square_case_certificate(inst: &InequalityInstance, tol: f64) -> Result<SpectralReport> {
    let t = inst.t();
    for (idx, &(x, y)) in inst.cells.iter().enumerate() {
        for &(x2, y2) in &inst.cells[..idx] {
            if x == x2 || y == y2 {
                return Err(Error::InvalidInput(
                    "square case needs distinct row indices and distinct column indices".into(),
                ));
            }
        }
    }
    let rat_f64 = |r: Rat| *r.numer() as f64 / *r.denom() as f64;
    let mut b = nalgebra::DMatrix::<f64>::zeros(t, t);
    for i in 0..t {
        for j in 0..t {
            let (xi, yi) = inst.cells[i];
            let (xj, yj) = inst.cells[j];
            let prod = inst.matrix[xi][yj] * inst.matrix[xj][yi];
            b[(i, j)] = rat_f64(prod).sqrt();
        }
    }
    let eigen = b.symmetric_eigen();
    let eigenvalues: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    if eigenvalues.iter().any(|l| !l.is_finite()) {
        return Err(Error::Numerical(
            "eigenvalue computation did not converge".into(),
        ));
    }

    let (lhs, rhs) = inequality_sides(inst);
    let kappa = rat_f64(norm_inf(&inst.matrix) * norm_one(&inst.matrix)).sqrt();
    let trace_sum: f64 = eigenvalues.iter().sum();
    let sum_sq: f64 = eigenvalues.iter().map(|l| l * l).sum();
    let lhs_f = rat_f64(lhs);

    let trace_tol = tol * (t as f64) * kappa.max(1.0);
    if trace_sum.abs() > trace_tol {
        return Err(Error::Numerical(format!(
            "trace check failed: sum of eigenvalues {trace_sum} exceeds {trace_tol}"
        )));
    }
    let sq_tol = 1e-6 * lhs_f.max(1.0);
    if (sum_sq - lhs_f).abs() > sq_tol {
        return Err(Error::Numerical(format!(
            "sum of squared eigenvalues {sum_sq} disagrees with exact lhs {lhs_f}"
        )));
    }
    match lambdas_bound(&eigenvalues, kappa, trace_tol.max(1e-9)) {
        LambdaCheck::Ok => {}
        LambdaCheck::ConstraintViolated(msg) => {
            return Err(Error::Numerical(format!(
                "eigenvalue constraint failed: {msg}"
            )))
        }
        LambdaCheck::BoundViolated { sum_sq, limit } => {
            return Err(Error::Numerical(format!(
                "spectral bound failed: {sum_sq} > {limit}"
            )))
        }
    }
    Ok(SpectralReport {
        eigenvalues,
        kappa,
        lhs: rat_to_string(lhs),
        rhs: rat_to_string(rhs),
        trace_sum,
        sum_sq,
        holds: lhs <= rhs,
    })
}

/// Seeded random search configuration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub rows: usize,
    pub cols: usize,
    /// Probability that an entry is zero.
    pub zero_density: f64,
    pub trials: u64,
    pub seed: u64,
    /// Largest subset size scanned per trial.
    pub max_t: usize,
    /// Odd-subset budget per trial; trials beyond it are skipped and counted.
    pub per_trial_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            rows: 6,
            cols: 6,
            zero_density: 0.4,
            trials: 1000,
            seed: 0,
            max_t: 7,
            per_trial_budget: 200_000,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub completed_trials: u64,
    pub skipped_trials: u64,
    /// Minimum slack `rhs - lhs` seen, as `"p/q"`, with its witness.
    pub min_slack: Option<String>,
    pub witness_matrix: Option<Vec<Vec<u64>>>,
    pub witness_cells: Vec<(usize, usize)>,
    pub violations: u64,
}

/// Random sweep: each trial draws a sparse integer matrix, scans its odd
/// zero-cell subsets, and the minimum slack across all trials is reported.
/// Deterministic for a fixed seed (trials are independently seeded).
pub fn random_counterexample_search(config: &SearchConfig) -> SearchReport {
    #[derive(Clone)]
    struct Acc {
        completed: u64,
        skipped: u64,
        violations: u64,
        // (slack, trial index, matrix, cells) — min by (slack, index)
        min: Option<(Rat, u64, WeightMatrix, Vec<(usize, usize)>)>,
    }
    let merge = |a: Acc, b: Acc| -> Acc {
        let min = match (a.min, b.min) {
            (Some(x), Some(y)) => Some(if (y.0, y.1) < (x.0, x.1) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        };
        Acc {
            completed: a.completed + b.completed,
            skipped: a.skipped + b.skipped,
            violations: a.violations + b.violations,
            min,
        }
    };

    let run_trial = |idx: usize| -> Option<Acc> {
        let mut rng = crate::sample::rng(config.seed.wrapping_add(idx as u64));
        let m = crate::sample::random_sparse_matrix(
            &mut rng,
            config.rows,
            config.cols,
            config.zero_density,
        );
        let rat = rational_matrix(&m);
        match exhaustive_check(&rat, Some(config.max_t), config.per_trial_budget) {
            Err(_) => Some(Acc {
                completed: 0,
                skipped: 1,
                violations: 0,
                min: None,
            }),
            Ok(report) => {
                let min = report.max_excess.as_ref().map(|excess| {
                    let slack = -rat_from_str(excess).expect("report rationals parse");
                    (slack, idx as u64, m, report.worst_cells.clone())
                });
                Some(Acc {
                    completed: 1,
                    skipped: 0,
                    violations: u64::from(report.violated),
                    min,
                })
            }
        }
    };

    let acc = exec::map_reduce(config.trials as usize, run_trial, merge).unwrap_or(Acc {
        completed: 0,
        skipped: 0,
        violations: 0,
        min: None,
    });
    let (min_slack, witness_matrix, witness_cells) = match acc.min {
        None => (None, None, Vec::new()),
        Some((slack, _, m, cells)) => (Some(rat_to_string(slack)), Some(m.data), cells),
    };
    SearchReport {
        config: config.clone(),
        completed_trials: acc.completed,
        skipped_trials: acc.skipped,
        min_slack,
        witness_matrix,
        witness_cells,
        violations: acc.violations,
    }
}

/// The report format shared by the CLI: exact sides and slack for one
/// instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SidesReport {
    pub matrix: Vec<Vec<String>>,
    pub cells: Vec<(usize, usize)>,
    pub lhs: String,
    pub rhs: String,
    pub slack: String,
    pub violated: bool,
}

pub fn sides_report(inst: &InequalityInstance) -> SidesReport {
    let (lhs, rhs) = inequality_sides(inst);
    SidesReport {
        matrix: inst
            .matrix
            .iter()
            .map(|r| r.iter().map(|&v| rat_to_string(v)).collect())
            .collect(),
        cells: inst.cells.clone(),
        lhs: rat_to_string(lhs),
        rhs: rat_to_string(rhs),
        slack: rat_to_string(rhs - lhs),
        violated: lhs > rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn rat(v: i64) -> Rat {
        Rat::from_integer(v)
    }

    fn zero_diag_ones(t: usize) -> InequalityInstance {
        let matrix: Vec<Vec<Rat>> = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| if i == j { rat(0) } else { rat(1) })
                    .collect()
            })
            .collect();
        let cells = (0..t).map(|i| (i, i)).collect();
        InequalityInstance::new(matrix, cells).unwrap()
    }

    #[test]
    fn t_equals_one_gives_zero_on_both_sides() {
        let inst = InequalityInstance::new(
            vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
            vec![(0, 0)],
        )
        .unwrap();
        assert_eq!(inequality_sides(&inst), (rat(0), rat(0)));
    }

    #[test]
    fn zero_diagonal_all_ones_three() {
        let inst = zero_diag_ones(3);
        let (lhs, rhs) = inequality_sides(&inst);
        assert_eq!(lhs, rat(6));
        assert_eq!(rhs, rat(8));
    }

    #[test]
    fn rejects_even_t_and_nonzero_cells() {
        let m = vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]];
        assert!(InequalityInstance::new(m.clone(), vec![(0, 0), (0, 1)]).is_err());
        assert!(InequalityInstance::new(m, vec![(1, 0)]).is_err());
    }

    #[test]
    fn exhaustive_no_zero_cells_is_vacuous() {
        let m = vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]];
        let report = exhaustive_check(&m, None, 1_000).unwrap();
        assert_eq!(report.zero_cells, 0);
        assert!(report.max_excess.is_none());
        assert!(!report.violated);
    }

    #[test]
    fn exhaustive_matches_direct_subset_enumeration() {
        // Independent oracle: enumerate all odd subsets via bitmasks.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..30 {
            let m = crate::sample::random_sparse_matrix(&mut rng, 4, 4, 0.5);
            let rat_m = rational_matrix(&m);
            let zeros: Vec<(usize, usize)> = (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .filter(|&(i, j)| m.get(i, j) == 0)
                .collect();
            let bound = norm_inf(&rat_m) * norm_one(&rat_m);
            let mut best: Option<(Rat, Vec<(usize, usize)>)> = None;
            let mut count = 0u64;
            for mask in 1u32..(1 << zeros.len()) {
                if mask.count_ones() % 2 == 0 {
                    continue;
                }
                count += 1;
                let cells: Vec<(usize, usize)> = (0..zeros.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| zeros[i])
                    .collect();
                let lhs = cells_cross_sum(&rat_m, &cells);
                let excess = lhs - Rat::from_integer(cells.len() as i64 - 1) * bound;
                best = Some(match best.take() {
                    None => (excess, cells),
                    Some(b) => {
                        if excess > b.0 || (excess == b.0 && cells < b.1) {
                            (excess, cells)
                        } else {
                            b
                        }
                    }
                });
            }
            let report = exhaustive_check(&rat_m, None, 1_000_000).unwrap();
            match best {
                None => assert!(report.max_excess.is_none()),
                Some((excess, cells)) => {
                    assert_eq!(report.max_excess, Some(rat_to_string(excess)));
                    assert_eq!(report.worst_cells, cells);
                    assert_eq!(report.subsets_checked, count);
                }
            }
        }
    }

    #[test]
    fn exhaustive_budget_is_enforced() {
        let m = vec![vec![rat(0); 6]; 6];
        assert!(matches!(
            exhaustive_check(&m, None, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn lambda_extremal_point_is_tight() {
        assert_eq!(
            lambdas_bound(&[2.0, -2.0, 0.0], 2.0, 1e-12),
            LambdaCheck::Ok
        );
        assert_eq!(lambdas_bound(&[0.0, 0.0, 0.0], 2.0, 1e-12), LambdaCheck::Ok);
        assert!(matches!(
            lambdas_bound(&[3.0, -3.0, 0.0], 2.0, 1e-12),
            LambdaCheck::ConstraintViolated(_)
        ));
        assert!(matches!(
            lambdas_bound(&[1.0, -1.0], 2.0, 1e-12),
            LambdaCheck::ConstraintViolated(_)
        ));
    }

    #[test]
    fn lambda_bound_never_violated_on_feasible_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut tested = 0;
        while tested < 10_000 {
            let t = [1usize, 3, 5, 7, 9][rng.gen_range(0..5)];
            let kappa = rng.gen_range(0.1..4.0);
            let mut lam: Vec<f64> = (0..t - 1).map(|_| rng.gen_range(-kappa..kappa)).collect();
            let last = -lam.iter().sum::<f64>();
            if last.abs() > kappa {
                continue; // rejection sampling keeps the constraint feasible
            }
            lam.push(last);
            match lambdas_bound(&lam, kappa, 1e-9) {
                LambdaCheck::Ok => tested += 1,
                LambdaCheck::BoundViolated { sum_sq, limit } => {
                    panic!("bound violated on feasible sample: {sum_sq} > {limit}")
                }
                LambdaCheck::ConstraintViolated(msg) => panic!("constraint check broke: {msg}"),
            }
        }
    }

    #[test]
    fn spectral_certificate_t1() {
        let inst = InequalityInstance::new(
            vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
            vec![(0, 0)],
        )
        .unwrap();
        let report = square_case_certificate(&inst, 1e-9).unwrap();
        assert_eq!(report.eigenvalues.len(), 1);
        assert!(report.eigenvalues[0].abs() < 1e-12);
        assert!(report.holds);
    }

    #[test]
    fn spectral_certificate_zero_diag_ones() {
        let inst = zero_diag_ones(3);
        let report = square_case_certificate(&inst, 1e-9).unwrap();
        // Eigenvalues of J - I on 3 points: {2, -1, -1}.
        let mut lam = report.eigenvalues.clone();
        lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((lam[0] + 1.0).abs() < 1e-9);
        assert!((lam[1] + 1.0).abs() < 1e-9);
        assert!((lam[2] - 2.0).abs() < 1e-9);
        assert!((report.sum_sq - 6.0).abs() < 1e-9);
        assert!(report.holds);
    }

    #[test]
    fn spectral_certificate_rejects_repeated_rows() {
        let m = vec![vec![rat(0), rat(0), rat(1)], vec![rat(1), rat(0), rat(0)]];
        let inst = InequalityInstance::new(m, vec![(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(square_case_certificate(&inst, 1e-9).is_err());
    }

    #[test]
    fn random_square_cases_hold() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        let mut done = 0;
        while done < 100 {
            let size = rng.gen_range(3..=6usize);
            let m = crate::sample::random_sparse_matrix(&mut rng, size, size, 0.5);
            // Diagonal cells that are zero: a square-case subset.
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
            assert!(report.holds);
            done += 1;
        }
    }

    #[test]
    fn search_zero_trials_is_empty() {
        let config = SearchConfig {
            trials: 0,
            ..SearchConfig::default()
        };
        let report = random_counterexample_search(&config);
        assert_eq!(report.completed_trials, 0);
        assert!(report.min_slack.is_none());
    }

    #[test]
    fn search_is_deterministic_for_fixed_seed() {
        let config = SearchConfig {
            trials: 50,
            rows: 4,
            cols: 4,
            ..SearchConfig::default()
        };
        let a = random_counterexample_search(&config);
        let b = random_counterexample_search(&config);
        assert_eq!(crate::canonical_json(&a), crate::canonical_json(&b));
        assert_eq!(a.violations, 0);
    }
}
