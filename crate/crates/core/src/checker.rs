//! Independent linear-time certificate validation.
//!
//! This module deliberately shares nothing with the solvers except the core
//! data model: neighborhoods, components and bracket counts are recomputed
//! here from the serialized payload, so a bug in a solver cannot hide inside
//! its own certificate check.

use num_rational::Rational64;
use num_traits::Signed;

use crate::cert::Certificate;
use crate::model::{bracket_pair, compose_labels, uniform_matrix, LabeledBigraph, WeightMatrix};

/// `Ok(())` when the certificate is internally valid; otherwise the first
/// reason it is not.
pub fn check_certificate(cert: &Certificate) -> Result<(), String> {
    match cert {
        Certificate::Matching {
            graph,
            pairs,
            left_perfect,
        } => check_matching(graph, pairs, *left_perfect),
        Certificate::DeficientSet { graph, subset } => check_deficient(graph, subset),
        Certificate::LoopMatching { graph, pairing } => check_loop_matching(graph, pairing),
        Certificate::TutteObstruction { graph, removed } => check_obstruction(graph, removed),
        Certificate::BallsInvolution {
            instance,
            involution,
            ..
        } => check_balls(instance, involution),
        Certificate::PartsBijection {
            first, second, map, ..
        } => check_parts(first, second, map),
        Certificate::InequalityViolation {
            matrix,
            cells,
            lhs,
            rhs,
        } => check_inequality_violation(matrix, cells, lhs, rhs),
    }
}

pub fn certificate_is_valid(cert: &Certificate) -> bool {
    check_certificate(cert).is_ok()
}

fn check_matching(
    graph: &WeightMatrix,
    pairs: &[(usize, usize)],
    left_perfect: bool,
) -> Result<(), String> {
    graph.validate().map_err(|e| e.to_string())?;
    let mut left_used = vec![false; graph.rows];
    let mut right_used = vec![false; graph.cols];
    for &(x, y) in pairs {
        if x >= graph.rows || y >= graph.cols {
            return Err(format!("pair ({x},{y}) out of range"));
        }
        if graph.get(x, y) == 0 {
            return Err(format!("pair ({x},{y}) is not an edge"));
        }
        if left_used[x] || right_used[y] {
            return Err(format!("pair ({x},{y}) reuses a vertex"));
        }
        left_used[x] = true;
        right_used[y] = true;
    }
    if left_perfect && left_used.iter().any(|&u| !u) {
        return Err("claimed left-perfect but a left vertex is uncovered".into());
    }
    Ok(())
}

fn check_deficient(graph: &WeightMatrix, subset: &[usize]) -> Result<(), String> {
    graph.validate().map_err(|e| e.to_string())?;
    if subset.is_empty() {
        return Err("deficient set must be nonempty".into());
    }
    let mut in_set = vec![false; graph.rows];
    for &x in subset {
        if x >= graph.rows {
            return Err(format!("left vertex {x} out of range"));
        }
        if in_set[x] {
            return Err(format!("left vertex {x} repeated"));
        }
        in_set[x] = true;
    }
    let mut neighborhood = vec![false; graph.cols];
    for &x in subset {
        for y in 0..graph.cols {
            if graph.get(x, y) > 0 {
                neighborhood[y] = true;
            }
        }
    }
    let n_size = neighborhood.iter().filter(|&&b| b).count();
    if n_size >= subset.len() {
        return Err(format!(
            "|N(X)| = {n_size} is not below |X| = {}",
            subset.len()
        ));
    }
    Ok(())
}

fn check_loop_matching(graph: &WeightMatrix, pairing: &[usize]) -> Result<(), String> {
    graph.validate().map_err(|e| e.to_string())?;
    if !graph.is_symmetric() {
        return Err("loop graph matrix must be square and symmetric".into());
    }
    let n = graph.rows;
    if pairing.len() != n {
        return Err("pairing length disagrees with vertex count".into());
    }
    for (v, &w) in pairing.iter().enumerate() {
        if w >= n || pairing[w] != v {
            return Err(format!("pairing is not an involution at vertex {v}"));
        }
        if graph.get(v, w) == 0 {
            return Err(if v == w {
                format!("fixed point {v} has no loop")
            } else {
                format!("pair ({v},{w}) is not an edge")
            });
        }
    }
    Ok(())
}

fn check_obstruction(graph: &WeightMatrix, removed: &[usize]) -> Result<(), String> {
    graph.validate().map_err(|e| e.to_string())?;
    if !graph.is_symmetric() {
        return Err("loop graph matrix must be square and symmetric".into());
    }
    let n = graph.rows;
    let mut gone = vec![false; n];
    for &v in removed {
        if v >= n {
            return Err(format!("removed vertex {v} out of range"));
        }
        if gone[v] {
            return Err(format!("removed vertex {v} repeated"));
        }
        gone[v] = true;
    }
    // Flood-fill components of G - removed; count odd ones without loops.
    let mut seen = gone.clone();
    let mut odd_loopless = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut size = 0usize;
        let mut has_loop = false;
        while let Some(v) = stack.pop() {
            size += 1;
            if graph.get(v, v) > 0 {
                has_loop = true;
            }
            for w in 0..n {
                if !seen[w] && graph.get(v, w) > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if size % 2 == 1 && !has_loop {
            odd_loopless += 1;
        }
    }
    if odd_loopless <= removed.len() {
        return Err(format!(
            "{odd_loopless} odd loop-free components does not exceed |U| = {}",
            removed.len()
        ));
    }
    Ok(())
}

fn check_balls(instance: &LabeledBigraph, involution: &[usize]) -> Result<(), String> {
    instance.validate().map_err(|e| e.to_string())?;
    let m = instance.edge_count();
    if involution.len() != m {
        return Err("involution length disagrees with edge count".into());
    }
    for (e, &f) in involution.iter().enumerate() {
        if f >= m || involution[f] != e {
            return Err(format!("map is not an involution at edge {e}"));
        }
    }
    let u = compose_labels(&instance.left_labels(), involution);
    let b = bracket_pair(
        &u,
        &instance.right_labels(),
        instance.left_size,
        instance.right_size,
    );
    if b != uniform_matrix(instance.left_size, instance.right_size) {
        return Err("[u o iota, v] is not the all-ones matrix".into());
    }
    Ok(())
}

fn check_parts(
    first: &LabeledBigraph,
    second: &LabeledBigraph,
    map: &[usize],
) -> Result<(), String> {
    first.validate().map_err(|e| e.to_string())?;
    second.validate().map_err(|e| e.to_string())?;
    let m = first.edge_count();
    if second.edge_count() != m || map.len() != m {
        return Err("edge counts disagree".into());
    }
    let mut inverse = vec![usize::MAX; m];
    for (e, &f) in map.iter().enumerate() {
        if f >= m || inverse[f] != usize::MAX {
            return Err(format!("map is not a bijection at edge {e}"));
        }
        inverse[f] = e;
    }
    // [u2 o psi, v1]: edge e of E1 pairs second's left label of psi(e) with
    // first's right label of e.
    let u2_psi: Vec<usize> = (0..m).map(|e| second.left_label(map[e])).collect();
    let b1 = bracket_pair(
        &u2_psi,
        &first.right_labels(),
        second.left_size,
        first.right_size,
    );
    if b1 != uniform_matrix(second.left_size, first.right_size) {
        return Err("[u2 o psi, v1] is not the all-ones matrix".into());
    }
    let u1_inv: Vec<usize> = (0..m).map(|e| first.left_label(inverse[e])).collect();
    let b2 = bracket_pair(
        &u1_inv,
        &second.right_labels(),
        first.left_size,
        second.right_size,
    );
    if b2 != uniform_matrix(first.left_size, second.right_size) {
        return Err("[u1 o psi^-1, v2] is not the all-ones matrix".into());
    }
    Ok(())
}

fn parse_rat(s: &str) -> Result<Rational64, String> {
    let parse_int = |t: &str| t.trim().parse::<i64>().map_err(|e| e.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q == 0 {
                return Err("zero denominator".into());
            }
            Ok(Rational64::new(parse_int(p)?, q))
        }
        None => Ok(Rational64::from_integer(parse_int(s)?)),
    }
}

fn check_inequality_violation(
    matrix: &[Vec<String>],
    cells: &[(usize, usize)],
    lhs: &str,
    rhs: &str,
) -> Result<(), String> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 || matrix.iter().any(|r| r.len() != cols) {
        return Err("bad matrix shape".into());
    }
    let mut m = vec![vec![Rational64::from_integer(0); cols]; rows];
    for (i, row) in matrix.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let v = parse_rat(s)?;
            if v.is_negative() {
                return Err(format!("negative entry at ({i},{j})"));
            }
            m[i][j] = v;
        }
    }
    let t = cells.len();
    if t % 2 == 0 {
        return Err("cell count must be odd".into());
    }
    for (idx, &(x, y)) in cells.iter().enumerate() {
        if x >= rows || y >= cols {
            return Err(format!("cell ({x},{y}) out of range"));
        }
        if m[x][y] != Rational64::from_integer(0) {
            return Err(format!("cell ({x},{y}) is not a zero of the matrix"));
        }
        if cells[..idx].contains(&(x, y)) {
            return Err(format!("cell ({x},{y}) repeated"));
        }
    }
    let mut sum = Rational64::from_integer(0);
    for &(xi, yi) in cells {
        for &(xj, yj) in cells {
            sum += m[xi][yj] * m[xj][yi];
        }
    }
    let row_norm = (0..rows)
        .map(|i| (0..cols).fold(Rational64::from_integer(0), |a, j| a + m[i][j]))
        .max()
        .unwrap();
    let col_norm = (0..cols)
        .map(|j| (0..rows).fold(Rational64::from_integer(0), |a, i| a + m[i][j]))
        .max()
        .unwrap();
    let bound = Rational64::from_integer(t as i64 - 1) * row_norm * col_norm;
    if parse_rat(lhs)? != sum {
        return Err("stated lhs disagrees with recomputation".into());
    }
    if parse_rat(rhs)? != bound {
        return Err("stated rhs disagrees with recomputation".into());
    }
    if sum <= bound {
        return Err("claimed violation but lhs <= rhs".into());
    }
    Ok(())
}
