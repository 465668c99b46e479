//! Matching and expansion primitives: bipartite maximum matching with Hall
//! witnesses, König factorization of regular bipartite multigraphs, the exact
//! Hall coefficient `h(G)`, and loop-aware perfect matching via the Tutte
//! reduction.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exec;
use crate::model::{Involution, Permutation, WeightMatrix};

/// Bipartite multigraph given by its multiplicity matrix (rows = left part).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipGraph {
    pub mult: WeightMatrix,
}

impl BipGraph {
    pub fn new(mult: WeightMatrix) -> Self {
        BipGraph { mult }
    }

    pub fn left_size(&self) -> usize {
        self.mult.rows
    }

    pub fn right_size(&self) -> usize {
        self.mult.cols
    }

    /// Sorted right neighbors of each left vertex (multiplicities collapsed).
    pub fn support_rows(&self) -> Vec<Vec<usize>> {
        self.mult
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect()
    }

    /// Distinct right neighbors of a left subset.
    pub fn neighborhood(&self, left_set: &[usize]) -> Vec<usize> {
        let mut hit = vec![false; self.right_size()];
        for &x in left_set {
            for (y, flag) in hit.iter_mut().enumerate() {
                if self.mult.get(x, y) > 0 {
                    *flag = true;
                }
            }
        }
        hit.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(y, _)| y)
            .collect()
    }
}

/// Symmetric multigraph, possibly with loops on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopGraph {
    pub mult: WeightMatrix,
}

impl LoopGraph {
    pub fn new(mult: WeightMatrix) -> Result<Self> {
        if !mult.is_symmetric() {
            return Err(Error::InvalidInput(
                "loop graph matrix must be square and symmetric".into(),
            ));
        }
        Ok(LoopGraph { mult })
    }

    pub fn size(&self) -> usize {
        self.mult.rows
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.mult.get(v, v) > 0
    }
}

/// Result of a maximum bipartite matching run. `certificate` is a matching
/// witness when left-perfect and a Hall violator otherwise.
#[derive(Clone, Debug)]
pub struct BipMatching {
    pub left_match: Vec<Option<usize>>,
    pub right_match: Vec<Option<usize>>,
    pub size: usize,
    pub certificate: Certificate,
}

impl BipMatching {
    pub fn is_left_perfect(&self) -> bool {
        self.left_match.iter().all(Option::is_some)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_match
            .iter()
            .enumerate()
            .filter_map(|(x, &m)| m.map(|y| (x, y)))
            .collect()
    }
}

/// Hopcroft–Karp maximum matching on the support of `g`.
pub fn max_bipartite_matching(g: &BipGraph) -> BipMatching {
    let nl = g.left_size();
    let nr = g.right_size();
    let adj = g.support_rows();
    let mut left_match: Vec<Option<usize>> = vec![None; nl];
    let mut right_match: Vec<Option<usize>> = vec![None; nr];

    loop {
        // BFS layering from free left vertices.
        let mut dist = vec![usize::MAX; nl];
        let mut queue = std::collections::VecDeque::new();
        for x in 0..nl {
            if left_match[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            }
        }
        let mut reachable_free_right = false;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match right_match[y] {
                    None => reachable_free_right = true,
                    Some(x2) => {
                        if dist[x2] == usize::MAX {
                            dist[x2] = dist[x] + 1;
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        // DFS augmentation along the layering.
        fn augment(
            x: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            left_match: &mut [Option<usize>],
            right_match: &mut [Option<usize>],
        ) -> bool {
            let d = std::mem::replace(&mut dist[x], usize::MAX);
            for &y in &adj[x] {
                match right_match[y] {
                    None => {
                        left_match[x] = Some(y);
                        right_match[y] = Some(x);
                        return true;
                    }
                    Some(x2) => {
                        if dist[x2] == d + 1 && augment(x2, adj, dist, left_match, right_match) {
                            left_match[x] = Some(y);
                            right_match[y] = Some(x);
                            return true;
                        }
                    }
                }
            }
            false
        }
        let mut progressed = false;
        for x in 0..nl {
            if left_match[x].is_none() && dist[x] == 0 {
                progressed |= augment(x, &adj, &mut dist, &mut left_match, &mut right_match);
            }
        }
        if !progressed {
            break;
        }
    }

    let size = left_match.iter().filter(|m| m.is_some()).count();
    let certificate = if size == nl {
        Certificate::Matching {
            graph: g.mult.clone(),
            pairs: left_match
                .iter()
                .enumerate()
                .map(|(x, m)| (x, m.unwrap()))
                .collect(),
            left_perfect: true,
        }
    } else {
        // Alternating BFS from the free left vertices: X = reachable lefts,
        // N(X) = reachable rights, and |N(X)| = |X| - #free < |X|.
        let mut in_x = vec![false; nl];
        let mut in_n = vec![false; nr];
        let mut queue: std::collections::VecDeque<usize> = (0..nl)
            .filter(|&x| left_match[x].is_none())
            .inspect(|&x| in_x[x] = true)
            .collect();
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !in_n[y] {
                    in_n[y] = true;
                    if let Some(x2) = right_match[y] {
                        if !in_x[x2] {
                            in_x[x2] = true;
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        let subset: Vec<usize> = (0..nl).filter(|&x| in_x[x]).collect();
        Certificate::DeficientSet {
            graph: g.mult.clone(),
            subset,
        }
    };
    BipMatching {
        left_match,
        right_match,
        size,
        certificate,
    }
}

fn regular_degree(g: &BipGraph) -> Result<u64> {
    if g.left_size() != g.right_size() {
        return Err(Error::NotRegular(format!(
            "parts have sizes {} and {}",
            g.left_size(),
            g.right_size()
        )));
    }
    let rs = g.mult.row_sums();
    let cs = g.mult.col_sums();
    let d = rs[0];
    if d == 0 || rs.iter().any(|&s| s != d) || cs.iter().any(|&s| s != d) {
        return Err(Error::NotRegular(format!(
            "degrees {rs:?} / {cs:?} are not uniform positive"
        )));
    }
    Ok(d)
}

/// One perfect matching of a regular bipartite multigraph (König's theorem
/// guarantees it exists).
pub fn konig_perfect_matching(g: &BipGraph) -> Result<Permutation> {
    regular_degree(g)?;
    let matching = max_bipartite_matching(g);
    assert!(
        matching.is_left_perfect(),
        "regular bipartite multigraph must have a perfect matching"
    );
    Permutation::new(matching.left_match.iter().map(|m| m.unwrap()).collect())
}

/// Peel a `d`-regular bipartite multigraph into `d` perfect matchings whose
/// permutation matrices sum back to the multiplicity matrix.
pub fn konig_factorize(g: &BipGraph) -> Result<Vec<Permutation>> {
    let d = regular_degree(g)?;
    let mut residual = g.clone();
    let mut rounds = Vec::with_capacity(d as usize);
    for _ in 0..d {
        let pi = konig_perfect_matching(&residual)?;
        for (i, &j) in pi.map.iter().enumerate() {
            let m = residual.mult.get(i, j);
            debug_assert!(m > 0);
            residual.mult.set(i, j, m - 1);
        }
        rounds.push(pi);
    }
    debug_assert_eq!(residual.mult.total(), 0);
    Ok(rounds)
}

/// Exact Hall coefficient with its minimizing witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallValue {
    pub value: Rational64,
    pub witness: Vec<usize>,
}

pub const HALL_DEFAULT_BOUND: usize = 20;

/// `h(g)` by exhaustive subset scan (default bound: 20 left vertices).
pub fn hall_coefficient(g: &BipGraph) -> Result<HallValue> {
    hall_coefficient_bounded(g, HALL_DEFAULT_BOUND)
}

/// Minimum tie-break is (value, |X|, lexicographic X); on ascending index
/// sets that order coincides with "contains the lowest differing index".
fn mask_lex_less(a: u32, b: u32) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    a & (1 << d.trailing_zeros()) != 0
}

pub fn hall_coefficient_bounded(g: &BipGraph, max_left: usize) -> Result<HallValue> {
    let nl = g.left_size();
    if nl > max_left {
        return Err(Error::BudgetExceeded {
            context: format!(
                "hall coefficient subset scan over {nl} left vertices (bound {max_left})"
            ),
            progress: 0,
        });
    }
    if nl >= 31 {
        return Err(Error::BudgetExceeded {
            context: "hall coefficient subset scan".into(),
            progress: 0,
        });
    }
    if g.right_size() > 128 {
        return Err(Error::InvalidInput(
            "hall scan supports at most 128 right vertices".into(),
        ));
    }
    let row_bits: Vec<u128> = (0..nl)
        .map(|x| {
            (0..g.right_size())
                .filter(|&y| g.mult.get(x, y) > 0)
                .fold(0u128, |b, y| b | (1 << y))
        })
        .collect();

    // Shard the subset space by the membership pattern of the top vertices,
    // then walk each shard depth-first carrying the running neighborhood.
    let low = nl.min(14);
    let high = nl - low;
    let shards = 1usize << high;

    #[derive(Clone, Copy)]
    struct Cand {
        value: Rational64,
        size: u32,
        mask: u32,
    }
    fn better(a: Cand, b: Cand) -> Cand {
        if (a.value, a.size) < (b.value, b.size)
            || (a.value, a.size) == (b.value, b.size) && mask_lex_less(a.mask, b.mask)
        {
            a
        } else {
            b
        }
    }

    let scan_shard = |shard: usize| -> Option<Cand> {
        let mut best: Option<Cand> = None;
        let base_mask = (shard as u32) << low;
        let mut base_bits = 0u128;
        let mut base_size = 0u32;
        for i in 0..high {
            if shard & (1 << i) != 0 {
                base_bits |= row_bits[low + i];
                base_size += 1;
            }
        }
        // DFS over the low vertices.
        fn rec(
            i: usize,
            low: usize,
            mask: u32,
            size: u32,
            bits: u128,
            row_bits: &[u128],
            best: &mut Option<Cand>,
        ) {
            if i == low {
                if size > 0 {
                    let cand = Cand {
                        value: Rational64::new(bits.count_ones() as i64, size as i64),
                        size,
                        mask,
                    };
                    *best = Some(match *best {
                        None => cand,
                        Some(b) => better(cand, b),
                    });
                }
                return;
            }
            rec(i + 1, low, mask, size, bits, row_bits, best);
            rec(
                i + 1,
                low,
                mask | (1 << i),
                size + 1,
                bits | row_bits[i],
                row_bits,
                best,
            );
        }
        rec(
            0, low, base_mask, base_size, base_bits, &row_bits, &mut best,
        );
        best
    };

    let best = exec::map_reduce(shards, scan_shard, better)
        .expect("nonempty left part always yields a candidate");
    let witness = (0..nl).filter(|&x| best.mask & (1 << x) != 0).collect();
    Ok(HallValue {
        value: best.value,
        witness,
    })
}

/// Outcome of loop-aware perfect matching.
#[derive(Clone, Debug)]
pub enum LoopMatching {
    /// Involution pairing every vertex with a neighbor or itself on a loop.
    Perfect(Involution),
    /// Vertex set whose removal leaves more than `|U|` odd loop-free
    /// components.
    Obstruction(Vec<usize>),
}

impl LoopMatching {
    pub fn certificate(&self, g: &LoopGraph) -> Certificate {
        match self {
            LoopMatching::Perfect(theta) => Certificate::LoopMatching {
                graph: g.mult.clone(),
                pairing: theta.map.clone(),
            },
            LoopMatching::Obstruction(removed) => Certificate::TutteObstruction {
                graph: g.mult.clone(),
                removed: removed.clone(),
            },
        }
    }
}

/// Perfect matching in a graph with loops, by reduction to a loop-free graph:
/// add `l` (or `l+1`, fixing parity) new vertices forming a clique joined to
/// every loop vertex, drop the loops, and match. On failure an obstruction
/// set is found by exhaustive scan.
pub fn perfect_matching_with_loops(g: &LoopGraph) -> LoopMatching {
    let n = g.size();
    let loops: Vec<usize> = (0..n).filter(|&v| g.has_loop(v)).collect();
    let l = loops.len();
    let added = if (n + l) % 2 == 0 { l } else { l + 1 };
    let total = n + added;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if g.mult.get(v, w) > 0 {
                edges.push((v, w));
            }
        }
    }
    for &v in &loops {
        for a in 0..added {
            edges.push((v, n + a));
        }
    }
    for a in 0..added {
        for b in a + 1..added {
            edges.push((n + a, n + b));
        }
    }

    if let Some(partner) = general_perfect_matching(total, &edges) {
        let map: Vec<usize> = (0..n)
            .map(|v| {
                let p = partner[v];
                if p < n {
                    p
                } else {
                    debug_assert!(g.has_loop(v));
                    v
                }
            })
            .collect();
        let theta = Involution::new(map).expect("matching translation is an involution");
        return LoopMatching::Perfect(theta);
    }

    // No perfect matching: some U must witness it. Scan subsets in ascending
    // mask order; guaranteed to terminate on any graph small enough to be
    // checked here.
    assert!(n < 26, "obstruction scan is exhaustive; graph too large");
    for mask in 0u32..(1 << n) {
        let removed: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if odd_loopless_components(g, &removed) > removed.len() {
            return LoopMatching::Obstruction(removed);
        }
    }
    unreachable!("a graph without a loop-aware perfect matching must have an obstruction set");
}

fn odd_loopless_components(g: &LoopGraph, removed: &[usize]) -> usize {
    let n = g.size();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let mut seen = gone.clone();
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut size = 0;
        let mut has_loop = false;
        while let Some(v) = stack.pop() {
            size += 1;
            has_loop |= g.has_loop(v);
            for w in 0..n {
                if !seen[w] && g.mult.get(v, w) > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if size % 2 == 1 && !has_loop {
            count += 1;
        }
    }
    count
}

/// Perfect matching in a simple loop-free graph, or `None`. Returns the
/// partner of every vertex. Backed by petgraph's general maximum matching.
pub fn general_perfect_matching(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if n % 2 == 1 {
        return None;
    }
    use petgraph::graph::{NodeIndex, UnGraph};
    let mut graph = UnGraph::<(), ()>::default();
    let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
    let mut present = std::collections::HashSet::new();
    for &(v, w) in edges {
        debug_assert!(v != w, "loops must be handled by the caller");
        let key = (v.min(w), v.max(w));
        if present.insert(key) {
            graph.add_edge(nodes[key.0], nodes[key.1], ());
        }
    }
    let matching = petgraph::algo::matching::maximum_matching(&graph);
    let mut partner = vec![usize::MAX; n];
    for (a, b) in matching.edges() {
        partner[a.index()] = b.index();
        partner[b.index()] = a.index();
    }
    if partner.contains(&usize::MAX) {
        return None;
    }
    Some(partner)
}
