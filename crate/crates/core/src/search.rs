//! Exact minimal-superpermutation search for small `n`.
//!
//! # Reduction to a Hamiltonian path
//!
//! Let the overlap graph have one node per permutation of `[n]` and an edge
//! `u → v` of weight `n − ov(u, v)`, where `ov(u, v)` is the length of the
//! longest proper suffix of `u` that is a prefix of `v`.
//!
//! *Claim.* The minimal superpermutation length is `n + W`, where `W` is the
//! minimum weight of a Hamiltonian path, and every minimal superpermutation
//! is the maximal-overlap join of the permutations along some minimum path.
//!
//! *Proof.* Any path `v_1, …, v_m` is realised by joining its nodes with
//! maximal overlaps, giving a string of length `n + Σ w(v_i, v_{i+1})`. So
//! the minimum is at most `n + W`. Conversely take a superpermutation `s`
//! and list its permutations `v_1, …, v_m` by first occurrence, at offsets
//! `a_1 < … < a_m`. The windows at `a_i` and `a_{i+1}` share
//! `n − (a_{i+1} − a_i)` characters when that is positive; those characters
//! are a suffix of `v_i` and a prefix of `v_{i+1}`, so
//! `a_{i+1} − a_i ≥ w(v_i, v_{i+1})`. Summing, `|s| ≥ a_m + n ≥ n + W`. If
//! `|s| = n + W` every inequality is tight: `a_1 = 0`, `s` ends with `v_m`,
//! and each gap equals the edge weight. Then each gap is at most `n`, so
//! consecutive windows cover `s` without holes and `s` is exactly the
//! maximal-overlap join of the path. ∎
//!
//! Relabeling symbols maps superpermutations to superpermutations, so the
//! search fixes the first node to `1 2 … n`. Enumerating every minimum path
//! from that node and deduplicating the joined strings therefore yields
//! every minimal superpermutation beginning with `1 2 … n`.
//!
//! The search is a depth-first branch and bound. The bound charges each
//! unvisited node the cheapest edge into it from a node that can still
//! precede it (the current node or another unvisited node).

use std::collections::BTreeSet;

use crate::builder::{overlap_concat, SymbolString};
use crate::error::{Error, Result};
use crate::math::{factorial, factorial_sum};
use crate::perm::{all_perms, Perm};
use crate::verifier::verify;

/// Largest `n` accepted by [`search_minimal`].
pub const SEARCH_CAP: usize = 4;

/// Largest `n` for which [`OverlapGraph`] materialises its weight matrix.
pub const GRAPH_CAP: usize = 6;

/// `n! + n − 1`.
pub fn trivial_lower_bound(n: usize) -> u64 {
    factorial(n) + n as u64 - 1
}

/// `1! + 2! + … + n!`.
pub fn conjectured_length(n: usize) -> u64 {
    factorial_sum(n)
}

/// `n` minus the longest proper suffix of `u` that is a prefix of `v`.
pub fn overlap_weight(u: &Perm, v: &Perm) -> usize {
    let (a, b) = (u.symbols(), v.symbols());
    let n = a.len();
    let ov = (1..n).rev().find(|&l| a[n - l..] == b[..l]).unwrap_or(0);
    n - ov
}

/// Complete directed graph on permutations of `[n]`, nodes in lexicographic order.
#[derive(Clone, Debug)]
pub struct OverlapGraph {
    n: usize,
    nodes: Vec<Perm>,
    weights: Vec<u8>,
}

impl OverlapGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > GRAPH_CAP {
            return Err(Error::AlphabetSize { n, min: 1, max: GRAPH_CAP });
        }
        let nodes = all_perms(n)?;
        let size = nodes.len();
        let mut weights = vec![0u8; size * size];
        for (i, u) in nodes.iter().enumerate() {
            for (j, v) in nodes.iter().enumerate() {
                if i != j {
                    weights[i * size + j] = overlap_weight(u, v) as u8;
                }
            }
        }
        Ok(OverlapGraph { n, nodes, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[Perm] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Edge weight between distinct nodes; `None` on the diagonal.
    pub fn weight(&self, u: usize, v: usize) -> Option<usize> {
        (u != v).then(|| self.weights[u * self.nodes.len() + v] as usize)
    }

    /// Greedy walk from the identity: always take a cheapest edge to an
    /// unvisited node, breaking ties by lexicographically smaller successor.
    pub fn greedy_order(&self) -> Vec<Perm> {
        let size = self.len();
        let mut visited = vec![false; size];
        let mut order = vec![0usize];
        visited[0] = true;
        let mut cur = 0;
        while order.len() < size {
            let next = (0..size)
                .filter(|&v| !visited[v])
                .min_by_key(|&v| (self.weights[cur * size + v], v))
                .expect("unvisited node remains");
            visited[next] = true;
            order.push(next);
            cur = next;
        }
        order.into_iter().map(|i| self.nodes[i]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub minimal_length: u64,
    /// Every minimal superpermutation starting `1 2 … n`, sorted.
    pub witnesses: Vec<SymbolString>,
    /// Number of minimum-weight Hamiltonian paths found.
    pub optimal_paths: usize,
    pub node_count_explored: u64,
}

struct BranchAndBound<'g> {
    g: &'g OverlapGraph,
    size: usize,
    // pred_masks[v * (n + 1) + w]: nodes u with weight(u, v) == w
    pred_masks: Vec<u32>,
    // successors of each node sorted by (weight, index)
    succ: Vec<Vec<(u8, u8)>>,
    best: u64,
    paths: Vec<Vec<u8>>,
    explored: u64,
    budget: Option<u64>,
}

impl BranchAndBound<'_> {
    fn bound(&self, current: usize, unvisited: u32) -> u64 {
        let n = self.g.n;
        let sources = unvisited | (1 << current);
        let mut total = 0u64;
        let mut rest = unvisited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = sources & !(1 << v);
            let w = (1..=n)
                .find(|&w| self.pred_masks[v * (n + 1) + w] & avail != 0)
                .unwrap_or(n);
            total += w as u64;
        }
        total
    }

    fn dfs(&mut self, current: usize, unvisited: u32, cost: u64, path: &mut Vec<u8>) -> Result<()> {
        self.explored += 1;
        if let Some(b) = self.budget {
            if self.explored > b {
                return Err(Error::BudgetExhausted { budget: b });
            }
        }
        if unvisited == 0 {
            if cost < self.best {
                self.best = cost;
                self.paths.clear();
            }
            if cost == self.best {
                self.paths.push(path.clone());
            }
            return Ok(());
        }
        if cost + self.bound(current, unvisited) > self.best {
            return Ok(());
        }
        for idx in 0..self.succ[current].len() {
            let (w, v) = self.succ[current][idx];
            let v = v as usize;
            if unvisited & (1 << v) == 0 {
                continue;
            }
            let next_cost = cost + u64::from(w);
            if next_cost > self.best {
                // successors are sorted by weight
                break;
            }
            path.push(v as u8);
            self.dfs(v, unvisited & !(1 << v), next_cost, path)?;
            path.pop();
        }
        Ok(())
    }
}

/// All minimal superpermutations on `[n]` that begin with `1 2 … n`, for
/// `2 ≤ n ≤ 4`. `budget` caps the number of search nodes; running out is an
/// error, never a partial answer.
pub fn search_minimal(n: usize, budget: Option<u64>) -> Result<SearchResult> {
    if !(2..=SEARCH_CAP).contains(&n) {
        return Err(Error::SearchLimit { n, max: SEARCH_CAP });
    }
    let g = OverlapGraph::new(n)?;
    let size = g.len();
    let mut pred_masks = vec![0u32; size * (n + 1)];
    let mut succ = vec![Vec::with_capacity(size); size];
    for (u, out) in succ.iter_mut().enumerate() {
        for v in 0..size {
            if let Some(w) = g.weight(u, v) {
                pred_masks[v * (n + 1) + w] |= 1 << u;
                out.push((w as u8, v as u8));
            }
        }
        out.sort_unstable();
    }
    let mut bb = BranchAndBound {
        g: &g,
        size,
        pred_masks,
        succ,
        best: u64::MAX,
        paths: Vec::new(),
        explored: 0,
        budget,
    };
    let all: u32 = if bb.size == 32 { u32::MAX } else { (1u32 << bb.size) - 1 };
    let mut path = vec![0u8];
    bb.dfs(0, all & !1, 0, &mut path)?;

    let mut strings = BTreeSet::new();
    for p in &bb.paths {
        let parts: Vec<SymbolString> = p
            .iter()
            .map(|&i| SymbolString::from_parts_unchecked(n, g.nodes[i as usize].symbols().to_vec()))
            .collect();
        strings.insert(overlap_concat(&parts)?.into_chars());
    }
    let minimal_length = n as u64 + bb.best;
    let mut witnesses = Vec::with_capacity(strings.len());
    for chars in strings {
        let s = SymbolString::from_parts_unchecked(n, chars);
        let report = verify(&s)?;
        if !report.is_superpermutation || s.len() as u64 != minimal_length {
            return Err(Error::invalid(format!("internal error: witness {s} failed verification")));
        }
        witnesses.push(s);
    }
    Ok(SearchResult {
        n,
        minimal_length,
        witnesses,
        optimal_paths: bb.paths.len(),
        node_count_explored: bb.explored,
    })
}

/// Whether `n! + n − 1` equals the minimal length (decided by exact search).
pub fn is_tight_trivial_bound(n: usize) -> Result<bool> {
    Ok(search_minimal(n, None)?.minimal_length == trivial_lower_bound(n))
}

/// Minimal superpermutation length by a subset dynamic program over
/// `(visited set, last node)` with the identity as first node. Independent
/// of the branch and bound; `n ≤ 4` (the `n = 4` table is about 200 MB).
pub fn min_length_dp(n: usize) -> Result<u64> {
    if !(1..=SEARCH_CAP).contains(&n) {
        return Err(Error::AlphabetSize { n, min: 1, max: SEARCH_CAP });
    }
    let g = OverlapGraph::new(n)?;
    let size = g.len();
    if size == 1 {
        return Ok(n as u64);
    }
    // bit i of the mask stands for node i + 1; node 0 is the fixed start
    let others = size - 1;
    let full = (1usize << others) - 1;
    const INF: u8 = u8::MAX;
    let mut best = vec![INF; (full + 1) * others];
    for v in 1..size {
        best[(1 << (v - 1)) * others + (v - 1)] = g.weight(0, v).expect("distinct") as u8;
    }
    for mask in 1..=full {
        for last in 0..others {
            let cur = best[mask * others + last];
            if cur == INF || mask & (1 << last) == 0 {
                continue;
            }
            let mut rest = full & !mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let w = g.weight(last + 1, v + 1).expect("distinct") as u8;
                let slot = &mut best[(mask | (1 << v)) * others + v];
                *slot = (*slot).min(cur.saturating_add(w));
            }
        }
    }
    let w = (0..others).map(|l| best[full * others + l]).min().expect("nonempty");
    Ok(n as u64 + u64::from(w))
}
