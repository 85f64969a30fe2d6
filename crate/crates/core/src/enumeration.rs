//! Streams every labeled simple graph of a given small order, and a
//! permutation-based canonical key for isomorphism-aware deduplication of
//! counterexample lists.
//!
//! Graphs of order n are in bijection with codes `0..2^C(n,2)` through a
//! fixed pair ordering: bit i of the code is the i-th pair in the
//! lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...

use thiserror::Error;

use crate::graph::Graph;

/// Hard cap for full labeled sweeps (2^21 graphs at order 7).
pub const ENUMERATION_MAX_ORDER: usize = 7;
/// Hard cap for the n!-permutation canonical key.
pub const DEDUP_MAX_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {order} outside the supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Number of labeled graphs of order n.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// The fixed pair ordering behind the codes.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(pair_count(n));
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Decodes an edge-subset code into a graph.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    debug_assert!(pair_count(n) <= 63 && code < labeled_graph_count(n));
    let mut edges = Vec::new();
    for (i, (u, v)) in pair_order(n).into_iter().enumerate() {
        if code >> i & 1 == 1 {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("codes only produce valid graphs")
}

/// The code of a graph under the fixed pair ordering.
pub fn graph_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(pair_count(n) <= 63, "order too large to encode");
    let mut code = 0u64;
    for (i, (u, v)) in pair_order(n).into_iter().enumerate() {
        if g.has_edge(u, v) {
            code |= 1 << i;
        }
    }
    code
}

/// Iterator over every labeled graph of order n in ascending code order.
/// Code 0 is the empty graph and the all-ones code is K_n.
pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Restricts the stream to a contiguous code range (for partitioning
    /// a sweep across workers).
    pub fn with_range(n: usize, start: u64, end: u64) -> GraphStream {
        assert!(end <= labeled_graph_count(n) && start <= end);
        GraphStream { n, next: start, end }
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_code(self.n, self.next);
        self.next += 1;
        Some(g)
    }
}

pub fn all_labeled_graphs(n: usize) -> Result<GraphStream, EnumError> {
    if !(1..=ENUMERATION_MAX_ORDER).contains(&n) {
        return Err(EnumError::OrderOutOfRange {
            order: n,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    Ok(GraphStream::with_range(n, 0, labeled_graph_count(n)))
}

/// Canonical key equal for isomorphic graphs: the order combined with
/// the minimum code over all vertex permutations. Graphs of different
/// orders are never isomorphic, so the order lives in the high bits.
pub fn dedup_key(g: &Graph) -> Result<u64, EnumError> {
    let n = g.order();
    if n > DEDUP_MAX_ORDER {
        return Err(EnumError::OrderOutOfRange {
            order: n,
            max: DEDUP_MAX_ORDER,
        });
    }
    let pairs = pair_order(n);
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    // Position of pair (u, v), u < v, in the fixed ordering.
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for &(u, v) in &edges {
            code |= 1 << pair_index[p[u]][p[v]];
        }
        if code < best {
            best = code;
        }
    });
    Ok((n as u64) << 56 | best)
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
