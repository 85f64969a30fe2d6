//! Immutable simple-graph representation and the structural queries the
//! solvers need: degrees, induced subgraphs, complements, components,
//! vertex connectivity, universal and max-degree vertices.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest order the exact solvers and connectivity routine accept.
/// Everything in this crate targets small graphs; a single u64 word per
/// adjacency row keeps the subset searches cheap.
pub const MAX_SOLVER_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex label {label} out of range for order {order}")]
    LabelOutOfRange { label: usize, order: usize },
    #[error("self-loop ({u},{u}) is not allowed")]
    SelfLoop { u: usize },
    #[error("deleting all {order} vertices would leave an empty graph")]
    EmptyResult { order: usize },
}

/// A subset of the vertex labels `0..domain` of some graph, stored as a
/// bitset. Iteration is always in ascending label order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    domain: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(domain: usize) -> Self {
        VertexSet {
            domain,
            words: vec![0; domain.div_ceil(64)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::new(domain);
        for v in 0..domain {
            s.insert(v);
        }
        s
    }

    pub fn from_members(domain: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(domain);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the label range this set draws from (not the member count).
    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.domain, "label {v} out of domain {}", self.domain);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.domain, "label {v} out of domain {}", self.domain);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.domain && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.domain, other.domain);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Members in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The low word of the bitset; only meaningful when `domain <= 64`.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An immutable finite simple undirected graph on labels `0..n`.
///
/// All operations that "modify" a graph return a new one; values are safe
/// to share across threads. A graph produced by [`Graph::delete_vertices`]
/// remembers, per surviving vertex, its label in the earliest ancestor so
/// that witnesses can be reported in the caller's labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    origin: Option<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are deduplicated.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::LabelOutOfRange { label: u, order: n });
            }
            if v >= n {
                return Err(GraphError::LabelOutOfRange { label: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            origin: None,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Per-vertex map to labels in the earliest ancestor graph, when this
    /// graph was produced by deletions. `None` means the identity map.
    pub fn origin_labels(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    /// Translates a set of this graph's labels into the earliest ancestor's
    /// labels (identity for freshly built graphs).
    pub fn to_origin(&self, set: &VertexSet) -> Vec<usize> {
        match &self.origin {
            None => set.to_vec(),
            Some(map) => set.iter().map(|v| map[v]).collect(),
        }
    }

    /// Induced subgraph on `V \ removed`. Survivors are relabeled to
    /// `0..n-|removed|` in ascending old-label order; the origin map is
    /// composed through chained deletions.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<Graph, GraphError> {
        assert_eq!(removed.domain(), self.n, "removal set domain mismatch");
        let kept: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        if kept.is_empty() {
            return Err(GraphError::EmptyResult { order: self.n });
        }
        let m = kept.len();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let mut adj = vec![VertexSet::new(m); m];
        for (i, &v) in kept.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_label[w] != usize::MAX {
                    adj[i].insert(new_label[w]);
                }
            }
        }
        let origin = Some(match &self.origin {
            None => kept.clone(),
            Some(map) => kept.iter().map(|&v| map[v]).collect(),
        });
        Ok(Graph { n: m, adj, origin })
    }

    /// Convenience for deleting a single vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.delete_vertices(&VertexSet::from_members(self.n, [v]))
    }

    /// Same vertex set; uv is an edge iff u != v and uv is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![VertexSet::new(self.n); self.n];
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..self.n {
                if u != v && !self.adj[u].contains(v) {
                    row.insert(v);
                }
            }
        }
        Graph {
            n: self.n,
            adj,
            origin: self.origin.clone(),
        }
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            comp.insert(start);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex connectivity κ: the minimum number of vertices whose removal
    /// disconnects the graph or reduces it to a single vertex; `n - 1` for
    /// complete graphs by convention. Computed as the minimum over
    /// non-adjacent pairs of the maximum number of internally
    /// vertex-disjoint paths (Menger, via unit-capacity max flow on the
    /// split graph).
    pub fn vertex_connectivity(&self) -> usize {
        assert!(self.n <= MAX_SOLVER_ORDER, "order above solver limit");
        if self.is_complete() {
            return self.n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = self.n - 1;
        for s in 0..self.n {
            for t in s + 1..self.n {
                if !self.adj[s].contains(t) {
                    best = best.min(self.max_disjoint_paths(s, t));
                }
            }
        }
        best
    }

    /// Maximum number of internally vertex-disjoint s-t paths, s and t
    /// non-adjacent. Every vertex except s and t is split into an in/out
    /// pair joined by a unit-capacity arc.
    fn max_disjoint_paths(&self, s: usize, t: usize) -> usize {
        let size = 2 * self.n;
        let idx_in = |v: usize| 2 * v;
        let idx_out = |v: usize| 2 * v + 1;
        let big = self.n as i32;
        let mut cap = vec![vec![0i32; size]; size];
        for v in 0..self.n {
            cap[idx_in(v)][idx_out(v)] = if v == s || v == t { big } else { 1 };
        }
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                cap[idx_out(u)][idx_in(v)] = big;
            }
        }
        let source = idx_out(s);
        let sink = idx_in(t);
        let mut flow = 0usize;
        loop {
            // BFS for an augmenting path in the residual graph.
            let mut parent = vec![usize::MAX; size];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                for y in 0..size {
                    if parent[y] == usize::MAX && cap[x][y] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// All vertices of degree n-1.
    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.degree(v) == self.n - 1))
    }

    /// All vertices attaining the maximum degree.
    pub fn max_degree_vertices(&self) -> VertexSet {
        let d = self.max_degree();
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.degree(v) == d))
    }

    /// Edge-set equality ignoring origin maps.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
