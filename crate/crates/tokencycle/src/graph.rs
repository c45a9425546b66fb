//! Small simple graphs on 1-based vertex labels, plus the standard family
//! constructors (paths, cycles, fans, wheels, complete and complete
//! bipartite graphs) and structural predicates used elsewhere in the crate.
//!
//! Graphs here are undirected, loop-free, and immutable after construction.
//! The scale of interest is small (n up to a few dozen), so storage favors
//! clarity: a sorted edge set plus per-vertex sorted neighbor lists.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

/// 1-based vertex label.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{family} graph needs at least {min} vertices, got {n}")]
    TooSmall {
        family: &'static str,
        min: VertexId,
        n: VertexId,
    },
    #[error("graph needs at least one vertex")]
    Empty,
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: VertexId, n: VertexId },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: VertexId },
    #[error("relabeling must be a permutation of 1..={n}")]
    NotAPermutation { n: VertexId },
    #[error("edge list line {line}: {msg}")]
    ParseEdgeList { line: usize, msg: String },
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: VertexId,
    edges: BTreeSet<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Endpoint order within a pair
    /// does not matter and duplicate pairs collapse to one edge.
    pub fn from_edges(
        n: VertexId,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n as usize];
        for &(u, v) in &set {
            adj[(u - 1) as usize].push(v);
            adj[(v - 1) as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges: set, adj })
    }

    /// Path graph `P_n`: vertices `1..=n` in a line.
    pub fn path(n: VertexId) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooSmall {
                family: "path",
                min: 1,
                n,
            });
        }
        Self::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Cycle graph `C_n`.
    pub fn cycle(n: VertexId) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall {
                family: "cycle",
                min: 3,
                n,
            });
        }
        Self::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: VertexId) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooSmall {
                family: "complete",
                min: 1,
                n,
            });
        }
        Self::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    /// Complete bipartite graph `K_{m,m'}` with parts `1..=m` and `m+1..=m+m'`.
    pub fn complete_bipartite(m: VertexId, m2: VertexId) -> Result<Self, GraphError> {
        if m < 1 || m2 < 1 {
            return Err(GraphError::TooSmall {
                family: "complete bipartite",
                min: 1,
                n: m.min(m2),
            });
        }
        Self::from_edges(
            m + m2,
            (1..=m).flat_map(|u| (m + 1..=m + m2).map(move |v| (u, v))),
        )
    }

    /// Fan graph `F_n`: the join of a path on `1..=n-1` with the single
    /// hub vertex, which ends up labeled `n`.
    pub fn fan(n: VertexId) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall {
                family: "fan",
                min: 2,
                n,
            });
        }
        Ok(Self::path(n - 1)?.join(&Self::complete(1)?))
    }

    /// Wheel graph `W_n`: the join of a cycle on `1..=n-1` with the hub `n`.
    /// Equals the fan `F_n` plus the rim edge `{1, n-1}`.
    pub fn wheel(n: VertexId) -> Result<Self, GraphError> {
        if n < 4 {
            return Err(GraphError::TooSmall {
                family: "wheel",
                min: 4,
                n,
            });
        }
        Ok(Self::cycle(n - 1)?.join(&Self::complete(1)?))
    }

    /// Join of two graphs: disjoint union plus every cross edge. Vertices of
    /// `other` are relabeled to follow this graph's contiguously, so the
    /// result lives on `1..=(n1+n2)`.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let n = self.n + other.n;
        let mut edges: Vec<(VertexId, VertexId)> = self.edges.iter().copied().collect();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.extend((1..=shift).flat_map(|u| (1..=other.n).map(move |v| (u, v + shift))));
        Graph::from_edges(n, edges).expect("join of valid graphs is valid")
    }

    /// Number of vertices.
    pub fn order(&self) -> VertexId {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge membership. Symmetric in `u`, `v`; false on `u == v`.
    ///
    /// # Panics
    /// If either label is outside `1..=n`.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        assert!(
            u >= 1 && u <= self.n && v >= 1 && v <= self.n,
            "vertex label out of range 1..={}",
            self.n
        );
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    /// If `v` is outside `1..=n`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        assert!(
            v >= 1 && v <= self.n,
            "vertex label out of range 1..={}",
            self.n
        );
        &self.adj[(v - 1) as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Edges in sorted order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    /// True when both graphs share the vertex set `1..=n` and every edge of
    /// `self` is an edge of `host`.
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n && self.edges.is_subset(&host.edges)
    }

    /// Applies the permutation `sigma` (given as `sigma[i-1]` = image of
    /// vertex `i`) to every edge. Preserves the edge count and the degree
    /// multiset.
    pub fn relabel(&self, sigma: &[VertexId]) -> Result<Graph, GraphError> {
        if sigma.len() != self.n as usize {
            return Err(GraphError::NotAPermutation { n: self.n });
        }
        let mut sorted: Vec<VertexId> = sigma.to_vec();
        sorted.sort_unstable();
        if sorted.iter().zip(1..=self.n).any(|(&s, i)| s != i) {
            return Err(GraphError::NotAPermutation { n: self.n });
        }
        let map = |v: VertexId| sigma[(v - 1) as usize];
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (map(u), map(v))))
    }

    /// Renders the graph in the plain edge-list format: a header line
    /// `n m` followed by one `u v` line per edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format produced by [`Graph::to_edge_list`].
    /// Strict: the header must match the body, labels must satisfy
    /// `1 <= u < v <= n`, and duplicate edges are rejected.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let parse_err = |line: usize, msg: &str| GraphError::ParseEdgeList {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
        let mut parts = header.split_whitespace();
        let n: VertexId = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(1, "header must be 'n m'"))?;
        let m: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(1, "header must be 'n m'"))?;
        if parts.next().is_some() {
            return Err(parse_err(1, "header must be exactly 'n m'"));
        }
        if n == 0 {
            return Err(parse_err(1, "graph needs at least one vertex"));
        }
        let mut edges = BTreeSet::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let u: VertexId = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "edge line must be 'u v'"))?;
            let v: VertexId = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "edge line must be 'u v'"))?;
            if parts.next().is_some() {
                return Err(parse_err(lineno, "edge line must be exactly 'u v'"));
            }
            if u >= v {
                return Err(parse_err(lineno, "edge endpoints must satisfy u < v"));
            }
            if v > n {
                return Err(parse_err(lineno, "edge endpoint out of range"));
            }
            if !edges.insert((u, v)) {
                return Err(parse_err(lineno, "duplicate edge"));
            }
        }
        if edges.len() != m {
            return Err(GraphError::ParseEdgeList {
                line: 1,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }
}
