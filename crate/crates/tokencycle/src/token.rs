//! Token graphs: the k-th token graph of a base graph G has one vertex per
//! k-subset of V(G), with two subsets adjacent exactly when they differ in a
//! single element moved along an edge of G. Equivalently, configurations of
//! k unlabeled tokens, one move at a time.
//!
//! The module offers both a lazy adjacency oracle (used by the independent
//! cycle validator) and a fully materialized [`TokenGraph`] with vertices in
//! lexicographic order and O(k) index lookup through combinatorial ranking.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Token graphs are only materialized up to this many vertices unless a
/// caller passes its own limit.
pub const DEFAULT_MATERIALIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TokenError {
    #[error("k must be between {min} and {max}, got {k}")]
    InvalidK {
        k: VertexId,
        min: VertexId,
        max: VertexId,
    },
    #[error("element {v} out of range 1..={n}")]
    ElementOutOfRange { v: VertexId, n: VertexId },
    #[error("vertex labels are 1-based, found 0")]
    ZeroLabel,
    #[error("duplicate element {v}")]
    DuplicateElement { v: VertexId },
    #[error("token vertices differ in size ({a} vs {b})")]
    SizeMismatch { a: usize, b: usize },
    #[error("token graph would have {vertices} vertices, over the limit of {limit}")]
    TooManyVertices { vertices: u64, limit: u64 },
}

/// A set of vertex labels in canonical form: strictly increasing.
///
/// Ordering is lexicographic on the element sequence, which for canonical
/// subsets of equal size is the usual lexicographic order on subsets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct TokenVertex {
    elems: Vec<VertexId>,
}

impl TokenVertex {
    /// Canonicalizes `elems` by sorting. Rejects zero labels and duplicates.
    pub fn new(mut elems: Vec<VertexId>) -> Result<Self, TokenError> {
        elems.sort_unstable();
        if elems.first() == Some(&0) {
            return Err(TokenError::ZeroLabel);
        }
        for pair in elems.windows(2) {
            if pair[0] == pair[1] {
                return Err(TokenError::DuplicateElement { v: pair[0] });
            }
        }
        Ok(Self { elems })
    }

    /// Wraps a slice already known to be strictly increasing and 1-based.
    pub(crate) fn from_sorted(elems: Vec<VertexId>) -> Self {
        debug_assert!(elems.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(elems.first() != Some(&0));
        Self { elems }
    }

    pub fn singleton(v: VertexId) -> Self {
        assert!(v >= 1, "vertex labels are 1-based");
        Self { elems: vec![v] }
    }

    pub fn elems(&self) -> &[VertexId] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    /// Checks every element lies in `1..=n`.
    pub fn check_in_range(&self, n: VertexId) -> Result<(), TokenError> {
        match self.elems.last() {
            Some(&max) if max > n => Err(TokenError::ElementOutOfRange { v: max, n }),
            _ => Ok(()),
        }
    }

    /// Elements in exactly one of the two sets, by a linear merge.
    pub fn symmetric_difference(&self, other: &TokenVertex) -> Vec<VertexId> {
        let (a, b) = (&self.elems, &other.elems);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        out
    }
}

impl fmt::Display for TokenVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.elems.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl TryFrom<Vec<VertexId>> for TokenVertex {
    type Error = TokenError;

    fn try_from(elems: Vec<VertexId>) -> Result<Self, TokenError> {
        TokenVertex::new(elems)
    }
}

impl From<TokenVertex> for Vec<VertexId> {
    fn from(tv: TokenVertex) -> Self {
        tv.elems
    }
}

/// Binomial coefficient `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: VertexId, k: VertexId) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All k-subsets of `1..=n` in lexicographic order.
pub fn enumerate_k_subsets(n: VertexId, k: VertexId) -> Result<Vec<TokenVertex>, TokenError> {
    if k < 1 || k > n {
        return Err(TokenError::InvalidK { k, min: 1, max: n });
    }
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    let mut cur: Vec<VertexId> = (1..=k).collect();
    loop {
        out.push(TokenVertex::from_sorted(cur.clone()));
        // advance to the next combination: bump the rightmost element that
        // still has room, then reset everything after it
        let k = k as usize;
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) as VertexId {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Lexicographic rank of a canonical k-subset of `1..=n`, as a 0-based index
/// into [`enumerate_k_subsets`].
pub fn subset_rank(n: VertexId, tv: &TokenVertex) -> u64 {
    let k = tv.len() as VertexId;
    let mut rank: u64 = 0;
    let mut prev = 0;
    for (i, &a) in tv.elems().iter().enumerate() {
        for j in prev + 1..a {
            rank += binomial(n - j, k - i as VertexId - 1);
        }
        prev = a;
    }
    rank
}

/// Token adjacency: `a` and `b` are adjacent in the k-th token graph of `g`
/// exactly when their symmetric difference is a single edge of `g`.
pub fn token_adjacent(g: &Graph, a: &TokenVertex, b: &TokenVertex) -> Result<bool, TokenError> {
    if a.len() != b.len() {
        return Err(TokenError::SizeMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    a.check_in_range(g.order())?;
    b.check_in_range(g.order())?;
    let diff = a.symmetric_difference(b);
    Ok(diff.len() == 2 && g.has_edge(diff[0], diff[1]))
}

/// Adjacency oracle over the token graphs of `g`, for callers that want a
/// plain predicate. Pairs violating the k-subset contract (mismatched sizes,
/// out-of-range labels) are reported non-adjacent rather than raised.
pub fn adjacency_oracle(g: &Graph) -> impl Fn(&TokenVertex, &TokenVertex) -> bool + '_ {
    move |a, b| token_adjacent(g, a, b).unwrap_or(false)
}

/// Complement of `a` inside `1..=n`; maps k-subsets to (n-k)-subsets.
pub fn complement_vertex(n: VertexId, a: &TokenVertex) -> Result<TokenVertex, TokenError> {
    a.check_in_range(n)?;
    let mut out = Vec::with_capacity(n as usize - a.len());
    let mut iter = a.elems().iter().peekable();
    for v in 1..=n {
        if iter.peek() == Some(&&v) {
            iter.next();
        } else {
            out.push(v);
        }
    }
    Ok(TokenVertex::from_sorted(out))
}

/// Number of edges of the k-th token graph of `g`, counted directly from
/// the swap rule without materializing the edge list.
pub fn token_edge_count(g: &Graph, k: VertexId) -> Result<u64, TokenError> {
    let subsets = checked_vertex_enumeration(g, k, DEFAULT_MATERIALIZE_LIMIT)?;
    let mut twice: u64 = 0;
    for a in &subsets {
        for &u in a.elems() {
            for &v in g.neighbors(u) {
                if !a.contains(v) {
                    twice += 1;
                }
            }
        }
    }
    // each edge was seen once from either endpoint
    Ok(twice / 2)
}

fn checked_vertex_enumeration(
    g: &Graph,
    k: VertexId,
    limit: u64,
) -> Result<Vec<TokenVertex>, TokenError> {
    let n = g.order();
    if k < 1 || k + 1 > n {
        return Err(TokenError::InvalidK {
            k,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let count = binomial(n, k);
    if count > limit {
        return Err(TokenError::TooManyVertices {
            vertices: count,
            limit,
        });
    }
    enumerate_k_subsets(n, k)
}

/// Materialized k-th token graph: lexicographically sorted vertex list,
/// sorted edge list over vertex indices, and per-vertex adjacency.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    base: Graph,
    k: VertexId,
    vertices: Vec<TokenVertex>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl TokenGraph {
    /// Builds the k-th token graph of `g`, refusing to materialize more than
    /// [`DEFAULT_MATERIALIZE_LIMIT`] vertices.
    pub fn build(g: &Graph, k: VertexId) -> Result<Self, TokenError> {
        Self::build_with_limit(g, k, DEFAULT_MATERIALIZE_LIMIT)
    }

    pub fn build_with_limit(g: &Graph, k: VertexId, limit: u64) -> Result<Self, TokenError> {
        let n = g.order();
        let vertices = checked_vertex_enumeration(g, k, limit)?;
        let mut edges = Vec::new();
        for (ai, a) in vertices.iter().enumerate() {
            // neighbors of a: move one element along an edge of the base
            for &u in a.elems() {
                for &v in g.neighbors(u) {
                    if !a.contains(v) {
                        let mut elems: Vec<VertexId> =
                            a.elems().iter().copied().filter(|&w| w != u).collect();
                        let pos = elems.partition_point(|&w| w < v);
                        elems.insert(pos, v);
                        let bi = subset_rank(n, &TokenVertex::from_sorted(elems)) as usize;
                        if ai < bi {
                            edges.push((ai, bi));
                        }
                    }
                }
            }
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            base: g.clone(),
            k,
            vertices,
            edges,
            adj,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> VertexId {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[TokenVertex] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors_of(&self, idx: usize) -> &[usize] {
        &self.adj[idx]
    }

    /// Index of a vertex in the lexicographic order, via ranking.
    pub fn index_of(&self, tv: &TokenVertex) -> Option<usize> {
        if tv.len() != self.k as usize || tv.check_in_range(self.base.order()).is_err() {
            return None;
        }
        Some(subset_rank(self.base.order(), tv) as usize)
    }

    /// GraphViz rendering with subsets as quoted `{a,b,...}` node names.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for tv in &self.vertices {
            let _ = writeln!(out, "  \"{tv}\";");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.vertices[a], self.vertices[b]);
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: 1-based labels inside subsets, 0-based vertex indices
    /// in the edge list.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            n: VertexId,
            k: VertexId,
            vertices: &'a [TokenVertex],
            edges: &'a [(usize, usize)],
        }
        serde_json::to_string(&View {
            n: self.base.order(),
            k: self.k,
            vertices: &self.vertices,
            edges: &self.edges,
        })
        .expect("token graph serializes")
    }
}
