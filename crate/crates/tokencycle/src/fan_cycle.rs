//! Explicit Hamiltonian cycles in the k-th token graph of the fan `F_n`
//! (spine `1..=n-1`, hub `n`), built by induction on k.
//!
//! The construction partitions the k-subsets of `1..=n` by their minimum
//! element. For each minimum `i <= n-k-1` the subsets form a copy of a
//! smaller fan token graph: drop `i`, and what remains is a (k-1)-subset of
//! `{i+1..n}`, which relabels down to a fan on `n-i` vertices. Each copy
//! contributes a Hamiltonian path (a recursively built cycle, cut open at a
//! reserved "anchor" edge), and the paths are stitched end to end:
//!
//! ```text
//!   X1 ... Y1  Y2 ... X2  X3 ... Y3  ...   (alternating orientation)
//! ```
//!
//! where `X_i = {i} + {n-k+1..n-1}` and `Y_i = {i} + {n-k+1..n-2} + {n}` are
//! the ends of block `i`; consecutive blocks meet across the spine edge
//! `{i, i+1}`. The few subsets whose minimum exceeds `n-k-1` are appended
//! explicitly: the anchor pair of the final block, the near-full window
//! subsets `D_i = {n-k..n} - {i}` in descending `i`, and the top window
//! `Z = {n-k+1..n}`, which closes back to `X_1` through the hub.
//!
//! Every returned cycle reserves its own anchor edge, the hub swap between
//! `{n-k..n-1}` and `{n-k..n-2} + {n}`, so the construction can recurse.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::VertexId;
use crate::token::{binomial, TokenVertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("fan token cycles need n >= 3 and 1 <= k <= n-1, got n={n}, k={k}")]
    InvalidParams { n: VertexId, k: VertexId },
    #[error("the k=1 base cycle needs n >= 3, got {n}")]
    BaseK1TooSmall { n: VertexId },
    #[error("the k=2 base cycle needs n >= 4, got {n}")]
    BaseK2TooSmall { n: VertexId },
    #[error("anchor pair is not cyclically consecutive in the cycle")]
    AnchorNotConsecutive,
    #[error("vertex {vertex} contains a label at or below the minimum {min}")]
    LabelNotAboveMinimum { vertex: TokenVertex, min: VertexId },
    #[error("cycle text line {line}: {msg}")]
    ParseText { line: usize, msg: String },
    #[error("cycle JSON: {msg}")]
    ParseJson { msg: String },
}

/// A closed vertex sequence in the k-th token graph of `F_n`. The closing
/// edge from the last entry back to the first is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenCycle {
    n: VertexId,
    k: VertexId,
    verts: Vec<TokenVertex>,
}

impl TokenCycle {
    pub fn new(n: VertexId, k: VertexId, verts: Vec<TokenVertex>) -> Self {
        Self { n, k, verts }
    }

    pub fn n(&self) -> VertexId {
        self.n
    }

    pub fn k(&self) -> VertexId {
        self.k
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn verts(&self) -> &[TokenVertex] {
        &self.verts
    }

    /// One subset per line as comma-separated labels, with the first vertex
    /// repeated at the end to close the cycle.
    pub fn to_text(&self) -> String {
        cycle_text(&self.verts)
    }
}

/// The reserved cycle edge used when a cycle is cut open for stitching into
/// a larger construction: `x = {n-k..n-1}` and `y = {n-k..n-2} + {n}`, a
/// swap across the hub edge `{n-1, n}`. The `(x, y)` orientation is fixed
/// regardless of how a particular cycle traverses the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorPair {
    pub x: TokenVertex,
    pub y: TokenVertex,
}

/// Start vertex of stitched block `i`: `{i} + {n-k+1..n-1}`.
///
/// # Panics
/// If `k < 2`, `k > n-1`, or `i` is outside `1..=n-k`.
pub fn x_vertex(n: VertexId, k: VertexId, i: VertexId) -> TokenVertex {
    assert!(k >= 2 && k < n, "x vertex needs 2 <= k <= n-1");
    assert!(i >= 1 && i <= n - k, "x vertex index outside 1..=n-k");
    let mut elems = vec![i];
    elems.extend(n - k + 1..=n - 1);
    TokenVertex::from_sorted(elems)
}

/// End vertex of stitched block `i`: `{i} + {n-k+1..n-2} + {n}`.
///
/// # Panics
/// If `k < 2`, `k > n-1`, or `i` is outside `1..=n-k`.
pub fn y_vertex(n: VertexId, k: VertexId, i: VertexId) -> TokenVertex {
    assert!(k >= 2 && k < n, "y vertex needs 2 <= k <= n-1");
    assert!(i >= 1 && i <= n - k, "y vertex index outside 1..=n-k");
    let mut elems = vec![i];
    elems.extend(n - k + 1..=n - 2);
    elems.push(n);
    TokenVertex::from_sorted(elems)
}

/// Near-full window subset: `{n-k..n}` minus `i`.
///
/// # Panics
/// If `k` is outside `1..=n-1` or `i` is outside `n-k+1..=n`.
pub fn d_vertex(n: VertexId, k: VertexId, i: VertexId) -> TokenVertex {
    assert!(k >= 1 && k < n, "d vertex needs 1 <= k <= n-1");
    assert!(i > n - k && i <= n, "d vertex index outside n-k+1..=n");
    TokenVertex::from_sorted((n - k..=n).filter(|&v| v != i).collect())
}

/// Top window subset `{n-k+1..n}`, the unique k-subset with minimum `n-k+1`.
///
/// # Panics
/// If `k` is outside `2..=n-1`.
pub fn z_vertex(n: VertexId, k: VertexId) -> TokenVertex {
    assert!(k >= 2 && k < n, "z vertex needs 2 <= k <= n-1");
    TokenVertex::from_sorted((n - k + 1..=n).collect())
}

/// The anchor reserved by [`fan_ham_cycle`] for the given parameters.
pub fn anchor_pair(n: VertexId, k: VertexId) -> AnchorPair {
    debug_assert!(n >= 3 && k >= 1 && k < n);
    AnchorPair {
        x: TokenVertex::from_sorted((n - k..=n - 1).collect()),
        y: TokenVertex::from_sorted((n - k..=n - 2).chain([n]).collect()),
    }
}

/// Hamiltonian cycle of the 1-token graph `{1}, {2}, ..., {n}`, walking the
/// spine and returning through the hub.
pub fn base_cycle_k1(n: VertexId) -> Result<TokenCycle, CycleError> {
    if n < 3 {
        return Err(CycleError::BaseK1TooSmall { n });
    }
    Ok(TokenCycle::new(
        n,
        1,
        (1..=n).map(TokenVertex::singleton).collect(),
    ))
}

/// Hamiltonian cycle of the 2-token graph for `n >= 4`, row by row over the
/// smaller element: `{1,n-1}, {1,n}, {1,n-2}, ..., {1,2}`, then for each
/// `i` from 2 to `n-2` the row `{i,n}, {i,n-1}, ..., {i,i+1}`, and finally
/// `{n-1,n}`, which closes back to `{1,n-1}` through the hub.
pub fn base_cycle_k2(n: VertexId) -> Result<TokenCycle, CycleError> {
    if n < 4 {
        return Err(CycleError::BaseK2TooSmall { n });
    }
    let mut verts = Vec::with_capacity(binomial(n, 2) as usize);
    verts.push(TokenVertex::from_sorted(vec![1, n - 1]));
    verts.push(TokenVertex::from_sorted(vec![1, n]));
    for j in (2..=n - 2).rev() {
        verts.push(TokenVertex::from_sorted(vec![1, j]));
    }
    for i in 2..=n - 2 {
        verts.push(TokenVertex::from_sorted(vec![i, n]));
        for j in (i + 1..=n - 1).rev() {
            verts.push(TokenVertex::from_sorted(vec![i, j]));
        }
    }
    verts.push(TokenVertex::from_sorted(vec![n - 1, n]));
    Ok(TokenCycle::new(n, 2, verts))
}

/// Hamiltonian cycle of the k-th token graph of `F_n`, together with the
/// anchor edge the cycle reserves for further stitching. Deterministic; the
/// cycle starts at the first vertex the construction lays down and is not
/// rotated or reflected afterwards.
pub fn fan_ham_cycle(
    n: VertexId,
    k: VertexId,
) -> Result<(TokenCycle, AnchorPair), CycleError> {
    if n < 3 || k < 1 || k > n - 1 {
        return Err(CycleError::InvalidParams { n, k });
    }
    let cycle = match k {
        1 => base_cycle_k1(n)?,
        2 if n == 3 => TokenCycle::new(
            3,
            2,
            vec![
                TokenVertex::from_sorted(vec![1, 3]),
                TokenVertex::from_sorted(vec![1, 2]),
                TokenVertex::from_sorted(vec![2, 3]),
            ],
        ),
        2 => base_cycle_k2(n)?,
        _ => stitched_cycle(n, k)?,
    };
    debug_assert_eq!(cycle.len() as u64, binomial(n, k));
    Ok((cycle, anchor_pair(n, k)))
}

/// The inductive case, `k >= 3`. Recursion is on k, so it bottoms out in
/// the explicit k=2 cycles; each level shrinks n-k by at least one, keeping
/// every recursive call inside its own preconditions.
fn stitched_cycle(n: VertexId, k: VertexId) -> Result<TokenCycle, CycleError> {
    let span = n - k; // number of stitched blocks, >= 1
    let mut verts = Vec::with_capacity(binomial(n, k) as usize);
    for i in 1..span {
        let (sub, sub_anchor) = fan_ham_cycle(n - i, k - 1)?;
        // lift the recursive cycle onto the labels {i+1..n}, then adjoin the
        // minimum element i
        let block = embed_with_min(&shift_labels(sub.verts(), i), i)?;
        let anchor_i = AnchorPair {
            x: x_vertex(n, k, i),
            y: y_vertex(n, k, i),
        };
        debug_assert_eq!(
            embed_with_min(&shift_labels(&[sub_anchor.x, sub_anchor.y], i), i).unwrap(),
            vec![anchor_i.x.clone(), anchor_i.y.clone()],
            "recursive anchor lands on the block anchor"
        );
        // odd blocks run X -> Y, even blocks Y -> X, so neighbors meet
        // across the spine edge {i, i+1}
        let path = split_at_anchor(
            &TokenCycle::new(n, k, block),
            &anchor_i,
            i % 2 == 1,
        )?;
        verts.extend(path);
    }
    // the last block contributes exactly its anchor pair, oriented to
    // continue the alternation
    let bx = x_vertex(n, k, span);
    let by = y_vertex(n, k, span);
    if span.is_multiple_of(2) {
        verts.push(by);
        verts.push(bx);
    } else {
        verts.push(bx);
        verts.push(by);
    }
    // descend through the near-full window subsets, then the top window,
    // which closes to X_1 through the hub
    for i in (n - k + 1..=n - 2).rev() {
        verts.push(d_vertex(n, k, i));
    }
    verts.push(z_vertex(n, k));
    Ok(TokenCycle::new(n, k, verts))
}

/// Adds `offset` to every label; order-preserving, so canonical subsets stay
/// canonical.
pub fn shift_labels(verts: &[TokenVertex], offset: VertexId) -> Vec<TokenVertex> {
    verts
        .iter()
        .map(|tv| TokenVertex::from_sorted(tv.elems().iter().map(|&v| v + offset).collect()))
        .collect()
}

/// Adjoins `i` as the new minimum of every subset. This carries adjacency
/// both ways: two subsets over `{i+1..n}` swap along an edge exactly when
/// their extensions do.
pub fn embed_with_min(
    verts: &[TokenVertex],
    i: VertexId,
) -> Result<Vec<TokenVertex>, CycleError> {
    verts
        .iter()
        .map(|tv| {
            if let Some(&first) = tv.elems().first() {
                if first <= i {
                    return Err(CycleError::LabelNotAboveMinimum {
                        vertex: tv.clone(),
                        min: i,
                    });
                }
            }
            let mut elems = Vec::with_capacity(tv.len() + 1);
            elems.push(i);
            elems.extend_from_slice(tv.elems());
            Ok(TokenVertex::from_sorted(elems))
        })
        .collect()
}

/// Cuts a cycle open at its anchor edge, returning the Hamiltonian path
/// that uses every other cycle edge. The path runs from `x` to `y` when
/// `start_at_x` is set, `y` to `x` otherwise. Fails when the anchor pair is
/// not cyclically consecutive.
pub fn split_at_anchor(
    cycle: &TokenCycle,
    anchor: &AnchorPair,
    start_at_x: bool,
) -> Result<Vec<TokenVertex>, CycleError> {
    let verts = cycle.verts();
    let len = verts.len();
    if len < 2 {
        return Err(CycleError::AnchorNotConsecutive);
    }
    let px = verts
        .iter()
        .position(|v| *v == anchor.x)
        .ok_or(CycleError::AnchorNotConsecutive)?;
    let mut rotated: Vec<TokenVertex> = Vec::with_capacity(len);
    rotated.extend_from_slice(&verts[px..]);
    rotated.extend_from_slice(&verts[..px]);
    let mut path = if rotated[len - 1] == anchor.y {
        // cycle reads ... y x ...: walking forward from x drops the anchor
        rotated
    } else if rotated[1] == anchor.y {
        // cycle reads ... x y ...: walk backward from x instead
        let mut p = Vec::with_capacity(len);
        p.push(rotated[0].clone());
        p.extend(rotated[1..].iter().rev().cloned());
        p
    } else {
        return Err(CycleError::AnchorNotConsecutive);
    };
    if !start_at_x {
        path.reverse();
    }
    Ok(path)
}

/// One subset per line as comma-separated labels, first vertex repeated at
/// the end to close the cycle.
pub fn cycle_text(verts: &[TokenVertex]) -> String {
    let line = |tv: &TokenVertex| {
        tv.elems()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = String::new();
    for tv in verts {
        out.push_str(&line(tv));
        out.push('\n');
    }
    if let Some(first) = verts.first() {
        out.push_str(&line(first));
        out.push('\n');
    }
    out
}

/// Parses the text format. A final line equal to the first is treated as
/// the closing marker and dropped; anything else is kept as a vertex and
/// left for the validator to judge.
pub fn parse_cycle_text(text: &str) -> Result<Vec<TokenVertex>, CycleError> {
    let mut verts = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let elems: Result<Vec<VertexId>, _> =
            line.split(',').map(|t| t.trim().parse::<VertexId>()).collect();
        let elems = elems.map_err(|e| CycleError::ParseText {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        let tv = TokenVertex::new(elems).map_err(|e| CycleError::ParseText {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        verts.push(tv);
    }
    if verts.is_empty() {
        return Err(CycleError::ParseText {
            line: 1,
            msg: "no vertices".to_string(),
        });
    }
    if verts.len() > 1 && verts.first() == verts.last() {
        verts.pop();
    }
    Ok(verts)
}

/// On-disk JSON form of a cycle: family name, parameters, vertex list (not
/// closed), and optionally the anchor pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDocument {
    pub family: String,
    pub n: VertexId,
    pub k: VertexId,
    pub cycle: Vec<TokenVertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<(TokenVertex, TokenVertex)>,
}

impl CycleDocument {
    pub fn new(family: &str, cycle: &TokenCycle, anchor: Option<&AnchorPair>) -> Self {
        Self {
            family: family.to_string(),
            n: cycle.n(),
            k: cycle.k(),
            cycle: cycle.verts().to_vec(),
            anchor: anchor.map(|a| (a.x.clone(), a.y.clone())),
        }
    }

    pub fn anchor_pair(&self) -> Option<AnchorPair> {
        self.anchor.as_ref().map(|(x, y)| AnchorPair {
            x: x.clone(),
            y: y.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cycle document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CycleError> {
        serde_json::from_str(text).map_err(|e| CycleError::ParseJson { msg: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::token::{adjacency_oracle, enumerate_k_subsets, token_adjacent};

    fn tv(elems: &[VertexId]) -> TokenVertex {
        TokenVertex::new(elems.to_vec()).unwrap()
    }

    fn assert_fan_cycle(n: VertexId, k: VertexId, cycle: &TokenCycle) {
        let fan = Graph::fan(n).unwrap();
        assert_eq!(cycle.len() as u64, binomial(n, k), "length for n={n} k={k}");
        let mut seen = cycle.verts().to_vec();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), cycle.len(), "distinct vertices for n={n} k={k}");
        assert_eq!(
            seen,
            enumerate_k_subsets(n, k).unwrap(),
            "vertex cover for n={n} k={k}"
        );
        let verts = cycle.verts();
        for idx in 0..verts.len() {
            let a = &verts[idx];
            let b = &verts[(idx + 1) % verts.len()];
            assert!(
                token_adjacent(&fan, a, b).unwrap(),
                "step {a} -> {b} for n={n} k={k}"
            );
        }
    }

    fn anchor_positions(cycle: &TokenCycle, anchor: &AnchorPair) -> (usize, usize) {
        let px = cycle.verts().iter().position(|v| *v == anchor.x).unwrap();
        let py = cycle.verts().iter().position(|v| *v == anchor.y).unwrap();
        (px, py)
    }

    fn assert_anchor_consecutive(cycle: &TokenCycle, anchor: &AnchorPair) {
        let (px, py) = anchor_positions(cycle, anchor);
        let len = cycle.len();
        let diff = (px + len - py) % len;
        assert!(diff == 1 || diff == len - 1, "anchor not consecutive");
    }

    #[test]
    fn corner_vertex_formulas() {
        assert_eq!(x_vertex(6, 3, 2), tv(&[2, 4, 5]));
        assert_eq!(y_vertex(6, 3, 2), tv(&[2, 4, 6]));
        assert_eq!(x_vertex(5, 2, 1), tv(&[1, 4]));
        assert_eq!(y_vertex(5, 2, 1), tv(&[1, 5]));
        assert_eq!(d_vertex(6, 3, 5), tv(&[3, 4, 6]));
        assert_eq!(d_vertex(6, 3, 6), tv(&[3, 4, 5]));
        assert_eq!(z_vertex(5, 3), tv(&[3, 4, 5]));
        assert_eq!(z_vertex(6, 2), tv(&[5, 6]));
        // the last block's ends coincide with the two fullest D subsets
        for (n, k) in [(6u32, 3u32), (7, 3), (8, 5), (9, 4)] {
            assert_eq!(x_vertex(n, k, n - k), d_vertex(n, k, n));
            assert_eq!(y_vertex(n, k, n - k), d_vertex(n, k, n - 1));
        }
    }

    #[test]
    fn anchor_pair_formula() {
        let a = anchor_pair(5, 1);
        assert_eq!(a.x, tv(&[4]));
        assert_eq!(a.y, tv(&[5]));
        let a = anchor_pair(3, 2);
        assert_eq!(a.x, tv(&[1, 2]));
        assert_eq!(a.y, tv(&[1, 3]));
        let a = anchor_pair(7, 3);
        assert_eq!(a.x, tv(&[4, 5, 6]));
        assert_eq!(a.y, tv(&[4, 5, 7]));
        // the anchor is always a hub swap, so it is a token edge of the fan
        for n in 3..=9u32 {
            for k in 1..n {
                let fan = Graph::fan(n).unwrap();
                let a = anchor_pair(n, k);
                assert!(token_adjacent(&fan, &a.x, &a.y).unwrap());
            }
        }
    }

    #[test]
    #[should_panic(expected = "outside 1..=n-k")]
    fn x_vertex_rejects_large_index() {
        x_vertex(6, 3, 4);
    }

    #[test]
    #[should_panic(expected = "2 <= k")]
    fn z_vertex_rejects_k1() {
        z_vertex(6, 1);
    }

    #[test]
    fn base_k1_shape() {
        let c = base_cycle_k1(5).unwrap();
        assert_eq!(
            c.verts(),
            &[tv(&[1]), tv(&[2]), tv(&[3]), tv(&[4]), tv(&[5])]
        );
        assert_fan_cycle(5, 1, &c);
        assert_anchor_consecutive(&c, &anchor_pair(5, 1));
        assert!(base_cycle_k1(2).is_err());
    }

    #[test]
    fn base_k2_small_cases() {
        let c = base_cycle_k2(4).unwrap();
        assert_eq!(
            c.verts(),
            &[
                tv(&[1, 3]),
                tv(&[1, 4]),
                tv(&[1, 2]),
                tv(&[2, 4]),
                tv(&[2, 3]),
                tv(&[3, 4]),
            ]
        );
        let c = base_cycle_k2(5).unwrap();
        assert_eq!(
            c.verts(),
            &[
                tv(&[1, 4]),
                tv(&[1, 5]),
                tv(&[1, 3]),
                tv(&[1, 2]),
                tv(&[2, 5]),
                tv(&[2, 4]),
                tv(&[2, 3]),
                tv(&[3, 5]),
                tv(&[3, 4]),
                tv(&[4, 5]),
            ]
        );
        assert!(base_cycle_k2(3).is_err());
    }

    #[test]
    fn base_k2_is_hamiltonian_with_anchor() {
        for n in 4..=10u32 {
            let c = base_cycle_k2(n).unwrap();
            assert_fan_cycle(n, 2, &c);
            assert_anchor_consecutive(&c, &anchor_pair(n, 2));
        }
    }

    #[test]
    fn triangle_case() {
        let (c, a) = fan_ham_cycle(3, 2).unwrap();
        assert_eq!(c.verts(), &[tv(&[1, 3]), tv(&[1, 2]), tv(&[2, 3])]);
        assert_eq!(a.x, tv(&[1, 2]));
        assert_eq!(a.y, tv(&[1, 3]));
        assert_fan_cycle(3, 2, &c);
        assert_anchor_consecutive(&c, &a);
    }

    #[test]
    fn first_recursive_case_unrolls_as_expected() {
        let (c, a) = fan_ham_cycle(5, 3).unwrap();
        assert_eq!(
            c.verts(),
            &[
                tv(&[1, 3, 4]),
                tv(&[1, 4, 5]),
                tv(&[1, 2, 4]),
                tv(&[1, 2, 5]),
                tv(&[1, 2, 3]),
                tv(&[1, 3, 5]),
                tv(&[2, 3, 5]),
                tv(&[2, 3, 4]),
                tv(&[2, 4, 5]),
                tv(&[3, 4, 5]),
            ]
        );
        assert_eq!(a.x, tv(&[2, 3, 4]));
        assert_eq!(a.y, tv(&[2, 3, 5]));
        assert_fan_cycle(5, 3, &c);
        assert_anchor_consecutive(&c, &a);
    }

    #[test]
    fn near_full_case_walks_the_window() {
        // k = n-1: a single block plus the D chain
        let (c, a) = fan_ham_cycle(5, 4).unwrap();
        assert_eq!(
            c.verts(),
            &[
                tv(&[1, 2, 3, 4]),
                tv(&[1, 2, 3, 5]),
                tv(&[1, 2, 4, 5]),
                tv(&[1, 3, 4, 5]),
                tv(&[2, 3, 4, 5]),
            ]
        );
        assert_fan_cycle(5, 4, &c);
        assert_anchor_consecutive(&c, &a);
    }

    #[test]
    fn all_small_parameters_give_hamiltonian_cycles() {
        for n in 3..=9u32 {
            for k in 1..n {
                let (c, a) = fan_ham_cycle(n, k).unwrap();
                assert_fan_cycle(n, k, &c);
                assert_anchor_consecutive(&c, &a);
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let (c1, a1) = fan_ham_cycle(8, 4).unwrap();
        let (c2, a2) = fan_ham_cycle(8, 4).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(a1, a2);
    }

    #[test]
    fn parameter_validation() {
        assert!(fan_ham_cycle(2, 1).is_err());
        assert!(fan_ham_cycle(5, 0).is_err());
        assert!(fan_ham_cycle(5, 5).is_err());
        assert!(fan_ham_cycle(0, 0).is_err());
    }

    #[test]
    fn split_separates_the_anchor() {
        let (c, a) = fan_ham_cycle(3, 2).unwrap();
        let path = split_at_anchor(&c, &a, true).unwrap();
        assert_eq!(path, vec![tv(&[1, 2]), tv(&[2, 3]), tv(&[1, 3])]);
        let back = split_at_anchor(&c, &a, false).unwrap();
        assert_eq!(back, vec![tv(&[1, 3]), tv(&[2, 3]), tv(&[1, 2])]);

        // endpoints and interior adjacency for a bigger case
        let (c, a) = fan_ham_cycle(7, 4).unwrap();
        let fan = Graph::fan(7).unwrap();
        let path = split_at_anchor(&c, &a, true).unwrap();
        assert_eq!(path.len(), c.len());
        assert_eq!(path.first(), Some(&a.x));
        assert_eq!(path.last(), Some(&a.y));
        for pair in path.windows(2) {
            assert!(token_adjacent(&fan, &pair[0], &pair[1]).unwrap());
        }
    }

    #[test]
    fn split_rejects_non_consecutive_pairs() {
        // fabricated 4-cycle where the requested pair sits across a diagonal
        let c = TokenCycle::new(
            4,
            2,
            vec![tv(&[1, 2]), tv(&[2, 4]), tv(&[3, 4]), tv(&[1, 3])],
        );
        let bad = AnchorPair {
            x: tv(&[1, 2]),
            y: tv(&[3, 4]),
        };
        assert_eq!(
            split_at_anchor(&c, &bad, true),
            Err(CycleError::AnchorNotConsecutive)
        );
        let absent = AnchorPair {
            x: tv(&[1, 4]),
            y: tv(&[3, 4]),
        };
        assert_eq!(
            split_at_anchor(&c, &absent, true),
            Err(CycleError::AnchorNotConsecutive)
        );
    }

    #[test]
    fn shift_and_embed() {
        let shifted = shift_labels(&[tv(&[2, 3]), tv(&[2, 4])], 2);
        assert_eq!(shifted, vec![tv(&[4, 5]), tv(&[4, 6])]);
        let embedded = embed_with_min(&shifted, 2).unwrap();
        assert_eq!(embedded, vec![tv(&[2, 4, 5]), tv(&[2, 4, 6])]);
        assert_eq!(
            embed_with_min(&[tv(&[2, 4])], 2),
            Err(CycleError::LabelNotAboveMinimum {
                vertex: tv(&[2, 4]),
                min: 2
            })
        );
    }

    #[test]
    fn embed_preserves_adjacency() {
        let f6 = Graph::fan(6).unwrap();
        let pairs = [
            (tv(&[4, 5]), tv(&[4, 6])),
            (tv(&[3, 6]), tv(&[3, 5])),
            (tv(&[3, 4]), tv(&[4, 5])),
        ];
        for (a, b) in pairs {
            let embedded = embed_with_min(&[a.clone(), b.clone()], 2).unwrap();
            assert_eq!(
                token_adjacent(&f6, &a, &b).unwrap(),
                token_adjacent(&f6, &embedded[0], &embedded[1]).unwrap()
            );
        }
    }

    #[test]
    fn text_format_round_trip() {
        let (c, _) = fan_ham_cycle(3, 2).unwrap();
        assert_eq!(c.to_text(), "1,3\n1,2\n2,3\n1,3\n");
        assert_eq!(parse_cycle_text(&c.to_text()).unwrap(), c.verts());

        // without the closing marker the lines parse as-is
        let verts = parse_cycle_text("1,3\n1,2\n2,3\n").unwrap();
        assert_eq!(verts, c.verts());

        assert!(parse_cycle_text("").is_err());
        assert!(parse_cycle_text("1,x\n").is_err());
        assert!(parse_cycle_text("1,1\n").is_err());
        assert!(parse_cycle_text("0,2\n").is_err());
    }

    #[test]
    fn json_format_round_trip() {
        let (c, a) = fan_ham_cycle(3, 2).unwrap();
        let doc = CycleDocument::new("fan", &c, Some(&a));
        assert_eq!(
            doc.to_json(),
            r#"{"family":"fan","n":3,"k":2,"cycle":[[1,3],[1,2],[2,3]],"anchor":[[1,2],[1,3]]}"#
        );
        let parsed = CycleDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.anchor_pair().unwrap(), a);

        // anchor is optional on the way in
        let parsed =
            CycleDocument::from_json(r#"{"family":"fan","n":3,"k":2,"cycle":[[1,3],[1,2],[2,3]]}"#)
                .unwrap();
        assert_eq!(parsed.anchor, None);

        assert!(CycleDocument::from_json("{").is_err());
        assert!(CycleDocument::from_json(r#"{"family":"fan","n":3,"k":2,"cycle":[[1,1]]}"#).is_err());
    }

    #[test]
    fn stitched_blocks_touch_across_spine_edges() {
        // the junction between consecutive blocks swaps i for i+1
        let oracle = {
            let fan = Graph::fan(9).unwrap();
            move |a: &TokenVertex, b: &TokenVertex| adjacency_oracle(&fan)(a, b)
        };
        let (c, _) = fan_ham_cycle(9, 4).unwrap();
        for pair in c.verts().windows(2) {
            assert!(oracle(&pair[0], &pair[1]));
        }
    }
}
