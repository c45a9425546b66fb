//! Hamiltonian cycles in token graphs of fan graphs, with lifts to wheels
//! and complete graphs (Johnson graphs) and independent verification.
//!
//! The k-th token graph of a graph G places k unlabeled tokens on distinct
//! vertices of G; configurations are adjacent when one token slides along
//! an edge. [`fan_cycle::fan_ham_cycle`] builds an explicit Hamiltonian
//! cycle of the k-th token graph of the fan `F_n` for every `3 <= n` and
//! `1 <= k <= n-1`. Because the fan spans the wheel `W_n` and the complete
//! graph `K_n` on the same labels, the same vertex sequence is Hamiltonian
//! there too; [`verify::certify_lift`] checks that edge by edge, and
//! [`verify::brute_force_ham_cycle`] provides an oracle for small cases.
//!
//! ```
//! use tokencycle::{fan_ham_cycle, adjacency_oracle, validate_cycle, Graph};
//!
//! let (cycle, anchor) = fan_ham_cycle(6, 3).unwrap();
//! let fan = Graph::fan(6).unwrap();
//! let report = validate_cycle(
//!     adjacency_oracle(&fan),
//!     cycle.len(),
//!     cycle.verts(),
//!     Some(&anchor),
//! );
//! assert!(report.ok);
//! ```

pub mod fan_cycle;
pub mod graph;
pub mod token;
pub mod verify;

pub use fan_cycle::{
    anchor_pair, base_cycle_k1, base_cycle_k2, fan_ham_cycle, split_at_anchor, AnchorPair,
    CycleDocument, CycleError, TokenCycle,
};
pub use graph::{Graph, GraphError, VertexId};
pub use token::{
    adjacency_oracle, binomial, complement_vertex, enumerate_k_subsets, token_adjacent,
    token_edge_count, TokenError, TokenGraph, TokenVertex,
};
pub use verify::{
    brute_force_ham_cycle, brute_force_ham_cycle_graph, certify_lift, check_coverage,
    validate_cycle, FailureKind, SearchError, SearchOutcome, VerificationReport, Witness,
    DEFAULT_SEARCH_CAP,
};
