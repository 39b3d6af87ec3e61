//! Counting nonisomorphic subtrees of trees.
//!
//! A *subtree* here is a subgraph that is itself a tree: a connected subset
//! of vertices. This crate counts them up to isomorphism, in two flavors:
//!
//! - `ns(T)`: the number of isomorphism classes among **all** subtrees of a
//!   free tree `T`;
//! - `nr(T)`: the number of classes among subtrees **containing the root**
//!   of a rooted tree `T`, under root-preserving isomorphism.
//!
//! On top of the counters the crate provides exhaustive generation of rooted
//! and free trees by canonical level sequences, searches for the extremal
//! values `S_n = max ns` and `R_n = max nr` over trees of order `n`, an
//! explicit family of trees whose `ns` value grows like `5^(n/4)`, and
//! verification drivers that mechanically check every finite case behind
//! the bounds relating these quantities (see [`verify`]).
//!
//! Canonical forms are parenthesis strings: a leaf is `()`, and an internal
//! vertex wraps the sorted codes of its children. Free trees are canonized
//! through their centers. All counting is exact; resource limits surface as
//! errors, never as silently wrong values.

pub mod bounds;
pub mod canon;
pub mod construction;
pub mod error;
pub mod exceptional;
pub mod extremal;
pub mod generate;
pub mod limits;
pub mod subtrees;
pub mod tree;
pub mod verify;

pub use canon::{canonical_root, free_code, rooted_code, CanonicalCode};
pub use error::{CountError, RangeError, SearchError, TreeError};
pub use exceptional::{find_exceptional, ExceptionalCatalog};
pub use extremal::{compute_r, compute_s, table, ExtremalRecord};
pub use generate::{gen_free_trees, gen_rooted_trees};
pub use subtrees::{
    count_subtrees_avoiding, count_subtrees_total, enumerate_subtrees, nr, nr_set, ns, ns_set,
};
pub use tree::{join_at_root, parse_tree, serialize_tree, LabeledTree, TreeFormat};
pub use verify::VerificationReport;
