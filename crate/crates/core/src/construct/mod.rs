//! Greedy construction of a maximum-Sombor tree.
//!
//! The degree sequence is split into rooted subtrees ([`decompose`]), each
//! subtree is built ([`materialize`]) and the pieces are glued together by
//! identifying a chain root with a leaf whose neighbor has the smallest
//! degree among leaf neighbors ([`merge_once`]).

mod decompose;
mod merge;

pub use decompose::{decompose, SubtreeKind, SubtreeSpec};
pub use merge::{
    attachment_site, construct_max_tree, materialize, merge_at, merge_once, MergeError,
    RootedSubtree,
};
