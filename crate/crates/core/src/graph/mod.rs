//! Trees, degree sequences and the Sombor index.

mod canonical;
mod degree;
pub mod format;
mod layers;
mod paths;
mod sombor;
mod tree;

pub use canonical::{canonical_form, centers, CanonicalCode};
pub use degree::{DegreeError, DegreeSequence};
pub use layers::{leaf_layer_profile, LayerError, LeafLayerProfile};
pub use paths::{leaf_to_leaf_paths, DegreePath};
pub use sombor::{
    approx_eq, edge_weight, sombor_index, weight, CompensatedSum, NonPositiveDegree, REL_TOL,
};
pub use tree::{Tree, TreeError, TreeJson};
