//! Ground truth and probes for the greedy construction: exhaustive Prüfer
//! enumeration, 2-swap local search, path-degree reports, attachment
//! profiles and seeded annealing.

mod anneal;
mod attachment;
mod enumerate;
mod oracle;
mod prufer;
mod swap;
mod theorem1;

pub use anneal::{anneal_from, anneal_search, AnnealOutcome, COOLING, TEMPERATURE_SAMPLES};
pub use attachment::{attachment_profile, AttachmentEntry, AttachmentProfile, TIE_TOL};
pub use enumerate::{
    enumerate_trees, multinomial, next_permutation, prufer_multiset, unrank, PruferTrees,
};
pub use oracle::{oracle_max, OracleResult, Witness, DEFAULT_CAP};
pub use prufer::{prufer_to_tree, tree_to_prufer, PruferError};
pub use swap::{
    is_local_max, two_swap_neighbors, valid_move, LocalMaxReport, Recombination, SwapMove,
};
pub use theorem1::{
    check_theorem1, Inequality, Parity, Theorem1Record, Theorem1Report, Theorem1Summary,
};
