use serde::Serialize;

use crate::construct::{merge_at, RootedSubtree};
use crate::graph::{approx_eq, leaf_layer_profile, sombor_index, LayerError, Tree, REL_TOL};

/// Tolerance for ties between attachments at equal neighbor degree.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttachmentEntry {
    pub leaf: usize,
    pub neighbor: usize,
    pub neighbor_degree: usize,
    pub so: f64,
}

/// Index value of identifying a chain root with each leaf of a host tree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttachmentProfile {
    /// Sorted by leaf id.
    pub entries: Vec<AttachmentEntry>,
    pub l1m_leaves: Vec<usize>,
    pub max_so: f64,
    /// Leaves with equal neighbor degree score equal within [`TIE_TOL`].
    pub ties_hold: bool,
    /// Scores never increase as the neighbor degree increases.
    pub monotone: bool,
    /// Every leaf in L₁ᵐ attains the maximum within [`REL_TOL`].
    pub max_at_l1m: bool,
    /// Some leaf in L₁ᵐ is within [`TIE_TOL`] of the maximum.
    pub argmax_meets_l1m: bool,
}

impl AttachmentProfile {
    pub fn all_hold(&self) -> bool {
        self.ties_hold && self.monotone && self.max_at_l1m && self.argmax_meets_l1m
    }
}

pub fn attachment_profile(t: &Tree, s: &RootedSubtree) -> Result<AttachmentProfile, LayerError> {
    let profile = leaf_layer_profile(t)?;
    let entries: Vec<AttachmentEntry> = t
        .leaves()
        .into_iter()
        .map(|leaf| {
            let neighbor = t.neighbors(leaf)[0];
            let merged = merge_at(t, s, leaf).expect("leaves are valid attachment points");
            AttachmentEntry {
                leaf,
                neighbor,
                neighbor_degree: t.degree(neighbor),
                so: sombor_index(&merged),
            }
        })
        .collect();

    let max_so = entries.iter().map(|e| e.so).fold(f64::MIN, f64::max);

    let mut by_degree: Vec<&AttachmentEntry> = entries.iter().collect();
    by_degree.sort_by_key(|e| e.neighbor_degree);
    let groups: Vec<&[&AttachmentEntry]> = by_degree
        .chunk_by(|a, b| a.neighbor_degree == b.neighbor_degree)
        .collect();
    let ties_hold = groups
        .iter()
        .all(|g| g.iter().all(|e| approx_eq(e.so, g[0].so, TIE_TOL)));
    let monotone = groups.windows(2).all(|w| {
        let low_min = w[0].iter().map(|e| e.so).fold(f64::MAX, f64::min);
        let high_max = w[1].iter().map(|e| e.so).fold(f64::MIN, f64::max);
        high_max <= low_min || approx_eq(high_max, low_min, TIE_TOL)
    });

    let l1m_scores = || {
        entries
            .iter()
            .filter(|e| profile.l1m_leaves.binary_search(&e.leaf).is_ok())
            .map(|e| e.so)
    };
    let max_at_l1m = l1m_scores().all(|so| approx_eq(so, max_so, REL_TOL));
    let argmax_meets_l1m = l1m_scores().any(|so| approx_eq(so, max_so, TIE_TOL));

    Ok(AttachmentProfile {
        entries,
        l1m_leaves: profile.l1m_leaves,
        max_so,
        ties_hold,
        monotone,
        max_at_l1m,
        argmax_meets_l1m,
    })
}
