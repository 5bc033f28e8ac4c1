use serde::Serialize;

use crate::graph::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubtreeKind {
    /// Root keeps one open slot, filled when it is identified with a leaf.
    Chain,
    /// Root is complete; the accumulating tree starts here.
    Base,
}

/// A rooted star-of-stars awaiting materialization.
///
/// Each child of degree `c` carries `c − 1` leaves. `root_degree` is the
/// degree the root ends up with in the final tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubtreeSpec {
    pub kind: SubtreeKind,
    pub root_degree: usize,
    pub child_degrees: Vec<usize>,
    pub filler_leaves: usize,
}

impl SubtreeSpec {
    pub fn chain(root_degree: usize, child_degrees: Vec<usize>) -> Self {
        SubtreeSpec {
            kind: SubtreeKind::Chain,
            root_degree,
            child_degrees,
            filler_leaves: 0,
        }
    }

    pub fn base(root_degree: usize, child_degrees: Vec<usize>, filler_leaves: usize) -> Self {
        SubtreeSpec {
            kind: SubtreeKind::Base,
            root_degree,
            child_degrees,
            filler_leaves,
        }
    }

    pub fn is_well_formed(&self) -> bool {
        let children_ok = self.child_degrees.iter().all(|&c| c >= 2)
            && self.child_degrees.windows(2).all(|w| w[0] >= w[1]);
        let slots_ok = match self.kind {
            SubtreeKind::Chain => {
                self.child_degrees.len() + 1 == self.root_degree && self.filler_leaves == 0
            }
            SubtreeKind::Base => self.child_degrees.len() + self.filler_leaves == self.root_degree,
        };
        children_ok && slots_ok
    }

    /// Every degree this spec consumes from the sequence (root first).
    pub fn used_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.root_degree).chain(self.child_degrees.iter().copied())
    }
}

/// Splits a degree sequence into chain subtrees followed by one base subtree.
///
/// Works on the remaining degrees (kept non-increasing): while the smallest
/// remaining degree `s` satisfies `s ≤ count − 2`, it becomes the root of a
/// chain whose `s − 1` children take the largest remaining degrees. Once
/// `s ≥ count − 1`, all remaining degrees hang off a base root of degree `s`,
/// padded with `s − (count − 1)` leaves.
///
/// Returns an empty list for the empty sequence.
pub fn decompose(d: &DegreeSequence) -> Vec<SubtreeSpec> {
    let mut remaining: Vec<usize> = d.degrees().to_vec();
    let mut specs = Vec::new();
    while let Some(&smallest) = remaining.last() {
        let count = remaining.len();
        if smallest + 1 >= count {
            remaining.pop();
            let filler = smallest - remaining.len();
            specs.push(SubtreeSpec::base(smallest, remaining, filler));
            break;
        }
        remaining.pop();
        let rest = remaining.split_off(smallest - 1);
        specs.push(SubtreeSpec::chain(smallest, remaining));
        remaining = rest;
    }
    specs
}
