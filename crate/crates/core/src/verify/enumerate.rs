//! Lexicographic enumeration of the Prüfer multisets of a degree sequence.
//!
//! Internal vertex `i` (0-based, in sequence order) occurs `dᵢ − 1` times;
//! leaves `m..n` never occur. Every distinct arrangement decodes to a
//! distinct labeled tree with exactly the prescribed degrees.

use super::prufer::decode_into;
use crate::graph::{DegreeSequence, Tree};

/// Sorted multiset of symbols for `d`.
pub fn prufer_multiset(d: &DegreeSequence) -> Vec<usize> {
    d.degrees()
        .iter()
        .enumerate()
        .flat_map(|(i, &deg)| std::iter::repeat_n(i, deg - 1))
        .collect()
}

/// Advances `seq` to the next permutation in lexicographic order.
/// Returns `false` (leaving `seq` untouched) at the last permutation.
pub fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let Some(i) = (0..seq.len() - 1).rev().find(|&i| seq[i] < seq[i + 1]) else {
        return false;
    };
    let j = (i + 1..seq.len()).rev().find(|&j| seq[j] > seq[i]).unwrap();
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// Number of distinct arrangements of a multiset with the given counts.
pub fn multinomial(counts: &[usize]) -> Option<u128> {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &c in counts {
        for k in 1..=c as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / k;
        }
    }
    Some(total)
}

/// The `rank`-th (0-based) lexicographic arrangement of the multiset with
/// `counts[s]` copies of symbol `s`.
pub fn unrank(counts: &[usize], mut rank: u128) -> Option<Vec<usize>> {
    let mut counts = counts.to_vec();
    let len: usize = counts.iter().sum();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let mut chosen = None;
        for s in 0..counts.len() {
            if counts[s] == 0 {
                continue;
            }
            counts[s] -= 1;
            let block = multinomial(&counts)?;
            if rank < block {
                chosen = Some(s);
                break;
            }
            rank -= block;
            counts[s] += 1;
        }
        out.push(chosen?);
    }
    (rank == 0).then_some(out)
}

/// Streams labeled trees realizing `d` in lexicographic Prüfer order,
/// stopping after `cap` trees.
pub struct PruferTrees {
    seq: Vec<usize>,
    n: usize,
    cap: u64,
    enumerated: u64,
    exhausted: bool,
    degree: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl PruferTrees {
    pub fn enumerated(&self) -> u64 {
        self.enumerated
    }

    /// True once the cap stopped the stream before the last arrangement.
    pub fn is_capped(&self) -> bool {
        !self.exhausted && self.enumerated >= self.cap
    }
}

impl Iterator for PruferTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.exhausted || self.enumerated >= self.cap {
            return None;
        }
        decode_into(&self.seq, self.n, &mut self.degree, &mut self.edges);
        let tree = Tree::from_edges(self.n, &self.edges).expect("Prüfer decode yields a tree");
        self.enumerated += 1;
        if !next_permutation(&mut self.seq) {
            self.exhausted = true;
        }
        Some(tree)
    }
}

pub fn enumerate_trees(d: &DegreeSequence, cap: u64) -> PruferTrees {
    PruferTrees {
        seq: prufer_multiset(d),
        n: d.vertex_count(),
        cap,
        enumerated: 0,
        exhausted: false,
        degree: Vec::new(),
        edges: Vec::new(),
    }
}
