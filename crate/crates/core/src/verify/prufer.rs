use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruferError {
    #[error("a Prüfer code needs n ≥ 2, got n = {0}")]
    TooSmall(usize),
    #[error("Prüfer code for n = {n} must have length {expected}, got {actual}")]
    Length {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("entry {value} at position {index} is outside 0..{n}")]
    OutOfRange { index: usize, value: usize, n: usize },
}

/// Linear-time decode into `edges`, reusing `degree` as scratch.
///
/// Inputs must already be range-checked.
pub(crate) fn decode_into(
    seq: &[usize],
    n: usize,
    degree: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
) {
    degree.clear();
    degree.resize(n, 1);
    for &x in seq {
        degree[x] += 1;
    }
    edges.clear();
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

pub fn prufer_to_tree(seq: &[usize], n: usize) -> Result<Tree, PruferError> {
    if n < 2 {
        return Err(PruferError::TooSmall(n));
    }
    if seq.len() != n - 2 {
        return Err(PruferError::Length {
            n,
            expected: n - 2,
            actual: seq.len(),
        });
    }
    if let Some((index, &value)) = seq.iter().enumerate().find(|(_, &x)| x >= n) {
        return Err(PruferError::OutOfRange { index, value, n });
    }
    let mut degree = Vec::new();
    let mut edges = Vec::new();
    decode_into(seq, n, &mut degree, &mut edges);
    Ok(Tree::from_edges(n, &edges).expect("Prüfer decode yields a tree"))
}

/// Inverse of [`prufer_to_tree`]: repeatedly strip the smallest leaf.
pub fn tree_to_prufer(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return Vec::new();
    }
    let mut degree = t.degrees();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut out = Vec::with_capacity(n - 2);
    while out.len() < n - 2 {
        let Reverse(leaf) = heap.pop().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = t
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf keeps one neighbor");
        out.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            heap.push(Reverse(parent));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_examples() {
        assert_eq!(prufer_to_tree(&[], 2).unwrap(), Tree::single_edge());
        assert_eq!(prufer_to_tree(&[0, 0], 4).unwrap(), Tree::star(4).unwrap());
        assert_eq!(prufer_to_tree(&[1, 2], 4).unwrap(), Tree::path(4).unwrap());
    }

    #[test]
    fn decode_errors() {
        assert_eq!(prufer_to_tree(&[], 1), Err(PruferError::TooSmall(1)));
        assert!(matches!(prufer_to_tree(&[0], 4), Err(PruferError::Length { .. })));
        assert_eq!(
            prufer_to_tree(&[0, 4], 4),
            Err(PruferError::OutOfRange { index: 1, value: 4, n: 4 })
        );
    }

    #[test]
    fn degrees_follow_occurrences() {
        let seq = [3, 3, 0, 5, 3];
        let t = prufer_to_tree(&seq, 7).unwrap();
        for v in 0..7 {
            assert_eq!(t.degree(v), 1 + seq.iter().filter(|&&x| x == v).count());
        }
        assert_eq!(tree_to_prufer(&t), seq);
    }
}
