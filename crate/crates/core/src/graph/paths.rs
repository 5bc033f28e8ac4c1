use serde::Serialize;

use super::Tree;

/// A leaf-to-leaf path `v₀ v₁ … v_{k+1}` together with the host degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePath {
    pub vertices: Vec<usize>,
    pub degrees: Vec<usize>,
}

impl DegreePath {
    /// Number of interior vertices `k`.
    pub fn interior_len(&self) -> usize {
        self.vertices.len() - 2
    }
}

/// One path per unordered leaf pair, oriented from the lower-id leaf.
///
/// Pairs are listed lexicographically by `(first leaf, last leaf)`.
pub fn leaf_to_leaf_paths(t: &Tree) -> Vec<DegreePath> {
    let leaves = t.leaves();
    let mut out = Vec::with_capacity(leaves.len() * leaves.len().saturating_sub(1) / 2);
    for (i, &a) in leaves.iter().enumerate() {
        let parent = t.parents_from(a);
        for &b in &leaves[i + 1..] {
            let mut vertices = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                vertices.push(cur);
            }
            vertices.reverse();
            let degrees = vertices.iter().map(|&v| t.degree(v)).collect();
            out.push(DegreePath { vertices, degrees });
        }
    }
    out
}
