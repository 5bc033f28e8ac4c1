use serde::Serialize;
use thiserror::Error;

use super::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LayerError {
    #[error("tree has no leaves")]
    NoLeaves,
    #[error("tree has no internal vertex")]
    NoInternalVertex,
}

/// The first leaf layer of a tree.
///
/// `l1_vertices` are the internal vertices adjacent to at least one leaf,
/// `d_min` the smallest degree among them, and `l1m_leaves` the leaves hanging
/// off a vertex of degree `d_min`. All lists are sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafLayerProfile {
    pub l1_vertices: Vec<(usize, usize)>,
    pub d_min: usize,
    pub l1m_leaves: Vec<usize>,
}

pub fn leaf_layer_profile(t: &Tree) -> Result<LeafLayerProfile, LayerError> {
    let n = t.vertex_count();
    if n == 1 {
        return Err(LayerError::NoLeaves);
    }
    if n == 2 {
        return Err(LayerError::NoInternalVertex);
    }
    let l1_vertices: Vec<(usize, usize)> = (0..n)
        .filter(|&v| !t.is_leaf(v) && t.neighbors(v).iter().any(|&w| t.is_leaf(w)))
        .map(|v| (v, t.degree(v)))
        .collect();
    let d_min = l1_vertices
        .iter()
        .map(|&(_, d)| d)
        .min()
        .ok_or(LayerError::NoLeaves)?;
    let l1m_leaves = t
        .leaves()
        .into_iter()
        .filter(|&l| t.degree(t.neighbors(l)[0]) == d_min)
        .collect();
    Ok(LeafLayerProfile {
        l1_vertices,
        d_min,
        l1m_leaves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_profile() {
        let p = leaf_layer_profile(&Tree::star(4).unwrap()).unwrap();
        assert_eq!(p.l1_vertices, vec![(0, 3)]);
        assert_eq!(p.d_min, 3);
        assert_eq!(p.l1m_leaves, vec![1, 2, 3]);
    }

    #[test]
    fn path_profile() {
        let p = leaf_layer_profile(&Tree::path(4).unwrap()).unwrap();
        assert_eq!(p.l1_vertices, vec![(1, 2), (2, 2)]);
        assert_eq!(p.d_min, 2);
        assert_eq!(p.l1m_leaves, vec![0, 3]);
    }

    #[test]
    fn degenerate_trees() {
        assert_eq!(leaf_layer_profile(&Tree::singleton()), Err(LayerError::NoLeaves));
        assert_eq!(
            leaf_layer_profile(&Tree::single_edge()),
            Err(LayerError::NoInternalVertex)
        );
    }

    #[test]
    fn vertex_far_from_leaves_is_not_in_l1() {
        // spider with three legs of length 2: the center has no leaf neighbor
        let t = Tree::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let p = leaf_layer_profile(&t).unwrap();
        assert_eq!(p.l1_vertices, vec![(1, 2), (2, 2), (3, 2)]);
        assert_eq!(p.l1m_leaves, vec![4, 5, 6]);
    }
}
