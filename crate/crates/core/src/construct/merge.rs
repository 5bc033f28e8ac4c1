use thiserror::Error;

use super::decompose::{decompose, SubtreeKind, SubtreeSpec};
use crate::graph::{leaf_layer_profile, DegreeSequence, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("host tree has no leaf with an internal neighbor")]
    NoAttachmentSite,
    #[error("vertex {0} is not a leaf of the host tree")]
    NotALeaf(usize),
}

/// A materialized [`SubtreeSpec`].
///
/// For chains the root's degree inside `tree` is one short of
/// `assigned_root_degree`; the missing edge appears on identification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedSubtree {
    pub tree: Tree,
    pub root: usize,
    pub assigned_root_degree: usize,
    pub kind: SubtreeKind,
}

/// Builds the subtree described by `spec`, ids in BFS order from the root.
pub fn materialize(spec: &SubtreeSpec) -> RootedSubtree {
    let mut edges = Vec::new();
    let root = 0;
    let mut next = 1;
    let mut children = Vec::with_capacity(spec.child_degrees.len());
    for _ in &spec.child_degrees {
        edges.push((root, next));
        children.push(next);
        next += 1;
    }
    for _ in 0..spec.filler_leaves {
        edges.push((root, next));
        next += 1;
    }
    for (&child, &c) in children.iter().zip(&spec.child_degrees) {
        for _ in 1..c {
            edges.push((child, next));
            next += 1;
        }
    }
    let tree = Tree::from_edges(next, &edges).expect("materialized subtree is a tree");
    RootedSubtree {
        tree,
        root,
        assigned_root_degree: spec.root_degree,
        kind: spec.kind,
    }
}

/// Lowest-id leaf among those whose neighbor has the minimum leaf-neighbor degree.
pub fn attachment_site(t: &Tree) -> Result<usize, MergeError> {
    let profile = leaf_layer_profile(t).map_err(|_| MergeError::NoAttachmentSite)?;
    profile
        .l1m_leaves
        .first()
        .copied()
        .ok_or(MergeError::NoAttachmentSite)
}

/// Identifies the root of `s` with leaf `leaf` of `t`.
///
/// The root takes over the leaf's id; the other subtree vertices are
/// appended after `t`'s ids in their subtree order.
pub fn merge_at(t: &Tree, s: &RootedSubtree, leaf: usize) -> Result<Tree, MergeError> {
    if leaf >= t.vertex_count() || !t.is_leaf(leaf) {
        return Err(MergeError::NotALeaf(leaf));
    }
    let base = t.vertex_count();
    let mut id = vec![0; s.tree.vertex_count()];
    let mut next = base;
    for (v, slot) in id.iter_mut().enumerate() {
        if v == s.root {
            *slot = leaf;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = t.edge_list();
    edges.extend(s.tree.edges().map(|(u, v)| (id[u], id[v])));
    Ok(Tree::from_edges(next, &edges).expect("identification of a leaf keeps a tree"))
}

/// Attaches a chain subtree at [`attachment_site`].
pub fn merge_once(t: &Tree, s: &RootedSubtree) -> Result<Tree, MergeError> {
    let leaf = attachment_site(t)?;
    merge_at(t, s, leaf)
}

/// Greedy maximum-Sombor tree for `d`.
///
/// The base subtree seeds the tree; chain subtrees are merged in reverse
/// order of emission. The result is relabeled in BFS order from the base
/// root, children by non-increasing degree.
pub fn construct_max_tree(d: &DegreeSequence) -> Tree {
    let specs = decompose(d);
    let Some((base_spec, chains)) = specs.split_last() else {
        return Tree::single_edge();
    };
    let base = materialize(base_spec);
    let mut tree = base.tree;
    for spec in chains.iter().rev() {
        let sub = materialize(spec);
        tree = merge_once(&tree, &sub).expect("base subtree always exposes a leaf");
    }
    tree.bfs_relabel(base.root)
}
