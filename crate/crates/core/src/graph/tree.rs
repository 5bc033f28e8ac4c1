use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("expected {expected} edges for {n} vertices, got {actual}")]
    EdgeCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: reached {reached} of {n} vertices")]
    Disconnected { reached: usize, n: usize },
}

/// An undirected labeled tree on the dense vertex set `0..n`.
///
/// Adjacency lists are kept sorted, so iteration order over neighbors and
/// edges is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list, checking every tree invariant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount {
                n,
                expected: n - 1,
                actual: edges.len(),
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(TreeError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let tree = Tree { adjacency };
        let reached = tree.bfs_order(0).len();
        if reached != n {
            return Err(TreeError::Disconnected { reached, n });
        }
        Ok(tree)
    }

    /// The single-vertex tree.
    pub fn singleton() -> Self {
        Tree {
            adjacency: vec![Vec::new()],
        }
    }

    /// The two-vertex tree (one edge).
    pub fn single_edge() -> Self {
        Tree {
            adjacency: vec![vec![1], vec![0]],
        }
    }

    pub fn star(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Degrees of the non-leaf vertices, sorted non-increasing.
    pub fn internal_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .adjacency
            .iter()
            .map(Vec::len)
            .filter(|&d| d >= 2)
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub(crate) fn bfs_order(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Parent pointers of a BFS from `root`; the root maps to itself.
    pub(crate) fn parents_from(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    /// Returns the tree with vertex `v` renamed to `mapping[v]`.
    ///
    /// `mapping` must be a permutation of `0..n`.
    pub fn relabel(&self, mapping: &[usize]) -> Tree {
        debug_assert_eq!(mapping.len(), self.vertex_count());
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&v| mapping[v]).collect();
            mapped.sort_unstable();
            adjacency[mapping[u]] = mapped;
        }
        Tree { adjacency }
    }

    /// Relabels vertices in BFS order from `root`, visiting children by
    /// non-increasing degree (ties by current id).
    pub fn bfs_relabel(&self, root: usize) -> Tree {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut mapping = vec![0; n];
        let mut next = 0;
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            mapping[u] = next;
            next += 1;
            let mut children: Vec<usize> =
                self.adjacency[u].iter().copied().filter(|&v| !seen[v]).collect();
            children.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
            for v in children {
                seen[v] = true;
                queue.push_back(v);
            }
        }
        self.relabel(&mapping)
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }
}

/// Wire form of a tree: `{"n": <int>, "edges": [[u, v], ...]}` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> Self {
        TreeJson {
            n: t.vertex_count(),
            edges: t.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<TreeJson> for Tree {
    type Error = TreeError;

    fn try_from(j: TreeJson) -> Result<Self, Self::Error> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Tree::from_edges(j.n, &edges)
    }
}

impl Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TreeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TreeJson::deserialize(d)?;
        Tree::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(Tree::from_edges(0, &[]), Err(TreeError::Empty));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1)]),
            Err(TreeError::EdgeCount { .. })
        ));
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 1)]),
            Err(TreeError::SelfLoop(1))
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 0)]),
            Err(TreeError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 5)]),
            Err(TreeError::VertexOutOfRange(1, 5, 3))
        );
        // 4 vertices, 3 edges, but a triangle plus an isolated vertex
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (1, 2), (0, 2)]),
            Err(TreeError::Disconnected { .. })
        ));
    }

    #[test]
    fn edges_are_lexicographic() {
        let t = Tree::from_edges(4, &[(3, 1), (0, 2), (2, 1)]).unwrap();
        assert_eq!(t.edge_list(), vec![(0, 2), (1, 2), (1, 3)]);
        assert_eq!(t.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(t.internal_degrees(), vec![2, 2]);
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let t = Tree::path(4).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        let back: Tree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Tree>(r#"{"n":3,"edges":[[0,1]]}"#).is_err());
    }

    #[test]
    fn bfs_relabel_orders_children_by_degree() {
        // 0 - 1 (leaf), 0 - 2 (degree 3)
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let r = t.bfs_relabel(0);
        assert_eq!(r.degrees(), vec![2, 3, 1, 1, 1]);
    }
}
