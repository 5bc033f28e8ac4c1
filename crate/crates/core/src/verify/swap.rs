//! Degree-preserving 2-edge exchanges.
//!
//! Two vertex-disjoint edges `(a₀, a₁)` and `(b₀, b₁)` are replaced by one of
//! the two cross pairings. Every vertex keeps its degree; exactly one pairing
//! keeps the graph a tree.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{sombor_index, weight, Tree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Recombination {
    /// `a₀–b₀`, `a₁–b₁`
    Parallel,
    /// `a₀–b₁`, `a₁–b₀`
    Crossed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SwapMove {
    pub edge_a: (usize, usize),
    pub edge_b: (usize, usize),
    pub recombination: Recombination,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl SwapMove {
    pub fn new_edges(&self) -> [(usize, usize); 2] {
        let (a0, a1) = self.edge_a;
        let (b0, b1) = self.edge_b;
        match self.recombination {
            Recombination::Parallel => [ordered(a0, b0), ordered(a1, b1)],
            Recombination::Crossed => [ordered(a0, b1), ordered(a1, b0)],
        }
    }

    /// Change in the Sombor index; degrees are invariant under the move.
    pub fn delta(&self, t: &Tree) -> f64 {
        let w = |(u, v): (usize, usize)| weight(t.degree(u), t.degree(v));
        let [x, y] = self.new_edges();
        (w(x) + w(y)) - (w(self.edge_a) + w(self.edge_b))
    }

    pub fn apply(&self, t: &Tree) -> Result<Tree, TreeError> {
        let a = ordered(self.edge_a.0, self.edge_a.1);
        let b = ordered(self.edge_b.0, self.edge_b.1);
        let mut edges: Vec<(usize, usize)> = t.edges().filter(|&e| e != a && e != b).collect();
        if edges.len() + 2 != t.edge_count() {
            return Err(TreeError::EdgeCount {
                n: t.vertex_count(),
                expected: t.edge_count(),
                actual: edges.len() + 2,
            });
        }
        edges.extend(self.new_edges());
        Tree::from_edges(t.vertex_count(), &edges)
    }
}

fn disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// Every valid move, found by applying both pairings of each disjoint edge
/// pair and keeping those that still form a tree.
pub fn two_swap_neighbors(t: &Tree) -> Vec<SwapMove> {
    let edges = t.edge_list();
    let mut moves = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if !disjoint(a, b) {
                continue;
            }
            for recombination in [Recombination::Parallel, Recombination::Crossed] {
                let mv = SwapMove {
                    edge_a: a,
                    edge_b: b,
                    recombination,
                };
                if mv.apply(t).is_ok() {
                    moves.push(mv);
                }
            }
        }
    }
    moves
}

/// Scratch buffers for [`reconnecting_pairing`].
#[derive(Debug, Default)]
pub(crate) struct PathScratch {
    parent: Vec<usize>,
    behind_a1: Vec<bool>,
    queue: VecDeque<usize>,
}

/// The pairing that keeps a tree, read off the path between the two edges.
///
/// With the path ordered `x – y … z – w` (`(x, y)` and `(z, w)` the edges),
/// the tree-preserving pairing is `{x–z, y–w}`.
pub(crate) fn reconnecting_pairing(
    adjacency: &[Vec<usize>],
    a: (usize, usize),
    b: (usize, usize),
    scratch: &mut PathScratch,
) -> Recombination {
    let n = adjacency.len();
    let PathScratch {
        parent,
        behind_a1,
        queue,
    } = scratch;
    parent.clear();
    parent.resize(n, usize::MAX);
    behind_a1.clear();
    behind_a1.resize(n, false);
    queue.clear();
    parent[a.0] = a.0;
    queue.push_back(a.0);
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                behind_a1[v] = v == a.1 || behind_a1[u];
                queue.push_back(v);
            }
        }
    }
    // near endpoint of b: the one the other hangs from
    let (b_near, b_far) = if parent[b.1] == b.0 { (b.0, b.1) } else { (b.1, b.0) };
    let (a_near, a_far) = if behind_a1[b.0] { (a.1, a.0) } else { (a.0, a.1) };
    let keep = [ordered(a_far, b_near), ordered(a_near, b_far)];
    let parallel = [ordered(a.0, b.0), ordered(a.1, b.1)];
    if keep == parallel || keep == [parallel[1], parallel[0]] {
        Recombination::Parallel
    } else {
        Recombination::Crossed
    }
}

/// The tree-preserving move for two disjoint edges of `t`.
pub fn valid_move(t: &Tree, a: (usize, usize), b: (usize, usize)) -> Option<SwapMove> {
    if !disjoint(a, b) || !t.has_edge(a.0, a.1) || !t.has_edge(b.0, b.1) {
        return None;
    }
    let recombination = reconnecting_pairing(t.adjacency(), a, b, &mut PathScratch::default());
    Some(SwapMove {
        edge_a: a,
        edge_b: b,
        recombination,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalMaxReport {
    pub local_max: bool,
    pub so: f64,
    pub moves_checked: usize,
    /// Largest index gain over all moves (may be ≤ 0).
    pub best_gain: f64,
    /// Present only when the best gain exceeds the tolerance.
    pub improving_move: Option<SwapMove>,
}

/// True iff no 2-swap raises the index by more than `tol` relative.
pub fn is_local_max(t: &Tree, tol: f64) -> LocalMaxReport {
    let so = sombor_index(t);
    let moves = two_swap_neighbors(t);
    let mut best: Option<(f64, SwapMove)> = None;
    for mv in &moves {
        let gain = mv.delta(t);
        if best.is_none_or(|(g, _)| gain > g) {
            best = Some((gain, *mv));
        }
    }
    let best_gain = best.map_or(0.0, |(g, _)| g);
    let improving = best.filter(|&(g, _)| g > tol * so).map(|(_, mv)| mv);
    LocalMaxReport {
        local_max: improving.is_none(),
        so,
        moves_checked: moves.len(),
        best_gain,
        improving_move: improving,
    }
}
