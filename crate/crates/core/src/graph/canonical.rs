//! Center-rooted AHU codes for free trees.

use std::fmt;

use serde::Serialize;

use super::Tree;

/// Parenthesis code; two trees are isomorphic iff their codes are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The one or two central vertices, found by peeling leaves layer by layer.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Tree, root: usize) -> String {
    let order = t.bfs_order(root);
    let parent = t.parents_from(root);
    let mut codes: Vec<Option<String>> = vec![None; t.vertex_count()];
    for &u in order.iter().rev() {
        let mut children: Vec<String> = t
            .neighbors(u)
            .iter()
            .filter(|&&v| v != parent[u])
            .map(|&v| codes[v].take().expect("child coded before parent"))
            .collect();
        children.sort_unstable();
        let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        code.push('(');
        for c in &children {
            code.push_str(c);
        }
        code.push(')');
        codes[u] = Some(code);
    }
    codes[root].take().unwrap()
}

pub fn canonical_form(t: &Tree) -> CanonicalCode {
    let code = centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has at least one center");
    CanonicalCode(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_share_code() {
        let a = Tree::path(4).unwrap();
        let b = Tree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_eq!(canonical_form(&a).as_str(), "((())())");
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_form(&Tree::path(4).unwrap()),
            canonical_form(&Tree::star(4).unwrap())
        );
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(centers(&Tree::path(5).unwrap()), vec![2]);
        assert_eq!(centers(&Tree::path(4).unwrap()), vec![1, 2]);
        assert_eq!(centers(&Tree::star(6).unwrap()), vec![0]);
        assert_eq!(centers(&Tree::single_edge()), vec![0, 1]);
        assert_eq!(canonical_form(&Tree::singleton()).as_str(), "()");
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // both realize internal degrees (3, 2, 2): caterpillar vs spider
        let caterpillar = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let spider = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_ne!(canonical_form(&caterpillar), canonical_form(&spider));
    }
}
