//! Text exports: Tree JSON, Graphviz DOT and plain edge lists.

use std::fmt::Write as _;

use super::{Tree, TreeJson};

pub fn to_json(t: &Tree) -> String {
    serde_json::to_string(&TreeJson::from(t)).expect("tree json is always serializable")
}

/// Undirected DOT graph, vertices labeled `v<id> (d=<degree>)`.
pub fn to_dot(t: &Tree) -> String {
    let mut out = String::from("graph tree {\n");
    for v in 0..t.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"v{v} (d={})\"];", t.degree(v));
    }
    for (u, v) in t.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// One `u v` pair per line.
pub fn to_edge_list(t: &Tree) -> String {
    let mut out = String::new();
    for (u, v) in t.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_path() {
        let t = Tree::path(3).unwrap();
        assert_eq!(to_json(&t), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(to_edge_list(&t), "0 1\n1 2\n");
        let dot = to_dot(&t);
        assert!(dot.starts_with("graph tree {\n"));
        assert!(dot.contains("1 [label=\"v1 (d=2)\"];"));
        assert!(dot.contains("  1 -- 2;\n"));
    }
}
