#![allow(dead_code)]

pub mod figures;

use std::collections::BTreeSet;

use eisenstein_forest::eisenstein::is_primitive_eisenstein;
use eisenstein_forest::forest::enumerate_to_depth;
use eisenstein_forest::{ForestNode, Triple};

/// Unordered form of a node: sides `a, b` plus the set `{tree c, twin c}`.
pub type UnorderedLabel = (i128, i128, BTreeSet<i128>);

pub fn figure_label((a, b, c1, c2): figures::Label) -> UnorderedLabel {
    (a, b, [c1, c2].into())
}

pub fn node_label(n: &ForestNode) -> UnorderedLabel {
    let t = n.tree_triple;
    (t.a, t.b, [t.c, n.twin_triple.c].into())
}

/// Triples violating `a² = b² + c² − bc`, primitivity, or `c < a < b`.
pub fn violations<'a>(triples: impl IntoIterator<Item = &'a Triple>) -> Vec<Triple> {
    triples
        .into_iter()
        .filter(|t| !(is_primitive_eisenstein(t) && t.c < t.a && t.a < t.b))
        .copied()
        .collect()
}

pub fn depth_two_nodes() -> Vec<ForestNode> {
    enumerate_to_depth(2).expect("depth 2 fits in i128")
}
