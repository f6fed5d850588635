//! The triple-level forest rooted at `(7,8,5)` and `(13,15,7)`.
//!
//! Child `i` of a tree-form triple `t` is `M_i·t`. Applying `A_i` to the pair
//! of `t` and then the Gilder formulas gives the same triple, so descent runs
//! at the pair level and is confirmed against `M_i` afterwards.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::eisenstein::{pair_from_triple, triple_from_pair, Pair, Triple, TwinForm};
use crate::error::{Error, Result};
use crate::matrix::Mat3;
use crate::stern_brocot::{
    pair_of_path, parent_pair, path_of_pair, ParentResult, PathCode, Root, Step,
};

/// `M_1..M_5`, stored at indices `0..5`.
pub const M: [Mat3; 5] = [
    Mat3::new([[7, -6, 6], [8, -7, 7], [4, -4, 3]]),
    Mat3::new([[7, 6, -6], [8, 7, -7], [4, 3, -4]]),
    Mat3::new([[7, 6, 0], [8, 7, 0], [4, 3, 1]]),
    Mat3::new([[7, 0, 6], [8, 0, 7], [4, 1, 3]]),
    Mat3::new([[7, 0, -6], [8, 0, -7], [4, 1, -4]]),
];

impl Step {
    pub fn triple_matrix(self) -> &'static Mat3 {
        &M[usize::from(self.get() - 1)]
    }
}

impl Root {
    pub fn triple(self) -> Triple {
        match self {
            Root::A => Triple::new(7, 8, 5),
            Root::B => Triple::new(13, 15, 7),
        }
    }
}

/// One node of the forest with everything needed to locate it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestNode {
    pub tree_triple: Triple,
    pub twin_triple: Triple,
    pub pair: Pair,
    pub path: PathCode,
    pub depth: usize,
}

impl ForestNode {
    fn new(tree: Triple, pair: Pair, path: PathCode) -> Self {
        ForestNode {
            tree_triple: tree,
            twin_triple: Triple::new(tree.a, tree.b, tree.b - tree.c),
            pair,
            depth: path.depth(),
            path,
        }
    }

    fn root(root: Root) -> Self {
        ForestNode::new(root.triple(), root.pair(), PathCode::root(root))
    }

    /// Child along `step`, or `None` if any coordinate leaves `i128`.
    fn child(&self, step: Step) -> Option<ForestNode> {
        let tree = step.triple_matrix().apply(self.tree_triple.to_vec()).ok()?;
        let pair = step.pair_matrix().apply(self.pair.to_vec()).ok()?;
        Some(ForestNode::new(
            Triple::from_vec(tree),
            Pair::from_vec(pair),
            self.path.child(step),
        ))
    }
}

/// Parent of a tree-form triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleParent {
    IsRoot(Root),
    Parent { triple: Triple, step: Step },
}

pub fn roots() -> (Triple, Triple) {
    (Root::A.triple(), Root::B.triple())
}

/// Pair of a tree-form forest triple; anything else is `NotForestTriple`.
fn tree_form_pair(t: &Triple) -> Result<Pair> {
    match pair_from_triple(t) {
        Ok((p, TwinForm::TreeForm)) => Ok(p),
        Ok((_, TwinForm::TwinOfTreeForm)) => Err(Error::NotForestTriple(*t)),
        Err(Error::Overflow) => Err(Error::Overflow),
        Err(_) => Err(Error::NotForestTriple(*t)),
    }
}

pub fn children_triple(t: &Triple) -> Result<[Triple; 5]> {
    tree_form_pair(t)?;
    let mut out = [*t; 5];
    for (slot, m) in out.iter_mut().zip(&M) {
        *slot = Triple::from_vec(m.apply(t.to_vec())?);
    }
    Ok(out)
}

pub fn parent_triple(t: &Triple) -> Result<TripleParent> {
    let pair = tree_form_pair(t)?;
    match parent_pair(&pair)? {
        ParentResult::IsRoot(root) => Ok(TripleParent::IsRoot(root)),
        ParentResult::Parent { pair, step } => {
            let parent = triple_from_pair(&pair)?.tree;
            if step.triple_matrix().apply(parent.to_vec())? != t.to_vec() {
                return Err(Error::Invariant("pair descent disagrees with M_i"));
            }
            Ok(TripleParent::Parent {
                triple: parent,
                step,
            })
        }
    }
}

/// Forest address of a tree-form triple or of the twin of one.
pub fn path_of_triple(t: &Triple) -> Result<PathCode> {
    let pair = match pair_from_triple(t) {
        Ok((p, _)) => p,
        Err(e @ (Error::Equilateral | Error::Overflow)) => return Err(e),
        Err(_) => return Err(Error::NotForestTriple(*t)),
    };
    path_of_pair(&pair)
}

pub fn triple_of_path(code: &PathCode) -> Result<ForestNode> {
    let pair = pair_of_path(code)?;
    let triples = triple_from_pair(&pair)?;
    let node = ForestNode::new(triples.tree, pair, code.clone());
    debug_assert_eq!(node.twin_triple, triples.twin);
    Ok(node)
}

fn collect_subtree(
    node: ForestNode,
    keep: &(impl Fn(&ForestNode) -> bool + Sync),
    out: &mut Vec<ForestNode>,
) {
    let mut stack = vec![node];
    while let Some(node) = stack.pop() {
        for step in Step::ALL {
            if let Some(child) = node.child(step).filter(keep) {
                stack.push(child);
            }
        }
        out.push(node);
    }
}

/// Walk both trees, descending only into nodes accepted by `keep`.
/// `keep` must be monotone: a rejected node has no accepted descendants.
fn walk(keep: impl Fn(&ForestNode) -> bool + Sync) -> Vec<ForestNode> {
    let seeds: Vec<ForestNode> = Root::BOTH
        .into_iter()
        .map(ForestNode::root)
        .filter(|n| keep(n))
        .collect();
    let mut top = seeds.clone();
    let grown: Vec<ForestNode> = seeds
        .iter()
        .flat_map(|root| Step::ALL.into_iter().filter_map(|s| root.child(s)))
        .filter(|n| keep(n))
        .collect();
    let mut nodes: Vec<ForestNode> = grown
        .into_par_iter()
        .flat_map_iter(|seed| {
            let mut out = Vec::new();
            collect_subtree(seed, &keep, &mut out);
            out
        })
        .collect();
    nodes.append(&mut top);
    nodes.par_sort_unstable_by(|x, y| (x.depth, &x.path).cmp(&(y.depth, &y.path)));
    nodes
}

/// Every forest node with `a ≤ max_a`, ordered by depth, then root, then steps.
///
/// Each child's `a` exceeds its parent's, so subtrees are cut at the first
/// node past the bound.
pub fn enumerate_forest(max_a: i128) -> Vec<ForestNode> {
    walk(|n| n.tree_triple.a <= max_a)
}

/// Every node at depth `≤ max_depth`, in the same order as [`enumerate_forest`].
pub fn enumerate_to_depth(max_depth: usize) -> Result<Vec<ForestNode>> {
    let nodes = walk(|n| n.depth <= max_depth);
    let expected = (0..=max_depth as u32)
        .map(|k| 5usize.saturating_pow(k).saturating_mul(2))
        .fold(0usize, usize::saturating_add);
    if nodes.len() != expected {
        // a child was dropped because it left i128
        return Err(Error::Overflow);
    }
    Ok(nodes)
}

/// Tree and twin triple of every node with `a ≤ max_a`, optionally preceded
/// by `(1,1,1)`. Fails if any triple would be emitted twice.
pub fn enumerate_all_triples(max_a: i128, include_equilateral: bool) -> Result<Vec<Triple>> {
    let mut out = Vec::new();
    if include_equilateral && max_a >= 1 {
        out.push(Triple::EQUILATERAL);
    }
    for node in enumerate_forest(max_a) {
        out.push(node.tree_triple);
        out.push(node.twin_triple);
    }
    let mut seen = HashSet::with_capacity(out.len());
    if let Some(dup) = out.iter().find(|t| !seen.insert(**t)) {
        return Err(Error::DuplicateTriple(*dup));
    }
    Ok(out)
}
