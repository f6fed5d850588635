//! Brute-force enumerators that share no code with the forest, and the
//! verifier comparing the two.
//!
//! `brute_triples` solves `a² = b² + c² − bc` directly. `brute_pairs` and the
//! Stern–Brocot walk enumerate fractions without any of the `A_i` matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;

use crate::eisenstein::{triple_from_pair, Pair, Triple};
use crate::forest::enumerate_forest;

/// Every primitive Eisenstein triple with `c < b` and `a ≤ max_a`.
///
/// Eisenstein with `c < b` forces `c < a < b` and `3b² ≤ 4a²`. For each
/// `(a, b)` in that range, `c² − bc + (b² − a²) = 0` has integer roots
/// `(b ± d)/2` iff `4a² − 3b² = d²` with `d ≡ b (mod 2)`; the two roots are
/// each other's twins.
pub fn brute_triples(max_a: i128) -> BTreeSet<Triple> {
    if max_a < 1 {
        return BTreeSet::new();
    }
    (1..=max_a)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut found = Vec::new();
            let four_a2 = 4 * a * a;
            let mut b = a + 1;
            while 3 * b * b <= four_a2 {
                let disc = four_a2 - 3 * b * b;
                let d = disc.isqrt();
                if d * d == disc && (b - d) % 2 == 0 {
                    for c in [(b - d) / 2, (b + d) / 2] {
                        if 0 < c && c < b && a.gcd(&b).gcd(&c) == 1 {
                            found.push(Triple::new(a, b, c));
                        }
                    }
                }
                b += 1;
            }
            found
        })
        .collect()
}

/// Coprime `0 < n < m ≤ max_m` with `m − n` not divisible by 3.
pub fn brute_pairs(max_m: i128) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for m in 2..=max_m {
        for n in 1..m {
            if n.gcd(&m) == 1 && (m - n) % 3 != 0 {
                out.insert(Pair::new(n, m));
            }
        }
    }
    out
}

/// Primitive triples obtained by feeding every brute-force pair through the
/// Gilder formulas. `a ≥ m²`, so `m ≤ √max_a` is enough.
pub fn gilder_scan_triples(max_a: i128) -> BTreeSet<Triple> {
    if max_a < 1 {
        return BTreeSet::new();
    }
    let mut out = BTreeSet::new();
    for p in brute_pairs(max_a.isqrt() + 1) {
        let tt = triple_from_pair(&p).expect("brute_pairs only yields valid pairs");
        if tt.tree.a <= max_a {
            out.insert(tt.tree);
            out.insert(tt.twin);
        }
    }
    out
}

/// Classical Stern–Brocot walk of `(0/1, 1/1)` by mediants, calling `visit`
/// with each fraction `n/m` and its depth (root `1/2` is depth 1).
fn stern_brocot_walk(max_depth: usize, max_m: i128, mut visit: impl FnMut(Pair, usize)) {
    // (left bound, right bound, depth of their mediant)
    let mut stack = vec![((0i128, 1i128), (1i128, 1i128), 1usize)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let mid = (lo.0 + hi.0, lo.1 + hi.1);
        if depth > max_depth || mid.1 > max_m {
            continue;
        }
        visit(Pair::new(mid.0, mid.1), depth);
        stack.push((lo, mid, depth + 1));
        stack.push((mid, hi, depth + 1));
    }
}

fn keeps_mod3_pattern(p: &Pair) -> bool {
    (p.m - p.n) % 3 != 0
}

/// Survivors of the Stern–Brocot tree cut at `depth` once fractions with
/// `m ≡ n (mod 3)` are dropped; the walk still descends through dropped nodes.
pub fn sb_modified_pairs(depth: usize) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    stern_brocot_walk(depth, i128::MAX, |p, _| {
        if keeps_mod3_pattern(&p) {
            out.insert(p);
        }
    });
    out
}

/// Surviving fractions with denominator `≤ max_m`, each with the depth at
/// which it appears. Denominators grow along every branch, so the walk is finite.
pub fn sb_modified_pairs_up_to(max_m: i128) -> BTreeMap<Pair, usize> {
    let mut out = BTreeMap::new();
    stern_brocot_walk(usize::MAX, max_m, |p, depth| {
        if keeps_mod3_pattern(&p) {
            out.insert(p, depth);
        }
    });
    out
}

/// Forest output against the direct scan for one bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub bound: i128,
    /// Forest nodes with `a ≤ bound`.
    pub node_count: usize,
    /// Tree and twin triples emitted by the forest, with multiplicity.
    pub forest_count: usize,
    pub oracle_count: usize,
    /// In the scan but never emitted by the forest.
    pub missing: Vec<Triple>,
    /// Emitted more than once.
    pub duplicated: Vec<Triple>,
    /// Emitted by the forest but absent from the scan.
    pub unexpected: Vec<Triple>,
    pub ok: bool,
}

pub fn verify_bijection(max_a: i128) -> VerificationReport {
    let nodes = enumerate_forest(max_a);
    let mut emitted: BTreeMap<Triple, usize> = BTreeMap::new();
    for node in &nodes {
        *emitted.entry(node.tree_triple).or_default() += 1;
        *emitted.entry(node.twin_triple).or_default() += 1;
    }
    let forest_count = emitted.values().sum();
    let oracle = brute_triples(max_a);

    let missing: Vec<Triple> = oracle
        .iter()
        .filter(|t| !emitted.contains_key(t))
        .copied()
        .collect();
    let duplicated: Vec<Triple> = emitted
        .iter()
        .filter(|(_, &k)| k > 1)
        .map(|(t, _)| *t)
        .collect();
    let unexpected: Vec<Triple> = emitted
        .keys()
        .filter(|t| !oracle.contains(t))
        .copied()
        .collect();
    let ok = missing.is_empty()
        && duplicated.is_empty()
        && unexpected.is_empty()
        && forest_count == oracle.len();

    VerificationReport {
        bound: max_a,
        node_count: nodes.len(),
        forest_count,
        oracle_count: oracle.len(),
        missing,
        duplicated,
        unexpected,
        ok,
    }
}
