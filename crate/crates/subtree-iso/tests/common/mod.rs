//! Shared helpers for integration tests: oracles built from first
//! principles (bitmask connectivity scans, Prüfer decoding, permutation
//! isomorphism) and seeded random tree generation. None of these reuse the
//! library's enumeration or canonization code paths.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::Rng;
use subtree_iso::tree::LabeledTree;

/// Decode a Prüfer sequence into the labeled tree on `n >= 2` vertices.
pub fn prufer_to_tree(seq: &[usize], n: usize) -> LabeledTree {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        assert!(s < n);
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    LabeledTree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// A uniformly random labeled tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> LabeledTree {
    match n {
        0 => panic!("trees have at least one vertex"),
        1 => LabeledTree::singleton(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_to_tree(&seq, n)
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Is the vertex subset given by `mask` connected in `tree`?
pub fn subset_connected(tree: &LabeledTree, mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            let bit = 1u64 << w;
            if mask & bit != 0 && seen & bit == 0 {
                seen |= bit;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Every connected vertex subset, found by scanning all 2^n - 1 bitmasks.
/// Returned in ascending mask order with each subset sorted ascending.
pub fn connected_subsets_bruteforce(tree: &LabeledTree) -> Vec<Vec<usize>> {
    let n = tree.order();
    assert!(n <= 20, "bitmask scan oracle is for small trees");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if subset_connected(tree, mask) {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edge_set(tree: &LabeledTree) -> Vec<(usize, usize)> {
    tree.edges()
}

fn mapped_edges(tree: &LabeledTree, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Unrooted isomorphism by trying every vertex bijection. Usable up to
/// order 8 or so.
pub fn unrooted_isomorphic_bruteforce(a: &LabeledTree, b: &LabeledTree) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let target = edge_set(b);
    all_permutations(a.order())
        .iter()
        .any(|perm| mapped_edges(a, perm) == target)
}

/// Root-preserving isomorphism by trying every vertex bijection that maps
/// `root_a` to `root_b`.
pub fn rooted_isomorphic_bruteforce(
    a: &LabeledTree,
    root_a: usize,
    b: &LabeledTree,
    root_b: usize,
) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let target = edge_set(b);
    all_permutations(a.order())
        .iter()
        .filter(|perm| perm[root_a] == root_b)
        .any(|perm| mapped_edges(a, perm) == target)
}
