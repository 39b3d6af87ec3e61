//! The lower-bound family C_n (n ≥ 8): a tree with many nonisomorphic
//! subtrees, witnessing S_n ≥ 2·5^(n/4−2).
//!
//! Its core is a path v_1..v_m with m = ⌊n/4⌋ − 2, each v_i carrying one
//! pendant leaf and one pendant 2-path (so each v_i contributes five
//! subtree shapes around itself, the source of the 5^m growth). The ends
//! are asymmetric gadgets: x_1−x_2−x_3 on the left with an extra leaf z on
//! x_2, and y_1−y_2−y_3 on the right. Leftover vertices (n mod 4 of them,
//! beyond the base 8) become extra leaves on x_3 and y_1. The asymmetry
//! makes (x_1,y_3) and (z,y_3) the only diameter pairs, so distinct
//! decorations of the core are never identified by a flip.

use crate::bounds;
use crate::error::RangeError;
use crate::tree::LabeledTree;

/// Smallest order with a construction.
pub const MIN_N: usize = 8;
/// Largest supported order; keeps the closed-form bound within 128 bits.
pub const MAX_N: usize = 220;

/// C_n with its named vertices.
#[derive(Debug, Clone)]
pub struct Construction {
    pub n: usize,
    /// Core length ⌊n/4⌋ − 2.
    pub m: usize,
    pub tree: LabeledTree,
    /// Left end path x_1−x_2−x_3.
    pub x: [usize; 3],
    /// Core vertices v_1..v_m (empty when m = 0).
    pub v: Vec<usize>,
    /// Right end path y_1−y_2−y_3.
    pub y: [usize; 3],
    /// The leaf on x_2 that seconds x_1 as a diameter endpoint.
    pub z: usize,
    /// The pendant leaf on each v_i.
    pub leaf_at_v: Vec<usize>,
    /// The pendant 2-path a_i−b_i on each v_i (a_i adjacent to v_i).
    pub path_at_v: Vec<(usize, usize)>,
    /// Residue-dependent extra leaves on x_3.
    pub extra_at_x3: Vec<usize>,
    /// Residue-dependent extra leaves on y_1.
    pub extra_at_y1: Vec<usize>,
}

impl Construction {
    /// The two vertex pairs that must be the only diameter pairs.
    pub fn expected_diameter_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = vec![
            ordered(self.x[0], self.y[2]),
            ordered(self.z, self.y[2]),
        ];
        pairs.sort_unstable();
        pairs
    }

    /// Whether the tree's diameter pairs are exactly the expected two.
    pub fn diameter_pairs_ok(&self) -> bool {
        self.tree.diameter_pairs() == self.expected_diameter_pairs()
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_range(what: &'static str, n: usize) -> Result<(), RangeError> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(RangeError {
            what,
            n,
            min: MIN_N,
            max: MAX_N,
        });
    }
    Ok(())
}

/// Number of extra leaves on x_3 and on y_1 for each residue n mod 4.
fn extra_leaf_counts(n: usize) -> (usize, usize) {
    match n % 4 {
        0 => (1, 0),
        1 => (1, 1),
        2 => (2, 1),
        _ => (2, 2),
    }
}

/// Build C_n.
pub fn build_construction(n: usize) -> Result<Construction, RangeError> {
    check_range("construction", n)?;
    let m = n / 4 - 2;
    let x = [0, 1, 2];
    let v: Vec<usize> = (0..m).map(|i| 3 + i).collect();
    let y = [3 + m, 4 + m, 5 + m];
    let z = 6 + m;
    let mut next = 7 + m;
    let mut edges: Vec<(usize, usize)> = vec![(x[0], x[1]), (x[1], x[2]), (x[1], z)];
    // backbone through the core
    let mut prev = x[2];
    for &vi in &v {
        edges.push((prev, vi));
        prev = vi;
    }
    edges.push((prev, y[0]));
    edges.push((y[0], y[1]));
    edges.push((y[1], y[2]));
    // decorations on each core vertex
    let mut leaf_at_v = Vec::with_capacity(m);
    let mut path_at_v = Vec::with_capacity(m);
    for &vi in &v {
        let leaf = next;
        let a = next + 1;
        let b = next + 2;
        next += 3;
        edges.push((vi, leaf));
        edges.push((vi, a));
        edges.push((a, b));
        leaf_at_v.push(leaf);
        path_at_v.push((a, b));
    }
    // residue-dependent extra leaves
    let (k_x3, k_y1) = extra_leaf_counts(n);
    let extra_at_x3: Vec<usize> = (0..k_x3).map(|i| next + i).collect();
    next += k_x3;
    let extra_at_y1: Vec<usize> = (0..k_y1).map(|i| next + i).collect();
    next += k_y1;
    for &leaf in &extra_at_x3 {
        edges.push((x[2], leaf));
    }
    for &leaf in &extra_at_y1 {
        edges.push((y[0], leaf));
    }
    debug_assert_eq!(next, n, "vertex layout must use exactly n vertices");
    let tree = LabeledTree::from_edges(n, &edges).expect("construction layout is a tree");
    Ok(Construction {
        n,
        m,
        tree,
        x,
        v,
        y,
        z,
        leaf_at_v,
        path_at_v,
        extra_at_x3,
        extra_at_y1,
    })
}

/// The closed-form lower bound on ns(C_n): 2, 4, 6, or 9 times 5^m for
/// n ≡ 0, 1, 2, 3 (mod 4). Always at least 2·5^(n/4−2).
pub fn construction_bound(n: usize) -> Result<u128, RangeError> {
    check_range("construction bound", n)?;
    let m = (n / 4 - 2) as u32;
    let factor: u128 = [2, 4, 6, 9][n % 4];
    let bound = factor
        .checked_mul(bounds::pow5(m).expect("5^m fits for supported n"))
        .expect("bound fits for supported n");
    if let Some(dominates) = bounds::ge_twice_pow5_quarter_minus_two(bound, n) {
        debug_assert!(dominates, "closed form must dominate 2*5^(n/4-2)");
    }
    Ok(bound)
}
