//! Exhaustive, duplicate-free generation of rooted and free trees.
//!
//! Rooted isomorphism classes of order n correspond one-to-one with
//! canonical level sequences: depth lists in preorder, lexicographically
//! maximal over reorderings of branches. Starting from the path
//! `(1,2,...,n)` and repeatedly applying a successor rule walks all
//! canonical sequences in decreasing lexicographic order, ending at the
//! star `(1,2,2,...,2)`.
//!
//! Free trees are the rooted stream filtered to trees whose rooted code
//! equals the code at the canonical centroid root, which keeps exactly one
//! rooted representative per free isomorphism class.

use std::fmt;

use crate::canon::{canonical_levelseq, canonical_root, rooted_code};
use crate::error::{RangeError, TreeError};
use crate::limits::effective_cap;
use crate::tree::{levelseq_to_tree, validate_levelseq, LabeledTree};

/// Default generator order cap (raiseable via `SUBTREE_ISO_MAXN`).
pub const DEFAULT_GEN_MAX: usize = 18;

/// A level sequence: the depth list of a rooted tree in preorder. The
/// generator only ever produces canonical ones (see [`LevelSequence::is_canonical`]),
/// under which each rooted isomorphism class appears exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LevelSequence {
    values: Vec<usize>,
}

impl LevelSequence {
    /// Wrap a depth list, validating the level-sequence shape (first value
    /// 1, each later value in `2..=previous+1`).
    pub fn new(values: Vec<usize>) -> Result<Self, TreeError> {
        validate_levelseq(&values)?;
        Ok(LevelSequence { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Decode into a tree rooted at vertex 0.
    pub fn to_tree(&self) -> LabeledTree {
        levelseq_to_tree(&self.values)
    }

    /// Whether this is the canonical sequence of its rooted tree (branches
    /// in canonical order).
    pub fn is_canonical(&self) -> bool {
        canonical_levelseq(&self.to_tree(), 0) == self.values
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Streams all canonical level sequences of a given order.
pub struct RootedSeqIter {
    levels: Option<Vec<usize>>,
}

impl Iterator for RootedSeqIter {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        let current = self.levels.take()?;
        self.levels = successor(&current);
        Some(LevelSequence { values: current })
    }
}

/// The next canonical sequence in decreasing lexicographic order: find the
/// rightmost position p deeper than level 2, back up to the previous vertex
/// q one level shallower (the new parent), and repeat the block starting at
/// q as often as the tail allows. Returns None after the star.
fn successor(levels: &[usize]) -> Option<Vec<usize>> {
    let p = (0..levels.len()).rev().find(|&i| levels[i] > 2)?;
    let q = (0..p)
        .rev()
        .find(|&i| levels[i] == levels[p] - 1)
        .expect("a shallower vertex precedes p");
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

fn check_range(what: &'static str, n: usize) -> Result<(), RangeError> {
    let max = effective_cap(DEFAULT_GEN_MAX);
    if n < 1 || n > max {
        return Err(RangeError {
            what,
            n,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// All canonical level sequences of order n, lazily.
pub fn gen_rooted_seqs(n: usize) -> Result<RootedSeqIter, RangeError> {
    check_range("rooted tree generation", n)?;
    Ok(RootedSeqIter {
        levels: Some((1..=n).collect()),
    })
}

/// All rooted trees of order n, one per rooted isomorphism class, each
/// rooted at vertex 0.
pub fn gen_rooted_trees(
    n: usize,
) -> Result<impl Iterator<Item = LabeledTree> + Send, RangeError> {
    check_range("rooted tree generation", n)?;
    Ok(RootedSeqIter {
        levels: Some((1..=n).collect()),
    }
    .map(|seq| seq.to_tree()))
}

/// All free trees of order n, one per free isomorphism class, unrooted.
pub fn gen_free_trees(n: usize) -> Result<impl Iterator<Item = LabeledTree> + Send, RangeError> {
    check_range("free tree generation", n)?;
    Ok(RootedSeqIter {
        levels: Some((1..=n).collect()),
    }
    .filter_map(|seq| {
        let tree = seq.to_tree();
        // keep exactly the rooted representative whose code matches the
        // canonical centroid rooting of its free tree
        if rooted_code(&tree, 0) == rooted_code(&tree, canonical_root(&tree)) {
            Some(tree.unrooted())
        } else {
            None
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::free_code;
    use std::collections::HashSet;

    // classes of rooted / free trees for orders 1..10
    const ROOTED_COUNTS: [usize; 10] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
    const FREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

    #[test]
    fn rooted_counts_match_known_values() {
        for (i, &expect) in ROOTED_COUNTS.iter().enumerate() {
            assert_eq!(gen_rooted_trees(i + 1).unwrap().count(), expect, "n={}", i + 1);
        }
    }

    #[test]
    fn free_counts_match_known_values() {
        for (i, &expect) in FREE_COUNTS.iter().enumerate() {
            assert_eq!(gen_free_trees(i + 1).unwrap().count(), expect, "n={}", i + 1);
        }
    }

    #[test]
    fn rooted_stream_is_duplicate_free() {
        for n in 1..=8 {
            let codes: HashSet<String> = gen_rooted_trees(n)
                .unwrap()
                .map(|t| rooted_code(&t, 0).as_str().to_string())
                .collect();
            assert_eq!(codes.len(), ROOTED_COUNTS[n - 1]);
        }
    }

    #[test]
    fn free_stream_is_duplicate_free() {
        for n in 1..=8 {
            let codes: HashSet<String> = gen_free_trees(n)
                .unwrap()
                .map(|t| free_code(&t).as_str().to_string())
                .collect();
            assert_eq!(codes.len(), FREE_COUNTS[n - 1]);
        }
    }

    #[test]
    fn sequences_are_canonical_and_ordered() {
        for n in 1..=8 {
            let seqs: Vec<LevelSequence> = gen_rooted_seqs(n).unwrap().collect();
            assert_eq!(seqs.first().unwrap().values(), (1..=n).collect::<Vec<_>>());
            let star: Vec<usize> =
                std::iter::once(1).chain(std::iter::repeat(2).take(n - 1)).collect();
            assert_eq!(seqs.last().unwrap().values(), star);
            for pair in seqs.windows(2) {
                assert!(pair[0] > pair[1], "stream must strictly decrease");
            }
            for seq in &seqs {
                assert!(seq.is_canonical(), "non-canonical {} for n={}", seq, n);
            }
        }
    }

    #[test]
    fn order_four_stream_exactly() {
        let seqs: Vec<String> = gen_rooted_seqs(4).unwrap().map(|s| s.to_string()).collect();
        assert_eq!(seqs, vec!["1 2 3 4", "1 2 3 3", "1 2 3 2", "1 2 2 2"]);
    }

    #[test]
    fn range_checks() {
        assert!(gen_rooted_trees(0).is_err());
        assert!(gen_rooted_trees(DEFAULT_GEN_MAX + 1).is_err());
        assert!(gen_free_trees(0).is_err());
        assert!(LevelSequence::new(vec![1, 2, 4]).is_err());
        assert_eq!(LevelSequence::new(vec![1, 2, 2]).unwrap().order(), 3);
    }
}
