//! Property-based tests over random labeled trees (Prüfer-decoded):
//! canonical-form invariance, serialization round trips, counting
//! identities, and monotonicity under leaf removal.

mod common;

use proptest::prelude::*;

use common::prufer_to_tree;
use subtree_iso::canon::{canonical_root, free_code, rooted_code};
use subtree_iso::subtrees::{
    count_subtrees_avoiding, count_subtrees_total, enumerate_subtrees, nr, ns,
    subtrees_containing,
};
use subtree_iso::tree::{join_at_root, parse_tree, serialize_tree, LabeledTree, TreeFormat};

fn tree_strategy(max_n: usize) -> impl Strategy<Value = LabeledTree> {
    (1..=max_n).prop_flat_map(|n| {
        if n == 1 {
            Just(LabeledTree::singleton()).boxed()
        } else {
            proptest::collection::vec(0..n, n - 2)
                .prop_map(move |seq| prufer_to_tree(&seq, n))
                .boxed()
        }
    })
}

/// A random tree together with a random permutation of its vertices.
fn tree_and_perm(max_n: usize) -> impl Strategy<Value = (LabeledTree, Vec<usize>)> {
    tree_strategy(max_n).prop_flat_map(|tree| {
        let n = tree.order();
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(tree), perm)
    })
}

proptest! {
    #[test]
    fn codes_are_relabeling_invariant((tree, perm) in tree_and_perm(12)) {
        let relabeled = tree.relabel(&perm);
        prop_assert_eq!(free_code(&tree), free_code(&relabeled));
        prop_assert_eq!(rooted_code(&tree, 0), rooted_code(&relabeled, perm[0]));
        // The canonical rooted form of the underlying free tree is shared.
        prop_assert_eq!(
            rooted_code(&tree, canonical_root(&tree)),
            rooted_code(&relabeled, canonical_root(&relabeled))
        );
    }

    #[test]
    fn edgelist_roundtrip(tree in tree_strategy(12)) {
        let text = serialize_tree(&tree, TreeFormat::EdgeList).unwrap();
        let parsed = parse_tree(&text, TreeFormat::EdgeList).unwrap();
        prop_assert_eq!(tree.order(), parsed.order());
        prop_assert_eq!(tree.edges(), parsed.edges());
    }

    #[test]
    fn levelseq_roundtrip((tree, perm) in tree_and_perm(12)) {
        let root = perm[0];
        let rooted = tree.clone().with_root(root).unwrap();
        let text = serialize_tree(&rooted, TreeFormat::LevelSeq).unwrap();
        let parsed = parse_tree(&text, TreeFormat::LevelSeq).unwrap();
        prop_assert_eq!(rooted_code(&parsed, 0), rooted_code(&tree, root));
    }

    #[test]
    fn counts_decompose_at_any_vertex((tree, perm) in tree_and_perm(12)) {
        let v = perm[0];
        let total = count_subtrees_total(&tree).unwrap();
        let avoiding = count_subtrees_avoiding(&tree, v).unwrap();
        let containing = subtrees_containing(&tree, v).unwrap().count() as u64;
        prop_assert_eq!(total, avoiding + containing);
        let enumerated = enumerate_subtrees(&tree).unwrap().count() as u64;
        prop_assert_eq!(total, enumerated);
    }

    #[test]
    fn class_counts_are_bounded((tree, perm) in tree_and_perm(12)) {
        let n = tree.order() as u64;
        let total = count_subtrees_total(&tree).unwrap();
        let free_classes = ns(&tree).unwrap();
        prop_assert!(free_classes >= n);
        prop_assert!(free_classes <= total);

        let v = perm[0];
        let rooted = tree.clone().with_root(v).unwrap();
        let rooted_classes = nr(&rooted).unwrap();
        let containing = subtrees_containing(&tree, v).unwrap().count() as u64;
        prop_assert!(rooted_classes >= 1);
        prop_assert!(rooted_classes <= containing);
    }

    #[test]
    fn branches_rejoin_to_the_same_rooted_tree((tree, perm) in tree_and_perm(12)) {
        let root = perm[0];
        let rooted = tree.clone().with_root(root).unwrap();
        let branches = rooted.root_branches().unwrap();
        let rejoined = join_at_root(&branches);
        prop_assert_eq!(rooted_code(&rejoined, 0), rooted_code(&tree, root));
    }

    #[test]
    fn leaf_removal_never_increases_class_counts((tree, perm) in tree_and_perm(12)) {
        let n = tree.order();
        if n < 2 {
            return Ok(());
        }
        let leaf = (0..n).find(|&v| tree.degree(v) == 1).unwrap();
        let rest: Vec<usize> = (0..n).filter(|&v| v != leaf).collect();
        let smaller = tree.induced(&rest).unwrap();
        prop_assert!(ns(&smaller).unwrap() <= ns(&tree).unwrap());

        // Same for rooted counts when the root survives the removal.
        let root = perm[0];
        if root != leaf {
            let local_root = if root < leaf { root } else { root - 1 };
            let a = nr(&smaller.clone().with_root(local_root).unwrap()).unwrap();
            let b = nr(&tree.clone().with_root(root).unwrap()).unwrap();
            prop_assert!(a <= b);
        }
    }
}
