//! Cross-validation against independent oracles: permutation-based
//! isomorphism testing, Prüfer-sequence enumeration of all labeled trees,
//! and bitmask connectivity scans. These never share code with the library
//! paths they check.

mod common;

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{
    connected_subsets_bruteforce, prufer_to_tree, random_permutation,
    rooted_isomorphic_bruteforce, subset_connected, unrooted_isomorphic_bruteforce,
};
use subtree_iso::canon::{free_code, rooted_code};
use subtree_iso::generate::{gen_free_trees, gen_rooted_trees};
use subtree_iso::subtrees::{
    count_subtrees_avoiding, count_subtrees_total, enumerate_subtrees, nr, ns,
};
use subtree_iso::tree::LabeledTree;

/// Rooted codes agree exactly with brute-force root-preserving isomorphism
/// on every pair of rooted trees of order up to 6.
#[test]
fn rooted_code_equals_permutation_isomorphism() {
    for n in 1..=6usize {
        let trees: Vec<LabeledTree> = gen_rooted_trees(n).unwrap().collect();
        let codes: Vec<_> = trees.iter().map(|t| rooted_code(t, 0)).collect();
        for i in 0..trees.len() {
            for j in i..trees.len() {
                let same_code = codes[i] == codes[j];
                let isomorphic = rooted_isomorphic_bruteforce(&trees[i], 0, &trees[j], 0);
                assert_eq!(
                    same_code, isomorphic,
                    "order {n}: codes {} vs {}",
                    codes[i], codes[j]
                );
            }
        }
    }
}

/// Free codes agree exactly with brute-force unrooted isomorphism on every
/// pair of free trees of order up to 7.
#[test]
fn free_code_equals_permutation_isomorphism() {
    for n in 1..=7usize {
        let trees: Vec<LabeledTree> = gen_free_trees(n).unwrap().collect();
        let codes: Vec<_> = trees.iter().map(free_code).collect();
        for i in 0..trees.len() {
            for j in i..trees.len() {
                let same_code = codes[i] == codes[j];
                let isomorphic = unrooted_isomorphic_bruteforce(&trees[i], &trees[j]);
                assert_eq!(
                    same_code, isomorphic,
                    "order {n}: codes {} vs {}",
                    codes[i], codes[j]
                );
            }
        }
    }
}

/// Codes are invariant under random relabelings, and the relabeled tree is
/// isomorphic to the original per the permutation oracle.
#[test]
fn codes_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE);
    for n in 2..=7usize {
        for tree in gen_rooted_trees(n).unwrap() {
            let base_rooted = rooted_code(&tree, 0);
            let base_free = free_code(&tree);
            for _ in 0..3 {
                let perm = random_permutation(&mut rng, n);
                let relabeled = tree.relabel(&perm);
                assert_eq!(rooted_code(&relabeled, perm[0]), base_rooted);
                assert_eq!(free_code(&relabeled), base_free);
                assert!(rooted_isomorphic_bruteforce(&tree, 0, &relabeled, perm[0]));
            }
        }
    }
}

/// Decoding every Prüfer sequence yields every labeled tree; the distinct
/// free codes among them must be exactly the generator's output.
#[test]
fn prufer_classes_match_free_generator() {
    for n in 2..=8usize {
        let mut seen: HashSet<String> = HashSet::new();
        let total = (n as u64).pow(n as u32 - 2);
        let mut seq = vec![0usize; n - 2];
        for k in 0..total {
            let mut value = k;
            for digit in seq.iter_mut() {
                *digit = (value % n as u64) as usize;
                value /= n as u64;
            }
            let tree = prufer_to_tree(&seq, n);
            seen.insert(free_code(&tree).as_str().to_string());
        }
        let generated: HashSet<String> = gen_free_trees(n)
            .unwrap()
            .map(|t| free_code(&t).as_str().to_string())
            .collect();
        assert_eq!(seen, generated, "free classes at order {n}");
    }
}

/// Rooting every labeled tree at every vertex yields every rooted tree;
/// the distinct rooted codes must be exactly the generator's output.
#[test]
fn prufer_classes_match_rooted_generator() {
    for n in 2..=7usize {
        let mut seen: HashSet<String> = HashSet::new();
        let total = (n as u64).pow(n as u32 - 2);
        let mut seq = vec![0usize; n - 2];
        for k in 0..total {
            let mut value = k;
            for digit in seq.iter_mut() {
                *digit = (value % n as u64) as usize;
                value /= n as u64;
            }
            let tree = prufer_to_tree(&seq, n);
            for root in 0..n {
                seen.insert(rooted_code(&tree, root).as_str().to_string());
            }
        }
        let generated: HashSet<String> = gen_rooted_trees(n)
            .unwrap()
            .map(|t| rooted_code(&t, 0).as_str().to_string())
            .collect();
        assert_eq!(seen, generated, "rooted classes at order {n}");
    }
}

/// The anchored enumerator finds exactly the subsets the bitmask scan finds.
#[test]
fn enumerator_matches_bitmask_scan() {
    for n in 1..=10usize {
        for tree in gen_free_trees(n).unwrap() {
            let mut enumerated: Vec<Vec<usize>> = enumerate_subtrees(&tree)
                .unwrap()
                .map(|s| s.vertices())
                .collect();
            enumerated.sort();
            let mut brute = connected_subsets_bruteforce(&tree);
            brute.sort();
            assert_eq!(enumerated, brute, "subsets at order {n}");
            assert_eq!(
                count_subtrees_total(&tree).unwrap(),
                brute.len() as u64,
                "total at order {n}"
            );
        }
    }
}

/// The avoiding-count product formula matches filtering the bitmask scan.
#[test]
fn avoiding_count_matches_bitmask_scan() {
    for n in 1..=8usize {
        for tree in gen_free_trees(n).unwrap() {
            let brute = connected_subsets_bruteforce(&tree);
            for v in 0..n {
                let expected = brute.iter().filter(|s| !s.contains(&v)).count() as u64;
                assert_eq!(count_subtrees_avoiding(&tree, v).unwrap(), expected);
            }
        }
    }
}

/// `nr` agrees with grouping root-containing subsets into classes by
/// brute-force root-preserving isomorphism.
#[test]
fn nr_matches_permutation_grouping() {
    for n in 1..=6usize {
        for tree in gen_rooted_trees(n).unwrap() {
            let mut representatives: Vec<LabeledTree> = Vec::new();
            for mask in 1u64..(1 << n) {
                if mask & 1 == 0 || !subset_connected(&tree, mask) {
                    continue;
                }
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                // Vertex 0 (the root) sorts first, so the local root is 0.
                let sub = tree.induced(&verts).unwrap();
                if !representatives
                    .iter()
                    .any(|r| rooted_isomorphic_bruteforce(r, 0, &sub, 0))
                {
                    representatives.push(sub);
                }
            }
            assert_eq!(
                nr(&tree).unwrap(),
                representatives.len() as u64,
                "nr at order {n}"
            );
        }
    }
}

/// `ns` agrees with grouping all subsets into classes by brute-force
/// unrooted isomorphism.
#[test]
fn ns_matches_permutation_grouping() {
    for n in 1..=6usize {
        for tree in gen_free_trees(n).unwrap() {
            let mut representatives: Vec<LabeledTree> = Vec::new();
            for mask in 1u64..(1 << n) {
                if !subset_connected(&tree, mask) {
                    continue;
                }
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let sub = tree.induced(&verts).unwrap();
                if !representatives
                    .iter()
                    .any(|r| unrooted_isomorphic_bruteforce(r, &sub))
                {
                    representatives.push(sub);
                }
            }
            assert_eq!(
                ns(&tree).unwrap(),
                representatives.len() as u64,
                "ns at order {n}"
            );
        }
    }
}

/// Centroids minimize the total distance to all vertices; centers minimize
/// the eccentricity. Checked against direct recomputation.
#[test]
fn centroids_and_centers_match_definitions() {
    for n in 1..=9usize {
        for tree in gen_free_trees(n).unwrap() {
            let sums: Vec<usize> = (0..n)
                .map(|v| tree.distances_from(v).iter().sum())
                .collect();
            let best = *sums.iter().min().unwrap();
            let expected: Vec<usize> = (0..n).filter(|&v| sums[v] == best).collect();
            assert_eq!(tree.centroids(), expected, "centroids at order {n}");

            let eccs: Vec<usize> = (0..n)
                .map(|v| *tree.distances_from(v).iter().max().unwrap())
                .collect();
            let best = *eccs.iter().min().unwrap();
            let expected: Vec<usize> = (0..n).filter(|&v| eccs[v] == best).collect();
            assert_eq!(tree.centers(), expected, "centers at order {n}");
        }
    }
}

/// Generator streams never repeat a canonical code, through order 12, and
/// their lengths match the known counts of rooted and free trees.
#[test]
fn generator_streams_are_duplicate_free() {
    const ROOTED: [usize; 12] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766];
    const FREE: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

    for n in 1..=12usize {
        let mut codes = HashSet::new();
        for tree in gen_rooted_trees(n).unwrap() {
            let code = rooted_code(&tree, 0);
            assert!(
                codes.insert(code.as_str().to_owned()),
                "duplicate rooted code {code} at order {n}"
            );
        }
        assert_eq!(codes.len(), ROOTED[n - 1], "rooted stream length at order {n}");

        let mut codes = HashSet::new();
        for tree in gen_free_trees(n).unwrap() {
            let code = free_code(&tree);
            assert!(
                codes.insert(code.as_str().to_owned()),
                "duplicate free code {code} at order {n}"
            );
        }
        assert_eq!(codes.len(), FREE[n - 1], "free stream length at order {n}");
    }
}
