//! The ten exceptional rooted trees: the only rooted trees of order n ≤ 7
//! with nr(T) > 5^(n/4) − 1. They are recovered by exhaustive scan, never
//! hard-coded, and every verifier treats "is exceptional" as rooted-code
//! membership in this catalog.

use crate::bounds;
use crate::canon::{rooted_code, CanonicalCode};
use crate::error::RangeError;
use crate::generate::gen_rooted_trees;
use crate::subtrees::nr;
use crate::tree::LabeledTree;

/// Orders above this satisfy the inequality without exception.
pub const EXCEPTIONAL_MAX_ORDER: usize = 7;

/// One exceptional tree with its data.
#[derive(Debug, Clone)]
pub struct ExceptionalEntry {
    /// The tree, rooted at vertex 0.
    pub tree: LabeledTree,
    pub order: usize,
    pub nr: u64,
    pub code: CanonicalCode,
}

/// All exceptional trees, sorted by (order, nr, code).
#[derive(Debug, Clone)]
pub struct ExceptionalCatalog {
    entries: Vec<ExceptionalEntry>,
}

impl ExceptionalCatalog {
    pub fn entries(&self) -> &[ExceptionalEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rooted-code membership test (the catalog identity check).
    pub fn contains_code(&self, code: &CanonicalCode) -> bool {
        self.entries.iter().any(|e| &e.code == code)
    }

    pub fn orders(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.order).collect()
    }

    pub fn nr_values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.nr).collect()
    }

    pub fn by_order(&self, order: usize) -> Vec<&ExceptionalEntry> {
        self.entries.iter().filter(|e| e.order == order).collect()
    }
}

/// Scan all rooted trees of order 1..=7 and keep those with
/// nr > 5^(n/4) − 1 (exact 4th-power comparison). Expects to find ten.
pub fn find_exceptional() -> ExceptionalCatalog {
    let mut entries = Vec::new();
    for n in 1..=EXCEPTIONAL_MAX_ORDER {
        let stream = gen_rooted_trees(n)
            .map_err(|e: RangeError| e)
            .expect("catalog orders stay within the generator range");
        for tree in stream {
            let value = nr(&tree).expect("small rooted trees stay within counting limits");
            let within = bounds::le_pow5_quarter_minus_one(value.into(), n)
                .expect("small orders stay within 128-bit comparisons");
            if !within {
                entries.push(ExceptionalEntry {
                    order: n,
                    nr: value,
                    code: rooted_code(&tree, 0),
                    tree,
                });
            }
        }
    }
    entries.sort_by(|a, b| {
        (a.order, a.nr, &a.code).cmp(&(b.order, b.nr, &b.code))
    });
    ExceptionalCatalog { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let catalog = find_exceptional();
        assert_eq!(catalog.len(), 10);
        assert_eq!(catalog.orders(), vec![1, 2, 3, 3, 4, 5, 5, 5, 6, 7]);
        assert_eq!(catalog.nr_values(), vec![1, 2, 3, 3, 5, 7, 7, 7, 11, 16]);
    }

    #[test]
    fn catalog_codes_frozen() {
        let catalog = find_exceptional();
        let codes: Vec<&str> = catalog.entries().iter().map(|e| e.code.as_str()).collect();
        assert_eq!(
            codes,
            vec![
                "()",
                "(())",
                "((()))",
                "(()())",
                "((())())",
                "(((()))())",
                "((()())())",
                "((())()())",
                "(((())())())",
                "(((())())()())",
            ]
        );
    }

    #[test]
    fn membership_checks() {
        let catalog = find_exceptional();
        let path2 = rooted_code(&LabeledTree::path(2), 0);
        assert!(catalog.contains_code(&path2));
        let star4 = rooted_code(&LabeledTree::star(4), 0);
        assert!(!catalog.contains_code(&star4));
        assert_eq!(catalog.by_order(5).len(), 3);
        assert_eq!(catalog.by_order(8).len(), 0);
    }

    #[test]
    fn entries_satisfy_bound_without_minus_one() {
        for entry in find_exceptional().entries() {
            assert_eq!(
                bounds::le_pow5_quarter(entry.nr.into(), entry.order),
                Some(true)
            );
        }
    }
}
