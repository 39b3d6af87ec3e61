//! Mechanical verification of the finite checks behind the subtree-count
//! bounds: product inequalities for rooted counts, the strict 5^(n/4) - 1
//! bound with its ten catalogued exceptions, the bounded-multiset join
//! enumeration (576 joins), the centroid splitting bound, and the
//! lower-bound construction.
//!
//! Every driver returns a [`VerificationReport`] listing how many cases were
//! checked and every violation found. All inequality verdicts use exact
//! integer arithmetic from [`crate::bounds`]; an overflow is reported as a
//! violation rather than silently truncated.

use std::fmt::Write as _;

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::bounds;
use crate::canon::{canonical_levelseq, canonical_root, rooted_code};
use crate::construction::{build_construction, construction_bound, MIN_N};
use crate::error::{CountError, RangeError, SearchError};
use crate::exceptional::find_exceptional;
use crate::extremal::compute_r;
use crate::generate::{gen_free_trees, gen_rooted_trees};
use crate::limits;
use crate::subtrees::{count_subtrees_avoiding, nr, ns};
use crate::tree::{join_at_root, LabeledTree};

/// Default order ceiling for the pairwise/branch product inequalities.
pub const DEFAULT_LEMMA_MAX: usize = 11;
/// Default order ceiling for the strict-bound scan over rooted trees.
pub const DEFAULT_AUX_MAX: usize = 12;
/// Default order ceiling for the centroid splitting bound.
pub const DEFAULT_CENTROID_MAX: usize = 12;
/// Default order ceiling for checking the lower-bound construction.
pub const DEFAULT_CONSTRUCTION_MAX: usize = 24;

/// Outcome of one verification driver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Short check identifier (matches the CLI check names).
    pub check: String,
    /// Human-readable description of the range covered.
    pub range: String,
    /// Number of cases examined.
    pub cases: u64,
    /// One line per violated inequality; empty means the check passed.
    pub violations: Vec<String>,
    /// Informational lines (totals, extremal values seen, partitions).
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check {} ({})", self.check, self.range);
        let _ = writeln!(
            out,
            "{} cases checked, {} violations: {}",
            self.cases,
            self.violations.len(),
            self.verdict()
        );
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        for violation in &self.violations {
            let _ = writeln!(out, "  violation: {violation}");
        }
        out
    }

    pub fn csv_header() -> &'static str {
        "check,range,cases,verdict,violations"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            csv_field(&self.check),
            csv_field(&self.range),
            self.cases,
            self.verdict(),
            csv_field(&self.violations.join("; "))
        )
    }

    pub fn to_csv(&self) -> String {
        format!("{}\n{}\n", Self::csv_header(), self.csv_row())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(&[',', '"', '\n'][..]) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn check_verify_range(
    what: &'static str,
    n: usize,
    min: usize,
    default_max: usize,
) -> Result<(), RangeError> {
    let max = limits::effective_cap(default_max);
    if n < min || n > max {
        return Err(RangeError { what, n, min, max });
    }
    Ok(())
}

/// Canonical level sequence of a tree, space-joined, for violation messages.
fn levelseq_str(tree: &LabeledTree) -> String {
    let root = tree.root().unwrap_or_else(|| canonical_root(tree));
    canonical_levelseq(tree, root)
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Verify the two product inequalities for rooted subtree counts:
///
/// 1. For every pair of nontrivial rooted trees `R1`, `R2` whose merge at a
///    shared root has order at most `n_max`:
///    `nr(merge) <= nr(R1) * nr(R2) - 1`.
/// 2. For every rooted tree `T` of order at most `n_max` with root branches
///    `T_1..T_k`: `nr(T) <= prod_j (nr(T_j) + 1)`.
pub fn verify_lemma(n_max: usize) -> Result<VerificationReport, SearchError> {
    check_verify_range("product inequality verification", n_max, 3, DEFAULT_LEMMA_MAX)?;

    let mut cases = 0u64;
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    // Part 1: merges of two nontrivial rooted trees. A merge identifies the
    // two roots, so orders a + b <= n_max + 1 keep the merge within n_max.
    let mut small: Vec<(LabeledTree, u64)> = Vec::new();
    for n in 2..n_max {
        for tree in gen_rooted_trees(n)? {
            let value = nr(&tree)?;
            small.push((tree, value));
        }
    }
    let mut pair_cases = 0u64;
    for i in 0..small.len() {
        for j in i..small.len() {
            let (a, va) = &small[i];
            let (b, vb) = &small[j];
            if a.order() + b.order() > n_max + 1 {
                continue;
            }
            pair_cases += 1;
            let mut branches = a.root_branches().expect("generated trees are rooted");
            branches.extend(b.root_branches().expect("generated trees are rooted"));
            let merged = join_at_root(&branches);
            let merged_value = nr(&merged)?;
            let bound = va
                .checked_mul(*vb)
                .and_then(|p| p.checked_sub(1))
                .ok_or(CountError::Overflow)?;
            if merged_value > bound {
                violations.push(format!(
                    "merge of {} and {}: nr = {merged_value} > {va} * {vb} - 1",
                    levelseq_str(a),
                    levelseq_str(b)
                ));
            }
        }
    }
    cases += pair_cases;
    notes.push(format!(
        "merge inequality: {pair_cases} unordered pairs of nontrivial rooted trees with merged order at most {n_max}"
    ));

    // Part 2: every rooted tree against the product over its root branches.
    let mut tree_cases = 0u64;
    for n in 1..=n_max {
        for tree in gen_rooted_trees(n)? {
            tree_cases += 1;
            let value = nr(&tree)?;
            let mut product: u64 = 1;
            for branch in tree.root_branches().expect("generated trees are rooted") {
                let branch_value = nr(&branch)?;
                product = branch_value
                    .checked_add(1)
                    .and_then(|f| product.checked_mul(f))
                    .ok_or(CountError::Overflow)?;
            }
            if value > product {
                violations.push(format!(
                    "tree {}: nr = {value} > branch product {product}",
                    levelseq_str(&tree)
                ));
            }
        }
    }
    cases += tree_cases;
    notes.push(format!(
        "branch product inequality: {tree_cases} rooted trees of order at most {n_max}"
    ));

    violations.sort();
    Ok(VerificationReport {
        check: "lemma".to_string(),
        range: format!("rooted trees of order at most {n_max}"),
        cases,
        violations,
        notes,
    })
}

/// Outcome of scanning one rooted tree against the strict bound.
enum ScanOutcome {
    /// Within the strict bound.
    Pass,
    /// Exceeds the strict bound but is a catalog tree.
    Excused,
    Violation(String),
}

/// Verify that every rooted tree of order `n <= n_max` satisfies
/// `nr(T) <= 5^(n/4) - 1`, with the catalogued trees as the only
/// exceptions — and that each of those still satisfies the non-strict
/// bound `nr(T) <= 5^(n/4)`.
pub fn verify_aux_inequality(n_max: usize) -> Result<VerificationReport, SearchError> {
    check_verify_range("strict-bound scan", n_max, 1, DEFAULT_AUX_MAX)?;

    let catalog = find_exceptional();
    let mut cases = 0u64;
    let mut excused = 0u64;
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    for n in 1..=n_max {
        let per_tree: Result<Vec<ScanOutcome>, CountError> = gen_rooted_trees(n)?
            .par_bridge()
            .map(|tree| {
                let value = nr(&tree)?;
                let within = bounds::le_pow5_quarter_minus_one(value.into(), n)
                    .ok_or(CountError::Overflow)?;
                Ok(if within {
                    ScanOutcome::Pass
                } else if catalog.contains_code(&rooted_code(&tree, 0)) {
                    ScanOutcome::Excused
                } else {
                    ScanOutcome::Violation(format!(
                        "order {n}: nr = {value} for {} (not in the catalog)",
                        levelseq_str(&tree)
                    ))
                })
            })
            .collect();
        let per_tree = per_tree?;
        cases += per_tree.len() as u64;
        let mut bad = Vec::new();
        for outcome in per_tree {
            match outcome {
                ScanOutcome::Pass => {}
                ScanOutcome::Excused => excused += 1,
                ScanOutcome::Violation(line) => bad.push(line),
            }
        }
        bad.sort();
        violations.append(&mut bad);
    }
    let scanned = cases;

    // The catalog members must be exactly the trees that exceed the strict
    // bound within the scanned range.
    let expected_excused = catalog
        .entries()
        .iter()
        .filter(|e| e.order <= n_max)
        .count() as u64;
    if excused != expected_excused {
        violations.push(format!(
            "expected {expected_excused} catalog trees to exceed the strict bound, found {excused}"
        ));
    }

    // The catalogued exceptions still satisfy the non-strict bound.
    for entry in catalog.entries() {
        cases += 1;
        if bounds::le_pow5_quarter(entry.nr.into(), entry.order) != Some(true) {
            violations.push(format!(
                "catalog tree {}: nr = {} exceeds 5^({}/4)",
                entry.code, entry.nr, entry.order
            ));
        }
    }

    notes.push(format!(
        "{scanned} rooted trees of order at most {n_max} scanned against the strict bound; \
         {excused} exceed it and are all catalog trees"
    ));
    notes.push(format!(
        "{} catalog trees checked against the non-strict bound",
        catalog.len()
    ));

    Ok(VerificationReport {
        check: "aux".to_string(),
        range: format!("rooted trees of order at most {n_max}"),
        cases,
        violations,
        notes,
    })
}

/// Verify the centroid splitting bound: deleting a centroid from a tree of
/// order `n` leaves components `T_1..T_k`, and the number of subtrees
/// avoiding the centroid is at most `sum_i 2^|T_i|`, which is itself at most
/// `3 * 2^(n/2 - 1)`. Checked at every centroid of every free tree.
pub fn verify_centroid_bound(n_max: usize) -> Result<VerificationReport, SearchError> {
    check_verify_range("centroid bound verification", n_max, 1, DEFAULT_CENTROID_MAX)?;

    let mut cases = 0u64;
    let mut violations = Vec::new();

    for n in 1..=n_max {
        for tree in gen_free_trees(n)? {
            for v in tree.centroids() {
                cases += 1;
                let avoiding = u128::from(count_subtrees_avoiding(&tree, v)?);
                let mut sum_pow: u128 = 0;
                for &w in tree.neighbors(v) {
                    let size = tree.component_avoiding(w, v).len();
                    let pow = bounds::pow2(size as u32).ok_or(CountError::Overflow)?;
                    sum_pow = sum_pow.checked_add(pow).ok_or(CountError::Overflow)?;
                }
                if avoiding > sum_pow {
                    violations.push(format!(
                        "tree {} centroid {v}: {avoiding} avoiding subtrees exceed component sum {sum_pow}",
                        levelseq_str(&tree)
                    ));
                }
                let within = bounds::le_three_pow2_half_minus_one(sum_pow, n)
                    .ok_or(CountError::Overflow)?;
                if !within {
                    violations.push(format!(
                        "tree {} centroid {v}: component sum {sum_pow} exceeds 3 * 2^({n}/2 - 1)",
                        levelseq_str(&tree)
                    ));
                }
            }
        }
    }

    violations.sort();
    Ok(VerificationReport {
        check: "centroid".to_string(),
        range: format!("all centroids of free trees of order at most {n_max}"),
        cases,
        violations,
        notes: vec![format!("{cases} (tree, centroid) pairs checked")],
    })
}

fn check_join(
    label: String,
    branches: &[LabeledTree],
    expected_order: Option<usize>,
    expected_nr: Option<u64>,
    cases: &mut u64,
    violations: &mut Vec<String>,
    notes: &mut Vec<String>,
) {
    *cases += 1;
    let joined = join_at_root(branches);
    let order = joined.order();
    if let Some(want) = expected_order {
        if order != want {
            violations.push(format!("{label}: order {order}, expected {want}"));
            return;
        }
    }
    let value = match nr(&joined) {
        Ok(v) => v,
        Err(err) => {
            violations.push(format!("{label}: counting failed: {err}"));
            return;
        }
    };
    if let Some(want) = expected_nr {
        if value != want {
            violations.push(format!("{label}: nr = {value}, expected {want}"));
        }
    }
    // The root of the merge is shared, so the budget is 5^((order - 1)/4).
    match bounds::le_pow5_quarter(value.into(), order - 1) {
        Some(true) => notes.push(format!(
            "{label}: order {order}, nr = {value}, within 5^({}/4)",
            order - 1
        )),
        Some(false) => violations.push(format!(
            "{label}: order {order}, nr = {value} exceeds 5^({}/4)",
            order - 1
        )),
        None => violations.push(format!("{label}: bound comparison overflowed")),
    }
}

/// Verify the named families of merges built from catalog trees:
///
/// - four singleton branches (order 5, nr 5);
/// - three two-vertex branches (order 7, nr 10);
/// - two copies of each catalog tree of order at least 3, with the closed
///   form `nr = (r + 1)(r + 2) / 2` for branch count `r`;
/// - every pair of distinct catalog trees of order at least 5.
///
/// Each merge must satisfy `nr <= 5^((order - 1)/4)`.
pub fn verify_case2_subcases() -> VerificationReport {
    let catalog = find_exceptional();
    let entries = catalog.entries();
    let mut cases = 0u64;
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    let singleton = &entries[0].tree;
    check_join(
        "join of four singleton branches".to_string(),
        &vec![singleton.clone(); 4],
        Some(5),
        Some(5),
        &mut cases,
        &mut violations,
        &mut notes,
    );

    let two_path = &entries[1].tree;
    check_join(
        "join of three two-vertex branches".to_string(),
        &vec![two_path.clone(); 3],
        Some(7),
        Some(10),
        &mut cases,
        &mut violations,
        &mut notes,
    );

    // Two copies of each catalog tree of order >= 3. With r = nr of the
    // branch, the merge realizes every multiset of two root-subtree choices
    // (including "absent"), so nr = (r + 1)(r + 2) / 2.
    for entry in &entries[2..10] {
        let r = entry.nr;
        let expected = (r + 1) * (r + 2) / 2;
        check_join(
            format!("join of two copies of {}", entry.code),
            &[entry.tree.clone(), entry.tree.clone()],
            Some(2 * entry.order + 1),
            Some(expected),
            &mut cases,
            &mut violations,
            &mut notes,
        );
    }

    // Every pair of distinct catalog trees of order >= 5.
    for i in 5..10 {
        for j in (i + 1)..10 {
            check_join(
                format!("join of {} and {}", entries[i].code, entries[j].code),
                &[entries[i].tree.clone(), entries[j].tree.clone()],
                Some(entries[i].order + entries[j].order + 1),
                None,
                &mut cases,
                &mut violations,
                &mut notes,
            );
        }
    }

    VerificationReport {
        check: "case2".to_string(),
        range: "merges built from catalog trees".to_string(),
        cases,
        violations,
        notes,
    }
}

/// Enumerate all 576 joins of bounded branch multisets over the catalog:
/// up to three singletons, up to two two-vertex branches, at most one copy
/// of each of the two order-3 trees and the order-4 tree, and at most one
/// "large" branch (one of the five catalog trees of order at least 5).
///
/// Every join must either reproduce a catalog tree or satisfy the strict
/// bound `nr <= 5^(n/4) - 1`.
pub fn verify_576_cases() -> VerificationReport {
    let catalog = find_exceptional();
    let entries = catalog.entries();
    let mut cases = 0u64;
    let mut exceptional = 0u64;
    let mut pass = 0u64;
    let mut violations = Vec::new();

    for c0 in 0..=3usize {
        for c1 in 0..=2usize {
            for c2 in 0..=1usize {
                for c3 in 0..=1usize {
                    for c4 in 0..=1usize {
                        for big in 0..=5usize {
                            cases += 1;
                            let mut branches: Vec<LabeledTree> = Vec::new();
                            for (idx, &count) in [c0, c1, c2, c3, c4].iter().enumerate() {
                                for _ in 0..count {
                                    branches.push(entries[idx].tree.clone());
                                }
                            }
                            if big > 0 {
                                branches.push(entries[4 + big].tree.clone());
                            }
                            let joined = join_at_root(&branches);
                            let code = rooted_code(&joined, 0);
                            if catalog.contains_code(&code) {
                                exceptional += 1;
                                continue;
                            }
                            let n = joined.order();
                            let value = match nr(&joined) {
                                Ok(v) => v,
                                Err(err) => {
                                    violations
                                        .push(format!("join {code}: counting failed: {err}"));
                                    continue;
                                }
                            };
                            match bounds::le_pow5_quarter_minus_one(value.into(), n) {
                                Some(true) => pass += 1,
                                Some(false) => violations.push(format!(
                                    "join {code}: order {n}, nr = {value} exceeds 5^({n}/4) - 1"
                                )),
                                None => violations
                                    .push(format!("join {code}: bound comparison overflowed")),
                            }
                        }
                    }
                }
            }
        }
    }

    if cases != 576 {
        violations.push(format!("expected 576 joins, enumerated {cases}"));
    }
    if exceptional != 10 {
        violations.push(format!(
            "expected 10 joins to reproduce catalog trees, found {exceptional}"
        ));
    }

    VerificationReport {
        check: "cases576".to_string(),
        range: "joins of bounded branch multisets over the catalog".to_string(),
        cases,
        violations,
        notes: vec![format!(
            "{cases} joins enumerated: {pass} satisfy the strict bound, {exceptional} reproduce catalog trees"
        )],
    }
}

/// Verify the lower-bound construction for every order `8 <= n <= n_max`:
/// the built tree has order `n`, its diameter is realized exactly by the two
/// intended endpoint pairs, `ns` meets the claimed bound, and the claimed
/// bound dominates `2 * 5^(n/4 - 2)`.
pub fn verify_construction(n_max: usize) -> Result<VerificationReport, SearchError> {
    check_verify_range(
        "construction verification",
        n_max,
        MIN_N,
        DEFAULT_CONSTRUCTION_MAX,
    )?;

    let mut cases = 0u64;
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    for n in MIN_N..=n_max {
        cases += 1;
        let construction = build_construction(n)?;
        if construction.tree.order() != n {
            violations.push(format!(
                "n = {n}: built order {}",
                construction.tree.order()
            ));
            continue;
        }
        if !construction.diameter_pairs_ok() {
            violations.push(format!(
                "n = {n}: diameter pairs {:?} differ from the intended {:?}",
                construction.tree.diameter_pairs(),
                construction.expected_diameter_pairs()
            ));
        }
        let value = ns(&construction.tree)?;
        let bound = construction_bound(n).map_err(SearchError::Range)?;
        if u128::from(value) < bound {
            violations.push(format!("n = {n}: ns = {value} below the claimed bound {bound}"));
        }
        match bounds::ge_twice_pow5_quarter_minus_two(bound, n) {
            Some(true) => {}
            Some(false) => violations.push(format!(
                "n = {n}: claimed bound {bound} below 2 * 5^({n}/4 - 2)"
            )),
            None => violations.push(format!("n = {n}: bound comparison overflowed")),
        }
        notes.push(format!("n = {n}: ns = {value}, claimed bound = {bound}"));
    }

    Ok(VerificationReport {
        check: "construction".to_string(),
        range: format!("constructed trees of order {MIN_N}..={n_max}"),
        cases,
        violations,
        notes,
    })
}

/// Re-derive the exceptional catalog and verify its shape: exactly ten
/// trees with the expected order and nr multisets, each within the
/// non-strict bound, and for orders 4..=7 each catalog member attains the
/// rooted maximum `R_n`.
pub fn verify_exceptional() -> VerificationReport {
    let catalog = find_exceptional();
    let mut cases = 0u64;
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    cases += 1;
    if catalog.len() != 10 {
        violations.push(format!("expected 10 catalog trees, found {}", catalog.len()));
    }
    cases += 1;
    let expected_orders = vec![1usize, 2, 3, 3, 4, 5, 5, 5, 6, 7];
    if catalog.orders() != expected_orders {
        violations.push(format!("orders {:?} differ from expected", catalog.orders()));
    }
    cases += 1;
    let expected_nr = vec![1u64, 2, 3, 3, 5, 7, 7, 7, 11, 16];
    if catalog.nr_values() != expected_nr {
        violations.push(format!(
            "nr values {:?} differ from expected",
            catalog.nr_values()
        ));
    }

    for entry in catalog.entries() {
        cases += 1;
        if bounds::le_pow5_quarter(entry.nr.into(), entry.order) != Some(true) {
            violations.push(format!(
                "catalog tree {}: nr = {} exceeds 5^({}/4)",
                entry.code, entry.nr, entry.order
            ));
        }
    }

    for n in 4..=7usize {
        cases += 1;
        let record = compute_r(n).expect("orders 4..=7 are within the search range");
        let members = catalog.by_order(n);
        if members.is_empty() || members.iter().any(|e| e.nr != record.value) {
            violations.push(format!(
                "order {n}: catalog members do not attain the rooted maximum {}",
                record.value
            ));
        } else {
            notes.push(format!(
                "order {n}: {} catalog member(s) attain the rooted maximum {}",
                members.len(),
                record.value
            ));
        }
    }

    VerificationReport {
        check: "exceptional".to_string(),
        range: "rooted trees of order at most 7".to_string(),
        cases,
        violations,
        notes,
    }
}
