//! Exhaustive search for the extremal values S_n = max ns(T) over free
//! trees and R_n = max nr(T) over rooted trees of order n, with every
//! maximizing tree kept as a witness, plus the bound-chain table
//! 2·5^(n/4−2) ≤ S_n ≤ R_n + 3·2^(n/2−1) and R_n ≤ 5^(n/4).

use std::fmt;
use std::fmt::Write as _;

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::bounds;
use crate::canon::{canonical_levelseq, canonical_root, free_code, rooted_code, CanonicalCode};
use crate::error::{CountError, RangeError, SearchError};
use crate::generate::{gen_free_trees, gen_rooted_trees};
use crate::limits::effective_cap;
use crate::subtrees::{nr, ns};
use crate::tree::LabeledTree;

/// Default order cap for the S_n search (raiseable via `SUBTREE_ISO_MAXN`).
pub const DEFAULT_S_MAX: usize = 14;
/// Default order cap for the R_n search (raiseable via `SUBTREE_ISO_MAXN`).
pub const DEFAULT_R_MAX: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    S,
    R,
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalKind::S => "S",
            ExtremalKind::R => "R",
        })
    }
}

/// An extremal value with all trees attaining it.
#[derive(Debug, Clone)]
pub struct ExtremalRecord {
    pub n: usize,
    pub kind: ExtremalKind,
    pub value: u64,
    /// Every maximizing tree, in ascending code order (free codes for S,
    /// rooted codes for R); R witnesses are rooted at vertex 0.
    pub witnesses: Vec<LabeledTree>,
}

impl ExtremalRecord {
    /// Codes of the witnesses, ascending.
    pub fn witness_codes(&self) -> Vec<CanonicalCode> {
        self.witnesses.iter().map(|t| self.code_of(t)).collect()
    }

    fn code_of(&self, tree: &LabeledTree) -> CanonicalCode {
        match self.kind {
            ExtremalKind::S => free_code(tree),
            ExtremalKind::R => rooted_code(tree, 0),
        }
    }

    /// Canonical level sequence of the first witness (rooted at vertex 0
    /// for R, at the canonical centroid root for S).
    pub fn first_witness_levelseq(&self) -> String {
        let Some(tree) = self.witnesses.first() else {
            return String::new();
        };
        let root = match self.kind {
            ExtremalKind::S => canonical_root(tree),
            ExtremalKind::R => 0,
        };
        let seq = canonical_levelseq(tree, root);
        seq.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn csv_header(&self) -> String {
        format!("n,{}_n,witness_count,first_witness_levelseq", self.kind)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.n,
            self.value,
            self.witnesses.len(),
            self.first_witness_levelseq()
        )
    }
}

/// Parallel max-with-witnesses over a tree stream. The merge keeps every
/// argmax, and the final sort by code makes the result independent of the
/// reduction schedule.
fn search<I, F>(stream: I, score: F, kind: ExtremalKind, n: usize) -> Result<ExtremalRecord, CountError>
where
    I: Iterator<Item = LabeledTree> + Send,
    F: Fn(&LabeledTree) -> Result<u64, CountError> + Sync,
{
    let (value, mut witnesses) = stream
        .par_bridge()
        .map(|tree| {
            let v = score(&tree)?;
            Ok((v, vec![tree]))
        })
        .try_reduce(
            || (0u64, Vec::new()),
            |a, b| {
                Ok(match a.0.cmp(&b.0) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => {
                        let (v, mut ws) = a;
                        let (_, mut more) = b;
                        ws.append(&mut more);
                        (v, ws)
                    }
                })
            },
        )?;
    let key = |t: &LabeledTree| match kind {
        ExtremalKind::S => free_code(t),
        ExtremalKind::R => rooted_code(t, 0),
    };
    witnesses.sort_by_key(key);
    Ok(ExtremalRecord {
        n,
        kind,
        value,
        witnesses,
    })
}

fn check_search_range(what: &'static str, n: usize, default_max: usize) -> Result<(), RangeError> {
    let max = effective_cap(default_max);
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

/// S_n: maximum of ns over all free trees of order n, with witnesses.
pub fn compute_s(n: usize) -> Result<ExtremalRecord, SearchError> {
    check_search_range("S_n search", n, DEFAULT_S_MAX)?;
    let stream = gen_free_trees(n)?;
    Ok(search(stream, ns, ExtremalKind::S, n)?)
}

/// R_n: maximum of nr over all rooted trees of order n, with witnesses.
pub fn compute_r(n: usize) -> Result<ExtremalRecord, SearchError> {
    check_search_range("R_n search", n, DEFAULT_R_MAX)?;
    let stream = gen_rooted_trees(n)?;
    Ok(search(stream, nr, ExtremalKind::R, n)?)
}

/// One row of the extremal table. The display columns are floating-point
/// renderings only; `chain_ok` comes from the exact integer comparisons in
/// [`crate::bounds`].
#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: usize,
    pub s: u64,
    pub r: u64,
    pub s_witnesses: usize,
    pub r_witnesses: usize,
    /// 2·5^(n/4−2), the constructive lower bound on S_n.
    pub lower: f64,
    /// R_n + 3·2^(n/2−1), the upper bound on S_n.
    pub s_upper: f64,
    /// 5^(n/4), the upper bound on R_n.
    pub r_upper: f64,
    /// S_n / 5^(n/4).
    pub ratio: f64,
    pub chain_ok: bool,
}

/// The table of S_n, R_n, and the bound chain for n = 1..=max_n.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
}

/// Compute S_n and R_n for every n up to max_n and check the bound chain
/// on each row.
pub fn table(max_n: usize) -> Result<TableReport, SearchError> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let s_rec = compute_s(n)?;
        let r_rec = compute_r(n)?;
        let (s, r) = (s_rec.value, r_rec.value);
        let lower_ok = bounds::ge_twice_pow5_quarter_minus_two(s.into(), n).ok_or(CountError::Overflow)?;
        let middle_ok =
            bounds::le_plus_three_pow2_half_minus_one(s.into(), r.into(), n).ok_or(CountError::Overflow)?;
        let upper_ok = bounds::le_pow5_quarter(r.into(), n).ok_or(CountError::Overflow)?;
        let quarter = 5f64.powf(n as f64 / 4.0);
        rows.push(TableRow {
            n,
            s,
            r,
            s_witnesses: s_rec.witnesses.len(),
            r_witnesses: r_rec.witnesses.len(),
            lower: 2.0 * quarter / 25.0,
            s_upper: r as f64 + 3.0 * 2f64.powf(n as f64 / 2.0 - 1.0),
            r_upper: quarter,
            ratio: s as f64 / quarter,
            chain_ok: lower_ok && middle_ok && upper_ok,
        });
    }
    Ok(TableReport { rows })
}

impl TableReport {
    pub fn s_values(&self) -> Vec<u64> {
        self.rows.iter().map(|row| row.s).collect()
    }

    pub fn r_values(&self) -> Vec<u64> {
        self.rows.iter().map(|row| row.r).collect()
    }

    /// Whether 2·5^(n/4−2) ≤ S_n ≤ R_n + 3·2^(n/2−1) and R_n ≤ 5^(n/4)
    /// held on every row (exact arithmetic).
    pub fn all_bounds_hold(&self) -> bool {
        self.rows.iter().all(|row| row.chain_ok)
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("n,S_n,R_n,lower_2x5^(n/4-2),upper_R_n+3x2^(n/2-1),upper_5^(n/4),ratio_S_n/5^(n/4),bounds_ok\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{:.4},{:.4},{:.4},{:.4},{}",
                row.n, row.s, row.r, row.lower, row.s_upper, row.r_upper, row.ratio, row.chain_ok
            );
        }
        out
    }

    /// Console rendering: the table, then the ratio S_n/5^(n/4) grouped by
    /// residue class of n mod 4 (the scale on which the ratio settles).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>3} {:>6} {:>6} {:>14} {:>18} {:>12} {:>14} {:>7}",
            "n", "S_n", "R_n", "2*5^(n/4-2)", "R_n+3*2^(n/2-1)", "5^(n/4)", "S_n/5^(n/4)", "bounds"
        );
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:>3} {:>6} {:>6} {:>14.4} {:>18.4} {:>12.4} {:>14.4} {:>7}",
                row.n,
                row.s,
                row.r,
                row.lower,
                row.s_upper,
                row.r_upper,
                row.ratio,
                if row.chain_ok { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(out, "\nratio S_n/5^(n/4) by residue class of n:");
        for residue in 0..4usize {
            let entries: Vec<String> = self
                .rows
                .iter()
                .filter(|row| row.n % 4 == residue)
                .map(|row| format!("{:.4} (n={})", row.ratio, row.n))
                .collect();
            if !entries.is_empty() {
                let _ = writeln!(out, "  n = {} (mod 4): {}", residue, entries.join(", "));
            }
        }
        out
    }
}
