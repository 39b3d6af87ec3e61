//! Subtree enumeration and the two isomorphism-class counts:
//! `ns` (classes of subtrees of a free tree) and `nr` (classes of
//! root-containing subtrees of a rooted tree, under root-preserving
//! isomorphism).
//!
//! A subtree is a nonempty vertex subset inducing a connected subgraph.
//! Enumeration represents subsets as 64-bit masks and emits each subset
//! exactly once by anchoring it at its minimum vertex. The labeled total is
//! also computed by an independent product formula over a rooted
//! orientation, so the two routes can be cross-checked.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::canon::{free_code, join_codes, rooted_code, CanonicalCode};
use crate::error::CountError;
use crate::tree::LabeledTree;

/// Largest order the bitmask subset enumeration supports.
pub const MAX_ENUM_ORDER: usize = 64;
/// Largest order for which the labeled total is guaranteed to fit in 64 bits.
pub const MAX_TOTAL_ORDER: usize = 60;
/// Largest order accepted by the brute-force rooted class count.
pub const MAX_BRUTEFORCE_ORDER: usize = 25;
/// Default cap on intermediate class-set sizes in the rooted set DP.
pub const DEFAULT_SET_CAP: usize = 10_000_000;

static SET_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SET_CAP);

/// Current process-wide cap used by [`nr_set`].
pub fn set_cap() -> usize {
    SET_CAP.load(Ordering::Relaxed)
}

/// Override the process-wide intermediate-set cap (minimum 1).
pub fn configure_set_cap(cap: usize) {
    SET_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// A set of vertices of a tree of order ≤ 64, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn contains(self, v: usize) -> bool {
        v < MAX_ENUM_ORDER && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Member vertices in ascending order.
    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        out
    }
}

struct Frame {
    set: u64,
    /// Vertices already in the set, offered as candidates, or permanently
    /// excluded on this branch; never offered again below this frame.
    seen: u64,
    /// Candidate extension vertices still open for this frame.
    ext: Vec<u8>,
}

/// Streams every connected vertex subset exactly once.
///
/// Uniqueness comes from two rules: in full mode, each subset is produced
/// only while seeded from its minimum vertex (larger vertices only are added
/// on top of the anchor); within one seed, a candidate list is walked
/// left to right and each branch commits to including its candidate while
/// excluding all earlier ones.
pub struct SubtreeIter<'a> {
    tree: &'a LabeledTree,
    stack: Vec<Frame>,
    /// Smallest vertex admissible on top of the current anchor.
    low: usize,
    /// Next anchor to seed in full mode; `None` in fixed-anchor mode.
    next_anchor: Option<usize>,
}

impl<'a> SubtreeIter<'a> {
    fn check_order(tree: &LabeledTree, op: &'static str) -> Result<(), CountError> {
        if tree.order() > MAX_ENUM_ORDER {
            return Err(CountError::OrderCap {
                op,
                order: tree.order(),
                max: MAX_ENUM_ORDER,
            });
        }
        Ok(())
    }

    fn all(tree: &'a LabeledTree) -> Result<Self, CountError> {
        Self::check_order(tree, "enumerate_subtrees")?;
        Ok(SubtreeIter {
            tree,
            stack: Vec::new(),
            low: 0,
            next_anchor: Some(0),
        })
    }

    fn containing(tree: &'a LabeledTree, anchor: usize) -> Result<Self, CountError> {
        Self::check_order(tree, "subtrees_containing")?;
        assert!(anchor < tree.order(), "anchor vertex out of range");
        let mut it = SubtreeIter {
            tree,
            stack: Vec::new(),
            low: 0,
            next_anchor: None,
        };
        it.seed(anchor);
        Ok(it)
    }

    fn seed(&mut self, anchor: usize) {
        let mut seen = 1u64 << anchor;
        let mut ext = Vec::new();
        for &w in self.tree.neighbors(anchor) {
            if w >= self.low {
                seen |= 1 << w;
                ext.push(w as u8);
            }
        }
        self.stack.push(Frame {
            set: 1 << anchor,
            seen,
            ext,
        });
    }
}

impl Iterator for SubtreeIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(frame) = self.stack.pop() {
                for i in 0..frame.ext.len() {
                    let v = frame.ext[i] as usize;
                    let mut seen = frame.seen;
                    let mut ext: Vec<u8> = frame.ext[i + 1..].to_vec();
                    for &w in self.tree.neighbors(v) {
                        if w >= self.low && seen >> w & 1 == 0 {
                            seen |= 1 << w;
                            ext.push(w as u8);
                        }
                    }
                    self.stack.push(Frame {
                        set: frame.set | 1 << v,
                        seen,
                        ext,
                    });
                }
                return Some(VertexSet(frame.set));
            }
            let anchor = self.next_anchor?;
            if anchor >= self.tree.order() {
                return None;
            }
            self.next_anchor = Some(anchor + 1);
            self.low = anchor + 1;
            self.seed(anchor);
        }
    }
}

/// Stream every subtree (nonempty connected vertex subset) exactly once.
pub fn enumerate_subtrees(tree: &LabeledTree) -> Result<SubtreeIter<'_>, CountError> {
    SubtreeIter::all(tree)
}

/// Stream every subtree containing the vertex `anchor` exactly once.
pub fn subtrees_containing(tree: &LabeledTree, anchor: usize) -> Result<SubtreeIter<'_>, CountError> {
    SubtreeIter::containing(tree, anchor)
}

/// Number of subtrees (labeled count), by the product formula: orient at
/// vertex 0, let f(v) be the number of subtrees rooted at v within its
/// branch (product of 1 + f(child)); the total is the sum of f over all
/// vertices, counting each subtree at its vertex closest to 0.
pub fn count_subtrees_total(tree: &LabeledTree) -> Result<u64, CountError> {
    let n = tree.order();
    if n > MAX_TOTAL_ORDER {
        return Err(CountError::OrderCap {
            op: "count_subtrees_total",
            order: n,
            max: MAX_TOTAL_ORDER,
        });
    }
    total_by_product(tree)
}

fn total_by_product(tree: &LabeledTree) -> Result<u64, CountError> {
    let (order, parent) = tree.bfs_with_parents(0);
    let mut f = vec![1u64; tree.order()];
    let mut total = 0u64;
    for &u in order.iter().rev() {
        if u != 0 {
            let p = parent[u];
            f[p] = f[p]
                .checked_mul(f[u].checked_add(1).ok_or(CountError::Overflow)?)
                .ok_or(CountError::Overflow)?;
        }
        total = total.checked_add(f[u]).ok_or(CountError::Overflow)?;
    }
    Ok(total)
}

/// Number of subtrees avoiding vertex `avoid`: the subtree totals of the
/// components of `tree - avoid`, summed.
pub fn count_subtrees_avoiding(tree: &LabeledTree, avoid: usize) -> Result<u64, CountError> {
    let n = tree.order();
    assert!(avoid < n, "vertex out of range");
    if n > MAX_TOTAL_ORDER {
        return Err(CountError::OrderCap {
            op: "count_subtrees_avoiding",
            order: n,
            max: MAX_TOTAL_ORDER,
        });
    }
    let mut total = 0u64;
    for &w in tree.neighbors(avoid) {
        let verts = tree.component_avoiding(w, avoid);
        let component = tree
            .induced(&verts)
            .expect("a component of a tree minus a vertex is a tree");
        let part = total_by_product(&component)?;
        total = total.checked_add(part).ok_or(CountError::Overflow)?;
    }
    Ok(total)
}

/// Whether a class set holds free or rooted codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMode {
    Rooted,
    Free,
}

/// A deduplicated set of subtree isomorphism classes; its cardinality is
/// ns(T) in free mode or nr(T) in rooted mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeClassSet {
    mode: ClassMode,
    codes: BTreeSet<CanonicalCode>,
}

impl SubtreeClassSet {
    pub fn mode(&self) -> ClassMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.codes.contains(code)
    }

    /// Codes in ascending byte order.
    pub fn iter(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.codes.iter()
    }
}

/// The set of free-isomorphism classes over all subtrees.
pub fn ns_set(tree: &LabeledTree) -> Result<SubtreeClassSet, CountError> {
    let mut codes = BTreeSet::new();
    for set in enumerate_subtrees(tree)? {
        let sub = tree
            .induced(&set.vertices())
            .expect("enumerated subsets are connected");
        codes.insert(free_code(&sub));
    }
    Ok(SubtreeClassSet {
        mode: ClassMode::Free,
        codes,
    })
}

/// ns(T): the number of nonisomorphic subtrees of `tree`.
pub fn ns(tree: &LabeledTree) -> Result<u64, CountError> {
    Ok(ns_set(tree)?.len() as u64)
}

/// The set of rooted-isomorphism classes over root-containing subtrees,
/// using the process-wide intermediate cap (see [`configure_set_cap`]).
pub fn nr_set(tree: &LabeledTree) -> Result<SubtreeClassSet, CountError> {
    nr_set_capped(tree, set_cap())
}

/// As [`nr_set`], with an explicit cap on intermediate set sizes.
///
/// Bottom-up over the rooted tree: the set at a vertex v collects, for
/// every way of choosing either nothing or one class from each child's set,
/// the code of v joined to the chosen child classes. Choices are
/// deduplicated as sorted multisets at every step, and vertices whose
/// branches have equal codes share one computation.
pub fn nr_set_capped(tree: &LabeledTree, cap: usize) -> Result<SubtreeClassSet, CountError> {
    let root = tree.root().ok_or(CountError::Unrooted)?;
    let n = tree.order();
    let (order, parent) = tree.bfs_with_parents(root);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in &order {
        if u != root {
            children[parent[u]].push(u);
        }
    }
    let mut branch_code: Vec<Option<CanonicalCode>> = vec![None; n];
    for &u in order.iter().rev() {
        let codes: Vec<CanonicalCode> = children[u]
            .iter()
            .map(|&c| branch_code[c].clone().expect("child processed first"))
            .collect();
        branch_code[u] = Some(join_codes(&codes));
    }

    let mut memo: HashMap<CanonicalCode, Rc<BTreeSet<CanonicalCode>>> = HashMap::new();
    let mut set_at: Vec<Option<Rc<BTreeSet<CanonicalCode>>>> = vec![None; n];
    for &u in order.iter().rev() {
        let key = branch_code[u].clone().expect("code computed");
        if let Some(shared) = memo.get(&key) {
            set_at[u] = Some(shared.clone());
            continue;
        }
        // Partial choices: sorted multisets of chosen child classes.
        let mut selections: BTreeSet<Vec<CanonicalCode>> = BTreeSet::new();
        selections.insert(Vec::new());
        for &c in &children[u] {
            let child_set = set_at[c].clone().expect("child processed first");
            let mut next = selections.clone();
            for sel in &selections {
                for code in child_set.iter() {
                    let mut grown = sel.clone();
                    let pos = grown.binary_search(code).unwrap_or_else(|e| e);
                    grown.insert(pos, code.clone());
                    next.insert(grown);
                }
            }
            if next.len() > cap {
                return Err(CountError::SetCapExceeded { cap });
            }
            selections = next;
        }
        let set: BTreeSet<CanonicalCode> =
            selections.iter().map(|sel| join_codes(sel)).collect();
        let shared = Rc::new(set);
        memo.insert(key, shared.clone());
        set_at[u] = Some(shared);
    }
    let root_set = set_at[root].take().expect("root processed");
    Ok(SubtreeClassSet {
        mode: ClassMode::Rooted,
        codes: (*root_set).clone(),
    })
}

/// nr(T): the number of nonisomorphic root-containing subtrees of the
/// rooted tree `tree`.
pub fn nr(tree: &LabeledTree) -> Result<u64, CountError> {
    Ok(nr_set(tree)?.len() as u64)
}

/// Independent oracle for nr: enumerate the root-containing subsets
/// directly and deduplicate by rooted code. Exponential; capped at order
/// [`MAX_BRUTEFORCE_ORDER`].
pub fn nr_bruteforce(tree: &LabeledTree) -> Result<u64, CountError> {
    let root = tree.root().ok_or(CountError::Unrooted)?;
    let n = tree.order();
    if n > MAX_BRUTEFORCE_ORDER {
        return Err(CountError::OrderCap {
            op: "nr_bruteforce",
            order: n,
            max: MAX_BRUTEFORCE_ORDER,
        });
    }
    let mut codes: HashSet<CanonicalCode> = HashSet::new();
    for set in subtrees_containing(tree, root)? {
        let verts = set.vertices();
        let local_root = verts
            .binary_search(&root)
            .expect("enumerated subsets contain the anchor");
        let sub = tree
            .induced(&verts)
            .expect("enumerated subsets are connected");
        codes.insert(rooted_code(&sub, local_root));
    }
    Ok(codes.len() as u64)
}
