//! Canonical codes for rooted and free trees.
//!
//! A rooted tree's code is built bottom-up: a leaf is `()`, and an internal
//! vertex wraps the concatenation of its children's codes, sorted ascending
//! as byte strings, in one more pair of parentheses. Two rooted trees are
//! isomorphic exactly when their codes are equal.
//!
//! A free tree's code roots at its center. With one center the code is
//! `U:` followed by the rooted code there. With two (adjacent) centers the
//! center edge is removed and the code is `B:` followed by the two halves'
//! rooted codes in ascending order, so the result does not depend on
//! labeling. Equality of free codes is isomorphism of free trees.

use crate::tree::LabeledTree;
use crate::error::TreeError;
use std::fmt;

/// An isomorphism-invariant code string; ordering and hashing delegate to
/// the underlying bytes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices encoded: one `(` per vertex, for both rooted and
    /// free forms (the `U:`/`B:` prefixes add no parentheses).
    pub fn vertex_count(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'(').count()
    }

    /// Whether this is a rooted-tree code (free codes carry a prefix).
    pub fn is_rooted(&self) -> bool {
        self.0.starts_with('(')
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Wrap already-canonical child codes into the code of their join: sort
/// ascending, concatenate, parenthesize. The empty list gives the leaf `()`.
pub fn join_codes(children: &[CanonicalCode]) -> CanonicalCode {
    let mut sorted: Vec<&str> = children.iter().map(CanonicalCode::as_str).collect();
    sorted.sort_unstable();
    let mut s = String::with_capacity(2 + sorted.iter().map(|c| c.len()).sum::<usize>());
    s.push('(');
    for c in sorted {
        s.push_str(c);
    }
    s.push(')');
    CanonicalCode(s)
}

/// Canonical code of `tree` rooted at `root`.
pub fn rooted_code(tree: &LabeledTree, root: usize) -> CanonicalCode {
    rooted_code_avoiding(tree, root, usize::MAX)
}

/// Canonical code of the tree at its own root.
pub fn rooted_code_at_root(tree: &LabeledTree) -> Result<CanonicalCode, TreeError> {
    let root = tree.root().ok_or(TreeError::UnrootedLevelSeq)?;
    Ok(rooted_code(tree, root))
}

/// Canonical code of the component of `root` after deleting vertex
/// `blocked`, rooted at `root`. Pass `usize::MAX` for no blocked vertex.
pub fn rooted_code_avoiding(tree: &LabeledTree, root: usize, blocked: usize) -> CanonicalCode {
    let n = tree.order();
    // Parent-aware BFS; children lists double as the recursion structure.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if w != blocked && parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut code: Vec<Option<CanonicalCode>> = vec![None; n];
    let mut child_codes: Vec<Vec<CanonicalCode>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let c = join_codes(&child_codes[u]);
        child_codes[u].clear();
        if u == root {
            code[root] = Some(c);
        } else {
            child_codes[parent[u]].push(c);
        }
    }
    code[root].take().expect("root code computed")
}

/// Canonical code of the underlying free tree, ignoring any root marker.
pub fn free_code(tree: &LabeledTree) -> CanonicalCode {
    let centers = tree.centers();
    match centers.as_slice() {
        [c] => CanonicalCode(format!("U:{}", rooted_code(tree, *c))),
        [c1, c2] => {
            let a = rooted_code_avoiding(tree, *c1, *c2);
            let b = rooted_code_avoiding(tree, *c2, *c1);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            CanonicalCode(format!("B:{}{}", lo, hi))
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// The canonical root of the underlying free tree: the unique centroid, or,
/// when two centroids exist, the one sitting in the half (component after
/// deleting the centroid edge) with the smaller rooted code. Rooting
/// different labelings of one free tree here always yields equal rooted
/// codes, so each free isomorphism class has exactly one canonical rooted
/// form.
pub fn canonical_root(tree: &LabeledTree) -> usize {
    let centroids = tree.centroids();
    match centroids.as_slice() {
        [c] => *c,
        [c1, c2] => {
            let a = rooted_code_avoiding(tree, *c1, *c2);
            let b = rooted_code_avoiding(tree, *c2, *c1);
            if a <= b {
                *c1
            } else {
                *c2
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// Level sequence of the rooted tree in canonical order: children are
/// visited in ascending rooted-code order, so equal rooted trees serialize
/// identically.
pub fn canonical_levelseq(tree: &LabeledTree, root: usize) -> Vec<usize> {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut code: Vec<Option<CanonicalCode>> = vec![None; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let codes: Vec<CanonicalCode> = children[u]
            .iter()
            .map(|&c| code[c].clone().expect("child code computed"))
            .collect();
        code[u] = Some(join_codes(&codes));
        if u != root {
            children[parent[u]].push(u);
        }
    }
    for list in &mut children {
        list.sort_by(|&a, &b| code[a].cmp(&code[b]));
    }
    let mut seq = Vec::with_capacity(n);
    let mut stack = vec![(root, 1usize)];
    while let Some((u, level)) = stack.pop() {
        seq.push(level);
        for &c in children[u].iter().rev() {
            stack.push((c, level + 1));
        }
    }
    seq
}

/// Decode a rooted code (balanced parentheses) back into a rooted tree.
/// Children appear in the order written, so decoding a canonical code and
/// re-encoding it round-trips.
pub fn rooted_code_to_tree(code: &CanonicalCode) -> Result<LabeledTree, TreeError> {
    let s = code.as_str();
    let bad = |text: &str| TreeError::MalformedLine {
        line: 1,
        text: text.to_string(),
    };
    if !code.is_rooted() {
        return Err(bad("expected a rooted code"));
    }
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for ch in s.chars() {
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                if stack.pop().is_none() {
                    return Err(bad("unbalanced parentheses"));
                }
            }
            _ => return Err(bad("unexpected character in code")),
        }
    }
    if !stack.is_empty() || next == 0 {
        return Err(bad("unbalanced parentheses"));
    }
    LabeledTree::from_edges(next, &edges)?.with_root(0)
}
