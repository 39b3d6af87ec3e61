//! Adjacency-list trees on vertices `0..n-1`, optionally rooted, with the
//! text formats used by the CLI: edge lists, level sequences, and DOT.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::TreeError;

/// A tree on vertices `0..n-1`. Adjacency is symmetric, the graph is
/// connected with exactly `n - 1` edges, and `root` (if set) is a valid
/// vertex. All constructors enforce this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    adjacency: Vec<Vec<usize>>,
    root: Option<usize>,
}

/// Input/output formats for [`parse_tree`] and [`serialize_tree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    /// Optional first line `n`, then one `u v` pair per line, 0-based.
    EdgeList,
    /// One line of levels, root first at level 1.
    LevelSeq,
    /// Graphviz output (write-only).
    Dot,
}

impl LabeledTree {
    /// Build a tree from an explicit order and edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::NotATree("order must be positive"));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { v: w, n });
                }
            }
            if adjacency[u].contains(&v) {
                return Err(TreeError::DuplicateEdge { u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let tree = LabeledTree {
            adjacency,
            root: None,
        };
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree("edge count is not n - 1"));
        }
        if !tree.is_connected() {
            return Err(TreeError::NotATree("graph is disconnected"));
        }
        Ok(tree)
    }

    /// The single-vertex tree.
    pub fn singleton() -> Self {
        LabeledTree {
            adjacency: vec![Vec::new()],
            root: None,
        }
    }

    /// The path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n.max(1), &edges).expect("path is a tree")
    }

    /// The star `K_{1,n-1}` with hub 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::from_edges(n.max(1), &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Attach a root, keeping everything else.
    pub fn with_root(mut self, root: usize) -> Result<Self, TreeError> {
        if root >= self.order() {
            return Err(TreeError::InvalidRoot {
                root,
                n: self.order(),
            });
        }
        self.root = Some(root);
        Ok(self)
    }

    /// Drop the root marker.
    pub fn unrooted(mut self) -> Self {
        self.root = None;
        self
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.order()
    }

    /// BFS distances from `start`.
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All unordered vertex pairs at maximum distance.
    pub fn diameter_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let rows: Vec<_> = (0..n).map(|v| self.distances_from(v)).collect();
        let diameter = rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rows[u][v] == diameter {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    /// Vertices of minimum eccentricity, found by stripping leaf layers.
    /// Always 1 or 2 vertices; 2 only when they are adjacent.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = n;
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut removed = vec![false; n];
        while alive > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                removed[v] = true;
            }
            alive -= layer.len();
            for &v in &layer {
                for &w in &self.adjacency[v] {
                    if !removed[w] {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut out: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        out.sort_unstable();
        out
    }

    /// Vertices minimizing the total distance to all others; equivalently,
    /// the vertices whose largest branch has at most `n / 2` vertices.
    /// Always 1 or 2 vertices; 2 only when they are adjacent.
    pub fn centroids(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return vec![0];
        }
        // subtree sizes under an arbitrary rooting at 0
        let (order, parent) = self.bfs_with_parents(0);
        let mut size = vec![1usize; n];
        for &u in order.iter().rev() {
            if u != 0 {
                size[parent[u]] += size[u];
            }
        }
        let mut best = usize::MAX;
        let mut out = Vec::new();
        for v in 0..n {
            let mut largest = n - size[v];
            for &w in &self.adjacency[v] {
                if w != parent[v] {
                    largest = largest.max(size[w]);
                }
            }
            if largest < best {
                best = largest;
                out.clear();
                out.push(v);
            } else if largest == best {
                out.push(v);
            }
        }
        out.sort_unstable();
        out
    }

    /// BFS order from `start` (used as a recursion-free traversal order).
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        self.bfs_with_parents(start).0
    }

    /// BFS order and parent array from `start`; the parent of `start` is
    /// `usize::MAX`. Reversing the order processes children before parents.
    pub fn bfs_with_parents(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[start] = true;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// The component of `start` in the graph minus `blocked`, as a vertex set.
    pub fn component_avoiding(&self, start: usize, blocked: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[blocked] = true;
        seen[start] = true;
        let mut out = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The induced subtree on `vertices` (must be connected), relabeled to
    /// `0..k-1` in the order given by the sorted vertex list.
    pub fn induced(&self, vertices: &[usize]) -> Result<LabeledTree, TreeError> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in sorted.iter().enumerate() {
            if v >= self.order() {
                return Err(TreeError::VertexOutOfRange {
                    v,
                    n: self.order(),
                });
            }
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &sorted {
            for &w in &self.adjacency[v] {
                if v < w && local[w] != usize::MAX {
                    edges.push((local[v], local[w]));
                }
            }
        }
        LabeledTree::from_edges(sorted.len(), &edges)
    }

    /// Apply a vertex permutation: vertex `v` becomes `perm[v]`. The root,
    /// if any, moves with the permutation.
    pub fn relabel(&self, perm: &[usize]) -> LabeledTree {
        assert_eq!(perm.len(), self.order());
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let mut tree = LabeledTree::from_edges(self.order(), &edges)
            .expect("relabeling preserves tree structure");
        tree.root = self.root.map(|r| perm[r]);
        tree
    }

    /// The root branches: one rooted tree per neighbor of the root, each
    /// rooted at that neighbor and relabeled to local indices.
    pub fn root_branches(&self) -> Result<Vec<LabeledTree>, TreeError> {
        let root = self.root.ok_or(TreeError::UnrootedLevelSeq)?;
        let mut out = Vec::new();
        for &c in &self.adjacency[root] {
            let verts = self.component_avoiding(c, root);
            let local_root = verts.binary_search(&c).expect("branch contains its root");
            let branch = self.induced(&verts)?.with_root(local_root)?;
            out.push(branch);
        }
        Ok(out)
    }
}

/// Attach every branch (each rooted) to a fresh root. The empty list yields
/// the single-vertex rooted tree. Vertex 0 is the new root; branch vertices
/// keep their relative order, shifted past earlier branches.
pub fn join_at_root(branches: &[LabeledTree]) -> LabeledTree {
    let total: usize = 1 + branches.iter().map(|b| b.order()).sum::<usize>();
    let mut edges = Vec::with_capacity(total.saturating_sub(1));
    let mut offset = 1;
    for branch in branches {
        let root = branch.root().expect("join_at_root requires rooted branches");
        edges.push((0, offset + root));
        for (u, v) in branch.edges() {
            edges.push((offset + u, offset + v));
        }
        offset += branch.order();
    }
    LabeledTree::from_edges(total, &edges)
        .expect("joining trees at a fresh root yields a tree")
        .with_root(0)
        .expect("root 0 is valid")
}

/// Parse a tree in the given text format. Level sequences root the tree at
/// vertex 0; edge lists leave it unrooted.
pub fn parse_tree(text: &str, format: TreeFormat) -> Result<LabeledTree, TreeError> {
    match format {
        TreeFormat::EdgeList => parse_edgelist(text),
        TreeFormat::LevelSeq => {
            let seq = parse_levelseq(text)?;
            Ok(levelseq_to_tree(&seq))
        }
        TreeFormat::Dot => Err(TreeError::MalformedLine {
            line: 0,
            text: "dot is write-only".into(),
        }),
    }
}

fn parse_edgelist(text: &str) -> Result<LabeledTree, TreeError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_seen = 0usize;
    let mut nonempty = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        nonempty += 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let malformed = || TreeError::MalformedLine {
            line: idx + 1,
            text: raw.to_string(),
        };
        match fields.as_slice() {
            [n] if nonempty == 1 => {
                declared = Some(n.parse().map_err(|_| malformed())?);
            }
            [u, v] => {
                let u: usize = u.parse().map_err(|_| malformed())?;
                let v: usize = v.parse().map_err(|_| malformed())?;
                max_seen = max_seen.max(u).max(v);
                edges.push((u, v));
            }
            _ => return Err(malformed()),
        }
    }
    if nonempty == 0 {
        return Err(TreeError::EmptyInput);
    }
    let n = match declared {
        Some(0) => return Err(TreeError::NotATree("order must be positive")),
        Some(n) => n,
        None => max_seen + 1,
    };
    LabeledTree::from_edges(n, &edges)
}

fn parse_levelseq(text: &str) -> Result<Vec<usize>, TreeError> {
    let values: Result<Vec<usize>, _> = text.split_whitespace().map(str::parse).collect();
    let values =
        values.map_err(|_| TreeError::InvalidLevelSequence("non-integer value".into()))?;
    validate_levelseq(&values)?;
    Ok(values)
}

/// Check the level-sequence format: first value 1, later values in `2..=prev+1`.
pub fn validate_levelseq(values: &[usize]) -> Result<(), TreeError> {
    if values.is_empty() {
        return Err(TreeError::EmptyInput);
    }
    if values[0] != 1 {
        return Err(TreeError::InvalidLevelSequence(
            "sequence must start at level 1".into(),
        ));
    }
    for i in 1..values.len() {
        if values[i] < 2 {
            return Err(TreeError::InvalidLevelSequence(format!(
                "level {} at position {} (only the root has level 1)",
                values[i], i
            )));
        }
        if values[i] > values[i - 1] + 1 {
            return Err(TreeError::InvalidLevelSequence(format!(
                "level jumps from {} to {} at position {}",
                values[i - 1],
                values[i],
                i
            )));
        }
    }
    Ok(())
}

/// Decode a valid level sequence: parent of vertex `i` is the nearest earlier
/// vertex one level up. Rooted at vertex 0.
pub fn levelseq_to_tree(values: &[usize]) -> LabeledTree {
    debug_assert!(validate_levelseq(values).is_ok());
    let n = values.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[1] = 0;
    for (i, &level) in values.iter().enumerate().skip(1) {
        edges.push((last_at_level[level - 1], i));
        last_at_level[level] = i;
    }
    LabeledTree::from_edges(n, &edges)
        .expect("valid level sequence decodes to a tree")
        .with_root(0)
        .expect("root 0 is valid")
}

/// Serialize a tree. Level sequences require a root and emit children in
/// ascending canonical-code order, so equal trees print identically.
pub fn serialize_tree(tree: &LabeledTree, format: TreeFormat) -> Result<String, TreeError> {
    match format {
        TreeFormat::EdgeList => {
            let mut out = format!("{}\n", tree.order());
            for (u, v) in tree.edges() {
                let _ = writeln!(out, "{} {}", u, v);
            }
            Ok(out)
        }
        TreeFormat::LevelSeq => {
            let root = tree.root().ok_or(TreeError::UnrootedLevelSeq)?;
            let seq = crate::canon::canonical_levelseq(tree, root);
            Ok(seq
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "))
        }
        TreeFormat::Dot => {
            let mut out = String::from("graph tree {\n");
            for v in 0..tree.order() {
                if tree.root() == Some(v) {
                    let _ = writeln!(out, "  {} [shape=box];", v);
                } else {
                    let _ = writeln!(out, "  {};", v);
                }
            }
            for (u, v) in tree.edges() {
                let _ = writeln!(out, "  {} -- {};", u, v);
            }
            out.push_str("}\n");
            Ok(out)
        }
    }
}
