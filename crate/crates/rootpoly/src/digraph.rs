//! Directed multigraphs with a fixed edge order.
//!
//! Vertices and edges are 1-based ids; the edge-id order is the fixed element
//! order used by every activity notion and by the burning edge list. Parallel
//! edges and opposite pairs are allowed, self-loops are rejected at
//! construction (a self-loop has a zero incidence column, which breaks the
//! circuit sign analysis).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Ordering;
use num_traits::{One, Zero};

use crate::arith::{Int, IntMatrix};
use crate::signed::SignedSet;
use crate::{Error, Result};

pub type EdgeSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// One entry of the labeled burning edge list: the edge, whether it belongs
/// to the tree, and (for tree edges) whether it points toward the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeListEntry {
    pub edge: usize,
    pub in_tree: bool,
    pub toward_root: bool,
}

impl Digraph {
    /// `edges` lists `(tail, head)` pairs with 1-based vertex ids; the edge
    /// with id `e` is `edges[e - 1]`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Graph("vertex count must be positive".into()));
        }
        for (i, &(tail, head)) in edges.iter().enumerate() {
            if tail == 0 || tail > vertex_count || head == 0 || head > vertex_count {
                return Err(Error::Graph(format!(
                    "edge {} endpoints ({tail}, {head}) out of range 1..={vertex_count}",
                    i + 1
                )));
            }
            if tail == head {
                return Err(Error::Graph(format!("edge {} is a self-loop at {tail}", i + 1)));
            }
        }
        Ok(Digraph { vertex_count, edges })
    }

    /// The directed cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Graph("a directed cycle needs at least 2 vertices".into()));
        }
        let edges = (1..=n).map(|v| (v, v % n + 1)).collect();
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> {
        1..=self.edges.len()
    }

    pub fn tail(&self, e: usize) -> usize {
        self.edges[e - 1].0
    }

    pub fn head(&self, e: usize) -> usize {
        self.edges[e - 1].1
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.edges.len() {
            return Err(Error::Graph(format!("edge id {e} out of range")));
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertex_count {
            return Err(Error::Graph(format!("vertex id {v} out of range")));
        }
        Ok(())
    }

    /// Component id per vertex (index 0 unused) for the subgraph on `edges`.
    fn components(&self, edges: &EdgeSet) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..=self.vertex_count).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = v;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for &e in edges {
            let a = find(&mut parent, self.tail(e));
            let b = find(&mut parent, self.head(e));
            parent[a] = b;
        }
        (0..=self.vertex_count)
            .map(|v| if v == 0 { 0 } else { find(&mut parent, v) })
            .collect()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let all: EdgeSet = self.edge_ids().collect();
        let comp = self.components(&all);
        (1..=self.vertex_count).all(|v| comp[v] == comp[1])
    }

    /// Connected and in-degree equals out-degree at every vertex.
    pub fn is_eulerian(&self) -> bool {
        let mut balance = vec![0i64; self.vertex_count + 1];
        for &(tail, head) in &self.edges {
            balance[tail] -= 1;
            balance[head] += 1;
        }
        balance.iter().all(|&b| b == 0) && self.is_connected()
    }

    /// Vertex-edge incidence matrix: column `e` has +1 at `head(e)` and -1 at
    /// `tail(e)`. This sign convention is fixed repo-wide.
    pub fn incidence_matrix(&self) -> Result<IntMatrix> {
        if self.edges.is_empty() {
            return Err(Error::Graph("incidence matrix needs at least one edge".into()));
        }
        IntMatrix::from_fn(self.vertex_count, self.edges.len(), |i, j| {
            let (tail, head) = self.edges[j];
            let v = i + 1;
            if v == head {
                Int::one()
            } else if v == tail {
                -Int::one()
            } else {
                Int::zero()
            }
        })
    }

    pub fn is_spanning_tree(&self, edges: &EdgeSet) -> bool {
        if edges.len() + 1 != self.vertex_count {
            return false;
        }
        for &e in edges {
            if e == 0 || e > self.edges.len() {
                return false;
            }
        }
        let comp = self.components(edges);
        (1..=self.vertex_count).all(|v| comp[v] == comp[1])
    }

    /// True iff `edges` is an arborescence rooted at `root`, not necessarily
    /// spanning. The empty set counts.
    pub fn is_arborescence(&self, edges: &EdgeSet, root: usize) -> bool {
        if self.check_vertex(root).is_err() {
            return false;
        }
        for &e in edges {
            if e == 0 || e > self.edges.len() {
                return false;
            }
        }
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        reached.insert(root);
        let mut used: EdgeSet = EdgeSet::new();
        loop {
            let next = edges.iter().copied().find(|&e| {
                !used.contains(&e) && reached.contains(&self.tail(e)) && !reached.contains(&self.head(e))
            });
            match next {
                Some(e) => {
                    used.insert(e);
                    reached.insert(self.head(e));
                }
                None => break,
            }
        }
        used.len() == edges.len()
    }

    pub fn is_spanning_arborescence(&self, edges: &EdgeSet, root: usize) -> bool {
        edges.len() + 1 == self.vertex_count && self.is_arborescence(edges, root)
    }

    /// All spanning trees, in lexicographic order of sorted edge-id sets.
    pub fn spanning_trees(&self) -> Result<Vec<EdgeSet>> {
        if !self.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        let ids: Vec<usize> = self.edge_ids().collect();
        let k = self.vertex_count - 1;
        let mut out = Vec::new();
        for combo in crate::util::combinations(&ids, k) {
            let set: EdgeSet = combo.into_iter().collect();
            if self.is_spanning_tree(&set) {
                out.push(set);
            }
        }
        Ok(out)
    }

    /// All spanning arborescences rooted at `root`, lexicographic order.
    pub fn arborescences(&self, root: usize) -> Result<Vec<EdgeSet>> {
        self.check_vertex(root)?;
        Ok(self
            .spanning_trees()?
            .into_iter()
            .filter(|t| self.is_arborescence(t, root))
            .collect())
    }

    /// The signed fundamental cut of `e in tree`: all edges between the two
    /// components of `tree - e`, with the positive part crossing in `e`'s
    /// direction (so `e` itself is positive).
    pub fn fundamental_cut(&self, tree: &EdgeSet, e: usize) -> Result<SignedSet> {
        self.check_edge(e)?;
        if !tree.contains(&e) {
            return Err(Error::Precondition(format!("edge {e} is not in the tree")));
        }
        if !self.is_spanning_tree(tree) {
            return Err(Error::Precondition("not a spanning tree".into()));
        }
        let mut rest = tree.clone();
        rest.remove(&e);
        let comp = self.components(&rest);
        let tail_side = comp[self.tail(e)];
        let mut positive = BTreeSet::new();
        let mut negative = BTreeSet::new();
        for f in self.edge_ids() {
            let ct = comp[self.tail(f)];
            let ch = comp[self.head(f)];
            if ct == ch {
                continue;
            }
            if ct == tail_side {
                positive.insert(f);
            } else {
                negative.insert(f);
            }
        }
        Ok(SignedSet::new(positive, negative))
    }

    /// The signed fundamental cycle of `e not in tree`: the unique cycle of
    /// `tree + e`, positive part traversed in `e`'s cyclic direction.
    pub fn fundamental_cycle(&self, tree: &EdgeSet, e: usize) -> Result<SignedSet> {
        self.check_edge(e)?;
        if tree.contains(&e) {
            return Err(Error::Precondition(format!("edge {e} is in the tree")));
        }
        if !self.is_spanning_tree(tree) {
            return Err(Error::Precondition("not a spanning tree".into()));
        }
        // walk the tree path head(e) -> tail(e)
        let path = self.tree_path(tree, self.head(e), self.tail(e));
        let mut positive = BTreeSet::new();
        let mut negative = BTreeSet::new();
        positive.insert(e);
        let mut at = self.head(e);
        for f in path {
            if self.tail(f) == at {
                positive.insert(f);
                at = self.head(f);
            } else {
                negative.insert(f);
                at = self.tail(f);
            }
        }
        debug_assert_eq!(at, self.tail(e));
        Ok(SignedSet::new(positive, negative))
    }

    /// Edge sequence of the tree path between two vertices.
    fn tree_path(&self, tree: &EdgeSet, from: usize, to: usize) -> Vec<usize> {
        let mut parent_edge: Vec<Option<usize>> = vec![None; self.vertex_count + 1];
        let mut seen = vec![false; self.vertex_count + 1];
        let mut queue: Vec<usize> = vec![from];
        seen[from] = true;
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            if v == to {
                break;
            }
            for &f in tree {
                let (t, h) = self.edges[f - 1];
                let other = if t == v {
                    h
                } else if h == v {
                    t
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    parent_edge[other] = Some(f);
                    queue.push(other);
                }
            }
        }
        let mut path = Vec::new();
        let mut at = to;
        while at != from {
            let f = parent_edge[at].expect("tree connects all vertices");
            path.push(f);
            at = if self.tail(f) == at { self.head(f) } else { self.tail(f) };
        }
        path.reverse();
        path
    }

    /// The burning edge list of a spanning tree: starting with the root
    /// burning, repeatedly take the largest unburnt edge with a burning
    /// endpoint (orientation ignored), append it, and if it is a tree edge
    /// burn its other endpoint.
    pub fn burning_edge_list(&self, root: usize, tree: &EdgeSet) -> Result<Vec<EdgeListEntry>> {
        self.check_vertex(root)?;
        if !self.is_spanning_tree(tree) {
            return Err(Error::Precondition("not a spanning tree".into()));
        }
        let m = self.edges.len();
        let mut burning = vec![false; self.vertex_count + 1];
        burning[root] = true;
        let mut burnt = vec![false; m + 1];
        let mut list = Vec::with_capacity(m);
        while list.len() < m {
            let next = (1..=m)
                .rev()
                .find(|&e| !burnt[e] && (burning[self.tail(e)] || burning[self.head(e)]));
            let Some(e) = next else {
                return Err(Error::Integrity("burning stalled on a connected graph".into()));
            };
            burnt[e] = true;
            let in_tree = tree.contains(&e);
            let mut toward_root = false;
            if in_tree {
                let (tail, head) = self.edges[e - 1];
                // a tree edge is burnt with exactly one burning endpoint
                if burning[tail] && burning[head] {
                    return Err(Error::Integrity("tree edge with two burning endpoints".into()));
                }
                let fresh = if burning[tail] { head } else { tail };
                burning[fresh] = true;
                toward_root = fresh == tail;
            }
            list.push(EdgeListEntry { edge: e, in_tree, toward_root });
        }
        Ok(list)
    }

    /// The tree order: trees compare by the first difference of their labeled
    /// burning edge lists. At that difference the edge is in exactly one of
    /// the trees; the tree owning it comes first iff the edge points away
    /// from the root there, and last iff it points toward the root.
    pub fn compare_trees(&self, root: usize, t1: &EdgeSet, t2: &EdgeSet) -> Result<Ordering> {
        if t1 == t2 {
            return Ok(Ordering::Equal);
        }
        let l1 = self.burning_edge_list(root, t1)?;
        let l2 = self.burning_edge_list(root, t2)?;
        for (a, b) in l1.iter().zip(l2.iter()) {
            if a == b {
                continue;
            }
            if a.edge != b.edge || a.in_tree == b.in_tree {
                return Err(Error::Integrity(
                    "first labeled-list difference must be tree membership of one edge".into(),
                ));
            }
            let ord = if a.in_tree {
                // edge in t1 only
                if a.toward_root {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            } else {
                // edge in t2 only
                if b.toward_root {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            };
            return Ok(ord);
        }
        Err(Error::Integrity("distinct trees with identical labeled lists".into()))
    }

    /// External semi-activity of `e` with respect to a spanning arborescence:
    /// the maximal edge of the fundamental cycle stands in `e`'s cyclic
    /// direction. An edge maximal in its own fundamental cycle is active.
    pub fn is_externally_semiactive(&self, root: usize, arb: &EdgeSet, e: usize) -> Result<bool> {
        if !self.is_spanning_arborescence(arb, root) {
            return Err(Error::Precondition("not a spanning arborescence".into()));
        }
        let cycle = self.fundamental_cycle(arb, e)?;
        Ok(cycle.positive.contains(&cycle.max_element()))
    }

    /// Every edge reversed; edge ids preserved.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// Number of spanning arborescences rooted at `root`, by the directed
    /// matrix-tree theorem (determinant of the reduced in-degree Laplacian).
    pub fn arborescence_count(&self, root: usize) -> Result<Int> {
        self.check_vertex(root)?;
        if !self.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        if self.vertex_count == 1 {
            return Ok(Int::one());
        }
        let others: Vec<usize> = (1..=self.vertex_count).filter(|&v| v != root).collect();
        let n = others.len();
        let mut laplacian = IntMatrix::from_fn(n, n, |_, _| Int::zero())?;
        for &(tail, head) in &self.edges {
            if head == root {
                continue;
            }
            let i = others.iter().position(|&v| v == head).unwrap();
            let d = laplacian.entry(i, i) + Int::one();
            laplacian.set(i, i, d);
            if tail != root {
                let j = others.iter().position(|&v| v == tail).unwrap();
                let a = laplacian.entry(i, j) - Int::one();
                laplacian.set(i, j, a);
            }
        }
        laplacian.determinant()
    }

    /// Number of spanning trees of the underlying undirected multigraph
    /// (determinant of the reduced undirected Laplacian).
    pub fn spanning_tree_count(&self) -> Result<Int> {
        if !self.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        if self.vertex_count == 1 {
            return Ok(Int::one());
        }
        let n = self.vertex_count - 1;
        let mut laplacian = IntMatrix::from_fn(n, n, |_, _| Int::zero())?;
        // vertices 2..=n+1 indexed 0..n; vertex 1 deleted
        for &(tail, head) in &self.edges {
            for v in [tail, head] {
                if v != 1 {
                    let i = v - 2;
                    let d = laplacian.entry(i, i) + Int::one();
                    laplacian.set(i, i, d);
                }
            }
            if tail != 1 && head != 1 {
                let i = tail - 2;
                let j = head - 2;
                let a = laplacian.entry(i, j) - Int::one();
                laplacian.set(i, j, a);
                let b = laplacian.entry(j, i) - Int::one();
                laplacian.set(j, i, b);
            }
        }
        laplacian.determinant()
    }
}

/// The running example used across the test suite: a 6-vertex, 9-edge
/// Eulerian digraph, usually rooted at 1, with a distinguished spanning
/// arborescence {1, 3, 6, 7, 8}.
pub fn example_digraph() -> Digraph {
    Digraph::new(
        6,
        vec![
            (1, 2),
            (3, 1),
            (1, 4),
            (5, 1),
            (3, 4),
            (4, 5),
            (6, 3),
            (4, 6),
            (2, 3),
        ],
    )
    .expect("example digraph is valid")
}

/// The distinguished arborescence of [`example_digraph`].
pub fn example_arborescence() -> EdgeSet {
    [1, 3, 6, 7, 8].into_iter().collect()
}

/// Two vertices joined by `2k` alternating edges: odd ids forward, even back.
pub fn two_vertex_bundle(k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::Graph("bundle needs at least one edge pair".into()));
    }
    let mut edges = Vec::with_capacity(2 * k);
    for _ in 0..k {
        edges.push((1, 2));
        edges.push((2, 1));
    }
    Digraph::new(2, edges)
}
