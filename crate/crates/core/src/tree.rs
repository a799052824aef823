//! Vertex-colored arborescences.
//!
//! A [`ColoredArborescence`] is a rooted tree whose edges all point away from
//! the root. Vertices are stored densely as `0..n`; [`build_tree`] accepts
//! arbitrary integer ids and records the translation in an [`IdMap`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex color. Colors are totally ordered by their integer value and
/// that order drives every sibling comparison.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Color(pub u32);

impl From<u32> for Color {
    fn from(value: u32) -> Self {
        Color(value)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense vertex index inside one tree.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree has no vertices")]
    Empty,
    #[error("edge ({vertex}, {vertex}) is a self-loop")]
    SelfLoop { vertex: u64 },
    #[error("duplicate edge ({parent}, {child})")]
    DuplicateEdge { parent: u64, child: u64 },
    #[error("vertex {vertex} has more than one parent")]
    MultipleParents { vertex: u64 },
    #[error("cycle detected through vertex {vertex}")]
    CycleDetected { vertex: u64 },
    #[error("multiple roots: {roots:?}")]
    MultipleRoots { roots: Vec<u64> },
    #[error("vertex {vertex} is not connected to the rest of the tree")]
    DisconnectedVertex { vertex: u64 },
    #[error("vertex {vertex} has no color")]
    MissingColor { vertex: u64 },
    #[error("declared root {declared} differs from inferred root {inferred}")]
    RootMismatch { declared: u64, inferred: u64 },
    #[error("vertex {vertex} is out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },
}

/// Translation between dense vertex indices and the ids seen on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    original: Vec<u64>,
}

impl IdMap {
    pub fn identity(n: usize) -> Self {
        IdMap {
            original: (0..n as u64).collect(),
        }
    }

    /// Input id of dense vertex `v`.
    pub fn original(&self, v: VertexId) -> u64 {
        self.original[v]
    }

    /// Dense vertex for an input id.
    pub fn dense(&self, id: u64) -> Option<VertexId> {
        self.original.binary_search(&id).ok()
    }

    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }
}

/// Rooted tree with every edge directed away from the root and a color on
/// every vertex. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredArborescence {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    colors: Vec<Color>,
}

impl ColoredArborescence {
    /// A tree with one vertex.
    pub fn singleton(color: Color) -> Self {
        ColoredArborescence {
            root: 0,
            parent: vec![None],
            children: vec![Vec::new()],
            colors: vec![color],
        }
    }

    /// Builds a tree from a dense parent array. Exactly one entry must be
    /// `None` (the root). Children are stored in ascending index order.
    pub fn from_parents(parents: &[Option<VertexId>], colors: Vec<Color>) -> Result<Self, TreeError> {
        let n = parents.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if colors.len() < n {
            return Err(TreeError::MissingColor {
                vertex: colors.len() as u64,
            });
        }
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (v, p) in parents.iter().enumerate() {
            match *p {
                None => roots.push(v),
                Some(p) if p >= n => {
                    return Err(TreeError::VertexOutOfRange { vertex: p as u64, n })
                }
                Some(p) if p == v => return Err(TreeError::SelfLoop { vertex: v as u64 }),
                Some(p) => children[p].push(v),
            }
        }
        let root = match roots.as_slice() {
            [] => return Err(TreeError::CycleDetected { vertex: 0 }),
            [r] => *r,
            _ => {
                return Err(TreeError::MultipleRoots {
                    roots: roots.iter().map(|&r| r as u64).collect(),
                })
            }
        };
        let tree = ColoredArborescence {
            root,
            parent: parents.to_vec(),
            children,
            colors: colors[..n].to_vec(),
        };
        let reached = tree.preorder().len();
        if reached != n {
            let mut seen = vec![false; n];
            for v in tree.preorder() {
                seen[v] = true;
            }
            let vertex = seen.iter().position(|s| !s).unwrap_or(0);
            return Err(TreeError::CycleDetected {
                vertex: vertex as u64,
            });
        }
        Ok(tree)
    }

    /// Builds a tree from dense directed edges `(parent, child)` on `0..n`.
    pub fn from_edges(
        n: usize,
        edges: &[(VertexId, VertexId)],
        colors: Vec<Color>,
    ) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut parents = vec![None; n];
        for &(p, c) in edges {
            if p >= n || c >= n {
                return Err(TreeError::VertexOutOfRange {
                    vertex: p.max(c) as u64,
                    n,
                });
            }
            if let Some(existing) = parents[c] {
                return Err(if existing == p {
                    TreeError::DuplicateEdge {
                        parent: p as u64,
                        child: c as u64,
                    }
                } else {
                    TreeError::MultipleParents { vertex: c as u64 }
                });
            }
            parents[c] = Some(p);
        }
        Self::from_parents(&parents, colors)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// Always false: trees have at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<VertexId>] {
        &self.parent
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.children[v].len()
    }

    /// Directed edges `(parent, child)` in ascending child order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
    }

    /// A leaf has out-degree zero (and, in an arborescence, in-degree at most one).
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children[v].is_empty()
    }

    /// All leaves in ascending order.
    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Neighbors in the underlying undirected tree.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.parent[v].into_iter().chain(self.children[v].iter().copied())
    }

    pub fn undirected_degree(&self, v: VertexId) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// Leaves of the underlying undirected tree (degree at most one).
    pub fn undirected_leaves(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&v| self.undirected_degree(v) <= 1)
            .collect()
    }

    /// Breadth-first order from the root, children in stored order.
    pub fn bfs_order(&self) -> Vec<VertexId> {
        let mut order = Vec::with_capacity(self.len());
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            queue.extend(self.children[v].iter().copied());
        }
        order
    }

    /// Depth-first preorder from the root, children in stored order.
    pub fn preorder(&self) -> Vec<VertexId> {
        self.preorder_from(self.root)
    }

    fn preorder_from(&self, apex: VertexId) -> Vec<VertexId> {
        let mut order = Vec::new();
        let mut stack = vec![apex];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev().copied());
            if order.len() > self.len() {
                break;
            }
        }
        order
    }

    pub fn depth(&self, mut v: VertexId) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            d += 1;
        }
        d
    }

    /// The subtree `T[apex]`: apex and all of its descendants.
    pub fn subtree(&self, apex: VertexId) -> Subtree<'_> {
        Subtree { tree: self, apex }
    }

    /// Renames vertex `v` to `new_id[v]`; children are re-sorted by new id.
    pub fn relabel(&self, new_id: &[VertexId]) -> Result<Self, TreeError> {
        let n = self.len();
        let mut parents = vec![None; n];
        let mut colors = vec![Color::default(); n];
        for v in 0..n {
            let w = new_id[v];
            if w >= n {
                return Err(TreeError::VertexOutOfRange { vertex: w as u64, n });
            }
            parents[w] = self.parent[v].map(|p| new_id[p]);
            colors[w] = self.colors[v];
        }
        Self::from_parents(&parents, colors)
    }

    /// Same relabeling as [`relabel`](Self::relabel) but keeps each
    /// children list in the order it had before renaming.
    pub fn relabel_keep_order(&self, new_id: &[VertexId]) -> Result<Self, TreeError> {
        let mut tree = self.relabel(new_id)?;
        for v in 0..self.len() {
            tree.children[new_id[v]] = self.children[v].iter().map(|&c| new_id[c]).collect();
        }
        Ok(tree)
    }

    /// Orients the underlying undirected tree away from `new_root`.
    pub fn reroot(&self, new_root: VertexId) -> Self {
        let n = self.len();
        let mut parents = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([new_root]);
        seen[new_root] = true;
        while let Some(v) = queue.pop_front() {
            let mut nbrs: Vec<VertexId> = self.neighbors(v).filter(|&w| !seen[w]).collect();
            nbrs.sort_unstable();
            for w in nbrs {
                seen[w] = true;
                parents[w] = Some(v);
                queue.push_back(w);
            }
        }
        Self::from_parents(&parents, self.colors.clone())
            .expect("reorienting a tree yields a tree")
    }
}

/// Handle on `T[apex]`.
#[derive(Debug, Clone, Copy)]
pub struct Subtree<'a> {
    pub tree: &'a ColoredArborescence,
    pub apex: VertexId,
}

impl Subtree<'_> {
    /// Vertices of the subtree in preorder, apex first.
    pub fn vertices(&self) -> Vec<VertexId> {
        self.tree.preorder_from(self.apex)
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, mut v: VertexId) -> bool {
        loop {
            if v == self.apex {
                return true;
            }
            match self.tree.parent(v) {
                Some(p) => v = p,
                None => return false,
            }
        }
    }
}

/// Validates a directed edge list with arbitrary ids and returns the dense
/// tree plus the id translation. Dense ids follow ascending input id, so the
/// result does not depend on edge order.
pub fn build_tree(
    edges: &[(u64, u64)],
    colors: &BTreeMap<u64, Color>,
) -> Result<(ColoredArborescence, IdMap), TreeError> {
    let mut ids: BTreeSet<u64> = colors.keys().copied().collect();
    let mut seen_edges = BTreeSet::new();
    for &(p, c) in edges {
        if p == c {
            return Err(TreeError::SelfLoop { vertex: p });
        }
        if !seen_edges.insert((p, c)) {
            return Err(TreeError::DuplicateEdge { parent: p, child: c });
        }
        ids.insert(p);
        ids.insert(c);
    }
    if ids.is_empty() {
        return Err(TreeError::Empty);
    }
    if let Some(&missing) = ids.iter().find(|id| !colors.contains_key(id)) {
        return Err(TreeError::MissingColor { vertex: missing });
    }

    let map = IdMap {
        original: ids.into_iter().collect(),
    };
    let n = map.len();
    let dense = |id: u64| map.dense(id).expect("every endpoint was registered");

    let mut parents: Vec<Option<VertexId>> = vec![None; n];
    let mut out_degree = vec![0usize; n];
    for &(p, c) in edges {
        let (p, c) = (dense(p), dense(c));
        if parents[c].is_some() {
            return Err(TreeError::MultipleParents {
                vertex: map.original(c),
            });
        }
        parents[c] = Some(p);
        out_degree[p] += 1;
    }

    let roots: Vec<VertexId> = (0..n).filter(|&v| parents[v].is_none()).collect();
    match roots.len() {
        0 => {
            return Err(TreeError::CycleDetected {
                vertex: map.original(0),
            })
        }
        1 => {}
        _ => {
            if let Some(&isolated) = roots.iter().find(|&&r| out_degree[r] == 0) {
                return Err(TreeError::DisconnectedVertex {
                    vertex: map.original(isolated),
                });
            }
            return Err(TreeError::MultipleRoots {
                roots: roots.iter().map(|&r| map.original(r)).collect(),
            });
        }
    }

    let color_vec = (0..n).map(|v| colors[&map.original(v)]).collect();
    let tree = ColoredArborescence::from_parents(&parents, color_vec).map_err(|e| match e {
        TreeError::CycleDetected { vertex } => TreeError::CycleDetected {
            vertex: map.original(vertex as usize),
        },
        other => other,
    })?;
    Ok((tree, map))
}
