//! Vertex-colored Prüfer codes.
//!
//! A code is a 2×n array. Column `i` records the `i`-th vertex removed when
//! repeatedly pruning the out-degree-zero vertex of smallest canonical rank:
//! the rank of its parent and its own color. The root is removed last and
//! its parent entry is the sentinel `∅` (`None`).

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::{canonical_order, CanonicalOrder};
use crate::tree::{Color, ColoredArborescence, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("order covers {order} vertices but the tree has {tree}")]
    OrderMismatch { tree: usize, order: usize },
    #[error("code is empty")]
    Empty,
    #[error("parents row has {parents} entries but colors row has {colors}")]
    LengthMismatch { parents: usize, colors: usize },
    #[error("declared n = {declared} but rows have {actual} entries")]
    DeclaredLength { declared: usize, actual: usize },
    #[error("sentinel must appear exactly once, in the last column (column {index})")]
    SentinelPosition { index: usize },
    #[error("column {index} references label {label} outside 0..{n}")]
    LabelOutOfRange { index: usize, label: usize, n: usize },
    #[error("code does not describe a tree: {0}")]
    NotATree(String),
    #[error("code is a valid tree but not its canonical code")]
    NotCanonical,
    #[error("classical Prüfer codes need at least two vertices")]
    TooSmall,
    #[error("edge list is not a tree on 0..{n}")]
    InvalidTree { n: usize },
}

/// A vertex-colored Prüfer code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "VcpcRepr", into = "VcpcRepr")]
pub struct Vcpc {
    parents: Vec<Option<usize>>,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct VcpcRepr {
    parents: Vec<Option<usize>>,
    colors: Vec<Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

impl TryFrom<VcpcRepr> for Vcpc {
    type Error = CodecError;

    fn try_from(repr: VcpcRepr) -> Result<Self, CodecError> {
        if let Some(declared) = repr.n {
            if declared != repr.parents.len() {
                return Err(CodecError::DeclaredLength {
                    declared,
                    actual: repr.parents.len(),
                });
            }
        }
        Vcpc::new(repr.parents, repr.colors)
    }
}

impl From<Vcpc> for VcpcRepr {
    fn from(code: Vcpc) -> Self {
        VcpcRepr {
            n: Some(code.len()),
            parents: code.parents,
            colors: code.colors,
        }
    }
}

impl Vcpc {
    /// Checks the row shapes: equal lengths, a single trailing sentinel and
    /// labels in range. Whether the columns form a tree is left to [`decode`].
    pub fn new(parents: Vec<Option<usize>>, colors: Vec<Color>) -> Result<Self, CodecError> {
        let n = parents.len();
        if n == 0 {
            return Err(CodecError::Empty);
        }
        if colors.len() != n {
            return Err(CodecError::LengthMismatch {
                parents: n,
                colors: colors.len(),
            });
        }
        for (index, p) in parents.iter().enumerate() {
            match (*p, index + 1 == n) {
                (None, true) => {}
                (Some(label), false) if label < n => {}
                (Some(label), false) => return Err(CodecError::LabelOutOfRange { index, label, n }),
                _ => return Err(CodecError::SentinelPosition { index }),
            }
        }
        Ok(Vcpc { parents, colors })
    }

    /// Shorthand for literals in tests and examples.
    pub fn from_raw(parents: &[Option<usize>], colors: &[u32]) -> Result<Self, CodecError> {
        Vcpc::new(parents.to_vec(), colors.iter().copied().map(Color).collect())
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    /// Full parents row including the trailing sentinel.
    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The `n - 1` parent labels before the sentinel.
    pub fn parent_labels(&self) -> Vec<usize> {
        self.parents[..self.len() - 1]
            .iter()
            .map(|p| p.expect("only the last column holds the sentinel"))
            .collect()
    }

    pub fn root_color(&self) -> Color {
        self.colors[self.len() - 1]
    }
}

impl fmt::Display for Vcpc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match p {
                Some(p) => write!(f, "{p}")?,
                None => write!(f, "∅")?,
            }
        }
        write!(f, "; ")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Removal order recorded during encoding, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneTrace {
    /// `pruned[i]` is the vertex encoded in column `i`; the root is last.
    pub pruned: Vec<VertexId>,
    /// Parent of each pruned vertex at the moment it was removed.
    pub parent_of: Vec<Option<VertexId>>,
}

/// Encodes `tree` under `order`. With the canonical order this is the
/// tree's VCPC; any other permutation gives the code of that labeling.
pub fn encode(tree: &ColoredArborescence, order: &CanonicalOrder) -> Result<(Vcpc, PruneTrace), CodecError> {
    let n = tree.len();
    if order.len() != n {
        return Err(CodecError::OrderMismatch {
            tree: n,
            order: order.len(),
        });
    }
    let mut remaining: Vec<usize> = (0..n).map(|v| tree.out_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<(usize, VertexId)>> = (0..n)
        .filter(|&v| remaining[v] == 0)
        .map(|v| Reverse((order.rank(v), v)))
        .collect();
    let mut parents = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    let mut pruned = Vec::with_capacity(n);
    let mut parent_of = Vec::with_capacity(n);
    while let Some(Reverse((_, v))) = ready.pop() {
        let parent = tree.parent(v);
        parents.push(parent.map(|p| order.rank(p)));
        colors.push(tree.color(v));
        pruned.push(v);
        parent_of.push(parent);
        if let Some(p) = parent {
            remaining[p] -= 1;
            if remaining[p] == 0 {
                ready.push(Reverse((order.rank(p), p)));
            }
        }
    }
    Ok((Vcpc { parents, colors }, PruneTrace { pruned, parent_of }))
}

/// Canonical code of `tree`.
pub fn encode_tree(tree: &ColoredArborescence) -> Vcpc {
    let order = canonical_order(tree);
    encode(tree, &order).expect("order built from the same tree").0
}

/// Rebuilds the labeled tree described by `code`: vertex `k` is the vertex
/// of rank `k`. For a canonical code this is the canonical form of every
/// tree with that code.
///
/// The parents row without its sentinel is the classical Prüfer sequence of
/// the tree with one extra pendant vertex (label `n`) hung off the root, so
/// the classical inverse applies: the next removed vertex is always the
/// smallest label that no longer occurs among the remaining entries.
pub fn decode(code: &Vcpc) -> Result<ColoredArborescence, CodecError> {
    let n = code.len();
    let labels = code.parent_labels();
    let mut count = vec![0usize; n];
    for &p in &labels {
        count[p] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (1..n).filter(|&v| count[v] == 0).map(Reverse).collect();
    let mut parents = vec![None; n];
    let mut colors = vec![Color::default(); n];
    let mut assigned = vec![false; n];
    for (i, &p) in labels.iter().enumerate() {
        let Reverse(v) = ready
            .pop()
            .ok_or_else(|| CodecError::NotATree(format!("no removable vertex at column {i}")))?;
        parents[v] = Some(p);
        colors[v] = code.colors[i];
        assigned[v] = true;
        count[p] -= 1;
        if count[p] == 0 && p != 0 {
            if assigned[p] {
                return Err(CodecError::NotATree(format!("vertex {p} reappears after removal")));
            }
            ready.push(Reverse(p));
        }
    }
    colors[0] = code.root_color();
    ColoredArborescence::from_parents(&parents, colors).map_err(|e| CodecError::NotATree(e.to_string()))
}

/// Like [`decode`], but rejects codes that describe a tree under a
/// non-canonical labeling.
pub fn decode_strict(code: &Vcpc) -> Result<ColoredArborescence, CodecError> {
    let tree = decode(code)?;
    if encode_tree(&tree) != *code {
        return Err(CodecError::NotCanonical);
    }
    Ok(tree)
}

/// Undirected edges of `tree` with endpoints renamed to their ranks.
pub fn ranked_edges(tree: &ColoredArborescence, order: &CanonicalOrder) -> Vec<(usize, usize)> {
    tree.edges().map(|(p, c)| (order.rank(p), order.rank(c))).collect()
}

/// Classical Prüfer sequence of an undirected labeled tree on `0..n`.
pub fn classical_prufer(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, CodecError> {
    if n < 2 {
        return Err(CodecError::TooSmall);
    }
    let invalid = CodecError::InvalidTree { n };
    if edges.len() != n - 1 {
        return Err(invalid);
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(invalid);
        }
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    // n - 1 edges and connected means a tree.
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(invalid);
    }

    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut code = Vec::with_capacity(n - 2);
    while code.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree with 3+ vertices has a leaf");
        removed[leaf] = true;
        let next = *adjacency[leaf]
            .iter()
            .find(|&&w| !removed[w])
            .expect("a leaf has one remaining neighbor");
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 {
            leaves.push(Reverse(next));
        }
    }
    Ok(code)
}

/// Inverse of [`classical_prufer`]: the edges of the tree on
/// `0..code.len() + 2`, listed in removal order.
pub fn classical_prufer_decode(code: &[usize]) -> Result<Vec<(usize, usize)>, CodecError> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in code {
        if v >= n {
            return Err(CodecError::InvalidTree { n });
        }
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("degrees sum to 2(n - 1)");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonicalize;
    use crate::samples;

    fn code(parents: &[Option<usize>], colors: &[u32]) -> Vcpc {
        Vcpc::from_raw(parents, colors).unwrap()
    }

    #[test]
    fn pruning_example() {
        let t = samples::pruning_example();
        let order = canonical_order(&t);
        let (c, trace) = encode(&t, &order).unwrap();
        assert_eq!(c, code(&[Some(0), Some(2), Some(2), Some(0), None], &[0, 1, 4, 0, 2]));
        assert_eq!(trace.pruned, vec![1, 3, 4, 2, 0]);
        assert_eq!(trace.parent_of.last(), Some(&None));
        assert_eq!(c.to_string(), "[0, 2, 2, 0, ∅; 0, 1, 4, 0, 2]");
    }

    #[test]
    fn singleton_code() {
        let t = ColoredArborescence::singleton(Color(7));
        let c = encode_tree(&t);
        assert_eq!(c, code(&[None], &[7]));
        assert_eq!(decode(&c).unwrap(), t);
    }

    #[test]
    fn order_length_is_checked() {
        let t = samples::pruning_example();
        let order = CanonicalOrder::from_sequence(vec![0, 1]).unwrap();
        assert_eq!(
            encode(&t, &order).unwrap_err(),
            CodecError::OrderMismatch { tree: 5, order: 2 }
        );
    }

    #[test]
    fn decode_gives_canonical_form() {
        for t in [samples::pruning_example(), samples::automorphic(), samples::ld_example()] {
            let c = encode_tree(&t);
            assert_eq!(decode(&c).unwrap(), canonicalize(&t).0);
            assert_eq!(decode_strict(&c).unwrap(), canonicalize(&t).0);
        }
    }

    #[test]
    fn new_rejects_bad_rows() {
        assert_eq!(Vcpc::from_raw(&[], &[]), Err(CodecError::Empty));
        assert!(matches!(
            Vcpc::from_raw(&[Some(0), None], &[1]),
            Err(CodecError::LengthMismatch { .. })
        ));
        assert!(matches!(
            Vcpc::from_raw(&[None, Some(0)], &[1, 1]),
            Err(CodecError::SentinelPosition { index: 0 })
        ));
        assert!(matches!(
            Vcpc::from_raw(&[Some(0), Some(0)], &[1, 1]),
            Err(CodecError::SentinelPosition { index: 1 })
        ));
        assert!(matches!(
            Vcpc::from_raw(&[Some(2), None], &[1, 1]),
            Err(CodecError::LabelOutOfRange { index: 0, label: 2, n: 2 })
        ));
    }

    #[test]
    fn decode_rejects_non_trees() {
        // 1 -> 2 -> 1 cycle, root 0 isolated
        let c = code(&[Some(2), Some(1), None], &[0, 0, 0]);
        assert!(matches!(decode(&c), Err(CodecError::NotATree(_))));
        // a vertex names itself as parent before the root is referenced
        let c = code(&[Some(1), Some(1), None], &[0, 0, 0]);
        assert!(matches!(decode(&c), Err(CodecError::NotATree(_))));
    }

    #[test]
    fn strict_decode_rejects_non_canonical_labeling() {
        // root 0 with children 1 (yellow) and 2 (blue): canonical order would
        // put the blue child first.
        let c = code(&[Some(0), Some(0), None], &[4, 0, 2]);
        assert!(decode(&c).is_ok());
        assert_eq!(decode_strict(&c), Err(CodecError::NotCanonical));
    }

    #[test]
    fn json_shape() {
        let c = code(&[Some(0), None], &[1, 2]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"parents":[0,null],"colors":[1,2],"n":2}"#);
        let back: Vcpc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Vcpc>(r#"{"parents":[null,0],"colors":[1,2]}"#).is_err());
        assert!(serde_json::from_str::<Vcpc>(r#"{"parents":[0,null],"colors":[1,2],"n":3}"#).is_err());
    }

    #[test]
    fn classical_textbook_example() {
        let t = samples::classical_example_edges();
        assert_eq!(classical_prufer(7, &t).unwrap(), vec![4, 4, 1, 4, 4]);
        let mut back = classical_prufer_decode(&[4, 4, 1, 4, 4]).unwrap();
        let mut expected = t.clone();
        for e in back.iter_mut().chain(expected.iter_mut()) {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        back.sort_unstable();
        expected.sort_unstable();
        assert_eq!(back, expected);
    }

    #[test]
    fn classical_rejects_bad_input() {
        assert_eq!(classical_prufer(1, &[]), Err(CodecError::TooSmall));
        assert_eq!(classical_prufer(3, &[(0, 1)]), Err(CodecError::InvalidTree { n: 3 }));
        assert_eq!(
            classical_prufer(4, &[(0, 1), (1, 0), (2, 3)]),
            Err(CodecError::InvalidTree { n: 4 })
        );
        assert_eq!(classical_prufer(2, &[(0, 1)]).unwrap(), Vec::<usize>::new());
        assert_eq!(classical_prufer_decode(&[]).unwrap(), vec![(0, 1)]);
        assert!(classical_prufer_decode(&[5]).is_err());
    }

    #[test]
    fn prefix_equals_classical_code_on_golden_trees() {
        for t in [samples::pruning_example(), samples::automorphic()] {
            let order = canonical_order(&t);
            let (c, _) = encode(&t, &order).unwrap();
            let classical = classical_prufer(t.len(), &ranked_edges(&t, &order)).unwrap();
            assert_eq!(&c.parent_labels()[..t.len() - 2], classical.as_slice());
        }
    }

    #[test]
    fn prefix_differs_when_root_is_an_early_leaf() {
        // root 0 -> 1 (leaf), 0 -> 2 -> 3 -> 4
        let t = ColoredArborescence::from_parents(
            &[None, Some(0), Some(0), Some(2), Some(3)],
            vec![Color(0); 5],
        )
        .unwrap();
        let order = canonical_order(&t);
        let (c, _) = encode(&t, &order).unwrap();
        assert_eq!(c.parent_labels(), vec![0, 3, 2, 0]);
        let classical = classical_prufer(5, &ranked_edges(&t, &order)).unwrap();
        assert_eq!(classical, vec![0, 2, 3]);
        // with a pendant vertex hung off the root the codes coincide
        let mut edges = ranked_edges(&t, &order);
        edges.push((0, 5));
        assert_eq!(classical_prufer(6, &edges).unwrap(), c.parent_labels());
    }
}
