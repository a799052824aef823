//! Lexicographic depth-first search arrays and the canonical vertex order.
//!
//! For a vertex `v`, `LD_A(T[v])` is an array of color arrays: a leaf has
//! `[[]]`; an internal vertex has the ascending colors of its sorted
//! children followed by the children's own arrays, concatenated in sibling
//! order. Siblings sort by `(color, LD_A)` where arrays compare
//! lexicographically and a strict prefix is smaller, which is exactly the
//! derived `Ord` on `Vec<Vec<Color>>`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Color, ColoredArborescence, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("candidate list is empty")]
    EmptyCandidateList,
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
}

/// `LD_A` of one subtree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LdArray(pub Vec<Vec<Color>>);

impl LdArray {
    pub fn leaf() -> Self {
        LdArray(vec![Vec::new()])
    }

    pub fn from_u32(arrays: &[&[u32]]) -> Self {
        LdArray(
            arrays
                .iter()
                .map(|a| a.iter().copied().map(Color).collect())
                .collect(),
        )
    }

    /// Number of inner arrays, which equals the subtree's vertex count.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for LdArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_arrays(&self.0, f)
    }
}

/// `[[c(root)]]` followed by `LD_A` of the whole tree. Determines the tree
/// up to colored isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FullLdArray(pub Vec<Vec<Color>>);

impl FullLdArray {
    pub fn from_u32(arrays: &[&[u32]]) -> Self {
        FullLdArray(LdArray::from_u32(arrays).0)
    }
}

impl fmt::Display for FullLdArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_arrays(&self.0, f)
    }
}

fn fmt_arrays(arrays: &[Vec<Color>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for (i, a) in arrays.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "[")?;
        for (j, c) in a.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

/// Per-vertex `LD_A(T[v])`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdCache(Vec<LdArray>);

impl LdCache {
    pub fn from_arrays(arrays: Vec<LdArray>) -> Self {
        LdCache(arrays)
    }

    pub fn get(&self, v: VertexId) -> &LdArray {
        &self.0[v]
    }
}

fn sibling_cmp(a: VertexId, b: VertexId, colors: &[Color], cache: &LdCache) -> Ordering {
    colors[a]
        .cmp(&colors[b])
        .then_with(|| cache.get(a).cmp(cache.get(b)))
}

/// Minimum candidate under `(color, LD_A)`; the earliest one wins ties.
pub fn min_vertex(
    candidates: &[VertexId],
    colors: &[Color],
    cache: &LdCache,
) -> Result<VertexId, CanonError> {
    let (&first, rest) = candidates
        .split_first()
        .ok_or(CanonError::EmptyCandidateList)?;
    Ok(rest.iter().fold(first, |best, &v| {
        if sibling_cmp(v, best, colors, cache) == Ordering::Less {
            v
        } else {
            best
        }
    }))
}

/// Candidates in ascending `(color, LD_A)` order. Repeatedly extracting
/// [`min_vertex`] is a stable selection sort, so a stable sort with the same
/// comparator gives the identical sequence.
pub fn sort_siblings(candidates: &[VertexId], colors: &[Color], cache: &LdCache) -> Vec<VertexId> {
    let mut sorted = candidates.to_vec();
    sorted.sort_by(|&a, &b| sibling_cmp(a, b, colors, cache));
    sorted
}

/// `LD_A` of the whole tree and of every subtree, computed bottom-up over
/// the reverse of a breadth-first order.
pub fn ld_array(tree: &ColoredArborescence) -> (LdArray, LdCache) {
    let mut cache = LdCache(vec![LdArray(Vec::new()); tree.len()]);
    for v in tree.bfs_order().into_iter().rev() {
        let children = tree.children(v);
        let ld = if children.is_empty() {
            LdArray::leaf()
        } else {
            let sorted = sort_siblings(children, tree.colors(), &cache);
            let total: usize = sorted.iter().map(|&c| cache.get(c).len()).sum();
            let mut arrays = Vec::with_capacity(total + 1);
            arrays.push(sorted.iter().map(|&c| tree.color(c)).collect());
            for &c in &sorted {
                arrays.extend(cache.get(c).0.iter().cloned());
            }
            LdArray(arrays)
        };
        cache.0[v] = ld;
    }
    (cache.get(tree.root()).clone(), cache)
}

pub fn full_ld_array(tree: &ColoredArborescence) -> FullLdArray {
    let (ld, _) = ld_array(tree);
    let mut arrays = Vec::with_capacity(ld.len() + 1);
    arrays.push(vec![tree.color(tree.root())]);
    arrays.extend(ld.0);
    FullLdArray(arrays)
}

/// The canonical vertex order `φ`: `rank[v]` is `φ(v)`, `vertex_at[i]` its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrder {
    rank: Vec<usize>,
    vertex_at: Vec<VertexId>,
}

impl CanonicalOrder {
    /// Builds an order from a sequence of vertices; fails unless it is a
    /// permutation of `0..n`.
    pub fn from_sequence(vertex_at: Vec<VertexId>) -> Option<Self> {
        let n = vertex_at.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in vertex_at.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return None;
            }
            rank[v] = i;
        }
        Some(CanonicalOrder { rank, vertex_at })
    }

    pub fn rank(&self, v: VertexId) -> usize {
        self.rank[v]
    }

    pub fn vertex_at(&self, rank: usize) -> VertexId {
        self.vertex_at[rank]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn sequence(&self) -> &[VertexId] {
        &self.vertex_at
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }
}

/// Depth-first search from the root visiting siblings in `(color, LD_A)` order.
pub fn canonical_order(tree: &ColoredArborescence) -> CanonicalOrder {
    let (_, cache) = ld_array(tree);
    canonical_order_with(tree, &cache)
}

pub fn canonical_order_with(tree: &ColoredArborescence, cache: &LdCache) -> CanonicalOrder {
    let mut sequence = Vec::with_capacity(tree.len());
    let mut stack = vec![tree.root()];
    while let Some(v) = stack.pop() {
        sequence.push(v);
        let sorted = sort_siblings(tree.children(v), tree.colors(), cache);
        stack.extend(sorted.into_iter().rev());
    }
    CanonicalOrder::from_sequence(sequence).expect("a DFS visits every vertex once")
}

/// Relabels `tree` so vertex `i` is the vertex of rank `i`; children lists
/// come out in canonical sibling order.
pub fn canonicalize(tree: &ColoredArborescence) -> (ColoredArborescence, CanonicalOrder) {
    let order = canonical_order(tree);
    let relabeled = tree
        .relabel(order.ranks())
        .expect("ranks form a permutation");
    (relabeled, order)
}

/// Rebuilds a tree from its full `LD_A`. Vertices come out labeled in
/// canonical order, so `reconstruct(full_ld_array(t))` equals
/// `canonicalize(t).0` exactly.
pub fn reconstruct(full: &FullLdArray) -> Result<ColoredArborescence, CanonError> {
    let malformed = |msg: &str| CanonError::MalformedDescriptor(msg.to_string());
    let (head, body) = full.0.split_first().ok_or_else(|| malformed("empty descriptor"))?;
    if head.len() != 1 {
        return Err(malformed("first array must hold exactly the root color"));
    }
    let entries: usize = body.iter().map(Vec::len).sum();
    if entries + 1 != body.len() {
        return Err(malformed(&format!(
            "{} child colors cannot describe {} vertices",
            entries,
            body.len()
        )));
    }

    let n = body.len();
    let mut colors = Vec::with_capacity(n);
    let mut parents = Vec::with_capacity(n);
    // Pending sibling groups, innermost last: (parent, remaining colors).
    let mut pending: Vec<(Option<VertexId>, std::slice::Iter<'_, Color>)> =
        vec![(None, head.iter())];
    for (v, arrays) in body.iter().enumerate() {
        let (parent, color) = loop {
            let (parent, group) = pending
                .last_mut()
                .ok_or_else(|| malformed("more arrays than announced vertices"))?;
            match group.next() {
                Some(&c) => break (*parent, c),
                None => {
                    pending.pop();
                }
            }
        };
        parents.push(parent);
        colors.push(color);
        if !arrays.is_empty() {
            pending.push((Some(v), arrays.iter()));
        }
    }
    if pending.iter_mut().any(|(_, group)| group.next().is_some()) {
        return Err(malformed("announced children without arrays"));
    }
    ColoredArborescence::from_parents(&parents, colors)
        .map_err(|e| CanonError::MalformedDescriptor(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn cache_of(arrays: &[&[&[u32]]]) -> LdCache {
        LdCache(arrays.iter().map(|a| LdArray::from_u32(a)).collect())
    }

    #[test]
    fn min_vertex_prefers_smaller_color() {
        // vertex 0 yellow, vertex 1 green
        let colors = [Color(2), Color(1)];
        let cache = cache_of(&[&[&[]], &[&[]]]);
        assert_eq!(min_vertex(&[0, 1], &colors, &cache).unwrap(), 1);
        assert_eq!(min_vertex(&[0], &colors, &cache).unwrap(), 0);
        assert_eq!(min_vertex(&[], &colors, &cache), Err(CanonError::EmptyCandidateList));
    }

    #[test]
    fn min_vertex_breaks_color_ties_by_array() {
        let colors = [Color(1), Color(1)];
        let cache = cache_of(&[&[&[0, 1], &[], &[]], &[&[0, 0, 2], &[], &[], &[]]]);
        assert_eq!(min_vertex(&[0, 1], &colors, &cache).unwrap(), 1);
    }

    #[test]
    fn prefix_is_smaller() {
        assert!(LdArray::from_u32(&[&[1]]) < LdArray::from_u32(&[&[1, 0]]));
        assert!(LdArray::from_u32(&[&[]]) < LdArray::from_u32(&[&[0], &[]]));
        assert!(LdArray::from_u32(&[&[1], &[]]) < LdArray::from_u32(&[&[1], &[], &[]]));
    }

    #[test]
    fn sort_siblings_is_stable() {
        let colors = [Color(2), Color(1), Color(1)];
        let cache = cache_of(&[&[&[]], &[&[]], &[&[]]]);
        assert_eq!(sort_siblings(&[0, 1, 2], &colors, &cache), vec![1, 2, 0]);
        assert_eq!(sort_siblings(&[2, 1, 0], &colors, &cache), vec![2, 1, 0]);
        assert_eq!(sort_siblings(&[1, 2, 0], &colors, &cache), vec![1, 2, 0]);
        assert!(sort_siblings(&[], &colors, &cache).is_empty());
    }

    #[test]
    fn ten_vertex_example() {
        let t = samples::ld_example();
        let (ld, cache) = ld_array(&t);
        assert_eq!(
            ld,
            LdArray::from_u32(&[&[1, 2], &[1, 1], &[], &[0, 0, 2], &[], &[], &[], &[0, 1], &[], &[]])
        );
        // yellow child and the green grandchild with three children
        assert_eq!(cache.get(1), &LdArray::from_u32(&[&[0, 1], &[], &[]]));
        assert_eq!(cache.get(6), &LdArray::from_u32(&[&[0, 0, 2], &[], &[], &[]]));
        assert_eq!(
            full_ld_array(&t),
            FullLdArray::from_u32(&[&[0], &[1, 2], &[1, 1], &[], &[0, 0, 2], &[], &[], &[], &[0, 1], &[], &[]])
        );
    }

    #[test]
    fn small_cases() {
        let single = ColoredArborescence::singleton(Color(3));
        assert_eq!(ld_array(&single).0, LdArray::leaf());
        assert_eq!(full_ld_array(&single), FullLdArray::from_u32(&[&[3], &[]]));
        let pair = ColoredArborescence::from_parents(&[None, Some(0)], vec![Color(0), Color(5)]).unwrap();
        assert_eq!(ld_array(&pair).0, LdArray::from_u32(&[&[5], &[]]));
    }

    #[test]
    fn canonical_ranks_of_sibling_examples() {
        for (t, expected) in samples::ld_order_examples() {
            assert_eq!(canonical_order(&t).ranks(), expected.as_slice());
        }
    }

    #[test]
    fn path_ranks_follow_the_path() {
        let t = ColoredArborescence::from_parents(&[Some(2), None, Some(1)], vec![Color(0); 3]).unwrap();
        let order = canonical_order(&t);
        assert_eq!(order.sequence(), &[1, 2, 0]);
    }

    #[test]
    fn reconstruct_small() {
        let t = reconstruct(&FullLdArray::from_u32(&[&[3], &[]])).unwrap();
        assert_eq!(t, ColoredArborescence::singleton(Color(3)));
    }

    #[test]
    fn reconstruct_example_is_canonical_form() {
        let t = samples::ld_example();
        let back = reconstruct(&full_ld_array(&t)).unwrap();
        assert_eq!(back, canonicalize(&t).0);
    }

    #[test]
    fn reconstruct_rejects_bad_counts() {
        for bad in [
            FullLdArray(vec![]),
            FullLdArray::from_u32(&[&[1, 2], &[]]),
            FullLdArray::from_u32(&[&[1], &[4], &[]]).with_extra(),
            FullLdArray::from_u32(&[&[1], &[4, 4], &[]]),
            FullLdArray::from_u32(&[&[1], &[4], &[], &[]]),
        ] {
            assert!(
                matches!(reconstruct(&bad), Err(CanonError::MalformedDescriptor(_))),
                "{bad}"
            );
        }
    }

    impl FullLdArray {
        fn with_extra(mut self) -> Self {
            self.0.push(vec![Color(9)]);
            self
        }
    }
}
