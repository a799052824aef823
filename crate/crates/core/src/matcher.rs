//! Code-level predicates: isomorphism, adjacency, shape and sub-arborescence
//! matching, plus the leaf-rooting extension to undirected trees.
//!
//! In a code `P`, column `i` stands for the vertex `v_i` pruned at step `i`.
//! The parent of `v_i` is `v_j` for the first `j > i` with `p_j < p_i`,
//! where the sentinel `∅` of the root column counts as smaller than every
//! label. Everything below is computed from the two rows alone.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::canonicalize;
use crate::tree::{ColoredArborescence, VertexId};
use crate::vcpc::{encode_tree, Vcpc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("column {index} is outside a code of length {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("column {index} holds the sentinel and has no parent label")]
    SentinelCompared { index: usize },
    #[error("columns must satisfy i < j (got {i}, {j})")]
    NotAscending { i: usize, j: usize },
    #[error("gave up after examining {examined} candidate index sets (cap {cap})")]
    CandidateExplosion { examined: u64, cap: u64 },
}

/// Isomorphism test: two colored arborescences are isomorphic iff their
/// canonical codes are identical.
pub fn codes_isomorphic(a: &Vcpc, b: &Vcpc) -> bool {
    a == b
}

/// Order-preserving relabeling of a sequence onto `0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shape(pub Vec<usize>);

/// Replaces each value by its rank among the distinct values.
pub fn shape<T: Ord>(xs: &[T]) -> Shape {
    let mut distinct: Vec<&T> = xs.iter().collect();
    distinct.sort_unstable();
    distinct.dedup();
    Shape(
        xs.iter()
            .map(|x| distinct.binary_search(&x).expect("value is present"))
            .collect(),
    )
}

/// Whether `v_j` is the parent of `v_i`, read off the parents row alone:
/// `p_j < p_i` and `p_k >= p_i` for every `i < k < j`. The sentinel counts
/// as the smallest value, so `j` may be the root column.
pub fn code_adjacent(parents: &[Option<usize>], i: usize, j: usize) -> Result<bool, MatchError> {
    let n = parents.len();
    if i >= j {
        return Err(MatchError::NotAscending { i, j });
    }
    if j >= n {
        return Err(MatchError::IndexOutOfRange { index: j, n });
    }
    let pi = parents[i].ok_or(MatchError::SentinelCompared { index: i })?;
    let below = |p: Option<usize>| p.is_none_or(|p| p < pi);
    Ok(below(parents[j]) && !parents[i + 1..j].iter().any(|&p| below(p)))
}

/// `parent_column[i]` is the column of the parent of `v_i`, `None` for the
/// root column. One stack pass finds each column's next strictly smaller
/// entry.
pub fn parent_columns(parents: &[Option<usize>]) -> Vec<Option<usize>> {
    let n = parents.len();
    let mut out = vec![None; n];
    let mut open: Vec<usize> = Vec::new();
    for (j, &pj) in parents.iter().enumerate() {
        while let Some(&i) = open.last() {
            let smaller = match (pj, parents[i]) {
                (None, _) => true,
                (Some(pj), Some(pi)) => pj < pi,
                (Some(_), None) => false,
            };
            if !smaller {
                break;
            }
            out[i] = Some(j);
            open.pop();
        }
        open.push(j);
    }
    out
}

/// All `(i, j)` with `v_j` the parent of `v_i`, ordered by `i`.
pub fn adjacent_pairs(parents: &[Option<usize>]) -> Vec<(usize, usize)> {
    parent_columns(parents)
        .into_iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| (i, j)))
        .collect()
}

/// Strictly ascending code columns `i_0 < … < i_{n'-1}`; pattern column `a`
/// is placed on host column `indices[a]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EmbeddingIndices(pub Vec<usize>);

impl EmbeddingIndices {
    pub fn identity(n: usize) -> Self {
        EmbeddingIndices((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index set of `a` inside `c`, given `a` inside `b` (`self`) and `b`
    /// inside `c`.
    pub fn compose(&self, outer: &EmbeddingIndices) -> EmbeddingIndices {
        EmbeddingIndices(self.0.iter().map(|&i| outer.0[i]).collect())
    }
}

/// Lazily enumerates ascending index sets whose host colors equal the
/// pattern colors, in lexicographic order.
pub struct ColorMatchingSets<'a> {
    host: &'a Vcpc,
    pattern: &'a Vcpc,
    /// `positions[a]` lists host columns carrying pattern color `a`.
    positions: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn color_matching_index_sets<'a>(pattern: &'a Vcpc, host: &'a Vcpc) -> ColorMatchingSets<'a> {
    let positions = pattern
        .colors()
        .iter()
        .map(|&c| {
            host.colors()
                .iter()
                .enumerate()
                .filter(|&(_, &hc)| hc == c)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    ColorMatchingSets {
        host,
        pattern,
        positions,
        cursor: Vec::new(),
        started: false,
        done: pattern.len() > host.len(),
    }
}

impl ColorMatchingSets<'_> {
    fn column(&self, a: usize) -> usize {
        self.positions[a][self.cursor[a]]
    }

    /// Extends `cursor` from depth `a` onward with the smallest feasible
    /// choices; returns false if depth `a` cannot be filled.
    fn fill_from(&mut self, a: usize) -> bool {
        let n_pattern = self.pattern.len();
        let n_host = self.host.len();
        let mut a = a;
        while a < n_pattern {
            let floor = if a == 0 { 0 } else { self.column(a - 1) + 1 };
            let start = if self.cursor.len() > a { self.cursor[a] } else { 0 };
            let options = &self.positions[a];
            let offset = options[start..].partition_point(|&i| i < floor);
            let k = start + offset;
            // the remaining pattern columns need room to the right
            if k >= options.len() || options[k] + (n_pattern - a) > n_host {
                if a == 0 {
                    return false;
                }
                self.cursor.truncate(a);
                a -= 1;
                self.cursor[a] += 1;
                continue;
            }
            self.cursor.truncate(a);
            self.cursor.push(k);
            a += 1;
        }
        true
    }
}

impl Iterator for ColorMatchingSets<'_> {
    type Item = EmbeddingIndices;

    fn next(&mut self) -> Option<EmbeddingIndices> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.fill_from(0)
        } else {
            let last = self.cursor.len() - 1;
            self.cursor[last] += 1;
            self.fill_from(last)
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(EmbeddingIndices(
            (0..self.pattern.len()).map(|a| self.column(a)).collect(),
        ))
    }
}

/// Condition 2: the selected host parent labels (sentinel column of the
/// pattern excluded) have the same shape as the pattern's.
pub fn shape_ok(pattern: &Vcpc, host: &Vcpc, idx: &EmbeddingIndices) -> bool {
    let m = pattern.len() - 1;
    let selected: Option<Vec<usize>> = idx.0[..m].iter().map(|&i| host.parents()[i]).collect();
    match selected {
        Some(selected) => shape(&selected) == shape(&pattern.parents()[..m]),
        None => false,
    }
}

/// Condition 3: every pattern edge `(a, b)` recovered from the pattern's
/// parents row lands on a host edge, i.e. `p_{i_b} < p_{i_a}` and
/// `p_l >= p_{i_a}` for all `i_a < l < i_b`.
pub fn incident_edge_ok(pattern_parents: &[Option<usize>], host_parents: &[Option<usize>], idx: &EmbeddingIndices) -> bool {
    adjacent_pairs(pattern_parents).into_iter().all(|(a, b)| {
        let (ia, ib) = (idx.0[a], idx.0[b]);
        ia < ib && code_adjacent(host_parents, ia, ib).unwrap_or(false)
    })
}

/// Knobs for [`match_subarborescence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchOptions {
    /// Abort after this many partial index sets.
    pub cap: u64,
}

pub const DEFAULT_CANDIDATE_CAP: u64 = 1_000_000;

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions {
            cap: DEFAULT_CANDIDATE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchOutcome {
    pub witness: Option<EmbeddingIndices>,
    pub candidates_examined: u64,
}

/// True if every color of `pattern` occurs in `host` at least as often.
pub fn color_multiset_fits(pattern: &Vcpc, host: &Vcpc) -> bool {
    let mut budget: BTreeMap<_, i64> = BTreeMap::new();
    for &c in host.colors() {
        *budget.entry(c).or_default() += 1;
    }
    pattern.colors().iter().all(|c| {
        let slot = budget.entry(*c).or_default();
        *slot -= 1;
        *slot >= 0
    })
}

struct Search<'a> {
    pattern: &'a Vcpc,
    host: &'a Vcpc,
    host_parent_col: Vec<Option<usize>>,
    pattern_parent_col: Vec<Option<usize>>,
    /// Host column forced onto each pattern column by an already placed child.
    forced: Vec<Option<usize>>,
    chosen: Vec<usize>,
    examined: u64,
    cap: u64,
}

impl Search<'_> {
    /// Depth-first extension in lexicographic order. Stages per column:
    /// color, shape against the placed prefix, then incident edges, which
    /// also pin the column of the pattern parent.
    fn extend(&mut self, a: usize) -> Result<bool, MatchError> {
        let n_pattern = self.pattern.len();
        if a == n_pattern {
            return Ok(true);
        }
        let floor = self.chosen.last().map_or(0, |&i| i + 1);
        let ceiling = self.host.len() - (n_pattern - a);
        let candidates: Vec<usize> = match self.forced[a] {
            Some(i) if i >= floor && i <= ceiling => vec![i],
            Some(_) => Vec::new(),
            None => (floor..=ceiling).collect(),
        };
        for i in candidates {
            if self.host.colors()[i] != self.pattern.colors()[a] {
                continue;
            }
            self.examined += 1;
            if self.examined > self.cap {
                return Err(MatchError::CandidateExplosion {
                    examined: self.examined,
                    cap: self.cap,
                });
            }
            if !self.prefix_shape_ok(a, i) {
                continue;
            }
            // the pattern parent of `a` must sit on the host parent of `i`
            let pin = match self.pattern_parent_col[a] {
                Some(b) => match (self.host_parent_col[i], self.forced[b]) {
                    (None, _) => continue,
                    (Some(j), Some(f)) if f != j => continue,
                    (Some(j), _) => Some((b, j)),
                },
                None => None,
            };
            let previous = pin.map(|(b, _)| self.forced[b]);
            if let Some((b, j)) = pin {
                self.forced[b] = Some(j);
            }
            self.chosen.push(i);
            if self.extend(a + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            if let (Some((b, _)), Some(prev)) = (pin, previous) {
                self.forced[b] = prev;
            }
        }
        Ok(false)
    }

    fn prefix_shape_ok(&self, a: usize, i: usize) -> bool {
        if a + 1 == self.pattern.len() {
            return true;
        }
        let (Some(pa), Some(hi)) = (self.pattern.parents()[a], self.host.parents()[i]) else {
            return false;
        };
        self.chosen.iter().enumerate().all(|(k, &ik)| {
            let pk = self.pattern.parents()[k].expect("non-root pattern column");
            let hk = self.host.parents()[ik].expect("checked when placed");
            pa.cmp(&pk) == hi.cmp(&hk)
        })
    }
}

/// Looks for the lexicographically first ascending index set that passes
/// the color, shape and incident-edge conditions. A witness exists iff the
/// pattern tree maps onto a sub-arborescence of the host by a map that
/// keeps parent-child edges and depth-first order.
pub fn match_subarborescence(pattern: &Vcpc, host: &Vcpc, options: &MatchOptions) -> Result<MatchOutcome, MatchError> {
    if pattern.len() > host.len() || !color_multiset_fits(pattern, host) {
        return Ok(MatchOutcome {
            witness: None,
            candidates_examined: 0,
        });
    }
    let mut search = Search {
        pattern,
        host,
        host_parent_col: parent_columns(host.parents()),
        pattern_parent_col: parent_columns(pattern.parents()),
        forced: vec![None; pattern.len()],
        chosen: Vec::with_capacity(pattern.len()),
        examined: 0,
        cap: options.cap,
    };
    let found = search.extend(0)?;
    Ok(MatchOutcome {
        witness: found.then(|| EmbeddingIndices(search.chosen.clone())),
        candidates_examined: search.examined,
    })
}

/// Uncapped variant of [`match_subarborescence`].
pub fn is_subarborescence(pattern: &Vcpc, host: &Vcpc) -> Option<EmbeddingIndices> {
    match_subarborescence(pattern, host, &MatchOptions { cap: u64::MAX })
        .expect("no cap")
        .witness
}

/// Reference implementation that filters the full color-matching stream
/// through the shape and incident-edge conditions. Exponential; for tests.
pub fn is_subarborescence_exhaustive(pattern: &Vcpc, host: &Vcpc) -> Option<EmbeddingIndices> {
    color_matching_index_sets(pattern, host)
        .find(|idx| shape_ok(pattern, host, idx) && incident_edge_ok(pattern.parents(), host.parents(), idx))
}

/// Canonical label (depth-first rank) of the vertex in each code column.
/// Replays the decoder: the next pruned vertex is the smallest label no
/// longer referenced by the remaining entries.
pub fn column_labels(code: &Vcpc) -> Vec<usize> {
    let n = code.len();
    let labels = code.parent_labels();
    let mut count = vec![0usize; n];
    for &p in &labels {
        count[p] += 1;
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (1..n).filter(|&v| count[v] == 0).map(std::cmp::Reverse).collect();
    let mut out = Vec::with_capacity(n);
    for &p in &labels {
        let std::cmp::Reverse(v) = ready.pop().expect("valid code");
        out.push(v);
        count[p] -= 1;
        if count[p] == 0 && p != 0 {
            ready.push(std::cmp::Reverse(p));
        }
    }
    out.push(0);
    out
}

/// Maps each pattern vertex (by canonical label) to the host vertex (by
/// canonical label) that a witness places it on.
pub fn witness_vertex_map(pattern: &Vcpc, host: &Vcpc, witness: &EmbeddingIndices) -> Vec<usize> {
    let pattern_labels = column_labels(pattern);
    let host_labels = column_labels(host);
    let mut map = vec![0; pattern.len()];
    for (a, &i) in witness.0.iter().enumerate() {
        map[pattern_labels[a]] = host_labels[i];
    }
    map
}

/// Children subtrees of an apex, one vertex block per child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPartition {
    pub apex: VertexId,
    pub branches: Vec<Vec<VertexId>>,
}

pub fn branch_partition(tree: &ColoredArborescence, apex: VertexId) -> BranchPartition {
    BranchPartition {
        apex,
        branches: tree
            .children(apex)
            .iter()
            .map(|&c| {
                let mut block = tree.subtree(c).vertices();
                block.sort_unstable();
                block
            })
            .collect(),
    }
}

/// Canonical code of `tree` rooted at its smallest undirected leaf.
fn leaf_rooted_code(tree: &ColoredArborescence) -> Vcpc {
    let leaf = tree.undirected_leaves()[0];
    encode_tree(&tree.reroot(leaf))
}

/// Distinct canonical codes of `tree` rooted at each undirected leaf.
pub fn leaf_rootings(tree: &ColoredArborescence) -> Vec<Vcpc> {
    let mut codes: Vec<Vcpc> = tree
        .undirected_leaves()
        .into_iter()
        .map(|leaf| encode_tree(&tree.reroot(leaf)))
        .collect();
    codes.sort();
    codes.dedup();
    codes
}

/// Undirected colored subtree test: root `small` at one leaf, then try
/// every leaf rooting of `large`.
pub fn undirected_subtree(small: &ColoredArborescence, large: &ColoredArborescence) -> bool {
    UndirectedMatcher::default().matches(small, large)
}

/// [`undirected_subtree`] with the leaf rootings of host trees memoized.
#[derive(Debug, Default)]
pub struct UndirectedMatcher {
    rootings: HashMap<ColoredArborescence, Vec<Vcpc>>,
}

impl UndirectedMatcher {
    pub fn matches(&mut self, small: &ColoredArborescence, large: &ColoredArborescence) -> bool {
        if small.len() > large.len() {
            return false;
        }
        let pattern = leaf_rooted_code(small);
        let hosts = self
            .rootings
            .entry(canonicalize(large).0)
            .or_insert_with(|| leaf_rootings(large));
        hosts.iter().any(|host| is_subarborescence(&pattern, host).is_some())
    }

    pub fn cached_trees(&self) -> usize {
        self.rootings.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::tree::Color;

    fn code(parents: &[Option<usize>], colors: &[u32]) -> Vcpc {
        Vcpc::from_raw(parents, colors).unwrap()
    }

    #[test]
    fn shape_examples() {
        assert_eq!(shape(&[0, 2, 2, 0]), Shape(vec![0, 1, 1, 0]));
        assert_eq!(shape(&[1, 2, 3, 4, 5, 6]), shape(&[1, 4, 5, 8, 9, 10]));
        assert_ne!(shape(&[1, 2, 3, 4, 5, 6]), shape(&[1, 1, 2, 3, 4, 5]));
        assert_eq!(shape::<u32>(&[]), Shape(vec![]));
    }

    #[test]
    fn adjacency_examples() {
        let p = [Some(0), Some(2), Some(2), Some(0), None];
        assert_eq!(code_adjacent(&p, 1, 3), Ok(true));
        assert_eq!(code_adjacent(&p, 0, 1), Ok(false));
        assert_eq!(code_adjacent(&p, 0, 4), Ok(true));
        assert_eq!(code_adjacent(&p, 3, 2), Err(MatchError::NotAscending { i: 3, j: 2 }));
        assert_eq!(code_adjacent(&p, 1, 5), Err(MatchError::IndexOutOfRange { index: 5, n: 5 }));
        assert_eq!(
            code_adjacent(&[None, None], 0, 1),
            Err(MatchError::SentinelCompared { index: 0 })
        );
        assert_eq!(adjacent_pairs(&p), vec![(0, 4), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn color_sets_small() {
        let host = code(&[Some(1), Some(2), None], &[0, 1, 0]);
        let pattern = code(&[Some(1), None], &[0, 0]);
        let sets: Vec<_> = color_matching_index_sets(&pattern, &host).collect();
        assert_eq!(sets, vec![EmbeddingIndices(vec![0, 2])]);
        let absent = code(&[Some(1), None], &[0, 3]);
        assert_eq!(color_matching_index_sets(&absent, &host).count(), 0);
        let all: Vec<_> = color_matching_index_sets(&host, &host).collect();
        assert_eq!(all, vec![EmbeddingIndices::identity(3)]);
    }

    #[test]
    fn color_sets_match_filtered_combinations() {
        let host = code(
            &[Some(3), Some(3), Some(2), Some(0), Some(5), Some(0), None],
            &[0, 1, 0, 1, 0, 1, 0],
        );
        let pattern = code(&[Some(1), Some(2), None], &[1, 0, 0]);
        let got: Vec<_> = color_matching_index_sets(&pattern, &host).map(|e| e.0).collect();
        let mut expected = Vec::new();
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    if [host.colors()[a], host.colors()[b], host.colors()[c]] == [Color(1), Color(0), Color(0)] {
                        expected.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn golden_subtree_pairs() {
        let pattern = encode_tree(&samples::pruning_example());
        let rooted = encode_tree(&samples::subtree_host_rooted());
        let lifted = encode_tree(&samples::subtree_host_lifted());
        let wide = encode_tree(&samples::subtree_pattern_wide());
        assert_eq!(is_subarborescence(&pattern, &rooted), Some(EmbeddingIndices(vec![2, 5, 6, 8, 9])));
        assert_eq!(is_subarborescence(&pattern, &lifted), Some(EmbeddingIndices(vec![3, 4, 5, 7, 8])));
        assert_eq!(is_subarborescence(&wide, &lifted), None);
    }

    #[test]
    fn motivating_decoy_fails_only_on_incident_edges() {
        let pattern = encode_tree(&samples::motivating_pattern());
        let host = encode_tree(&samples::motivating_decoy());
        for boxed in [vec![0, 1, 2, 5], vec![0, 1, 4, 5]] {
            let idx = EmbeddingIndices(boxed);
            assert!(shape_ok(&pattern, &host, &idx));
            assert!(!incident_edge_ok(pattern.parents(), host.parents(), &idx));
        }
        assert_eq!(is_subarborescence(&pattern, &host), None);
        assert_eq!(is_subarborescence_exhaustive(&pattern, &host), None);
    }

    #[test]
    fn motivating_star_contains_pattern() {
        let pattern = encode_tree(&samples::motivating_pattern());
        let host = encode_tree(&samples::motivating_star());
        let w = is_subarborescence(&pattern, &host).unwrap();
        assert_eq!(w, EmbeddingIndices(vec![0, 2, 4, 5]));
        assert!(incident_edge_ok(pattern.parents(), host.parents(), &EmbeddingIndices(vec![0, 3, 4, 5])));
    }

    #[test]
    fn reflexive_identity() {
        let p = encode_tree(&samples::subtree_host_lifted());
        assert_eq!(is_subarborescence(&p, &p), Some(EmbeddingIndices::identity(p.len())));
        assert!(incident_edge_ok(p.parents(), p.parents(), &EmbeddingIndices::identity(p.len())));
    }

    #[test]
    fn cap_is_enforced() {
        let p = encode_tree(&samples::subtree_host_lifted());
        let err = match_subarborescence(&p, &p, &MatchOptions { cap: 3 }).unwrap_err();
        assert!(matches!(err, MatchError::CandidateExplosion { cap: 3, .. }));
    }

    #[test]
    fn order_sensitive_pair_is_rejected() {
        let (pattern, host) = samples::order_sensitive_pair();
        assert_eq!(is_subarborescence(&encode_tree(&pattern), &encode_tree(&host)), None);
    }

    #[test]
    fn column_labels_follow_postorder() {
        let c = encode_tree(&samples::pruning_example());
        assert_eq!(column_labels(&c), vec![1, 3, 4, 2, 0]);
    }

    #[test]
    fn vertex_map_of_first_pair() {
        let pattern = encode_tree(&samples::pruning_example());
        let host = encode_tree(&samples::subtree_host_rooted());
        let w = is_subarborescence(&pattern, &host).unwrap();
        let map = witness_vertex_map(&pattern, &host, &w);
        assert_eq!(map[0], 0);
        assert_eq!(map.len(), 5);
    }

    #[test]
    fn branches() {
        let t = samples::subtree_host_rooted();
        let bp = branch_partition(&t, 0);
        assert_eq!(bp.branches, vec![vec![1, 3, 4], vec![2, 5, 6, 7, 8, 9]]);
        assert!(branch_partition(&t, 9).branches.is_empty());
    }

    #[test]
    fn undirected_examples() {
        let host = samples::subtree_host_lifted();
        let single = ColoredArborescence::singleton(Color(4));
        assert!(undirected_subtree(&single, &host));
        assert!(!undirected_subtree(&ColoredArborescence::singleton(Color(3)), &host));
        assert!(undirected_subtree(&host, &host));
        let mut m = UndirectedMatcher::default();
        assert!(m.matches(&samples::pruning_example(), &host));
        assert!(m.matches(&samples::pruning_example(), &host));
        assert_eq!(m.cached_trees(), 1);
    }
}
