//! Brute-force references and seeded random corpora.
//!
//! Nothing here reads a code: the isomorphism key, the embedding search and
//! the undirected search all work on trees directly, so they can be used to
//! cross-check the code-based predicates.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canonical::canonical_order;
use crate::tree::{Color, ColoredArborescence, VertexId};
use crate::vcpc::classical_prufer_decode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {budget} node expansions exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Multiset key `color(children keys...)`, built bottom-up. Two trees get the
/// same key iff they are isomorphic as colored arborescences.
pub fn brute_canonical(tree: &ColoredArborescence) -> String {
    let mut keys = vec![String::new(); tree.len()];
    for v in tree.bfs_order().into_iter().rev() {
        let mut child_keys: Vec<&str> = tree.children(v).iter().map(|&c| keys[c].as_str()).collect();
        child_keys.sort_unstable();
        let key = format!("{}({})", tree.color(v), child_keys.join(","));
        keys[v] = key;
    }
    std::mem::take(&mut keys[tree.root()])
}

struct EmbeddingSearch<'a> {
    pattern: &'a ColoredArborescence,
    host: &'a ColoredArborescence,
    /// Pattern vertices in canonical preorder.
    sequence: Vec<VertexId>,
    /// Previous sibling of each pattern vertex in canonical order.
    previous_sibling: Vec<Option<VertexId>>,
    host_rank: Vec<usize>,
    ordered: bool,
    image: Vec<Option<VertexId>>,
    expansions: u64,
    budget: u64,
    limit: usize,
    found: Vec<Vec<VertexId>>,
}

impl EmbeddingSearch<'_> {
    fn run(&mut self, k: usize) -> Result<(), OracleError> {
        if self.found.len() >= self.limit {
            return Ok(());
        }
        if k == self.sequence.len() {
            self.found
                .push(self.image.iter().map(|v| v.expect("all placed")).collect());
            return Ok(());
        }
        let v = self.sequence[k];
        let candidates: Vec<VertexId> = match self.pattern.parent(v) {
            None => (0..self.host.len()).collect(),
            Some(p) => self.host.children(self.image[p].expect("parent placed first")).to_vec(),
        };
        for w in candidates {
            if self.host.color(w) != self.pattern.color(v) {
                continue;
            }
            if let Some(s) = self.previous_sibling[v] {
                let ws = self.image[s].expect("earlier sibling placed");
                if ws == w || (self.ordered && self.host_rank[w] < self.host_rank[ws]) {
                    continue;
                }
                // siblings placed before `s` were already checked against `s`
                if !self.ordered && self.sibling_images(v).contains(&w) {
                    continue;
                }
            }
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(OracleError::SearchBudgetExceeded { budget: self.budget });
            }
            self.image[v] = Some(w);
            self.run(k + 1)?;
            self.image[v] = None;
            if self.found.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }

    fn sibling_images(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut s = self.previous_sibling[v];
        while let Some(x) = s {
            out.extend(self.image[x]);
            s = self.previous_sibling[x];
        }
        out
    }
}

fn search(
    pattern: &ColoredArborescence,
    host: &ColoredArborescence,
    ordered: bool,
    budget: u64,
    limit: usize,
) -> Result<Vec<Vec<VertexId>>, OracleError> {
    if pattern.len() > host.len() {
        return Ok(Vec::new());
    }
    let pattern_order = canonical_order(pattern);
    let mut previous_sibling = vec![None; pattern.len()];
    for v in 0..pattern.len() {
        let mut kids = pattern.children(v).to_vec();
        kids.sort_by_key(|&c| pattern_order.rank(c));
        for pair in kids.windows(2) {
            previous_sibling[pair[1]] = Some(pair[0]);
        }
    }
    let mut s = EmbeddingSearch {
        pattern,
        host,
        sequence: pattern_order.sequence().to_vec(),
        previous_sibling,
        host_rank: canonical_order(host).ranks().to_vec(),
        ordered,
        image: vec![None; pattern.len()],
        expansions: 0,
        budget,
        limit,
        found: Vec::new(),
    };
    s.run(0)?;
    Ok(s.found)
}

/// Every map `ψ` (as `ψ[v]`) that sends pattern vertices to host vertices
/// of the same color and pattern edges to host parent-child edges. With
/// `ordered`, siblings must also keep their canonical depth-first order.
pub fn enumerate_embeddings(
    pattern: &ColoredArborescence,
    host: &ColoredArborescence,
    ordered: bool,
    budget: u64,
) -> Result<Vec<Vec<VertexId>>, OracleError> {
    search(pattern, host, ordered, budget, usize::MAX)
}

/// First embedding found by [`enumerate_embeddings`], if any.
pub fn find_embedding(
    pattern: &ColoredArborescence,
    host: &ColoredArborescence,
    ordered: bool,
    budget: u64,
) -> Result<Option<Vec<VertexId>>, OracleError> {
    Ok(search(pattern, host, ordered, budget, 1)?.pop())
}

/// Backtracking isomorphism: equal sizes and a full embedding.
pub fn brute_isomorphic(a: &ColoredArborescence, b: &ColoredArborescence) -> bool {
    a.len() == b.len()
        && find_embedding(a, b, false, DEFAULT_SEARCH_BUDGET)
            .expect("budget suffices for test-sized trees")
            .is_some()
}

/// Undirected colored subtree search: is the underlying tree of `small`
/// a color-preserving subtree of that of `large`? Tries every host vertex
/// as the image of one fixed pattern vertex.
pub fn brute_undirected_subtree(small: &ColoredArborescence, large: &ColoredArborescence, budget: u64) -> Result<bool, OracleError> {
    if small.len() > large.len() {
        return Ok(false);
    }
    let pattern = small.reroot(0);
    for u in 0..large.len() {
        if find_embedding(&pattern, &large.reroot(u), false, budget)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The ordered counterpart over the same leaf rootings the code-based
/// undirected matcher uses.
pub fn ordered_leaf_rooted_subtree(small: &ColoredArborescence, large: &ColoredArborescence, budget: u64) -> Result<bool, OracleError> {
    if small.len() > large.len() {
        return Ok(false);
    }
    let pattern = small.reroot(small.undirected_leaves()[0]);
    for leaf in large.undirected_leaves() {
        if find_embedding(&pattern, &large.reroot(leaf), true, budget)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Identifier of the random generator, recorded in generated tree ids.
pub const GENERATOR_ID: &str = "chacha8";

/// Parameters of a random corpus: up to `m` vertices, `n` trees, `c` colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub m: usize,
    pub n: usize,
    pub c: u32,
    pub seed: u64,
}

impl GenParams {
    pub fn new(m: usize, n: usize, c: u32, seed: u64) -> Result<Self, OracleError> {
        let p = GenParams { m, n, c, seed };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), OracleError> {
        for (name, value) in [("m", self.m), ("n", self.n), ("c", self.c as usize)] {
            if value == 0 {
                return Err(OracleError::InvalidParams(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }

    /// Id of tree `index`, e.g. `chacha8:42:7`.
    pub fn tree_id(&self, index: usize) -> String {
        format!("{GENERATOR_ID}:{}:{index}", self.seed)
    }
}

/// Tree `index` of the corpus: a ChaCha8 stream keyed by `(seed, index)`, so
/// trees can be generated independently and in any order.
pub fn random_tree(params: &GenParams, index: usize) -> ColoredArborescence {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index as u64);
    let n = rng.random_range(1..=params.m);
    let edges = match n {
        1 => Vec::new(),
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            classical_prufer_decode(&code).expect("labels drawn in range")
        }
    };
    let colors: Vec<Color> = (0..n).map(|_| Color(rng.random_range(0..params.c))).collect();
    orient_from_zero(n, &edges, colors)
}

/// Roots an undirected tree on `0..n` at vertex 0 by breadth-first search.
pub fn orient_from_zero(n: usize, edges: &[(usize, usize)], colors: Vec<Color>) -> ColoredArborescence {
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut parents = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        adjacency[v].sort_unstable();
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parents[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    ColoredArborescence::from_parents(&parents, colors).expect("a connected tree")
}

pub fn random_corpus(params: &GenParams) -> Vec<ColoredArborescence> {
    (0..params.n).map(|i| random_tree(params, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn keys_of_automorphic_labelings_agree() {
        let t = samples::automorphic();
        let swapped = t.relabel(&[0, 4, 5, 6, 1, 2, 3]).unwrap();
        assert_eq!(brute_canonical(&t), brute_canonical(&swapped));
        assert_ne!(
            brute_canonical(&ColoredArborescence::singleton(Color(0))),
            brute_canonical(&ColoredArborescence::singleton(Color(1)))
        );
    }

    #[test]
    fn embeddings_of_golden_pairs() {
        let budget = DEFAULT_SEARCH_BUDGET;
        let pattern = samples::pruning_example();
        let host = samples::subtree_host_rooted();
        assert!(!enumerate_embeddings(&pattern, &host, true, budget).unwrap().is_empty());
        let decoy = samples::motivating_decoy();
        assert!(enumerate_embeddings(&samples::motivating_pattern(), &decoy, false, budget)
            .unwrap()
            .is_empty());
        let all = enumerate_embeddings(&host, &host, true, budget).unwrap();
        assert!(all.contains(&(0..host.len()).collect()));
    }

    #[test]
    fn automorphisms_are_counted() {
        let t = samples::automorphic();
        assert_eq!(enumerate_embeddings(&t, &t, false, DEFAULT_SEARCH_BUDGET).unwrap().len(), 2);
        assert_eq!(enumerate_embeddings(&t, &t, true, DEFAULT_SEARCH_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn order_sensitive_pair_splits_the_oracles() {
        let (pattern, host) = samples::order_sensitive_pair();
        let budget = DEFAULT_SEARCH_BUDGET;
        assert!(find_embedding(&pattern, &host, false, budget).unwrap().is_some());
        assert!(find_embedding(&pattern, &host, true, budget).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let t = samples::subtree_host_rooted();
        assert_eq!(
            enumerate_embeddings(&t, &t, false, 2),
            Err(OracleError::SearchBudgetExceeded { budget: 2 })
        );
    }

    #[test]
    fn undirected_brute_force() {
        let host = samples::subtree_host_lifted();
        assert!(brute_undirected_subtree(&samples::subtree_pattern_wide(), &host, DEFAULT_SEARCH_BUDGET).unwrap());
        assert!(!brute_undirected_subtree(&ColoredArborescence::singleton(Color(3)), &host, DEFAULT_SEARCH_BUDGET).unwrap());
    }

    #[test]
    fn params_are_validated() {
        assert!(GenParams::new(0, 1, 1, 0).is_err());
        assert!(GenParams::new(1, 0, 1, 0).is_err());
        assert!(GenParams::new(1, 1, 0, 0).is_err());
        assert_eq!(GenParams::new(3, 1, 1, 9).unwrap().tree_id(4), "chacha8:9:4");
    }

    #[test]
    fn order_one_corpus() {
        let params = GenParams::new(1, 3, 2, 5).unwrap();
        for t in random_corpus(&params) {
            assert_eq!(t.len(), 1);
            assert!(t.color(0).0 < 2);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let params = GenParams::new(8, 50, 4, 11).unwrap();
        assert_eq!(random_corpus(&params), random_corpus(&params));
        assert_eq!(random_tree(&params, 7), random_corpus(&params)[7]);
        let other = GenParams { seed: 12, ..params };
        assert_ne!(random_corpus(&params), random_corpus(&other));
    }
}
