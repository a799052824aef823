//! Corpus analytics: isomorphism classes, the containment order between
//! them and the most widely contained class.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matcher::{match_subarborescence, MatchError, MatchOptions};
use crate::oracle::find_embedding;
use crate::tree::ColoredArborescence;
use crate::vcpc::{encode_tree, Vcpc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusQueryError {
    #[error("no class has at most {max_order} vertices")]
    NoEligibleClass { max_order: usize },
    #[error("worker pool: {0}")]
    Pool(String),
}

/// One isomorphism class of a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClass {
    pub class_id: usize,
    /// Canonical code shared by every member.
    pub representative: Vcpc,
    pub member_ids: Vec<String>,
    /// Positions of the members in the input corpus.
    pub members: Vec<usize>,
    pub size: usize,
}

impl IsoClass {
    /// Vertex count of the members.
    pub fn order(&self) -> usize {
        self.representative.len()
    }
}

/// Groups trees whose keys are equal; class ids follow first appearance.
pub fn partition_by_key<'a, K, I, F>(items: I, mut key: F) -> Vec<IsoClass>
where
    K: std::hash::Hash + Eq,
    I: IntoIterator<Item = (String, &'a ColoredArborescence)>,
    F: FnMut(&ColoredArborescence) -> K,
{
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    for (position, (id, tree)) in items.into_iter().enumerate() {
        let class = *index.entry(key(tree)).or_insert_with(|| {
            classes.push(IsoClass {
                class_id: classes.len(),
                representative: encode_tree(tree),
                member_ids: Vec::new(),
                members: Vec::new(),
                size: 0,
            });
            classes.len() - 1
        });
        let c = &mut classes[class];
        c.member_ids.push(id);
        c.members.push(position);
        c.size += 1;
    }
    classes
}

/// Partition by canonical code equality.
pub fn partition_by_isomorphism<'a, I>(items: I) -> Vec<IsoClass>
where
    I: IntoIterator<Item = (String, &'a ColoredArborescence)>,
{
    partition_by_key(items, encode_tree)
}

/// A containment test between two classes, by class index. A witness is a
/// map from the smaller class's positions into the larger one's, in
/// whatever positions the test works with (code columns or vertices).
pub trait PairTest: Sync {
    fn test(&self, below: usize, above: usize) -> Result<Option<Vec<usize>>, MatchError>;
}

/// Code-based test on class representatives.
pub struct VcpcPairTest {
    codes: Vec<Vcpc>,
    options: MatchOptions,
}

impl VcpcPairTest {
    pub fn new(classes: &[IsoClass], options: MatchOptions) -> Self {
        VcpcPairTest {
            codes: classes.iter().map(|c| c.representative.clone()).collect(),
            options,
        }
    }
}

impl PairTest for VcpcPairTest {
    fn test(&self, below: usize, above: usize) -> Result<Option<Vec<usize>>, MatchError> {
        let outcome = match_subarborescence(&self.codes[below], &self.codes[above], &self.options)?;
        Ok(outcome.witness.map(|w| w.0))
    }
}

/// Backtracking test on one member tree per class. Witnesses are vertex maps.
pub struct OraclePairTest {
    trees: Vec<ColoredArborescence>,
    ordered: bool,
    budget: u64,
}

impl OraclePairTest {
    pub fn new(trees: Vec<ColoredArborescence>, ordered: bool, budget: u64) -> Self {
        OraclePairTest { trees, ordered, budget }
    }
}

impl PairTest for OraclePairTest {
    fn test(&self, below: usize, above: usize) -> Result<Option<Vec<usize>>, MatchError> {
        find_embedding(&self.trees[below], &self.trees[above], self.ordered, self.budget).map_err(|_| {
            MatchError::CandidateExplosion {
                examined: self.budget,
                cap: self.budget,
            }
        })
    }
}

/// Wraps a code-based test with a cache keyed by the two codes, so repeated
/// runs over overlapping corpora skip known pairs.
pub struct CachedPairTest<'a> {
    codes: Vec<Vcpc>,
    inner: &'a dyn PairTest,
    cache: &'a VerdictCache,
}

impl<'a> CachedPairTest<'a> {
    pub fn new(classes: &[IsoClass], inner: &'a dyn PairTest, cache: &'a VerdictCache) -> Self {
        CachedPairTest {
            codes: classes.iter().map(|c| c.representative.clone()).collect(),
            inner,
            cache,
        }
    }
}

impl PairTest for CachedPairTest<'_> {
    fn test(&self, below: usize, above: usize) -> Result<Option<Vec<usize>>, MatchError> {
        let key = (self.codes[below].clone(), self.codes[above].clone());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit);
        }
        let verdict = self.inner.test(below, above)?;
        self.cache.insert(key, verdict.clone());
        Ok(verdict)
    }
}

type Verdict = Option<Vec<usize>>;

/// Verdicts keyed by `(pattern code, host code)`. Aborted pairs are not stored.
#[derive(Debug, Default)]
pub struct VerdictCache {
    entries: Mutex<HashMap<(Vcpc, Vcpc), Verdict>>,
}

impl VerdictCache {
    fn get(&self, key: &(Vcpc, Vcpc)) -> Option<Option<Vec<usize>>> {
        self.entries.lock().expect("cache lock").get(key).cloned()
    }

    fn insert(&self, key: (Vcpc, Vcpc), verdict: Option<Vec<usize>>) {
        self.entries.lock().expect("cache lock").insert(key, verdict);
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A non-reflexive containment edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub witness: Vec<usize>,
    /// Derived from two committed edges rather than tested directly.
    pub inferred: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetStats {
    /// Ordered class pairs with a strictly smaller first class.
    pub candidate_pairs: usize,
    pub evaluated: usize,
    pub inferred_below: usize,
    pub inferred_not_below: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusPoset {
    pub classes: Vec<IsoClass>,
    /// `(a, b)` present iff class `a` is strictly below class `b`.
    pub relation: BTreeMap<(usize, usize), Edge>,
    /// Pairs whose test was aborted; they take no part in inference.
    pub unknown: Vec<(usize, usize)>,
    pub stats: PosetStats,
}

impl CorpusPoset {
    /// Reflexive containment: every class is below itself.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        a == b || self.relation.contains_key(&(a, b))
    }

    /// `matrix[a][b]`: `Some(true)` if below, `None` if unknown.
    pub fn verdict_matrix(&self) -> Vec<Vec<Option<bool>>> {
        let k = self.classes.len();
        let mut m = vec![vec![Some(false); k]; k];
        for (a, row) in m.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = Some(self.is_below(a, b));
            }
        }
        for &(a, b) in &self.unknown {
            m[a][b] = None;
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetOptions {
    pub workers: usize,
    /// Skip pairs whose verdict follows from committed ones.
    pub infer: bool,
}

impl Default for PosetOptions {
    fn default() -> Self {
        PosetOptions {
            workers: 1,
            infer: true,
        }
    }
}

/// Containment order over classes with the code-based test.
pub fn subtree_poset(classes: Vec<IsoClass>, cap: u64, workers: usize) -> Result<CorpusPoset, CorpusQueryError> {
    let test = VcpcPairTest::new(&classes, MatchOptions { cap });
    subtree_poset_with(classes, &test, PosetOptions { workers, infer: true })
}

enum Decision {
    Below(Vec<usize>, bool),
    NotBelow(bool),
    Unknown,
}

/// Containment order over classes using any [`PairTest`].
///
/// Only pairs with `|a| < |b|` can hold (equal sizes would force
/// isomorphism). Pairs are processed in groups of equal `(|a|, |b|)`, in
/// ascending order. Within a group each pair first consults the verdicts
/// committed by earlier groups:
///
/// * `a ≤ x` and `x ≤ b` give `a ≤ b` (witnesses compose),
/// * `z ≤ a` and `z ≰ b` give `a ≰ b`,
/// * `b ≤ c` and `a ≰ c` give `a ≰ b`;
///
/// the rest are tested in parallel. Nothing inside a group can inform
/// another pair of the same group, so the outcome equals a sequential run
/// and does not depend on the worker count.
pub fn subtree_poset_with(
    classes: Vec<IsoClass>,
    test: &dyn PairTest,
    options: PosetOptions,
) -> Result<CorpusPoset, CorpusQueryError> {
    let k = classes.len();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| CorpusQueryError::Pool(e.to_string()))?;

    let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..k {
        for b in 0..k {
            let (sa, sb) = (classes[a].order(), classes[b].order());
            if sa < sb {
                groups.entry((sa, sb)).or_default().push((a, b));
            }
        }
    }

    let blank = || vec![FixedBitSet::with_capacity(k); k];
    // up[a]: committed b with a ≤ b; down[b]: committed a with a ≤ b;
    // not_up[a]: b with a ≰ b; not_down[b]: a with a ≰ b.
    let (mut up, mut down, mut not_up, mut not_down) = (blank(), blank(), blank(), blank());
    let mut relation = BTreeMap::new();
    let mut unknown = Vec::new();
    let mut stats = PosetStats::default();

    for pairs in groups.values() {
        stats.candidate_pairs += pairs.len();
        let decisions: Vec<Decision> = pool.install(|| {
            pairs
                .par_iter()
                .map(|&(a, b)| {
                    if options.infer {
                        if let Some(x) = up[a].intersection(&down[b]).next() {
                            let w_ax: &Edge = &relation[&(a, x)];
                            let w_xb: &Edge = &relation[&(x, b)];
                            let composed = w_ax.witness.iter().map(|&j| w_xb.witness[j]).collect();
                            return Decision::Below(composed, true);
                        }
                        if down[a].intersection(&not_down[b]).next().is_some()
                            || up[b].intersection(&not_up[a]).next().is_some()
                        {
                            return Decision::NotBelow(true);
                        }
                    }
                    match test.test(a, b) {
                        Ok(Some(w)) => Decision::Below(w, false),
                        Ok(None) => Decision::NotBelow(false),
                        Err(_) => Decision::Unknown,
                    }
                })
                .collect()
        });
        for (&(a, b), decision) in pairs.iter().zip(decisions) {
            match decision {
                Decision::Below(witness, inferred) => {
                    up[a].insert(b);
                    down[b].insert(a);
                    relation.insert((a, b), Edge { witness, inferred });
                    if inferred {
                        stats.inferred_below += 1;
                    } else {
                        stats.evaluated += 1;
                    }
                }
                Decision::NotBelow(inferred) => {
                    not_up[a].insert(b);
                    not_down[b].insert(a);
                    if inferred {
                        stats.inferred_not_below += 1;
                    } else {
                        stats.evaluated += 1;
                    }
                }
                Decision::Unknown => {
                    unknown.push((a, b));
                    stats.unknown += 1;
                }
            }
        }
    }
    Ok(CorpusPoset {
        classes,
        relation,
        unknown,
        stats,
    })
}

/// Number of corpus trees containing each class (its own members included).
pub fn containment_counts(poset: &CorpusPoset) -> Vec<usize> {
    let mut counts: Vec<usize> = poset.classes.iter().map(|c| c.size).collect();
    for &(a, b) in poset.relation.keys() {
        counts[a] += poset.classes[b].size;
    }
    counts
}

/// The class with at most `max_order` vertices contained in the most corpus
/// trees; ties go to the smaller class id. Returns `(class index, count)`.
pub fn most_representative(poset: &CorpusPoset, max_order: usize) -> Result<(usize, usize), CorpusQueryError> {
    let counts = containment_counts(poset);
    poset
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.order() <= max_order)
        .map(|(i, _)| (i, counts[i]))
        .fold(None, |best: Option<(usize, usize)>, (i, n)| match best {
            Some((_, m)) if m >= n => best,
            _ => Some((i, n)),
        })
        .ok_or(CorpusQueryError::NoEligibleClass { max_order })
}
