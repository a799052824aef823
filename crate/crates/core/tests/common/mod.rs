#![allow(dead_code)]

use proptest::prelude::*;
use vcpc::{Color, ColoredArborescence};

/// Random tree on up to `max_n` vertices with `colors` colors, under a
/// random labeling (so the root is not always vertex 0).
pub fn arb_tree(max_n: usize, colors: u32) -> impl Strategy<Value = ColoredArborescence> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(any::<prop::sample::Index>(), n),
            prop::collection::vec(0..colors, n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(picks, cs, perm)| {
                let parents: Vec<Option<usize>> = (0..n)
                    .map(|v| if v == 0 { None } else { Some(picks[v].index(v)) })
                    .collect();
                let tree = ColoredArborescence::from_parents(&parents, cs.into_iter().map(Color).collect())
                    .expect("parents point to earlier vertices");
                tree.relabel(&perm).expect("a permutation")
            })
    })
}

/// Sub-arborescence of `tree` hanging from `apex`, keeping the child edges
/// whose coin is set (descendants of a dropped edge go too).
pub fn sub_arborescence(tree: &ColoredArborescence, apex: usize, coins: &[bool]) -> ColoredArborescence {
    let mut kept = vec![apex];
    let mut parents = vec![None];
    let mut stack = vec![(apex, 0usize)];
    while let Some((v, at)) = stack.pop() {
        for &c in tree.children(v) {
            if coins[c % coins.len()] {
                parents.push(Some(at));
                kept.push(c);
                stack.push((c, kept.len() - 1));
            }
        }
    }
    let colors = kept.iter().map(|&v| tree.color(v)).collect();
    ColoredArborescence::from_parents(&parents, colors).expect("a connected selection")
}

/// A host tree and one of its sub-arborescences.
pub fn arb_nested(max_n: usize, colors: u32) -> impl Strategy<Value = (ColoredArborescence, ColoredArborescence)> {
    (arb_tree(max_n, colors), any::<prop::sample::Index>(), prop::collection::vec(any::<bool>(), 1..16))
        .prop_map(|(host, apex, coins)| {
            let apex = apex.index(host.len());
            (sub_arborescence(&host, apex, &coins), host)
        })
}
