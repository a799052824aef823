// Isomorphism classes of a random corpus, their containment order and the
// class found in the most trees.

use vcpc::corpus::{most_representative, partition_by_isomorphism, subtree_poset};
use vcpc::matcher::DEFAULT_CANDIDATE_CAP;
use vcpc::oracle::{random_corpus, GenParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = GenParams::new(7, 300, 2, 1)?;
    let corpus = random_corpus(&params);
    let classes = partition_by_isomorphism(corpus.iter().enumerate().map(|(i, t)| (params.tree_id(i), t)));
    println!("{} trees, {} classes", corpus.len(), classes.len());

    let poset = subtree_poset(classes, DEFAULT_CANDIDATE_CAP, 2)?;
    println!("{} relations, stats {:?}", poset.relation.len(), poset.stats);

    let (class, count) = most_representative(&poset, 4)?;
    println!("class {} ({}) is contained in {count} trees", class, poset.classes[class].representative);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
