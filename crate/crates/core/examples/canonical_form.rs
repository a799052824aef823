// Canonical descriptors and the depth-first order behind them.

use vcpc::canonical::{canonical_order, canonicalize, full_ld_array, reconstruct};
use vcpc::samples;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = samples::automorphic();
    let order = canonical_order(&tree);
    println!("full LD array: {}", full_ld_array(&tree));
    println!("canonical ranks: {:?}", order.ranks());

    // any relabeling lands on the same canonical form
    let n = tree.len();
    let shuffled = tree.relabel(&(0..n).rev().collect::<Vec<_>>())?;
    let (a, _) = canonicalize(&tree);
    let (b, _) = canonicalize(&shuffled);
    assert_eq!(a, b);

    let rebuilt = reconstruct(&full_ld_array(&shuffled))?;
    assert_eq!(rebuilt, a);
    println!("reconstructed {} vertices from the descriptor", rebuilt.len());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
