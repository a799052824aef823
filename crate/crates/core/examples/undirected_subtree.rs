// Ordered matching versus the undirected question on the same trees.

use vcpc::matcher::{is_subarborescence, undirected_subtree};
use vcpc::oracle::{find_embedding, DEFAULT_SEARCH_BUDGET};
use vcpc::samples;
use vcpc::vcpc::encode_tree;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (pattern, host) = samples::order_sensitive_pair();
    let ordered = is_subarborescence(&encode_tree(&pattern), &encode_tree(&host)).is_some();
    let unordered = find_embedding(&pattern, &host, false, DEFAULT_SEARCH_BUDGET)?.is_some();
    println!("code-based: {ordered}, any embedding: {unordered}");
    assert!(!ordered && unordered);

    let (pattern, host) = (samples::motivating_pattern(), samples::motivating_decoy());
    println!("undirected subtree of the decoy: {}", undirected_subtree(&pattern, &host));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
