// Sub-arborescence tests straight on the codes, with the witness mapped
// back to vertices.

use vcpc::matcher::{match_subarborescence, witness_vertex_map, MatchOptions};
use vcpc::samples;
use vcpc::vcpc::encode_tree;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pattern = encode_tree(&samples::motivating_pattern());
    for (name, host) in [("star", samples::motivating_star()), ("decoy", samples::motivating_decoy())] {
        let host = encode_tree(&host);
        let outcome = match_subarborescence(&pattern, &host, &MatchOptions::default())?;
        match &outcome.witness {
            Some(w) => println!(
                "{name}: columns {:?}, vertices {:?}",
                w.0,
                witness_vertex_map(&pattern, &host, w)
            ),
            None => println!("{name}: no embedding ({} candidates)", outcome.candidates_examined),
        }
    }

    // a tiny cap turns a long search into an error instead of a verdict
    let host = encode_tree(&samples::motivating_star());
    assert!(match_subarborescence(&pattern, &host, &MatchOptions { cap: 1 }).is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
