// The plain Prüfer sequence of an undirected labeled tree.

use vcpc::samples;
use vcpc::vcpc::{classical_prufer, classical_prufer_decode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let edges = samples::classical_example_edges();
    let code = classical_prufer(7, &edges)?;
    println!("sequence: {code:?}");
    assert_eq!(code, [4, 4, 1, 4, 4]);

    let rebuilt = classical_prufer_decode(&code)?;
    println!("edges: {rebuilt:?}");
    assert_eq!(classical_prufer(7, &rebuilt)?, code);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
