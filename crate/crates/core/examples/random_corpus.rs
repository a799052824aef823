// Seeded corpus generation written as JSON lines.

use std::io::Write;

use vcpc::format::write_tree;
use vcpc::oracle::{random_corpus, GenParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = GenParams::new(6, 5, 3, 42)?;
    let mut out = std::io::stdout().lock();
    for (i, tree) in random_corpus(&params).iter().enumerate() {
        write_tree(&mut out, &params.tree_id(i), tree)?;
    }
    out.flush()?;
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
