// Vertex-colored codes: encoding, the pruning trace, decoding and JSON.

use vcpc::canonical::{canonical_order, canonicalize};
use vcpc::vcpc::{decode, decode_strict, encode};
use vcpc::{samples, Vcpc};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = samples::pruning_example();
    let (code, trace) = encode(&tree, &canonical_order(&tree))?;
    println!("code: {code}");
    println!("pruned vertices: {:?}", trace.pruned);

    let json = serde_json::to_string(&code)?;
    println!("json: {json}");
    let parsed: Vcpc = serde_json::from_str(&json)?;

    let back = decode_strict(&parsed)?;
    assert_eq!(back, canonicalize(&tree).0);

    // a labeled but non-canonical code still decodes, strict mode refuses it
    let relabeled = Vcpc::from_raw(&[Some(0), Some(0), None], &[4, 0, 2])?;
    assert!(decode(&relabeled).is_ok());
    assert!(decode_strict(&relabeled).is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
