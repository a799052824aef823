//! Vertex-colored Prüfer codes (VCPCs) for rooted, vertex-colored trees.
//!
//! The crate assigns every vertex-colored arborescence a canonical vertex
//! order (a depth-first search whose siblings are sorted by color and by the
//! lexicographic array of their subtrees), encodes the tree as a 2×n Prüfer
//! style code under that order, and answers structural questions directly on
//! the codes:
//!
//! * two trees are isomorphic iff their codes are equal ([`matcher::codes_isomorphic`]),
//! * one tree embeds as a sub-arborescence of another iff an ascending set of
//!   code columns passes the color, shape and incident-edge tests
//!   ([`matcher::is_subarborescence`]),
//! * a corpus can be partitioned into isomorphism classes and ordered by
//!   containment ([`corpus`]).
//!
//! ```
//! use vcpc::{canonical, samples, vcpc as codec};
//!
//! let tree = samples::pruning_example();
//! let order = canonical::canonical_order(&tree);
//! let (code, _trace) = codec::encode(&tree, &order).unwrap();
//! assert_eq!(code.to_string(), "[0, 2, 2, 0, ∅; 0, 1, 4, 0, 2]");
//! assert_eq!(codec::decode(&code).unwrap(), canonical::canonicalize(&tree).0);
//! ```
//!
//! Brute-force references used to cross-check all of the above live in
//! [`oracle`]; they are never called on production paths.

pub mod canonical;
pub mod cli;
pub mod corpus;
pub mod format;
pub mod matcher;
pub mod oracle;
pub mod samples;
pub mod tree;
pub mod vcpc;

pub use canonical::{CanonicalOrder, FullLdArray, LdArray};
pub use matcher::EmbeddingIndices;
pub use tree::{build_tree, Color, ColoredArborescence, IdMap, TreeError, VertexId};
pub use vcpc::{PruneTrace, Vcpc};
