//! Exact witness counting over GF(2)^d.
//!
//! Given a set V of m distinct vectors in GF(2)^d, a target t, and a length
//! k, this crate counts for every i <= k the ordered i-tuples of pairwise
//! distinct vectors from V whose XOR is t. The pipeline counts candidate
//! tuples (repeats allowed) through a Walsh-Hadamard transform and then
//! subtracts the tuples with repeats, which reduce to shorter witnesses via
//! partition combinatorics. Total work is O(2^d * d * k + k^4) big-integer
//! operations, independent of m.
//!
//! All arithmetic is exact: counts are arbitrary-precision integers and the
//! two divisions in the pipeline (by 2^d and by factorials) assert a zero
//! remainder. The [`oracle`] module provides independent slow
//! implementations for cross-checking, and [`hypergraph`] applies the
//! counter to perfect matchings in uniform hypergraphs.
//!
//! With the default `parallel` feature the transform and the element-wise
//! loops run on rayon; the arithmetic is identical, so results and the
//! reported operation tally do not depend on the thread count. Disabling
//! the feature leaves a dependency-free sequential build.

pub mod candidates;
pub mod error;
pub mod generator;
pub mod hypergraph;
pub mod instance;
pub mod ops;
pub mod oracle;
pub mod partitions;
pub mod wht;
pub mod witness;

pub use candidates::{count_candidates_profile, CandidateProfile};
pub use error::{Error, Result};
pub use hypergraph::{
    count_perfect_matchings, parse_hypergraph, reduce_to_witness_instance, Hypergraph, Reduction,
};
pub use instance::{
    build_char_table, parse_instance, parse_instance_with, CharTable, GF2Vector, Instance,
    ParseOptions, DEFAULT_DIMENSION_CAP, MAX_DIMENSION,
};
pub use wht::{fwht, fwht_in_place, inverse_fwht, inverse_fwht_in_place, xor_convolve, Spectrum};
pub use witness::{count_witnesses, WitnessProfile};
