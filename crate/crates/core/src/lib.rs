//! Exact braid-group computations: the Dehornoy ordering and floor, the
//! reduced Burau representation and Alexander polynomial, and the genus
//! bounds that connect the floor of a braid to the genus of its closure.

pub mod bounds;
pub mod braid;
pub mod catalogue;
pub mod error;
pub mod invariants;
pub mod order;
pub mod permutation;
pub mod report;
pub mod sample;

pub use bounds::{
    corollary_rhs, corollary_weak_rhs, floor_genus_lower, lemma2_residual, lemma3_bound,
    theorem_rhs, Rational, VertexCensus,
};
pub use braid::{band_generator, delta_power, garside_delta, BraidWord, Letter};
pub use catalogue::{catalogue, CatalogueEntry};
pub use error::{Error, Result};
pub use order::{
    compare, dehornoy_floor, handle_reduce, is_trivial, sigma_classify, FloorResult, HandleReducer,
    OrderResult, SigmaClass,
};
pub use permutation::Permutation;
pub use report::{verify_braid, Check, VerificationRecord, VerificationReport};
pub use sample::{random_band_product, random_braid, run_campaign, sample_rng};
