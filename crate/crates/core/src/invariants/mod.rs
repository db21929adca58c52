//! Link invariants of braid closures: exact Laurent arithmetic, the reduced
//! Burau representation, the Alexander polynomial and genus bounds.

pub mod alexander;
pub mod burau;
pub mod laurent;
pub mod matrix;

pub use alexander::{
    alexander_genus_lower, alexander_polynomial, bennequin_chi, bennequin_genus_upper, BoundSource,
    GenusBounds,
};
pub use burau::{burau_matrix, reduced_burau};
pub use laurent::{poly_add, poly_mul, poly_neg, LaurentPoly};
pub use matrix::{poly_det, PolyMatrix};
