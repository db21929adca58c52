//! The reduced Burau representation `B_n -> GL(n-1, Z[t, t^-1])`.
//!
//! Matrices act on row vectors: row `k` of the matrix of `sigma_i` is the image
//! of the basis vector `e_k`. For `sigma_i`,
//!
//! ```text
//! e_{i-1} -> e_{i-1} + t e_i      (if i > 1)
//! e_i     -> -t e_i
//! e_{i+1} -> e_i + e_{i+1}        (if i < n-1)
//! ```
//!
//! and every other basis vector is fixed. On `B_2` this is the 1x1 matrix `[-t]`.

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

use super::laurent::LaurentPoly;
use super::matrix::PolyMatrix;

/// Explicit matrix of a single letter.
pub fn reduced_burau(letter: Letter, strands: usize) -> Result<PolyMatrix> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    let i = letter.index();
    if i < 1 || i >= strands {
        return Err(Error::IndexOutOfRange { index: i, strands });
    }
    let dim = strands - 1;
    let k = i - 1;
    let mut m = PolyMatrix::identity(dim);
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    let one = LaurentPoly::one();
    if letter.is_positive() {
        m.set(k, k, -&t);
        if k > 0 {
            m.set(k - 1, k, t.clone());
        }
        if k + 1 < dim {
            m.set(k + 1, k, one);
        }
    } else {
        m.set(k, k, -&t_inv);
        if k > 0 {
            m.set(k - 1, k, one);
        }
        if k + 1 < dim {
            m.set(k + 1, k, t_inv);
        }
    }
    Ok(m)
}

/// Ordered product of the letter matrices; the identity for the empty word.
///
/// Right-multiplying by a generator matrix only rewrites column `i`, so the
/// product is accumulated by column updates instead of full multiplications.
pub fn burau_matrix(w: &BraidWord) -> PolyMatrix {
    let dim = w.strands() - 1;
    let mut m = PolyMatrix::identity(dim);
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    for &letter in w.letters() {
        let k = letter.index() - 1;
        // weights on columns k-1, k, k+1
        let (w_prev, w_self, w_next) = if letter.is_positive() {
            (t.clone(), -&t, LaurentPoly::one())
        } else {
            (LaurentPoly::one(), -&t_inv, t_inv.clone())
        };
        for r in 0..dim {
            let mut col = m.get(r, k) * &w_self;
            if k > 0 && !m.get(r, k - 1).is_zero() {
                col = &col + &(m.get(r, k - 1) * &w_prev);
            }
            if k + 1 < dim && !m.get(r, k + 1).is_zero() {
                col = &col + &(m.get(r, k + 1) * &w_next);
            }
            m.set(r, k, col);
        }
    }
    m
}
