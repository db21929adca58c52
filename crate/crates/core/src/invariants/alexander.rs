//! Alexander polynomial of a braid closure and the two classical genus bounds.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

use super::burau::burau_matrix;
use super::laurent::LaurentPoly;

fn require_knot(w: &BraidWord) -> Result<()> {
    match w.closure_components() {
        1 => Ok(()),
        c => Err(Error::NotAKnot(c)),
    }
}

/// Normalized Alexander polynomial of the closure of `w`.
///
/// Computes `det(B(w) - I) (1 - t) / (1 - t^n)` exactly, then picks the unit
/// multiple with lowest exponent 0 and positive leading coefficient.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPoly> {
    require_knot(w)?;
    let n = w.strands() as i64;
    let det = burau_matrix(w).minus_identity().det();
    let one_minus_t = LaurentPoly::from_i64s(0, &[1, -1]);
    let one_minus_tn = &LaurentPoly::one() - &LaurentPoly::monomial(1, n);
    let poly = (&det * &one_minus_t)
        .div_exact(&one_minus_tn)
        .ok_or(Error::InexactDivision)?;
    Ok(poly.normalize_units())
}

/// Half the span of the Alexander polynomial, a lower bound for the genus.
pub fn alexander_genus_lower(w: &BraidWord) -> Result<u64> {
    let span = alexander_polynomial(w)?.span();
    if span % 2 != 0 {
        return Err(Error::Parity("Alexander polynomial of a knot has odd span"));
    }
    Ok((span / 2) as u64)
}

/// Euler characteristic `n - l` of the Bennequin surface of the freely
/// reduced word: `n` disks joined by one twisted band per letter.
pub fn bennequin_chi(w: &BraidWord) -> i64 {
    w.strands() as i64 - w.free_reduce().len() as i64
}

/// Genus `(l - n + 1) / 2` of the Bennequin surface, an upper bound for the genus.
pub fn bennequin_genus_upper(w: &BraidWord) -> Result<u64> {
    require_knot(w)?;
    let twice = 1 - bennequin_chi(w);
    if twice % 2 != 0 {
        return Err(Error::Parity("Bennequin surface of a knot has odd 1 - chi"));
    }
    Ok((twice / 2) as u64)
}

/// Where a genus bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundSource {
    #[serde(rename = "alexander-span")]
    AlexanderSpan,
    #[serde(rename = "bennequin-surface")]
    BennequinSurface,
    #[serde(rename = "dehornoy-floor")]
    DehornoyFloor,
}

impl BoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundSource::AlexanderSpan => "alexander-span",
            BoundSource::BennequinSurface => "bennequin-surface",
            BoundSource::DehornoyFloor => "dehornoy-floor",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certified interval for the Seifert genus of a knot closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    pub lower: u64,
    pub upper: u64,
    pub lower_source: BoundSource,
    pub upper_source: BoundSource,
}

impl GenusBounds {
    /// Alexander lower bound and Bennequin upper bound.
    pub fn classical(w: &BraidWord) -> Result<Self> {
        Ok(GenusBounds {
            lower: alexander_genus_lower(w)?,
            upper: bennequin_genus_upper(w)?,
            lower_source: BoundSource::AlexanderSpan,
            upper_source: BoundSource::BennequinSurface,
        })
    }

    /// Raises the lower bound if `candidate` beats it.
    pub fn with_lower(mut self, candidate: u64, source: BoundSource) -> Self {
        if candidate > self.lower {
            self.lower = candidate;
            self.lower_source = source;
        }
        self
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// `|Delta(1)|`, which is 1 for every knot.
pub fn alexander_at_one(w: &BraidWord) -> Result<BigInt> {
    Ok(alexander_polynomial(w)?.eval_one())
}
