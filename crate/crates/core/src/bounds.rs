//! Exact rational bounds relating the Dehornoy floor to Euler characteristic
//! and genus, plus the vertex-census arithmetic used in the surface argument.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// Exact rational number with arbitrary-precision parts, always in lowest terms.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

/// `3/2 - 2 chi / (n + 2)`: the floor of an `n`-braid is strictly below this
/// whenever `chi` is at most the maximal Euler characteristic of the closure.
pub fn theorem_rhs(strands: usize, chi: i64) -> Rational {
    let n2 = strands as i64 + 2;
    rational(3, 2) - rational(2 * chi, n2)
}

/// `4g/(n+2) - 2/(n+2) + 3/2`, the genus form of [`theorem_rhs`].
pub fn corollary_rhs(strands: usize, genus: u64) -> Rational {
    let n2 = strands as i64 + 2;
    rational(4 * genus as i64, n2) - rational(2, n2) + rational(3, 2)
}

/// The weaker genus bound `g + 1`. It dominates [`corollary_rhs`] when
/// `g >= 1` or `n = 2`, but not for `g = 0` on three or more strands.
pub fn corollary_weak_rhs(genus: u64) -> Rational {
    integer(genus as i64 + 1)
}

/// Smallest genus compatible with a given floor: the least `g >= 0` with
/// `floor < corollary_rhs(n, g)`, and never less than `floor`.
pub fn floor_genus_lower(strands: usize, floor: u64) -> u64 {
    let target = integer(floor as i64);
    // corollary_rhs(n, g) > floor  <=>  4g > (floor - 3/2)(n + 2) + 2
    let n2 = integer(strands as i64 + 2);
    let threshold = ((&target - rational(3, 2)) * &n2 + integer(2)) / integer(4);
    let mut g = if threshold.is_negative() {
        0
    } else {
        threshold.floor().to_integer().to_u64().unwrap_or(0)
    };
    while corollary_rhs(strands, g) <= target {
        g += 1;
    }
    // step back in case the closed form overshot
    while g > 0 && corollary_rhs(strands, g - 1) > target {
        g -= 1;
    }
    g.max(floor)
}

/// `a + b/2 - 1/2`: strict upper bound on the floor when the spanning
/// surface has a vertex with `a` a-arcs and `b` b-arcs.
pub fn lemma3_bound(a: u64, b: u64) -> Rational {
    integer(a as i64) + rational(b as i64, 2) - rational(1, 2)
}

/// Vertex counts `V(a, b)` of a foliated spanning surface, keyed by the number
/// of a-arc edges `a` and b-arc edges `b` at the vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexCensus {
    counts: BTreeMap<(u32, u32), u64>,
}

impl VertexCensus {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` vertices of type `(a, b)`; panics on the empty type `(0, 0)`.
    pub fn add(&mut self, a: u32, b: u32, count: u64) -> &mut Self {
        assert!(a + b >= 1, "a vertex has valence at least 1");
        if count > 0 {
            *self.counts.entry((a, b)).or_insert(0) += count;
        }
        self
    }

    pub fn with(mut self, a: u32, b: u32, count: u64) -> Self {
        self.add(a, b, count);
        self
    }

    pub fn get(&self, a: u32, b: u32) -> u64 {
        self.counts.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Entry-wise sum.
    pub fn merged(&self, other: &VertexCensus) -> VertexCensus {
        let mut out = self.clone();
        for ((a, b), c) in other.entries() {
            out.add(a, b, c);
        }
        out
    }
}

/// Left side minus right side of the Euler-characteristic identity
///
/// `2V(1,0) + 2V(0,2) + V(0,3) - 4chi = V(2,1) + 2V(3,0) + sum_{v>=4} sum_{a=0}^{v} (v + a - 4) V(a, v - a)`
///
/// where in the double sum `v` is the total valence and `a` the number of
/// a-arcs. Zero means the census is consistent with `chi`.
pub fn lemma2_residual(census: &VertexCensus, chi: i64) -> i64 {
    let v = |a, b| census.get(a, b) as i64;
    let lhs = 2 * v(1, 0) + 2 * v(0, 2) + v(0, 3) - 4 * chi;
    let mut rhs = v(2, 1) + 2 * v(3, 0);
    for ((a, b), count) in census.entries() {
        let valence = (a + b) as i64;
        if valence >= 4 {
            rhs += (valence + a as i64 - 4) * count as i64;
        }
    }
    lhs - rhs
}

/// `1 - 2g`, the Euler characteristic of a genus-`g` surface with one boundary circle.
pub fn knot_chi(genus: u64) -> i64 {
    1 - 2 * genus as i64
}
