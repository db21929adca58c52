//! Braid words over the Artin generators.
//!
//! A [`BraidWord`] is a strand count together with a flat sequence of signed
//! generator letters. No normal form is maintained: every operation here works
//! on the literal representative, and reduction is always an explicit call.
//!
//! The text form used by the CLI and the test fixtures is `B<n>: <g1> <g2> ...`
//! where `g = i` stands for `sigma_i` and `g = -i` for its inverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A signed Artin generator `sigma_i^{+1}` or `sigma_i^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    /// `sigma_index`. Panics if `index == 0`.
    pub fn pos(index: usize) -> Self {
        assert!(index >= 1, "generator index starts at 1");
        Letter(index as i32)
    }

    /// `sigma_index^{-1}`. Panics if `index == 0`.
    pub fn neg(index: usize) -> Self {
        assert!(index >= 1, "generator index starts at 1");
        Letter(-(index as i32))
    }

    /// Builds a letter from its signed integer code (`3` is `sigma_3`, `-3` its inverse).
    pub fn from_code(code: i32) -> Option<Self> {
        (code != 0).then_some(Letter(code))
    }

    pub fn code(self) -> i32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "sigma_{}", self.index())
        } else {
            write!(f, "sigma_{}^-1", self.index())
        }
    }
}

/// An element of `B_n` given by an explicit word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed integer codes, e.g. `from_codes(3, &[1, -2])`.
    pub fn from_codes(strands: usize, codes: &[i32]) -> Result<Self> {
        let letters = codes
            .iter()
            .map(|&c| Letter::from_code(c).ok_or(Error::IndexOutOfRange { index: 0, strands }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// The empty word in `B_n`.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Internal constructor for letter sequences already known to be in range.
    pub(crate) fn from_raw(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(strands >= 2 && letters.iter().all(|l| l.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn codes(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.code()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Cancels adjacent `x x^{-1}` pairs until none remain (single stack pass).
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord::from_raw(self.strands, out)
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_raw(self.strands, letters)
    }

    /// Group product `self * other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_raw(self.strands, letters))
    }

    /// `g * self * g^{-1}`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// `self^k`; negative powers use the inverse word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_raw(self.strands, letters)
    }

    /// The same letters read in `B_{n+1}`; used for Markov stabilization.
    pub fn embed(&self) -> BraidWord {
        BraidWord::from_raw(self.strands + 1, self.letters.clone())
    }

    /// Image in the symmetric group, `sigma_i -> (i i+1)`, composed left to right:
    /// strand `k` starts at position `k` and ends at position `perm.apply(k)`.
    pub fn permutation(&self) -> Permutation {
        // occupant[p - 1] is the strand currently at position p
        let mut occupant = Permutation::identity(self.strands);
        for l in &self.letters {
            occupant.swap_slots(l.index());
        }
        occupant.inverse()
    }

    /// Number of link components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Sum of the letter signs (writhe of the closed braid diagram).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Number of `sigma_1` and `sigma_1^{-1}` letters in this representative.
    pub fn sigma1_counts(&self) -> (usize, usize) {
        self.letters
            .iter()
            .filter(|l| l.index() == 1)
            .fold((0, 0), |(s, k), l| {
                if l.is_positive() {
                    (s + 1, k)
                } else {
                    (s, k + 1)
                }
            })
    }

    /// Renders the letters as `sigma_1 sigma_2^-1 ...`, or `1` for the identity.
    pub fn to_sigma_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The half twist `(s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2)(s1)`.
pub fn garside_delta(strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for top in (1..strands).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    Ok(BraidWord::from_raw(strands, letters))
}

/// `Delta^k` as an explicit word of length `|k| n(n-1)/2`.
pub fn delta_power(strands: usize, k: i64) -> Result<BraidWord> {
    Ok(garside_delta(strands)?.pow(k))
}

/// Band generator `a_{i,j} = (s_i ... s_{j-2}) s_{j-1} (s_{j-2}^-1 ... s_i^-1)`.
pub fn band_generator(strands: usize, i: usize, j: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    if i < 1 || i >= j || j > strands {
        return Err(Error::BandIndices { i, j, strands });
    }
    let mut letters = Vec::with_capacity(2 * (j - i) - 1);
    letters.extend((i..j - 1).map(Letter::pos));
    letters.push(Letter::pos(j - 1));
    letters.extend((i..j - 1).rev().map(Letter::neg));
    Ok(BraidWord::from_raw(strands, letters))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l.code())?;
        }
        Ok(())
    }
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `B<n>: <g1> <g2> ...`. Columns in errors are 1-based.
    fn from_str(text: &str) -> Result<Self> {
        let lead = text.len() - text.trim_start().len();
        let rest = &text[lead..];
        if !rest.starts_with('B') {
            return Err(parse_error(lead + 1, "expected `B<n>:`"));
        }
        let colon = rest.find(':').ok_or_else(|| {
            // point at the first character after the strand count
            let digits = rest[1..]
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len() - 1);
            parse_error(lead + digits + 2, "missing `:` after strand count")
        })?;
        let count_text = &rest[1..colon];
        let strands: usize = count_text
            .trim()
            .parse()
            .map_err(|_| parse_error(lead + 2, format!("invalid strand count `{count_text}`")))?;
        if strands < 2 {
            return Err(parse_error(
                lead + 2,
                format!("a braid needs at least 2 strands, got {strands}"),
            ));
        }

        let body_start = lead + colon + 1;
        let body = &text[body_start..];
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in body.split_whitespace() {
            let at = body[offset..]
                .find(token)
                .map(|p| p + offset)
                .unwrap_or(offset);
            offset = at + token.len();
            let column = body_start + at + 1;
            let code: i32 = token
                .parse()
                .map_err(|_| parse_error(column, format!("`{token}` is not an integer")))?;
            if code == 0 {
                return Err(parse_error(column, "generator 0 does not exist"));
            }
            if code.unsigned_abs() as usize >= strands {
                return Err(parse_error(
                    column,
                    format!("index {} out of range for B{strands}", code.unsigned_abs()),
                ));
            }
            letters.push(Letter(code));
        }
        Ok(BraidWord::from_raw(strands, letters))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
