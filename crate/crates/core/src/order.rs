//! The Dehornoy ordering, decided by handle reduction.
//!
//! A `sigma_i`-handle is a subword `s_i^e u s_i^-e` whose interior `u` only
//! uses generators of index greater than `i`. It is *permitted* when `u`
//! contains no `sigma_{i+1}`-handle. Reducing a permitted handle deletes the
//! two bounding letters and rewrites every `s_{i+1}^d` in `u` as
//! `s_{i+1}^-e s_i^d s_{i+1}^e`; the word is then freely reduced.
//!
//! The reducer always works on the lowest main index present. It takes the
//! leftmost handle of that index, and while the chosen handle is not
//! permitted it descends to the leftmost `sigma_{i+1}`-handle of its interior.
//! The outcome is fully deterministic.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::braid::{delta_power, BraidWord, Letter};
use crate::error::{Error, Result};

/// Outcome of a Dehornoy comparison `a ? b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderResult {
    Less,
    Equal,
    Greater,
}

impl OrderResult {
    pub fn reverse(self) -> Self {
        match self {
            OrderResult::Less => OrderResult::Greater,
            OrderResult::Equal => OrderResult::Equal,
            OrderResult::Greater => OrderResult::Less,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderResult::Less => "less",
            OrderResult::Equal => "equal",
            OrderResult::Greater => "greater",
        }
    }
}

impl From<OrderResult> for Ordering {
    fn from(r: OrderResult) -> Ordering {
        match r {
            OrderResult::Less => Ordering::Less,
            OrderResult::Equal => Ordering::Equal,
            OrderResult::Greater => Ordering::Greater,
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign class of a word at its minimal generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaClass {
    Empty,
    /// Contains `sigma_i`, no `sigma_i^-1` and nothing of lower index.
    Positive(usize),
    /// Contains `sigma_i^-1`, no `sigma_i` and nothing of lower index.
    Negative(usize),
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaClass::Empty => write!(f, "empty"),
            SigmaClass::Positive(i) => write!(f, "sigma_{i}-positive"),
            SigmaClass::Negative(i) => write!(f, "sigma_{i}-negative"),
        }
    }
}

/// Classifies a handle-free word by its minimal index.
pub fn sigma_classify(w: &BraidWord) -> Result<SigmaClass> {
    classify_codes(&w.codes())
}

fn classify_codes(codes: &[i32]) -> Result<SigmaClass> {
    let Some(min) = codes.iter().map(|c| c.unsigned_abs()).min() else {
        return Ok(SigmaClass::Empty);
    };
    let mut positive = false;
    let mut negative = false;
    for &c in codes.iter().filter(|c| c.unsigned_abs() == min) {
        if c > 0 {
            positive = true;
        } else {
            negative = true;
        }
    }
    let min = min as usize;
    match (positive, negative) {
        (true, false) => Ok(SigmaClass::Positive(min)),
        (false, true) => Ok(SigmaClass::Negative(min)),
        _ => Err(Error::UnreducedWord(min)),
    }
}

/// The accepted `m` of a floor scan with the two comparisons that certify it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloorResult {
    pub floor: usize,
    /// `Delta^{-2m-2}` compared with the braid (must be `Less`).
    pub lower_witness: OrderResult,
    /// The braid compared with `Delta^{2m+2}` (must be `Less`).
    pub upper_witness: OrderResult,
}

/// A reduced word together with the number of handle reductions performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub word: BraidWord,
    pub steps: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Handle {
    start: usize,
    end: usize,
    index: u32,
}

/// How far a reduction run goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Remove every handle.
    HandleFree,
    /// Stop once the minimal index carries no handle; enough to read off the sign.
    Sign,
}

/// Handle-reduction engine with a configurable safety valve on the step count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandleReducer {
    step_limit: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        HandleReducer {
            step_limit: Self::DEFAULT_STEP_LIMIT,
        }
    }
}

impl HandleReducer {
    pub const DEFAULT_STEP_LIMIT: u64 = 10_000_000;

    pub fn new(step_limit: u64) -> Self {
        HandleReducer { step_limit }
    }

    pub fn step_limit(&self) -> u64 {
        self.step_limit
    }

    /// Returns an equivalent word containing no handle of any index.
    pub fn reduce(&self, w: &BraidWord) -> Result<Reduction> {
        let (codes, steps) = self.run(&w.codes(), w.strands(), Goal::HandleFree)?;
        Ok(Reduction {
            word: from_codes(w.strands(), codes),
            steps,
        })
    }

    /// Sign class of the braid represented by `w`.
    pub fn sign(&self, w: &BraidWord) -> Result<SigmaClass> {
        self.sign_of_codes(w.codes(), w.strands())
    }

    fn sign_of_codes(&self, codes: Vec<i32>, strands: usize) -> Result<SigmaClass> {
        let (codes, _) = self.run(&codes, strands, Goal::Sign)?;
        classify_codes(&codes)
    }

    /// Decides `a <_D b` by reducing `a^-1 b`.
    pub fn compare(&self, a: &BraidWord, b: &BraidWord) -> Result<OrderResult> {
        let quotient = a.inverse().concat(b)?;
        Ok(match self.sign(&quotient)? {
            SigmaClass::Empty => OrderResult::Equal,
            SigmaClass::Positive(_) => OrderResult::Less,
            SigmaClass::Negative(_) => OrderResult::Greater,
        })
    }

    pub fn is_trivial(&self, w: &BraidWord) -> Result<bool> {
        Ok(self.sign(w)? == SigmaClass::Empty)
    }

    /// Least `m >= 0` with `Delta^{-2m-2} <_D w <_D Delta^{2m+2}`, scanning upward.
    pub fn floor(&self, w: &BraidWord) -> Result<FloorResult> {
        let n = w.strands();
        let cap = w.len() + 1;
        let delta_sq = delta_power(n, 2)?;
        let w_inv = w.inverse();
        // bound = Delta^{2m+2}
        let mut bound = delta_sq.clone();
        for m in 0..=cap {
            // Delta^{-2m-2} <_D w  iff  Delta^{2m+2} w is sigma-positive
            let lower = self.order_of(bound.concat(w)?)?;
            if lower == OrderResult::Less {
                // w <_D Delta^{2m+2}  iff  w^-1 Delta^{2m+2} is sigma-positive
                let upper = self.order_of(w_inv.concat(&bound)?)?;
                if upper == OrderResult::Less {
                    return Ok(FloorResult {
                        floor: m,
                        lower_witness: lower,
                        upper_witness: upper,
                    });
                }
            }
            bound = bound.concat(&delta_sq)?;
        }
        Err(Error::FloorCapExceeded(cap))
    }

    fn order_of(&self, quotient: BraidWord) -> Result<OrderResult> {
        Ok(
            match self.sign_of_codes(quotient.codes(), quotient.strands())? {
                SigmaClass::Empty => OrderResult::Equal,
                SigmaClass::Positive(_) => OrderResult::Less,
                SigmaClass::Negative(_) => OrderResult::Greater,
            },
        )
    }

    fn run(&self, input: &[i32], strands: usize, goal: Goal) -> Result<(Vec<i32>, u64)> {
        let mut word = Vec::with_capacity(input.len());
        push_reduced(&mut word, input.iter().copied());
        let mut scratch = Vec::with_capacity(word.len() * 2);
        let mut last = vec![usize::MAX; strands + 1];
        let mut steps = 0u64;

        while let Some(min_index) = word.iter().map(|c| c.unsigned_abs()).min() {
            let only = match goal {
                Goal::Sign => Some(min_index),
                Goal::HandleFree => None,
            };
            let Some(handle) = lowest_handle(&word, min_index, only, &mut last) else {
                break;
            };
            let handle = permitted_descendant(&word, handle);
            steps += 1;
            if steps > self.step_limit {
                return Err(Error::StepLimitExceeded(self.step_limit));
            }
            reduce_handle(&word, handle, &mut scratch);
            std::mem::swap(&mut word, &mut scratch);
        }
        Ok((word, steps))
    }
}

fn from_codes(strands: usize, codes: Vec<i32>) -> BraidWord {
    let letters = codes
        .into_iter()
        .map(|c| Letter::from_code(c).expect("reduction never produces generator 0"))
        .collect();
    BraidWord::from_raw(strands, letters)
}

/// Pushes letters onto a freely reduced stack, cancelling as it goes.
fn push_reduced(stack: &mut Vec<i32>, letters: impl IntoIterator<Item = i32>) {
    for c in letters {
        if stack.last() == Some(&-c) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
}

/// Finds the leftmost handle of the lowest main index.
///
/// `last[j]` holds the position of the latest letter of index `j` that is not
/// separated from the scan position by a letter of smaller index.
fn lowest_handle(
    word: &[i32],
    min_index: u32,
    only: Option<u32>,
    last: &mut [usize],
) -> Option<Handle> {
    last.fill(usize::MAX);
    let top = last.len() - 1;
    let mut best: Option<Handle> = None;
    for (pos, &c) in word.iter().enumerate() {
        let index = c.unsigned_abs();
        // with `only` set to the minimal index there is no lower letter to act as a barrier
        if only.is_some_and(|i| i != index) {
            continue;
        }
        let prev = last[index as usize];
        if prev != usize::MAX && word[prev] == -c {
            let found = Handle {
                start: prev,
                end: pos,
                index,
            };
            if index == min_index {
                return Some(found);
            }
            if best.is_none_or(|b| index < b.index) {
                best = Some(found);
            }
        }
        last[index as usize] = pos;
        for slot in &mut last[index as usize + 1..=top] {
            *slot = usize::MAX;
        }
    }
    best
}

/// Walks into nested handles until a permitted one is reached.
fn permitted_descendant(word: &[i32], mut handle: Handle) -> Handle {
    loop {
        let inner = (handle.index + 1) as i32;
        let mut prev: Option<usize> = None;
        let mut nested = None;
        for pos in handle.start + 1..handle.end {
            let c = word[pos];
            if c.abs() != inner {
                continue;
            }
            if let Some(p) = prev {
                if word[p] == -c {
                    nested = Some(Handle {
                        start: p,
                        end: pos,
                        index: inner as u32,
                    });
                    break;
                }
            }
            prev = Some(pos);
        }
        match nested {
            Some(h) => handle = h,
            None => return handle,
        }
    }
}

/// Writes the result of reducing `handle` (followed by free reduction) into `out`.
fn reduce_handle(word: &[i32], handle: Handle, out: &mut Vec<i32>) {
    let i = handle.index as i32;
    let e = word[handle.start].signum();
    out.clear();
    // the prefix is already freely reduced
    out.extend_from_slice(&word[..handle.start]);
    for &c in &word[handle.start + 1..handle.end] {
        if c.abs() == i + 1 {
            let d = c.signum();
            push_reduced(out, [-e * (i + 1), d * i, e * (i + 1)]);
        } else {
            push_reduced(out, [c]);
        }
    }
    push_reduced(out, word[handle.end + 1..].iter().copied());
}

/// Handle-free representative of `w` with the default step limit.
pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    HandleReducer::default().reduce(w).map(|r| r.word)
}

pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<OrderResult> {
    HandleReducer::default().compare(a, b)
}

pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    HandleReducer::default().is_trivial(w)
}

pub fn dehornoy_floor(w: &BraidWord) -> Result<FloorResult> {
    HandleReducer::default().floor(w)
}
