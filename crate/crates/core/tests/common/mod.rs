#![allow(dead_code)]

use braidfloor::{BraidWord, Letter};
use proptest::prelude::*;

pub fn letter(strands: usize) -> impl Strategy<Value = Letter> {
    (1..strands, any::<bool>()).prop_map(|(i, p)| if p { Letter::pos(i) } else { Letter::neg(i) })
}

pub fn word_in(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(strands), 0..=max_len)
        .prop_map(move |letters| BraidWord::new(strands, letters).unwrap())
}

pub fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| word_in(n, max_len))
}

pub fn pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| (word_in(n, max_len), word_in(n, max_len)))
}

pub fn triple(
    max_strands: usize,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| {
        (
            word_in(n, max_len),
            word_in(n, max_len),
            word_in(n, max_len),
        )
    })
}

/// Words whose closure is a knot: a random word followed by a letter
/// sequence that closes the permutation into one cycle is awkward to build
/// directly, so filter instead.
pub fn knot_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_strands, max_len).prop_filter("closure must be a knot", |w| w.is_knot())
}

pub fn w(n: usize, codes: &[i32]) -> BraidWord {
    BraidWord::from_codes(n, codes).unwrap()
}
