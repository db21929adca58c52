//! Seeded random braids and a deterministic parallel campaign runner.
//!
//! Every sample draws from its own ChaCha stream, selected by the sample index,
//! so results depend only on `(seed, index)` and never on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{band_generator, BraidWord, Letter};
use crate::error::{Error, Result};

/// The random stream for sample `index` of a campaign seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    Ok(())
}

/// A letter uniform over index `1..n` and sign.
pub fn random_letter<R: Rng>(rng: &mut R, strands: usize) -> Letter {
    let i = rng.gen_range(1..strands);
    if rng.gen_bool(0.5) {
        Letter::pos(i)
    } else {
        Letter::neg(i)
    }
}

/// A word of exactly `len` uniform letters.
pub fn random_word_of_len<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let letters = (0..len).map(|_| random_letter(rng, strands)).collect();
    BraidWord::new(strands, letters)
}

/// A word whose length is uniform in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, strands, len)
}

/// A product of `m` positive band generators, each chosen uniformly among
/// the pairs `1 <= i < j <= n`.
pub fn random_band_word<R: Rng>(rng: &mut R, strands: usize, m: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let mut out = BraidWord::identity(strands)?;
    for _ in 0..m {
        let i = rng.gen_range(1..strands);
        let j = rng.gen_range(i + 1..=strands);
        out = out.concat(&band_generator(strands, i, j)?)?;
    }
    Ok(out)
}

/// A word whose closure is a knot, by rejection. Lengths are uniform in
/// `n-1..=max_len`, the shortest range where a knot closure is possible.
pub fn random_knot_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let max_len = max_len.max(strands - 1);
    loop {
        let len = rng.gen_range(strands - 1..=max_len);
        let w = random_word_of_len(rng, strands, len)?;
        if w.is_knot() {
            return Ok(w);
        }
    }
}

/// Deterministic random word for `seed`, length uniform in `0..=max_len`.
pub fn random_braid(strands: usize, max_len: usize, seed: u64) -> Result<BraidWord> {
    random_word(&mut sample_rng(seed, 0), strands, max_len)
}

/// Deterministic product of `m` random positive band generators for `seed`.
pub fn random_band_product(strands: usize, m: usize, seed: u64) -> Result<BraidWord> {
    random_band_word(&mut sample_rng(seed, 0), strands, m)
}

/// Rewrites `w` by one randomly chosen application of a defining relation or
/// a free insertion/deletion. The result always represents the same element.
pub fn random_relation_move<R: Rng>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    let len = letters.len();
    for _ in 0..8 {
        match rng.gen_range(0..5) {
            // insert x x^-1
            0 => {
                let x = random_letter(rng, n);
                let at = rng.gen_range(0..=len);
                letters.splice(at..at, [x, x.inverse()]);
                return BraidWord::from_raw(n, letters);
            }
            // delete an adjacent inverse pair
            1 => {
                let spots: Vec<usize> = (0..len.saturating_sub(1))
                    .filter(|&k| letters[k] == letters[k + 1].inverse())
                    .collect();
                if let Some(&k) = pick(rng, &spots) {
                    letters.drain(k..k + 2);
                    return BraidWord::from_raw(n, letters);
                }
            }
            // far commutation
            2 => {
                let spots: Vec<usize> = (0..len.saturating_sub(1))
                    .filter(|&k| letters[k].index().abs_diff(letters[k + 1].index()) >= 2)
                    .collect();
                if let Some(&k) = pick(rng, &spots) {
                    letters.swap(k, k + 1);
                    return BraidWord::from_raw(n, letters);
                }
            }
            // x^e y^f x^-e = y^-e x^f y^e for adjacent indices x, y;
            // with e = f this is the braid relation read through inverses
            3 => {
                let spots: Vec<usize> = (0..len.saturating_sub(2))
                    .filter(|&k| braid_triple(&letters[k..k + 3]).is_some())
                    .collect();
                if let Some(&k) = pick(rng, &spots) {
                    let replacement = braid_triple(&letters[k..k + 3]).unwrap();
                    letters.splice(k..k + 3, replacement);
                    return BraidWord::from_raw(n, letters);
                }
            }
            // insert a full relator, or its inverse
            _ => {
                if n >= 3 {
                    let i = rng.gen_range(1..n - 1);
                    let (a, b) = (Letter::pos(i), Letter::pos(i + 1));
                    let mut rel = vec![a, b, a, b.inverse(), a.inverse(), b.inverse()];
                    if rng.gen_bool(0.5) {
                        rel = rel.iter().rev().map(|l| l.inverse()).collect();
                    }
                    let at = rng.gen_range(0..=len);
                    letters.splice(at..at, rel);
                    return BraidWord::from_raw(n, letters);
                }
            }
        }
    }
    BraidWord::from_raw(n, letters)
}

fn pick<'a, R: Rng, T>(rng: &mut R, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.gen_range(0..items.len())])
    }
}

/// Recognizes `x^e y^f x^-e` with `|x - y| = 1` and returns `y^-e x^f y^e`;
/// also recognizes `x^e y^e x^e` and returns `y^e x^e y^e`.
fn braid_triple(t: &[Letter]) -> Option<[Letter; 3]> {
    let (x, y, z) = (t[0], t[1], t[2]);
    if x.index().abs_diff(y.index()) != 1 || z.index() != x.index() {
        return None;
    }
    if z == x && y.sign() == x.sign() {
        return Some([y, x, y]);
    }
    if z == x.inverse() {
        let e = x.is_positive();
        let f = y.is_positive();
        let xi = x.index();
        let yi = y.index();
        let l = |idx: usize, positive: bool| {
            if positive {
                Letter::pos(idx)
            } else {
                Letter::neg(idx)
            }
        };
        return Some([l(yi, !e), l(xi, f), l(yi, e)]);
    }
    None
}

/// A pair of words equal in the braid group, the second obtained from the
/// first by `moves` random relation moves.
pub fn random_equal_pair<R: Rng>(
    rng: &mut R,
    strands: usize,
    max_len: usize,
    moves: usize,
) -> Result<(BraidWord, BraidWord)> {
    let w = random_word(rng, strands, max_len)?;
    let mut v = w.clone();
    for _ in 0..moves {
        v = random_relation_move(rng, &v);
    }
    Ok((w, v))
}

/// Runs `job` for samples `0..count`, each with its own stream, in parallel.
/// The output is ordered by sample index.
pub fn run_campaign<T, F>(seed: u64, count: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> T + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|k| job(&mut sample_rng(seed, k as u64), k))
        .collect()
}
