//! Random reduced words and shuffle patterns for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cartan_graph::{CartanMatrix, Label};
use crate::coxeter_words::{is_reduced, Word};

/// Grows a word letter by letter, keeping only letters that leave it
/// reduced. Stops at `max_len` or after a run of rejected letters.
pub fn random_reduced_word<R: Rng + ?Sized>(
    rng: &mut R,
    cartan: &CartanMatrix,
    max_len: usize,
) -> Word {
    let rank = cartan.rank() as Label;
    let target = rng.gen_range(0..=max_len);
    let mut w = Vec::with_capacity(target);
    let mut misses = 0;
    while w.len() < target && misses < 4 * rank as usize {
        w.push(rng.gen_range(1..=rank));
        if is_reduced(&w, cartan) {
            misses = 0;
        } else {
            w.pop();
            misses += 1;
        }
    }
    w
}

/// A uniformly shuffled 0/1 pattern with `u_len` zeros and `v_len` ones.
pub fn random_pattern<R: Rng + ?Sized>(rng: &mut R, u_len: usize, v_len: usize) -> Vec<u8> {
    let mut p: Vec<u8> = std::iter::repeat_n(0, u_len)
        .chain(std::iter::repeat_n(1, v_len))
        .collect();
    p.shuffle(rng);
    p
}
