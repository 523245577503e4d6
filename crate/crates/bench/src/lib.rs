//! Input generators shared by the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rrcurve::oracle::MOVES;
use rrcurve::{cyclic_reduce, Generator, Letter, Word};

/// Uniform freely reduced words of exactly `len` letters.
pub fn random_reduced_words(count: usize, len: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut letters: Vec<Letter> = Vec::with_capacity(len);
            while letters.len() < len {
                let l = Letter::ALL[rng.random_range(0..4)];
                if letters.last() != Some(&l.inverse()) {
                    letters.push(l);
                }
            }
            Word::new(letters)
        })
        .collect()
}

/// Automorphic images of `A^k` grown by random Whitehead moves until the
/// cyclic length reaches `target_len` (or a step would exceed it).
pub fn random_proper_powers(count: usize, k: i64, target_len: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut w = cyclic_reduce(&Word::power(Generator::A, k)).unwrap();
            for _ in 0..200 {
                let next = MOVES[rng.random_range(0..MOVES.len())].apply(&w);
                if next.len() > target_len {
                    break;
                }
                w = next;
            }
            w.to_word()
        })
        .collect()
}
