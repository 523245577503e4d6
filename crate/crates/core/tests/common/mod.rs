#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rrcurve::oracle::MOVES;
use rrcurve::{cyclic_reduce, parse_word, CyclicWord, Generator, Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

pub fn cw(s: &str) -> CyclicWord {
    cyclic_reduce(&w(s)).unwrap()
}

/// Freely reduced word with length drawn uniformly from `1..=max_len`.
pub fn random_reduced_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::ALL[rng.random_range(0..4)];
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::new(letters)
}

/// Image of `A^k` under a random sequence of Whitehead moves, never letting
/// the cyclic length exceed `max_len`.
pub fn random_automorph_of_power(rng: &mut ChaCha8Rng, k: i64, max_len: usize) -> CyclicWord {
    let mut w = cyclic_reduce(&Word::power(Generator::A, k)).unwrap();
    let steps = rng.random_range(1..=60);
    for _ in 0..steps {
        let next = MOVES[rng.random_range(0..MOVES.len())].apply(&w);
        if next.len() <= max_len {
            w = next;
        }
    }
    w
}

/// Conjugates by a random word, so inputs are not cyclically reduced.
pub fn random_conjugate(rng: &mut ChaCha8Rng, w: &Word) -> Word {
    let c = random_reduced_word(rng, 4);
    &(&c * w) * &c.inverse()
}
