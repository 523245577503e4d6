//! Exhaustive enumeration of conjugacy classes by canonical representative.

use crate::word::{least_rotation, CyclicWord, Letter};

/// Every canonical cyclically reduced word of length `1..=max_len`, each
/// exactly once, shortest first and lexicographically within a length.
pub fn enumerate_cyclic_words(max_len: usize) -> CyclicWords {
    CyclicWords { max_len, next_len: 1, batch: Vec::new().into_iter() }
}

/// Canonical words of exactly length `n`.
pub fn cyclic_words_of_length(n: usize) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut prefix = Vec::with_capacity(n);
    extend(&mut prefix, n, &mut out);
    out
}

fn extend(prefix: &mut Vec<Letter>, n: usize, out: &mut Vec<CyclicWord>) {
    if prefix.len() == n {
        let first = prefix[0];
        let last = prefix[n - 1];
        if (n == 1 || first != last.inverse()) && least_rotation(prefix) == 0 {
            out.push(CyclicWord::from_cyclically_reduced(prefix.clone()));
        }
        return;
    }
    for l in Letter::ALL {
        if let Some(&prev) = prefix.last() {
            // reduced, and nothing smaller than the leading letter
            if l == prev.inverse() || l < prefix[0] {
                continue;
            }
        }
        prefix.push(l);
        extend(prefix, n, out);
        prefix.pop();
    }
}

pub struct CyclicWords {
    max_len: usize,
    next_len: usize,
    batch: std::vec::IntoIter<CyclicWord>,
}

impl Iterator for CyclicWords {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        loop {
            if let Some(w) = self.batch.next() {
                return Some(w);
            }
            if self.next_len > self.max_len {
                return None;
            }
            self.batch = cyclic_words_of_length(self.next_len).into_iter();
            self.next_len += 1;
        }
    }
}
