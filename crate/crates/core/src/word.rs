//! Words in the free group F(A, B).
//!
//! A [`Word`] is any finite letter sequence; nothing is reduced on
//! construction. [`CyclicWord`] is the canonical representative of a
//! conjugacy class: freely and cyclically reduced, stored at its
//! lexicographically least rotation under `A < A⁻¹ < B < B⁻¹`, so that
//! conjugacy becomes plain sequence equality.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd;
use crate::linalg::AbVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word reduces to the identity")]
    EmptyWord,
    #[error("invalid block counts ({a}, {b}): need a + b >= 1 and gcd(a, b) = 1 when both are positive")]
    InvalidCounts { a: u64, b: u64 },
    #[error("({m}, {n}) is not a coprime pair")]
    NotCoprime { m: i64, n: i64 },
    #[error("integer overflow in exponent arithmetic")]
    Overflow,
}

/// Free generator of F(A, B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

/// One of the four signed generators. The derived order is the canonical
/// letter order `A < A⁻¹ < B < B⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn new(generator: Generator, positive: bool) -> Letter {
        match (generator, positive) {
            (Generator::A, true) => Letter::A,
            (Generator::A, false) => Letter::AInv,
            (Generator::B, true) => Letter::B,
            (Generator::B, false) => Letter::BInv,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Letter::A | Letter::AInv => Generator::A,
            Letter::B | Letter::BInv => Generator::B,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Letter::A | Letter::B)
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator(), !self.is_positive())
    }
}

/// A finite sequence of letters, not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// `generator^exponent`; a negative exponent gives the inverse power.
    pub fn power(generator: Generator, exponent: i64) -> Word {
        let l = Letter::new(generator, exponent > 0);
        Word(vec![l; exponent.unsigned_abs() as usize])
    }

    /// Builds a word from `(generator, exponent)` syllables, skipping zero
    /// exponents. The result is not reduced.
    pub fn from_syllables<I>(syllables: I) -> Word
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut letters = Vec::new();
        for (g, e) in syllables {
            let l = Letter::new(g, e > 0);
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].inverse())
    }

    /// Raw concatenation, no cancellation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Freely reduced `self^k`.
    pub fn pow(&self, k: u64) -> Word {
        let base = free_reduce(self);
        let mut letters = Vec::with_capacity(base.len().saturating_mul(k as usize));
        for _ in 0..k {
            letters.extend_from_slice(&base.0);
        }
        free_reduce(&Word(letters))
    }

    pub fn reduced(&self) -> Word {
        free_reduce(self)
    }

    pub fn inverse(&self) -> Word {
        invert(self)
    }

    pub fn abelianize(&self) -> AbVector {
        abelianize(self)
    }

    /// Maximal runs of a single letter, as `(generator, signed exponent)`.
    pub fn syllables(&self) -> Vec<(Generator, i64)> {
        runs(&self.0)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Word {
        Word::letter(l)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// Freely reduced product.
impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        free_reduce(&self.concat(rhs))
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

fn runs(letters: &[Letter]) -> Vec<(Generator, i64)> {
    let mut out: Vec<(Generator, i64)> = Vec::new();
    let mut prev: Option<Letter> = None;
    for &l in letters {
        match out.last_mut() {
            Some((_, e)) if prev == Some(l) => *e += l.sign(),
            _ => out.push((l.generator(), l.sign())),
        }
        prev = Some(l);
    }
    out
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    Word(stack)
}

pub fn invert(w: &Word) -> Word {
    w.0.iter().rev().map(|l| l.inverse()).collect()
}

pub fn abelianize(w: &Word) -> AbVector {
    let mut v = AbVector::zero();
    for l in &w.0 {
        match l.generator() {
            Generator::A => v.a += l.sign(),
            Generator::B => v.b += l.sign(),
        }
    }
    v
}

/// Endomorphism of F(A, B) given by the images of the two generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    pub image_a: Word,
    pub image_b: Word,
}

impl Endomorphism {
    pub fn new(image_a: Word, image_b: Word) -> Endomorphism {
        Endomorphism { image_a, image_b }
    }

    pub fn identity() -> Endomorphism {
        Endomorphism::new(Word::letter(Letter::A), Word::letter(Letter::B))
    }

    pub fn image(&self, l: Letter) -> Word {
        let img = match l.generator() {
            Generator::A => &self.image_a,
            Generator::B => &self.image_b,
        };
        if l.is_positive() {
            img.clone()
        } else {
            invert(img)
        }
    }

    /// Freely reduced image of `w`.
    pub fn apply(&self, w: &Word) -> Word {
        let inv_a = invert(&self.image_a);
        let inv_b = invert(&self.image_b);
        let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in &w.0 {
            let img = match l {
                Letter::A => &self.image_a,
                Letter::AInv => &inv_a,
                Letter::B => &self.image_b,
                Letter::BInv => &inv_b,
            };
            for &x in &img.0 {
                if stack.last() == Some(&x.inverse()) {
                    stack.pop();
                } else {
                    stack.push(x);
                }
            }
        }
        Word(stack)
    }

    /// `self` followed by `then`: `w ↦ then(self(w))`.
    pub fn then(&self, then: &Endomorphism) -> Endomorphism {
        Endomorphism::new(then.apply(&self.image_a), then.apply(&self.image_b))
    }
}

/// Image of `w` under `A ↦ image_a`, `B ↦ image_b`, freely reduced.
pub fn substitute(w: &Word, image_a: &Word, image_b: &Word) -> Word {
    Endomorphism::new(image_a.clone(), image_b.clone()).apply(w)
}

/// Nonempty cyclically reduced word at its canonical rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    /// Caller guarantees `letters` is nonempty and cyclically reduced.
    pub(crate) fn from_cyclically_reduced(mut letters: Vec<Letter>) -> CyclicWord {
        debug_assert!(!letters.is_empty());
        let r = least_rotation(&letters);
        letters.rotate_left(r);
        CyclicWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with [`Word`].
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Number of distinct generators occurring (1 or 2).
    pub fn generator_count(&self) -> usize {
        let first = self.0[0].generator();
        if self.0.iter().all(|l| l.generator() == first) {
            1
        } else {
            2
        }
    }

    pub fn abelianize(&self) -> AbVector {
        abelianize(&self.to_word())
    }
}

impl From<CyclicWord> for Word {
    fn from(cw: CyclicWord) -> Word {
        Word(cw.0)
    }
}

/// Start index of the lexicographically least rotation.
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Canonical representative of the conjugacy class of `w`.
pub fn cyclic_reduce(w: &Word) -> Result<CyclicWord, WordError> {
    let reduced = free_reduce(w).0;
    let mut lo = 0;
    let mut hi = reduced.len();
    while hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    if lo == hi {
        return Err(WordError::EmptyWord);
    }
    Ok(CyclicWord::from_cyclically_reduced(reduced[lo..hi].to_vec()))
}

/// Shortest root: `cw` is `root` repeated `k` times, with `k` maximal.
pub fn primitive_root(cw: &CyclicWord) -> (CyclicWord, usize) {
    let s = &cw.0;
    let n = s.len();
    // KMP failure function
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let period = n - fail[n - 1];
    if n.is_multiple_of(period) {
        // a prefix of a least rotation that tiles it is itself least
        (CyclicWord(s[..period].to_vec()), n / period)
    } else {
        (cw.clone(), 1)
    }
}

/// Pattern of `a` x-blocks and `b` y-blocks in lower Christoffel order of
/// slope `b / a`; `true` marks a y-block.
pub(crate) fn christoffel_pattern(a: u64, b: u64) -> Result<Vec<bool>, WordError> {
    if a + b == 0 || (a > 0 && b > 0 && gcd(a, b) != 1) {
        return Err(WordError::InvalidCounts { a, b });
    }
    let n = (a + b) as u128;
    let b = b as u128;
    Ok((1..=n).map(|i| (i * b) / n - ((i - 1) * b) / n == 1).collect())
}

/// `a` copies of `x` and `b` copies of `y` interleaved in lower Christoffel
/// order of slope `b / a`, freely reduced.
pub fn balanced_product(x: &Word, y: &Word, a: u64, b: u64) -> Result<Word, WordError> {
    let pattern = christoffel_pattern(a, b)?;
    let mut letters = Vec::new();
    for is_y in pattern {
        letters.extend_from_slice(if is_y { &y.0 } else { &x.0 });
    }
    Ok(free_reduce(&Word(letters)))
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "A",
            Letter::AInv => "A^-1",
            Letter::B => "B",
            Letter::BInv => "B^-1",
        })
    }
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::notation::write_syllables(f, &self.0)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::notation::write_syllables(f, &self.0)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        crate::notation::parse_word(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
