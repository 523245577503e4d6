//! Syntactic recognition of primitives and proper powers of primitives.
//!
//! A primitive (or a power of one) with both generators present has, after
//! possibly inverting A and/or B, one generator occurring only with
//! exponent 1 and the other only with exponents in `{e, e+1}` for some
//! `e > 0`. When that holds, the automorphism `A ↦ A B^{-e}` (or its mirror
//! `B ↦ B A^{-e}`) strips `e` from every block and strictly shortens the
//! word. Descent stops at a single-generator word `X^k`, or as soon as the
//! exponent pattern fails, which rules out both primitive and proper power.

use serde::Serialize;

use crate::verdict::Verdict;
use crate::word::{cyclic_reduce, CyclicWord, Endomorphism, Generator, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyllableForm {
    /// `X^k`, the degenerate `l = 0` case.
    SingleGenerator { generator: Generator, exponent: i64 },
    /// `(n₁, m₁), …, (n_l, m_l)` for `A^{n₁} B^{m₁} … A^{n_l} B^{m_l}`.
    Alternating(Vec<(i64, i64)>),
}

impl SyllableForm {
    /// Rebuilds `A^{n₁} B^{m₁} …` (or `X^k`).
    pub fn to_word(&self) -> Word {
        match self {
            SyllableForm::SingleGenerator { generator, exponent } => Word::power(*generator, *exponent),
            SyllableForm::Alternating(pairs) => {
                Word::from_syllables(pairs.iter().flat_map(|&(n, m)| [(Generator::A, n), (Generator::B, m)]))
            }
        }
    }
}

/// Witness for the exponent condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CmzNormalization {
    pub invert_a: bool,
    pub invert_b: bool,
    /// Generator whose exponents are all 1 after the inversions.
    pub unit_generator: Generator,
    /// The other generator's exponents lie in `{e, e+1}`.
    pub e: u64,
}

impl CmzNormalization {
    /// Inversions followed by `unit ↦ unit · other^{-e}`.
    pub fn descent_map(&self) -> Endomorphism {
        let flip = |g: Generator, inverted: bool| Word::letter(Letter::new(g, !inverted));
        let normalize = Endomorphism::new(flip(Generator::A, self.invert_a), flip(Generator::B, self.invert_b));
        let unit = self.unit_generator;
        let other = unit.other();
        let shifted = Word::letter(Letter::new(unit, true)).concat(&Word::power(other, -(self.e as i64)));
        let strip = match unit {
            Generator::A => Endomorphism::new(shifted, Word::letter(Letter::B)),
            Generator::B => Endomorphism::new(Word::letter(Letter::A), shifted),
        };
        normalize.then(&strip)
    }
}

/// One application of the descent automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub normalization: CmzNormalization,
    pub image_a: Word,
    pub image_b: Word,
    pub before: CyclicWord,
    pub after: CyclicWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmzClass {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub trace: Vec<DescentStep>,
}

pub fn cmz_syllables(cw: &CyclicWord) -> SyllableForm {
    let letters = cw.letters();
    let n = letters.len();
    if cw.generator_count() == 1 {
        return SyllableForm::SingleGenerator {
            generator: letters[0].generator(),
            exponent: letters[0].sign() * n as i64,
        };
    }
    let start = (0..n)
        .find(|&i| letters[i].generator() == Generator::A && letters[(i + n - 1) % n].generator() == Generator::B)
        .expect("both generators occur");
    let mut rotated = letters.to_vec();
    rotated.rotate_left(start);
    let syllables = Word::new(rotated).syllables();
    debug_assert!(syllables.len().is_multiple_of(2));
    SyllableForm::Alternating(syllables.chunks(2).map(|p| (p[0].1, p[1].1)).collect())
}

fn two_values(xs: impl Iterator<Item = i64> + Clone) -> Option<u64> {
    let e = xs.clone().min()?;
    (e >= 1 && xs.into_iter().all(|x| x == e || x == e + 1)).then_some(e as u64)
}

/// Checks the four inversion normalizations in the order none, A, B, both;
/// returns the first witness. Single-generator forms have none.
pub fn cmz_condition(s: &SyllableForm) -> Option<CmzNormalization> {
    let SyllableForm::Alternating(pairs) = s else {
        return None;
    };
    for (invert_a, invert_b) in [(false, false), (true, false), (false, true), (true, true)] {
        let sa = if invert_a { -1 } else { 1 };
        let sb = if invert_b { -1 } else { 1 };
        let ns = pairs.iter().map(move |&(n, _)| n * sa);
        let ms = pairs.iter().map(move |&(_, m)| m * sb);
        if ns.clone().all(|n| n == 1) {
            if let Some(e) = two_values(ms.clone()) {
                return Some(CmzNormalization { invert_a, invert_b, unit_generator: Generator::A, e });
            }
        }
        if ms.clone().all(|m| m == 1) {
            if let Some(e) = two_values(ns) {
                return Some(CmzNormalization { invert_a, invert_b, unit_generator: Generator::B, e });
            }
        }
    }
    None
}

pub fn classify(w: &Word) -> Result<CmzClass, WordError> {
    let mut current = cyclic_reduce(w)?;
    let mut trace = Vec::new();
    loop {
        let form = cmz_syllables(&current);
        if let SyllableForm::SingleGenerator { exponent, .. } = form {
            let k = exponent.unsigned_abs() as usize;
            let verdict = if k == 1 { Verdict::Primitive } else { Verdict::ProperPower { exponent: k } };
            return Ok(CmzClass { verdict, trace });
        }
        let Some(normalization) = cmz_condition(&form) else {
            return Ok(CmzClass { verdict: Verdict::Neither, trace });
        };
        let map = normalization.descent_map();
        let next = cyclic_reduce(&map.apply(&current.to_word())).expect("descent map is an automorphism");
        debug_assert!(next.len() < current.len());
        trace.push(DescentStep {
            normalization,
            image_a: map.image_a,
            image_b: map.image_b,
            before: current,
            after: next.clone(),
        });
        current = next;
    }
}
