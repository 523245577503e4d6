//! Exhaustive recognizer-versus-oracle equivalence sweep.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::cyclic_words_of_length;
use crate::oracle::oracle_verdict;
use crate::recognizer::classify;
use crate::verdict::Verdict;
use crate::word::CyclicWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub word: CyclicWord,
    pub recognizer: Verdict,
    pub oracle: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub max_len: usize,
    pub checked: usize,
    pub mismatches: usize,
    pub primitive: usize,
    pub proper_power: usize,
    pub neither: usize,
    /// Least mismatching word (shortest, then lexicographic), if any.
    pub counterexample: Option<Mismatch>,
}

impl SweepSummary {
    fn single(word: &CyclicWord) -> SweepSummary {
        let ours = classify(&word.to_word()).expect("canonical words are nonempty").verdict;
        let truth = oracle_verdict(&word.to_word()).expect("canonical words are nonempty").class.verdict();
        let mut s = SweepSummary { checked: 1, ..SweepSummary::default() };
        match truth {
            Verdict::Primitive => s.primitive = 1,
            Verdict::ProperPower { .. } => s.proper_power = 1,
            Verdict::Neither => s.neither = 1,
        }
        if ours != truth {
            s.mismatches = 1;
            s.counterexample = Some(Mismatch { word: word.clone(), recognizer: ours, oracle: truth });
        }
        s
    }

    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        self.primitive += other.primitive;
        self.proper_power += other.proper_power;
        self.neither += other.neither;
        self.counterexample = match (self.counterexample, other.counterexample) {
            (Some(x), Some(y)) => Some(if (x.word.len(), &x.word) <= (y.word.len(), &y.word) { x } else { y }),
            (x, y) => x.or(y),
        };
        self
    }
}

/// Classifies every canonical cyclic word up to `max_len` both ways.
/// The aggregate does not depend on scheduling.
pub fn equivalence_sweep(max_len: usize) -> SweepSummary {
    let mut total = (1..=max_len)
        .map(|n| {
            cyclic_words_of_length(n)
                .par_iter()
                .map(SweepSummary::single)
                .reduce(SweepSummary::default, SweepSummary::merge)
        })
        .fold(SweepSummary::default(), SweepSummary::merge);
    total.max_len = max_len;
    total
}
