//! Brute-force ground truth via Whitehead length reduction.
//!
//! In rank two the Whitehead automorphisms are the three generator
//! inversions/swaps plus twelve "multiply" moves: for a target generator
//! `y` and a letter `x` of the other generator, `y ↦ yx`, `y ↦ x⁻¹y` or
//! `y ↦ x⁻¹yx`. Peak reduction guarantees that a cyclic word which is not
//! of minimal length in its automorphism orbit admits a strictly shortening
//! move from this list, so greedy descent reaches the orbit minimum.

use serde::Serialize;

use crate::verdict::Verdict;
use crate::word::{cyclic_reduce, primitive_root, CyclicWord, Endomorphism, Generator, Letter, Word, WordError};

/// How the multiplier letter is attached to the target generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `y ↦ y x`
    Right,
    /// `y ↦ x⁻¹ y`
    Left,
    /// `y ↦ x⁻¹ y x`
    Conjugate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WhiteheadMove {
    InvertA,
    InvertB,
    SwapAB,
    Multiply { target: Generator, multiplier: Letter, side: Side },
}

const fn multiply(target: Generator, multiplier: Letter, side: Side) -> WhiteheadMove {
    WhiteheadMove::Multiply { target, multiplier, side }
}

/// Enumeration order used by greedy descent; the first reducing move wins.
pub const MOVES: [WhiteheadMove; 15] = [
    WhiteheadMove::InvertA,
    WhiteheadMove::InvertB,
    WhiteheadMove::SwapAB,
    multiply(Generator::A, Letter::B, Side::Right),
    multiply(Generator::A, Letter::B, Side::Left),
    multiply(Generator::A, Letter::B, Side::Conjugate),
    multiply(Generator::A, Letter::BInv, Side::Right),
    multiply(Generator::A, Letter::BInv, Side::Left),
    multiply(Generator::A, Letter::BInv, Side::Conjugate),
    multiply(Generator::B, Letter::A, Side::Right),
    multiply(Generator::B, Letter::A, Side::Left),
    multiply(Generator::B, Letter::A, Side::Conjugate),
    multiply(Generator::B, Letter::AInv, Side::Right),
    multiply(Generator::B, Letter::AInv, Side::Left),
    multiply(Generator::B, Letter::AInv, Side::Conjugate),
];

impl WhiteheadMove {
    pub fn automorphism(self) -> Endomorphism {
        let a = Word::letter(Letter::A);
        let b = Word::letter(Letter::B);
        match self {
            WhiteheadMove::InvertA => Endomorphism::new(a.inverse(), b),
            WhiteheadMove::InvertB => Endomorphism::new(a, b.inverse()),
            WhiteheadMove::SwapAB => Endomorphism::new(b, a),
            WhiteheadMove::Multiply { target, multiplier, side } => {
                let y = Word::letter(Letter::new(target, true));
                let x = Word::letter(multiplier);
                let x_inv = Word::letter(multiplier.inverse());
                let image = match side {
                    Side::Right => y.concat(&x),
                    Side::Left => x_inv.concat(&y),
                    Side::Conjugate => x_inv.concat(&y).concat(&x),
                };
                match target {
                    Generator::A => Endomorphism::new(image, b),
                    Generator::B => Endomorphism::new(a, image),
                }
            }
        }
    }

    pub fn inverse(self) -> WhiteheadMove {
        match self {
            // y ↦ yx, x⁻¹y, x⁻¹yx are undone by the same pattern with x⁻¹
            WhiteheadMove::Multiply { target, multiplier, side } => {
                WhiteheadMove::Multiply { target, multiplier: multiplier.inverse(), side }
            }
            m => m,
        }
    }

    pub fn apply(self, cw: &CyclicWord) -> CyclicWord {
        let image = self.automorphism().apply(&cw.to_word());
        cyclic_reduce(&image).expect("automorphisms never send a nonempty cyclic word to the identity")
    }
}

/// Oracle classification, with the root for proper powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OracleClass {
    Primitive,
    ProperPower { root: CyclicWord, exponent: usize },
    Neither,
}

impl OracleClass {
    pub fn verdict(&self) -> Verdict {
        match self {
            OracleClass::Primitive => Verdict::Primitive,
            OracleClass::ProperPower { exponent, .. } => Verdict::ProperPower { exponent: *exponent },
            OracleClass::Neither => Verdict::Neither,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub minimal_word: CyclicWord,
    pub move_trace: Vec<WhiteheadMove>,
    #[serde(flatten)]
    pub class: OracleClass,
}

/// Greedy Whitehead descent; returns the orbit-minimal word and the moves
/// applied, in order.
pub fn minimize_length(cw: &CyclicWord) -> (CyclicWord, Vec<WhiteheadMove>) {
    let mut current = cw.clone();
    let mut trace = Vec::new();
    'descent: loop {
        if current.len() == 1 {
            break;
        }
        for m in MOVES {
            let next = m.apply(&current);
            if next.len() < current.len() {
                current = next;
                trace.push(m);
                continue 'descent;
            }
        }
        break;
    }
    (current, trace)
}

pub fn replay(trace: &[WhiteheadMove], cw: &CyclicWord) -> CyclicWord {
    trace.iter().fold(cw.clone(), |w, m| m.apply(&w))
}

pub fn is_primitive_oracle(w: &Word) -> Result<bool, WordError> {
    let cw = cyclic_reduce(w)?;
    Ok(minimize_length(&cw).0.len() == 1)
}

/// `Some((root, k))` when `w` is conjugate to `root^k` with `k ≥ 2` and
/// `root` primitive.
pub fn is_proper_power_oracle(w: &Word) -> Result<Option<(CyclicWord, usize)>, WordError> {
    let cw = cyclic_reduce(w)?;
    Ok(proper_power_of(&cw))
}

fn proper_power_of(cw: &CyclicWord) -> Option<(CyclicWord, usize)> {
    let (root, k) = primitive_root(cw);
    (k >= 2 && minimize_length(&root).0.len() == 1).then_some((root, k))
}

pub fn oracle_verdict(w: &Word) -> Result<OracleVerdict, WordError> {
    let cw = cyclic_reduce(w)?;
    let (minimal_word, move_trace) = minimize_length(&cw);
    let class = if minimal_word.len() == 1 {
        OracleClass::Primitive
    } else {
        match proper_power_of(&cw) {
            Some((root, exponent)) => OracleClass::ProperPower { root, exponent },
            None => OracleClass::Neither,
        }
    };
    Ok(OracleVerdict { minimal_word, move_trace, class })
}

/// Minimal cyclic length over everything reachable from `cw` by move
/// sequences that never exceed its starting length.
#[cfg(feature = "bfs-oracle")]
pub fn minimal_length_bfs(cw: &CyclicWord) -> usize {
    use std::collections::{HashSet, VecDeque};

    let bound = cw.len();
    let mut best = bound;
    let mut seen = HashSet::from([cw.clone()]);
    let mut queue = VecDeque::from([cw.clone()]);
    while let Some(w) = queue.pop_front() {
        best = best.min(w.len());
        if best == 1 {
            break;
        }
        for m in MOVES {
            let next = m.apply(&w);
            if next.len() <= bound && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best
}
