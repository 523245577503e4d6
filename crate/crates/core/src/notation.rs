//! Text notation for words.
//!
//! Tokens are `A` or `B`, optionally followed by `^` and a signed nonzero
//! integer exponent. Lowercase `a`, `b` denote `A⁻¹`, `B⁻¹`. Tokens are
//! juxtaposed, optionally separated by whitespace or `*`. Printing
//! normalizes to uppercase caret form with one space between syllables:
//! `"a b^2*b"` prints as `A^-1 B^3`.

use std::fmt;

use thiserror::Error;

use crate::word::{Generator, Letter, Word};

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected one of {}", expected.join(", "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

impl ParseError {
    fn new(offset: usize, expected: &[&'static str]) -> ParseError {
        ParseError { offset, expected: expected.to_vec() }
    }
}

const LETTER_TOKENS: &[&str] = &["A", "B", "a", "b"];

pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    loop {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*') {
            pos += 1;
        }
        if pos == bytes.len() {
            return Ok(Word::new(letters));
        }
        let (generator, positive) = match bytes[pos] {
            b'A' => (Generator::A, true),
            b'B' => (Generator::B, true),
            b'a' => (Generator::A, false),
            b'b' => (Generator::B, false),
            _ => return Err(ParseError::new(pos, LETTER_TOKENS)),
        };
        pos += 1;
        let mut exponent: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let mut negative = false;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                let expected: &[&str] =
                    if negative || bytes[start - 1] == b'+' { &["digit"] } else { &["-", "+", "digit"] };
                return Err(ParseError::new(pos, expected));
            }
            let magnitude: u64 = text[start..pos]
                .parse()
                .ok()
                .filter(|&m| m <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(start, &["exponent of magnitude at most 1000000"]))?;
            if magnitude == 0 {
                return Err(ParseError::new(start, &["nonzero exponent"]));
            }
            exponent = if negative { -(magnitude as i64) } else { magnitude as i64 };
        }
        if pos < bytes.len()
            && !(bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*')
            && !LETTER_TOKENS.iter().any(|t| t.as_bytes()[0] == bytes[pos])
        {
            return Err(ParseError::new(pos, &["A", "B", "a", "b", "^", "*", "whitespace"]));
        }
        if !positive {
            exponent = -exponent;
        }
        let l = Letter::new(generator, exponent > 0);
        letters.extend(std::iter::repeat_n(l, exponent.unsigned_abs() as usize));
    }
}

pub(crate) fn write_syllables(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        let name = match l.generator() {
            Generator::A => "A",
            Generator::B => "B",
        };
        let e = (j - i) as i64 * l.sign();
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
        i = j;
    }
    Ok(())
}
