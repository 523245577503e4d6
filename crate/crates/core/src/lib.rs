//! Recognition of primitive, proper-power and Seifert curves on the
//! boundary of a genus-two handlebody, through their words in
//! `π₁(H) = F(A, B)`.
//!
//! The fast path is [`recognizer::classify`], a syllable-pattern descent.
//! [`oracle`] is an independent Whitehead length-reduction search used to
//! certify it. [`diagrams`] holds the parametrized diagram families with
//! their realized words and Seifert invariants.

mod arith;
pub mod diagrams;
pub mod enumerate;
pub mod linalg;
pub mod notation;
pub mod oracle;
pub mod recognizer;
pub mod sweep;
pub mod verdict;
pub mod word;

pub use arith::gcd;
pub use diagrams::{
    classify_form, fiber_types, homology_check, index_via_perp, normalize_brz, realize_word, regular_fiber, validate,
    wmn, CurveClass, DiagramError, DiagramForm, FiberType, SeifertMFiber, ValidForm,
};
pub use enumerate::enumerate_cyclic_words;
pub use linalg::{perp_coefficient, snf_diag, AbVector, LinalgError, Mat2};
pub use notation::{parse_word, ParseError};
pub use oracle::{
    is_primitive_oracle, is_proper_power_oracle, minimize_length, oracle_verdict, OracleClass, OracleVerdict,
    WhiteheadMove,
};
pub use recognizer::{classify, cmz_condition, cmz_syllables, CmzClass, CmzNormalization, SyllableForm};
pub use sweep::{equivalence_sweep, SweepSummary};
pub use verdict::Verdict;
pub use word::{
    abelianize, balanced_product, cyclic_reduce, free_reduce, invert, primitive_root, substitute, CyclicWord,
    Endomorphism, Generator, Letter, Word, WordError,
};
