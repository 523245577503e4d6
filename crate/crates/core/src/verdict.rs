use serde::Serialize;

/// Word-level answer shared by the recognizer and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Primitive,
    ProperPower { exponent: usize },
    Neither,
}
