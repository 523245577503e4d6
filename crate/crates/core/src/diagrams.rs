//! Parametrized R-R diagram families: validation, realized words, and the
//! Seifert invariants each family carries.
//!
//! Families serialize as `{"family": <name>, "params": {...}}` with
//! parameter names `n, s, a, b, c, d, nu, omega, p, q, epsilon`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd;
use crate::linalg::{perp_coefficient, snf_diag, unimodular_partner, AbVector, LinalgError, Mat2};
use crate::word::{abelianize, balanced_product, cyclic_reduce, substitute, Generator, Letter, Word, WordError};

/// Realized words longer than this are refused.
pub const MAX_REALIZED_LEN: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum DiagramForm {
    PrimitiveFig1 {},
    SeifertDRect { n: u64, s: u64 },
    SeifertDGen { n: u64, s: u64, a: u64, b: u64 },
    SeifertM { s: u64 },
    PPTypeI {},
    PPTypeII { s: u64 },
    PPTypeIII { s: u64, a: u64, b: u64 },
    PPTypeIV { a: u64, b: u64, c: u64 },
    PPTypeV { a: u64, b: u64, c: u64, d: u64 },
    LemmaPPower5 { s: u64, epsilon: i64, a: u64, b: u64 },
    BRZRect { nu: u64, omega: u64, p: u64, q: u64 },
    BRZSForm { nu: u64, omega: u64, p: u64, q: u64, a: u64, b: u64, n: u64 },
    BRZTForm { nu: u64, omega: u64, p: u64, q: u64, a: u64, b: u64, n: u64 },
}

impl DiagramForm {
    pub fn family(&self) -> &'static str {
        match self {
            DiagramForm::PrimitiveFig1 {} => "PrimitiveFig1",
            DiagramForm::SeifertDRect { .. } => "SeifertDRect",
            DiagramForm::SeifertDGen { .. } => "SeifertDGen",
            DiagramForm::SeifertM { .. } => "SeifertM",
            DiagramForm::PPTypeI {} => "PPTypeI",
            DiagramForm::PPTypeII { .. } => "PPTypeII",
            DiagramForm::PPTypeIII { .. } => "PPTypeIII",
            DiagramForm::PPTypeIV { .. } => "PPTypeIV",
            DiagramForm::PPTypeV { .. } => "PPTypeV",
            DiagramForm::LemmaPPower5 { .. } => "LemmaPPower5",
            DiagramForm::BRZRect { .. } => "BRZRect",
            DiagramForm::BRZSForm { .. } => "BRZSForm",
            DiagramForm::BRZTForm { .. } => "BRZTForm",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{field} = {value} violates {constraint}")]
    RangeViolation { field: &'static str, constraint: &'static str, value: i128 },
    #[error("gcd({fields}) = {gcd}, expected 1")]
    GcdViolation { fields: &'static str, gcd: u64 },
    #[error("linear relation {relation} fails")]
    LinearRelationViolation { relation: &'static str },
    #[error("{family} has no word realization")]
    NoWordRealization { family: &'static str },
    #[error("{operation} does not apply to {family}")]
    NotApplicable { operation: &'static str, family: &'static str },
    #[error("remainder r = 0: the decomposition is the rectangular one, {rect:?}")]
    NormalizesToRect { rect: DiagramForm },
    #[error("precondition violated: {0}")]
    PreconditionViolation(&'static str),
    #[error("realized word would have {len} letters")]
    WordTooLong { len: u128 },
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A [`DiagramForm`] whose parameters passed [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ValidForm(DiagramForm);

impl ValidForm {
    pub fn form(&self) -> &DiagramForm {
        &self.0
    }

    pub fn into_form(self) -> DiagramForm {
        self.0
    }
}

impl std::ops::Deref for ValidForm {
    type Target = DiagramForm;
    fn deref(&self) -> &DiagramForm {
        &self.0
    }
}

fn at_least(field: &'static str, value: u64, min: u64, constraint: &'static str) -> Result<(), DiagramError> {
    if value < min {
        return Err(DiagramError::RangeViolation { field, constraint, value: value as i128 });
    }
    Ok(())
}

fn coprime(fields: &'static str, x: u64, y: u64) -> Result<(), DiagramError> {
    match gcd(x, y) {
        1 => Ok(()),
        g => Err(DiagramError::GcdViolation { fields, gcd: g }),
    }
}

fn strictly_between(
    field: &'static str,
    lo: u64,
    value: u64,
    hi: u64,
    constraint: &'static str,
) -> Result<(), DiagramError> {
    if value <= lo || value >= hi {
        return Err(DiagramError::RangeViolation { field, constraint, value: value as i128 });
    }
    Ok(())
}

fn validate_brz_side(
    (frac_num, denom): (u64, u64),
    a: u64,
    b: u64,
    n: u64,
    sum_rel: &'static str,
    lin_rel: &'static str,
) -> Result<(), DiagramError> {
    at_least("a", a, 1, "a >= 1")?;
    at_least("b", b, 1, "b >= 1")?;
    at_least("n", n, 1, "n >= 1")?;
    if a.checked_add(b) != Some(frac_num) {
        return Err(DiagramError::LinearRelationViolation { relation: sum_rel });
    }
    let lhs = n.checked_mul(frac_num).and_then(|x| x.checked_add(a));
    if lhs != Some(denom) {
        return Err(DiagramError::LinearRelationViolation { relation: lin_rel });
    }
    Ok(())
}

pub fn validate(f: &DiagramForm) -> Result<ValidForm, DiagramError> {
    use DiagramForm::*;
    match *f {
        PrimitiveFig1 {} | PPTypeI {} => {}
        SeifertDRect { n, s } => {
            at_least("n", n, 2, "n > 1")?;
            at_least("s", s, 2, "s > 1")?;
        }
        SeifertDGen { n, s, a, b } => {
            at_least("n", n, 2, "n > 1")?;
            at_least("s", s, 2, "s > 1")?;
            at_least("a", a, 1, "a > 0")?;
            at_least("b", b, 1, "b > 0")?;
            coprime("a, b", a, b)?;
        }
        SeifertM { s } => at_least("s", s, 1, "s >= 1")?,
        PPTypeII { s } => at_least("s", s, 2, "s > 1")?,
        PPTypeIII { s, a, b } => {
            at_least("s", s, 1, "s > 0")?;
            at_least("a", a, 1, "a > 0")?;
            at_least("b", b, 1, "b > 0")?;
        }
        PPTypeIV { a, b, c } => {
            at_least("a", a, 1, "a > 0")?;
            at_least("b", b, 1, "b > 0")?;
            at_least("c", c, 1, "c > 0")?;
        }
        PPTypeV { a, b, c, d } => {
            at_least("a", a, 1, "a > 0")?;
            at_least("b", b, 1, "b > 0")?;
            at_least("c", c, 1, "c > 0")?;
            at_least("d", d, 1, "d > 0")?;
        }
        LemmaPPower5 { s, epsilon, a, b } => {
            if epsilon != 1 && epsilon != -1 {
                return Err(DiagramError::RangeViolation {
                    field: "epsilon",
                    constraint: "epsilon = ±1",
                    value: epsilon as i128,
                });
            }
            at_least("s", s, 1, "min(s, s + epsilon) > 0")?;
            if epsilon == -1 {
                at_least("s", s, 2, "min(s, s + epsilon) > 0")?;
            }
            at_least("a", a, 1, "a > 0")?;
            at_least("b", b, 1, "b > 0")?;
            coprime("a, b", a, b)?;
        }
        BRZRect { nu, omega, p, q } => {
            strictly_between("nu", 0, nu, p, "0 < nu < p")?;
            strictly_between("omega", 0, omega, q, "0 < omega < q")?;
            coprime("nu, p", nu, p)?;
            coprime("omega, q", omega, q)?;
        }
        BRZSForm { nu, omega, p, q, a, b, n } => {
            strictly_between("nu", 1, nu, p, "1 < nu < p")?;
            strictly_between("omega", 0, omega, q, "0 < omega < q")?;
            coprime("nu, p", nu, p)?;
            coprime("omega, q", omega, q)?;
            validate_brz_side((nu, p), a, b, n, "a + b = nu", "n*nu + a = p")?;
        }
        BRZTForm { nu, omega, p, q, a, b, n } => {
            strictly_between("nu", 0, nu, p, "0 < nu < p")?;
            strictly_between("omega", 1, omega, q, "1 < omega < q")?;
            coprime("nu, p", nu, p)?;
            coprime("omega, q", omega, q)?;
            validate_brz_side((omega, q), a, b, n, "a + b = omega", "n*omega + a = q")?;
        }
    }
    Ok(ValidForm(f.clone()))
}

/// Exact letter count of [`realize_word`], when a word exists.
pub fn realized_length(f: &ValidForm) -> Option<u128> {
    use DiagramForm::*;
    let w = |x: u64| x as u128;
    Some(match *f.form() {
        PrimitiveFig1 {} => 1,
        SeifertDRect { n, s } => w(n) + w(s),
        SeifertDGen { n, s, a, b } => w(a) * (w(n) + w(s)) + w(b) * (w(n) + 1 + w(s)),
        SeifertM { s } => 2 + 2 * w(s),
        PPTypeII { s } => w(s),
        PPTypeIII { s, a, b } => (1 + w(s)) * (w(a) + w(b)),
        PPTypeIV { a, b, c } => 2 * (w(a) + w(b) + w(c)),
        LemmaPPower5 { s, epsilon, a, b } => {
            let base = (w(a) + w(b)) * (w(s) + 1);
            if epsilon > 0 {
                base + w(a)
            } else {
                base - w(a)
            }
        }
        BRZRect { p, q, .. } => w(p) + w(q),
        BRZSForm { nu, p, q, .. } => w(p) + w(q) * w(nu),
        BRZTForm { omega, p, q, .. } => w(q) + w(p) * w(omega),
        PPTypeI {} | PPTypeV { .. } => return None,
    })
}

fn pow(g: Generator, e: u64) -> Word {
    Word::power(g, e as i64)
}

/// `W_{m,n}(A, B)`: the Christoffel word with `|m|` letters `A^{±1}` and
/// `|n|` letters `B^{±1}`, signs following `m` and `n`.
pub fn wmn(m: i64, n: i64) -> Result<Word, WordError> {
    if gcd(m.unsigned_abs(), n.unsigned_abs()) != 1 {
        return Err(WordError::NotCoprime { m, n });
    }
    let x = Word::letter(Letter::new(Generator::A, m > 0));
    let y = Word::letter(Letter::new(Generator::B, n > 0));
    balanced_product(&x, &y, m.unsigned_abs(), n.unsigned_abs())
}

pub fn realize_word(f: &ValidForm) -> Result<Word, DiagramError> {
    use DiagramForm::*;
    use Generator::{A, B};
    let Some(len) = realized_length(f) else {
        return Err(DiagramError::NoWordRealization { family: f.family() });
    };
    if len > MAX_REALIZED_LEN {
        return Err(DiagramError::WordTooLong { len });
    }
    let word = match *f.form() {
        PrimitiveFig1 {} => Word::letter(Letter::A),
        SeifertDRect { n, s } => pow(A, n).concat(&pow(B, s)),
        SeifertDGen { n, s, a, b } => {
            let x = pow(A, n).concat(&pow(B, s));
            let y = pow(A, n + 1).concat(&pow(B, s));
            balanced_product(&x, &y, a, b)?
        }
        SeifertM { s } => Word::from_syllables([(A, 1), (B, s as i64), (A, -1), (B, s as i64)]),
        PPTypeII { s } => pow(B, s),
        PPTypeIII { s, a, b } => Word::letter(Letter::A).concat(&pow(B, s)).pow(a + b),
        PPTypeIV { a, b, c } => Word::from_syllables([(A, 1), (B, 1)]).pow(a + b + c),
        LemmaPPower5 { s, epsilon, a, b } => {
            // b = rho * a + eta, 0 <= eta < a
            let (rho, eta) = (b / a, b % a);
            let head = Word::from_syllables([(A, 1), (B, s as i64 + epsilon)]);
            let unit = Word::from_syllables([(A, 1), (B, s as i64)]);
            let x = head.concat(&unit.pow(rho));
            let y = x.concat(&unit);
            balanced_product(&x, &y, a - eta, eta)?
        }
        BRZRect { p, q, .. } => Word::from_syllables([(A, p as i64), (B, -(q as i64))]),
        BRZSForm { nu, p, q, .. } => substitute(&wmn(p as i64, nu as i64)?, &Word::letter(Letter::AInv), &pow(B, q)),
        BRZTForm { omega, p, q, .. } => {
            substitute(&wmn(q as i64, omega as i64)?, &Word::letter(Letter::AInv), &pow(B, p))
        }
        PPTypeI {} | PPTypeV { .. } => unreachable!("no realized length"),
    };
    debug_assert_eq!(word.len() as u128, len);
    Ok(word)
}

/// Exceptional fiber of type `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberType {
    pub numerator: u64,
    pub denominator: u64,
}

impl FiberType {
    pub fn new(numerator: u64, denominator: u64) -> FiberType {
        FiberType { numerator, denominator }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeifertMFiber {
    Index(u64),
    NoExceptionalFiber,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum CurveClass {
    Primitive,
    /// Root and exponent are absent for families without a printed word.
    ProperPower {
        root: Option<Word>,
        exponent: Option<u64>,
    },
    /// Exceptional fiber indexes, stored in ascending order.
    SeifertD {
        indexes: [u64; 2],
    },
    /// `alternative_disk_base` carries the D²-base indexes when the space
    /// also fibers over the disk.
    SeifertM {
        fiber: SeifertMFiber,
        alternative_disk_base: Option<[u64; 2]>,
    },
    Neither,
}

impl CurveClass {
    pub fn seifert_d(i: u64, j: u64) -> CurveClass {
        CurveClass::SeifertD { indexes: [i.min(j), i.max(j)] }
    }
}

fn seifert_d_general_index(n: u64, a: u64, b: u64) -> Result<u64, DiagramError> {
    a.checked_add(b).and_then(|ab| n.checked_mul(ab)).and_then(|x| x.checked_add(b)).ok_or(DiagramError::Overflow)
}

pub fn classify_form(f: &ValidForm) -> Result<CurveClass, DiagramError> {
    use DiagramForm::*;
    use Generator::{A, B};
    let power = |root: Word, k: u64| CurveClass::ProperPower { root: Some(root), exponent: Some(k) };
    Ok(match *f.form() {
        PrimitiveFig1 {} | LemmaPPower5 { .. } => CurveClass::Primitive,
        SeifertDRect { n, s } => CurveClass::seifert_d(n, s),
        SeifertDGen { n, s, a, b } => CurveClass::seifert_d(seifert_d_general_index(n, a, b)?, s),
        SeifertM { s: 1 } => {
            CurveClass::SeifertM { fiber: SeifertMFiber::NoExceptionalFiber, alternative_disk_base: Some([2, 2]) }
        }
        SeifertM { s } => CurveClass::SeifertM { fiber: SeifertMFiber::Index(s), alternative_disk_base: None },
        PPTypeI {} | PPTypeV { .. } => CurveClass::ProperPower { root: None, exponent: None },
        PPTypeII { s } => power(Word::letter(Letter::B), s),
        PPTypeIII { s, a, b } => {
            power(Word::letter(Letter::A).concat(&pow(B, s)), a.checked_add(b).ok_or(DiagramError::Overflow)?)
        }
        PPTypeIV { a, b, c } => power(
            pow(A, 1).concat(&pow(B, 1)),
            a.checked_add(b).and_then(|x| x.checked_add(c)).ok_or(DiagramError::Overflow)?,
        ),
        BRZRect { p, q, .. } | BRZSForm { p, q, .. } | BRZTForm { p, q, .. } => CurveClass::seifert_d(p, q),
    })
}

pub fn fiber_types(f: &ValidForm) -> Result<(FiberType, FiberType), DiagramError> {
    match *f.form() {
        DiagramForm::BRZRect { nu, omega, p, q }
        | DiagramForm::BRZSForm { nu, omega, p, q, .. }
        | DiagramForm::BRZTForm { nu, omega, p, q, .. } => Ok((FiberType::new(nu, p), FiberType::new(omega, q))),
        _ => Err(DiagramError::NotApplicable { operation: "fiber_types", family: f.family() }),
    }
}

/// Regular fiber words. `SeifertDRect` and `BRZRect` report both `B`-side
/// and `A`-side fibers.
pub fn regular_fiber(f: &ValidForm) -> Result<Vec<Word>, DiagramError> {
    use DiagramForm::*;
    use Generator::{A, B};
    let guard = |e: u64| {
        if e as u128 > MAX_REALIZED_LEN {
            Err(DiagramError::WordTooLong { len: e as u128 })
        } else {
            Ok(e)
        }
    };
    Ok(match *f.form() {
        SeifertDRect { n, s } => vec![pow(B, guard(s)?), pow(A, guard(n)?)],
        SeifertDGen { s, .. } | SeifertM { s } => vec![pow(B, guard(s)?)],
        BRZRect { p, q, .. } => vec![pow(B, guard(q)?), pow(A, guard(p)?)],
        BRZSForm { q, .. } => vec![pow(B, guard(q)?)],
        BRZTForm { p, .. } => vec![pow(B, guard(p)?)],
        _ => return Err(DiagramError::NotApplicable { operation: "regular_fiber", family: f.family() }),
    })
}

/// Index of the exceptional fiber of a `SeifertDGen` curve computed from
/// homology: the regular fiber `(0, 1)` against `α = (n(a+b)+b, a+b)`.
pub fn index_via_perp(f: &ValidForm) -> Result<u64, DiagramError> {
    let DiagramForm::SeifertDGen { n, a, b, .. } = *f.form() else {
        return Err(DiagramError::NotApplicable { operation: "index_via_perp", family: f.family() });
    };
    let first = i64::try_from(seifert_d_general_index(n, a, b)?).map_err(|_| DiagramError::Overflow)?;
    let second = i64::try_from(a + b).map_err(|_| DiagramError::Overflow)?;
    let alpha = AbVector::new(first, second);
    let partner = unimodular_partner(alpha)?;
    let y = perp_coefficient(alpha, partner, AbVector::new(0, 1))?;
    Ok(y.unsigned_abs())
}

/// `H₁` of the double 2-handle addition along `alpha` and `beta`, as the
/// Smith diagonal of their abelianizations.
pub fn homology_check(alpha: &Word, beta: &Word) -> Result<(u64, u64), DiagramError> {
    cyclic_reduce(alpha)?;
    cyclic_reduce(beta)?;
    let m = Mat2::from_rows(abelianize(alpha), abelianize(beta));
    Ok(snf_diag(&m)?)
}

/// Rewrites an `n = 1` S- or T-form as an equivalent form with `n > 1`.
///
/// With `b = ρa + r`, `0 < r < a`, the change of cutting disks
/// `A⁻¹ ↦ A⁻¹B^{-q}` turns the fiber on the modified side into
/// `(p - ν)/p` and the other into `-ω/q`, recorded here as `(q - ω)/q`.
/// The new parameters are `ν' = a`, `a' = r`, `b' = a - r`, `n' = ρ + 2`.
pub fn normalize_brz(f: &ValidForm) -> Result<ValidForm, DiagramError> {
    let out = match *f.form() {
        DiagramForm::BRZSForm { nu, omega, p, q, a, b, n } => {
            if n != 1 {
                return Err(DiagramError::PreconditionViolation("normalize_brz requires n = 1"));
            }
            let (rho, r) = (b / a, b % a);
            if r == 0 {
                return Err(DiagramError::NormalizesToRect { rect: DiagramForm::BRZRect { nu, omega, p, q } });
            }
            DiagramForm::BRZSForm { nu: a, omega: q - omega, p, q, a: r, b: a - r, n: rho + 2 }
        }
        DiagramForm::BRZTForm { nu, omega, p, q, a, b, n } => {
            if n != 1 {
                return Err(DiagramError::PreconditionViolation("normalize_brz requires n = 1"));
            }
            let (rho, r) = (b / a, b % a);
            if r == 0 {
                return Err(DiagramError::NormalizesToRect { rect: DiagramForm::BRZRect { nu, omega, p, q } });
            }
            DiagramForm::BRZTForm { nu: p - nu, omega: a, p, q, a: r, b: a - r, n: rho + 2 }
        }
        _ => return Err(DiagramError::NotApplicable { operation: "normalize_brz", family: f.family() }),
    };
    validate(&out)
}
