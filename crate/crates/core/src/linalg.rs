//! Exact 2×2 integer linear algebra on H₁ of the handlebody (Z ⊕ Z).

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::ext_gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("basis is not unimodular: det = {det}")]
    NotUnimodular { det: i128 },
    #[error("({a}, {b}) is not primitive in Z^2")]
    NotPrimitiveVector { a: i64, b: i64 },
    #[error("integer overflow")]
    Overflow,
}

/// Exponent-sum vector `(A-exponent, B-exponent)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbVector {
    pub a: i64,
    pub b: i64,
}

impl AbVector {
    pub const fn new(a: i64, b: i64) -> AbVector {
        AbVector { a, b }
    }

    pub const fn zero() -> AbVector {
        AbVector { a: 0, b: 0 }
    }

    /// `(a, b)^⊥ = (-b, a)`.
    pub fn perp(self) -> AbVector {
        AbVector::new(-self.b, self.a)
    }

    pub fn dot(self, other: AbVector) -> i128 {
        self.a as i128 * other.a as i128 + self.b as i128 * other.b as i128
    }

    /// `det [self; other]`, exact.
    pub fn det(self, other: AbVector) -> i128 {
        self.a as i128 * other.b as i128 - self.b as i128 * other.a as i128
    }
}

impl Add for AbVector {
    type Output = AbVector;
    fn add(self, o: AbVector) -> AbVector {
        AbVector::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for AbVector {
    type Output = AbVector;
    fn sub(self, o: AbVector) -> AbVector {
        AbVector::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for AbVector {
    type Output = AbVector;
    fn neg(self) -> AbVector {
        AbVector::new(-self.a, -self.b)
    }
}

/// Row-major 2×2 integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_rows(top: AbVector, bottom: AbVector) -> Mat2 {
        Mat2::new(top.a, top.b, bottom.a, bottom.b)
    }

    pub fn det(&self) -> i128 {
        let [[a, b], [c, d]] = self.0;
        a as i128 * d as i128 - b as i128 * c as i128
    }
}

/// Coefficient `y` in `W = xU + yV`, for a unimodular pair `(U, V)`.
///
/// Dotting with `U^⊥` kills the `U` term and leaves `y · det(U, V)`, so
/// `y = det(U, V) · (U^⊥ ∘ W)` when the determinant is a unit.
pub fn perp_coefficient(u: AbVector, v: AbVector, w: AbVector) -> Result<i64, LinalgError> {
    let det = u.det(v);
    if det != 1 && det != -1 {
        return Err(LinalgError::NotUnimodular { det });
    }
    let y = det * u.perp().dot(w);
    i64::try_from(y).map_err(|_| LinalgError::Overflow)
}

/// Some `V` with `det(U, V) = 1`; exists iff `U` is primitive.
pub fn unimodular_partner(u: AbVector) -> Result<AbVector, LinalgError> {
    // u.a * y - u.b * x = 1
    let (g, s, t) = ext_gcd(u.a as i128, -(u.b as i128));
    if g != 1 {
        return Err(LinalgError::NotPrimitiveVector { a: u.a, b: u.b });
    }
    let x = i64::try_from(t).map_err(|_| LinalgError::Overflow)?;
    let y = i64::try_from(s).map_err(|_| LinalgError::Overflow)?;
    Ok(AbVector::new(x, y))
}

/// Smith normal form diagonal `(d₁, d₂)` with `d₁ | d₂`; the cokernel is
/// `Z/d₁ ⊕ Z/d₂` where a zero entry stands for `Z`.
pub fn snf_diag(m: &Mat2) -> Result<(u64, u64), LinalgError> {
    let mut x = m.0.map(|row| row.map(i128::from));
    loop {
        // pivot: nonzero entry of least magnitude, moved to (0, 0)
        let mut best: Option<(usize, usize)> = None;
        for i in 0..2 {
            for j in 0..2 {
                if x[i][j] != 0 && best.is_none_or(|(bi, bj)| x[i][j].abs() < x[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            return Ok((0, 0));
        };
        if pi == 1 {
            x.swap(0, 1);
        }
        if pj == 1 {
            for row in x.iter_mut() {
                row.swap(0, 1);
            }
        }
        let p = x[0][0];
        let q = x[1][0] / p;
        x[1][0] -= q * p;
        x[1][1] -= q * x[0][1];
        let q = x[0][1] / p;
        x[0][1] -= q * p;
        x[1][1] -= q * x[1][0];
        if x[1][0] != 0 || x[0][1] != 0 {
            continue;
        }
        if x[1][1] % p != 0 {
            // fold row 1 into row 0 and reduce again
            x[0][1] = x[1][1];
            continue;
        }
        let d1 = u64::try_from(p.abs()).map_err(|_| LinalgError::Overflow)?;
        let d2 = u64::try_from(x[1][1].abs()).map_err(|_| LinalgError::Overflow)?;
        return Ok((d1, d2));
    }
}
