//! Univariate polynomials over the rationals: exact Lagrange interpolation
//! and integer-root search.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact_algebra::Rational;

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
/// The zero polynomial has no coefficients. Serializes as the coefficient list.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct UniPoly {
    coefficients: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Rational::is_zero) {
            coefficients.pop();
        }
        UniPoly { coefficients }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients
            .get(k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coefficients.len().max(other.coefficients.len());
        UniPoly::new(
            (0..len)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out =
            vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, factor: &Rational) -> UniPoly {
        UniPoly::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// The unique polynomial of degree below `points.len()` through the given
    /// points. The abscissae must be distinct.
    pub fn lagrange(points: &[(Rational, Rational)]) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::new(vec![Rational::one()]);
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UniPoly::new(vec![-xj, Rational::one()]));
                denom = denom * (xi - xj);
            }
            let factor = yi
                .checked_div(&denom)
                .expect("interpolation nodes must be distinct");
            acc = acc.add(&basis.scale(&factor));
        }
        acc
    }

    /// Integer multiple with coprime integer coefficients.
    fn cleared(&self) -> Vec<BigInt> {
        let lcm = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coefficients
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }

    /// Integers `r` in `[lo, hi]` with `p(r) = 0`, found by a full sweep of the
    /// range. Exact, and linear in the width of the range.
    ///
    /// The zero polynomial has every integer as a root; callers are expected
    /// to rule it out first, and an empty list is returned for it.
    pub fn integer_roots_by_sweep(&self, lo: i64, hi: i64) -> Vec<i64> {
        if self.is_zero() {
            return Vec::new();
        }
        let ints = self.cleared();
        (lo..=hi)
            .filter(|&r| horner(&ints, &BigInt::from(r)).is_zero())
            .collect()
    }

    /// Integers `r` in `[lo, hi]` with `p(r) = 0`.
    ///
    /// After clearing denominators and dividing out the largest power of the
    /// variable, every nonzero integer root divides the constant term, so only
    /// divisors are evaluated and the sweep never goes past `|constant term|`.
    pub fn integer_roots(&self, lo: i64, hi: i64) -> Vec<i64> {
        if self.is_zero() || lo > hi {
            return Vec::new();
        }
        let ints = self.cleared();
        let valuation = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let stripped = &ints[valuation..];
        let constant = stripped[0].abs();

        let mut roots = Vec::new();
        if valuation > 0 && lo <= 0 && 0 <= hi {
            roots.push(0);
        }
        // Candidates satisfy 1 <= |r| <= |constant|.
        let reach = constant.to_i64().unwrap_or(i64::MAX);
        let check = |r: i64, roots: &mut Vec<i64>| {
            let rb = BigInt::from(r);
            if (&constant % &rb).is_zero() && horner(stripped, &rb).is_zero() {
                roots.push(r);
            }
        };
        let neg_lo = lo.max(-reach);
        let neg_hi = hi.min(-1);
        for r in neg_lo..=neg_hi {
            check(r, &mut roots);
        }
        let pos_lo = lo.max(1);
        let pos_hi = hi.min(reach);
        for r in pos_lo..=pos_hi {
            check(r, &mut roots);
        }
        roots.sort_unstable();
        roots
    }
}

fn horner(coefficients: &[BigInt], x: &BigInt) -> BigInt {
    coefficients
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

impl From<Vec<Rational>> for UniPoly {
    fn from(coefficients: Vec<Rational>) -> Self {
        UniPoly::new(coefficients)
    }
}

impl From<UniPoly> for Vec<Rational> {
    fn from(p: UniPoly) -> Self {
        p.coefficients
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if !first {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                f.write_str("-")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "({mag})d")?,
                _ => write!(f, "({mag})d^{k}")?,
            }
        }
        Ok(())
    }
}
