//! Truncated formal power series in one variable over [`Rational`].
//!
//! Enough machinery to expand the cyclic-cover signature function
//! `t·((1+t)^d + (1−t)^d) / ((1+t)^d − (1−t)^d)` and the characteristic
//! series `x / tanh(x)` of the L-genus, both of which are quotients whose
//! denominators vanish at the origin.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::{binomial, Rational};

/// A power series known modulo `t^(order + 1)`.
///
/// Coefficients are indexed by degree and there are always exactly
/// `order + 1` of them. Serializes as a JSON array of rational strings.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// `coefficient · t^degree`, truncated at `order`.
    pub fn monomial(coefficient: Rational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coefficients[degree] = coefficient;
        }
        s
    }

    /// Takes `coefficients` as the low-degree terms; missing terms up to
    /// `order` are zero and terms beyond `order` are dropped.
    pub fn from_coefficients(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        TruncatedSeries { coefficients }
    }

    /// `(1 + sign·t)^d` as a truncated series.
    pub fn binomial_power(d: u32, negate: bool, order: usize) -> Self {
        let coefficients = (0..=order)
            .map(|k| {
                let c = binomial(d, k as i64);
                if negate && k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        TruncatedSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `t^degree`, zero above the truncation order.
    pub fn coefficient(&self, degree: usize) -> Rational {
        self.coefficients
            .get(degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coefficients(self.coefficients.clone(), order)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `t^shift`, keeping the order.
    pub fn shift_up(&self, shift: usize) -> Self {
        let order = self.order();
        let mut coefficients = vec![Rational::zero(); shift.min(order + 1)];
        coefficients.extend(
            self.coefficients
                .iter()
                .take(order + 1 - coefficients.len())
                .cloned(),
        );
        TruncatedSeries { coefficients }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coefficients: out })
    }

    /// Quotient `self / den`.
    ///
    /// If `den` has valuation `v`, the common factor `t^v` is cancelled first,
    /// which requires the numerator to vanish below degree `v`. Both operands
    /// are read as polynomials of degree at most their order, so the quotient
    /// keeps the full order.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_order(den)?;
        let v = den.valuation().ok_or(Error::ZeroDivisor)?;
        if self.coefficients[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { valuation: v });
        }
        let order = self.order();
        let num = &self.coefficients[v..];
        let den = &den.coefficients[v..];
        let lead = den[0].recip()?;

        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num.get(i).cloned().unwrap_or_else(Rational::zero);
            for j in 1..=i.min(den.len() - 1) {
                if !den[j].is_zero() {
                    acc -= &den[j] * &q[i - j];
                }
            }
            q.push(acc * &lead);
        }
        Ok(TruncatedSeries { coefficients: q })
    }
}

impl From<TruncatedSeries> for Vec<Rational> {
    fn from(s: TruncatedSeries) -> Self {
        s.coefficients
    }
}

impl TryFrom<Vec<Rational>> for TruncatedSeries {
    type Error = String;

    fn try_from(coefficients: Vec<Rational>) -> std::result::Result<Self, String> {
        if coefficients.is_empty() {
            return Err("a series needs at least the constant coefficient".into());
        }
        Ok(TruncatedSeries { coefficients })
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coefficients).finish()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                f.write_str("-")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "({mag})t")?,
                _ => write!(f, "({mag})t^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Numerator `t·((1+t)^d + (1−t)^d)` and denominator `(1+t)^d − (1−t)^d` of
/// the signature function, truncated at `order`.
pub fn sign_function_parts(d: u32, order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let plus = TruncatedSeries::binomial_power(d, false, order);
    let minus = TruncatedSeries::binomial_power(d, true, order);
    let sum = plus.add(&minus).expect("same order");
    let diff = plus.sub(&minus).expect("same order");
    (sum.shift_up(1), diff)
}

/// Expansion of `sign(t) = t·((1+t)^d + (1−t)^d) / ((1+t)^d − (1−t)^d)` up to `t^order`.
///
/// Only even powers appear and the constant term is `1/d`.
pub fn sign_series(d: i64, order: usize) -> Result<TruncatedSeries> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = u32::try_from(d).map_err(|_| Error::InvalidDegree(d))?;
    // The denominator has valuation one, so one extra degree of both operands
    // is needed to pin down every coefficient through `order`.
    let (num, den) = sign_function_parts(d, order + 1);
    Ok(num.div(&den)?.truncate(order))
}

/// `x / tanh(x) = 1 + x²/3 − x⁴/45 + 2x⁶/945 − …` up to `x^order`,
/// computed as `x·cosh(x) / sinh(x)` from the factorial series.
pub fn tanh_characteristic_series(order: usize) -> TruncatedSeries {
    let work = order + 1;
    let mut cosh = Vec::with_capacity(work + 1);
    let mut sinh = Vec::with_capacity(work + 1);
    let mut factorial = Rational::one();
    for k in 0..=work {
        if k > 0 {
            factorial = factorial * Rational::from(k as u64);
        }
        let term = factorial.recip().expect("factorials are nonzero");
        if k % 2 == 0 {
            cosh.push(term);
            sinh.push(Rational::zero());
        } else {
            cosh.push(Rational::zero());
            sinh.push(term);
        }
    }
    let num = TruncatedSeries::from_coefficients(cosh, work).shift_up(1);
    let den = TruncatedSeries::from_coefficients(sinh, work);
    num.div(&den)
        .expect("sinh has valuation one and x·cosh vanishes at zero")
        .truncate(order)
}
