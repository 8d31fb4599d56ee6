//! Invariants of a `d`-fold cyclic branched cover `X → M′` over a totally
//! geodesic divisor `N′`, where `(M′, N′) → (M, N)` is a degree-`m` cover of a
//! complex hyperbolic pair of even complex dimension `n`.
//!
//! The signature of `X` comes from the expansion of
//! `sign(t) = Σ s_{2k} t^{2k}`:
//!
//! ```text
//! Σ(M′) = s₀ Σ(X) + s₂ Σ(Y₂) + s₄ Σ(Y₄) + …
//! Σ(X)  = d Σ(M′) − d s₂ Σ(Y₂) − d s₄ Σ(Y₄) − …
//! ```
//!
//! where `Y_{2k}` are iterated self-intersections of the branch locus. Their
//! signatures are not computed from geometry; they enter as the top Chern
//! numbers `c_k((N′_k)^⊥)` of normal bundles downstairs, with
//! `Σ(Y_{2k}) = c_k((N′_k)^⊥) / d`. In complex dimension two the single such
//! number is the normal Euler number `χ(N′)/2`, and it is filled in
//! automatically.

mod interpolation;

pub use interpolation::UniPoly;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::Rational;
use crate::power_series::sign_series;

/// Data of one branched-cover instance.
///
/// `chi_m`, `chi_n` and the optional `sigma_m` describe the base pair
/// `(M, N)`; the finite cover multiplies each of them by `m`. `normal_chern`
/// lists `c_k((N′_k)^⊥)` for `k = 1..=n/2` and already lives on the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverInput {
    pub n: u32,
    pub d: i64,
    pub m: u64,
    pub chi_m: Rational,
    pub chi_n: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_chern: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_m: Option<Rational>,
}

impl CoverInput {
    /// An instance with default `Σ(M)` and, for `n = 2`, the automatic normal
    /// Euler number.
    pub fn new(
        n: u32,
        d: i64,
        m: u64,
        chi_m: impl Into<Rational>,
        chi_n: impl Into<Rational>,
    ) -> Self {
        CoverInput {
            n,
            d,
            m,
            chi_m: chi_m.into(),
            chi_n: chi_n.into(),
            normal_chern: None,
            sigma_m: None,
        }
    }

    pub fn with_normal_chern(mut self, normal_chern: Vec<Rational>) -> Self {
        self.normal_chern = Some(normal_chern);
        self
    }

    pub fn with_sigma_m(mut self, sigma_m: Rational) -> Self {
        self.sigma_m = Some(sigma_m);
        self
    }

    /// Checks every structural constraint; `d = 1` is accepted as the
    /// identity cover.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCover(msg));
        if self.n < 2 || self.n % 2 == 1 {
            return bad(format!("n must be even and at least 2, got {}", self.n));
        }
        if self.d < 1 {
            return Err(Error::InvalidDegree(self.d));
        }
        if self.m < 1 {
            return bad("covering degree m must be at least 1".into());
        }
        if !self.chi_m.is_integer() || !self.chi_n.is_integer() {
            return bad("Euler characteristics must be integers".into());
        }
        if self.n == 2 && self.chi_n.is_zero() {
            return bad("chi_n must be nonzero when n = 2".into());
        }
        match &self.normal_chern {
            Some(v) if v.len() != (self.n / 2) as usize => bad(format!(
                "normal_chern needs {} entries for n = {}, got {}",
                self.n / 2,
                self.n,
                v.len()
            )),
            None if self.n > 2 => bad(format!(
                "normal_chern needs {} entries for n = {}",
                self.n / 2,
                self.n
            )),
            _ => Ok(()),
        }
    }

    fn m_rational(&self) -> Rational {
        Rational::from(self.m)
    }

    /// `χ(M′) = m·χ(M)`.
    pub fn chi_m_prime(&self) -> Rational {
        self.m_rational() * &self.chi_m
    }

    /// `χ(N′) = m·χ(N)`.
    pub fn chi_n_prime(&self) -> Rational {
        self.m_rational() * &self.chi_n
    }

    /// `Σ(M′)`: `m·Σ(M)` when given, otherwise `χ(M′)/(n+1)`.
    pub fn sigma_m_prime(&self) -> Rational {
        match &self.sigma_m {
            Some(s) => self.m_rational() * s,
            None => self.chi_m_prime() / Rational::from(self.n + 1),
        }
    }

    /// `c_k((N′_k)^⊥)` for `k = 1..=n/2`; for `n = 2` defaults to `[χ(N′)/2]`.
    pub fn resolved_normal_chern(&self) -> Result<Vec<Rational>> {
        self.validate()?;
        Ok(match &self.normal_chern {
            Some(v) => v.clone(),
            None => vec![self.chi_n_prime() / Rational::from(2)],
        })
    }

    fn at_degree(&self, d: i64) -> CoverInput {
        CoverInput { d, ..self.clone() }
    }
}

/// `χ(X) = d·χ(M′) − (d−1)·χ(N′)`.
pub fn chi_branched(d: i64, chi_m_prime: &Rational, chi_n_prime: &Rational) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = Rational::from(d);
    Ok(&d * chi_m_prime - (d - Rational::one()) * chi_n_prime)
}

/// Coefficients `a_k = −d·s_{2k}`, `k = 1..=n/2`, so that
/// `Σ(X) = d·Σ(M′) + Σ_k a_k·Σ(Y_{2k})`.
///
/// `a₁ = −(d²−1)/3`, `a₂ = (d²−1)(d²−4)/45`, and the signs keep alternating.
pub fn sigma_tower_coefficients(d: i64, n: u32) -> Result<Vec<Rational>> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let series = sign_series(d, n as usize)?;
    let dr = Rational::from(d);
    Ok((1..=(n / 2) as usize)
        .map(|k| -(&dr * series.coefficient(2 * k)))
        .collect())
}

/// `Σ(Y_{2k}) = c_k((N′_k)^⊥) / d`, with `k` counted from one.
pub fn sigma_y2k_from_normal_chern(
    k: usize,
    d: i64,
    normal_chern: &[Rational],
) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    if k == 0 || k > normal_chern.len() {
        return Err(Error::TowerIndex {
            k,
            max: normal_chern.len(),
        });
    }
    Ok(&normal_chern[k - 1] / Rational::from(d))
}

/// All `Σ(Y_{2k})` for the instance, `k = 1..=n/2`.
pub fn tower_signatures(input: &CoverInput) -> Result<Vec<Rational>> {
    let normal = input.resolved_normal_chern()?;
    (1..=normal.len())
        .map(|k| sigma_y2k_from_normal_chern(k, input.d, &normal))
        .collect()
}

/// `Σ(X) = d·Σ(M′) + Σ_k a_k·Σ(Y_{2k})`.
pub fn sigma_branched(input: &CoverInput) -> Result<Rational> {
    input.validate()?;
    let coefficients = sigma_tower_coefficients(input.d, input.n)?;
    let tower = tower_signatures(input)?;
    let base = Rational::from(input.d) * input.sigma_m_prime();
    Ok(coefficients
        .iter()
        .zip(&tower)
        .fold(base, |acc, (a, s)| acc + a * s))
}

/// The opposite direction: `Σ(M′) = s₀·Σ(X) + Σ_k s_{2k}·Σ(Y_{2k})`.
pub fn sigma_base_from_cover(d: i64, sigma_x: &Rational, tower: &[Rational]) -> Result<Rational> {
    let series = sign_series(d, 2 * tower.len())?;
    Ok(tower
        .iter()
        .enumerate()
        .fold(series.coefficient(0) * sigma_x, |acc, (i, s)| {
            acc + series.coefficient(2 * (i + 1)) * s
        }))
}

/// `c₁²(X) − 3c₂(X) = 3Σ(X) − χ(X)` for `n = 2`.
pub fn defect_n2(input: &CoverInput) -> Result<Rational> {
    if input.n != 2 {
        return Err(Error::InvalidCover(format!(
            "the c1^2 - 3c2 defect needs n = 2, got {}",
            input.n
        )));
    }
    let sigma = sigma_branched(input)?;
    let chi = chi_branched(input.d, &input.chi_m_prime(), &input.chi_n_prime())?;
    Ok(Rational::from(3) * sigma - chi)
}

/// `m·(d−1)²/(2d)·χ(N)`, the value [`defect_n2`] takes when `Σ(M′)` is the
/// complex hyperbolic default.
pub fn defect_n2_closed_form(m: u64, d: i64, chi_n: &Rational) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let dm1 = Rational::from(d - 1);
    Ok(Rational::from(m) * &dm1 * &dm1 / Rational::from(2 * d) * chi_n)
}

/// The separate summands of the obstruction at ramification degree `d`:
/// `(d−1)/(n+1)·χ(N′)` followed by `a_k/d · c_k((N′_k)^⊥)` for each `k`.
pub fn obstruction_terms(input: &CoverInput, d: i64) -> Result<Vec<Rational>> {
    let probe = input.at_degree(d);
    probe.validate()?;
    let normal = probe.resolved_normal_chern()?;
    let coefficients = sigma_tower_coefficients(d, input.n)?;
    let dr = Rational::from(d);
    let mut terms = Vec::with_capacity(1 + normal.len());
    terms.push(Rational::from(d - 1) / Rational::from(input.n + 1) * probe.chi_n_prime());
    for (a, c) in coefficients.iter().zip(&normal) {
        terms.push(a / &dr * c);
    }
    Ok(terms)
}

/// Difference between the two expressions for `Σ(X)` (one from
/// `χ(X)/(n+1)`, one from the tower) at degree `d`. Nonzero means `X` cannot
/// share all Chern-number ratios with `CP^n`.
pub fn obstruction_value(input: &CoverInput, d: i64) -> Result<Rational> {
    Ok(obstruction_terms(input, d)?.into_iter().sum())
}

/// `T(d) = d·obstruction(d)` as an exact polynomial together with its
/// integer roots in `[2, scan_bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub polynomial: UniPoly,
    pub scan_bound: i64,
    pub roots: Vec<i64>,
}

impl Obstruction {
    pub fn eval(&self, d: i64) -> Rational {
        self.polynomial.eval(&Rational::from(d))
    }

    /// The same roots found by evaluating `T` at every integer of the range.
    pub fn roots_by_sweep(&self) -> Vec<i64> {
        self.polynomial.integer_roots_by_sweep(2, self.scan_bound)
    }
}

/// Interpolates `T(d) = d·obstruction_value(d)` through `d = 1..=n+3`.
///
/// `d·s_{2k}(d)` is a polynomial of degree `2k` in `d` and the Euler term
/// contributes degree two, so `n + 3` nodes determine `T` with room to spare.
/// An identically zero `T` is reported as [`Error::DegenerateObstruction`].
pub fn obstruction_polynomial(input: &CoverInput, scan_bound: i64) -> Result<Obstruction> {
    input.validate()?;
    if scan_bound < 2 {
        return Err(Error::InvalidCover(format!(
            "scan bound must be at least 2, got {scan_bound}"
        )));
    }
    let nodes = i64::from(input.n) + 3;
    let points = (1..=nodes)
        .map(|d| {
            Ok((
                Rational::from(d),
                Rational::from(d) * obstruction_value(input, d)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let polynomial = UniPoly::lagrange(&points);
    if polynomial.is_zero() {
        return Err(Error::DegenerateObstruction);
    }
    let roots = polynomial.integer_roots(2, scan_bound);
    Ok(Obstruction {
        polynomial,
        scan_bound,
        roots,
    })
}

/// Everything derived for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub input: CoverInput,
    pub chi_m_prime: Rational,
    pub chi_n_prime: Rational,
    pub sigma_m_prime: Rational,
    pub tower_coefficients: Vec<Rational>,
    pub sigma_y: Vec<Rational>,
    pub sigma_x: Rational,
    pub chi_x: Rational,
    /// `c₁² − 3c₂` of `X`, only for `n = 2`.
    pub defect_n2: Option<Rational>,
    pub defect_n2_closed_form: Option<Rational>,
    /// Growth of the defect per unit of covering degree `m`.
    pub defect_slope_per_m: Option<Rational>,
    /// Growth of the Euler term `(d−1)/(n+1)·χ(N′)` per unit of `m`.
    pub euler_term_slope_per_m: Rational,
    pub obstruction_at_d: Rational,
    pub obstruction_identically_zero: bool,
    pub obstruction: Option<Obstruction>,
}

pub fn cover_report(input: &CoverInput, scan_bound: i64) -> Result<CoverReport> {
    input.validate()?;
    let chi_m_prime = input.chi_m_prime();
    let chi_n_prime = input.chi_n_prime();
    let sigma_x = sigma_branched(input)?;
    let chi_x = chi_branched(input.d, &chi_m_prime, &chi_n_prime)?;

    let (defect, closed, slope) = if input.n == 2 {
        (
            Some(defect_n2(input)?),
            Some(defect_n2_closed_form(input.m, input.d, &input.chi_n)?),
            Some(defect_n2_closed_form(1, input.d, &input.chi_n)?),
        )
    } else {
        (None, None, None)
    };

    let (obstruction, degenerate) = match obstruction_polynomial(input, scan_bound) {
        Ok(o) => (Some(o), false),
        Err(Error::DegenerateObstruction) => (None, true),
        Err(e) => return Err(e),
    };

    Ok(CoverReport {
        input: input.clone(),
        sigma_m_prime: input.sigma_m_prime(),
        tower_coefficients: sigma_tower_coefficients(input.d, input.n)?,
        sigma_y: tower_signatures(input)?,
        sigma_x,
        chi_x,
        defect_n2: defect,
        defect_n2_closed_form: closed,
        defect_slope_per_m: slope,
        euler_term_slope_per_m: Rational::from(input.d - 1) / Rational::from(input.n + 1)
            * &input.chi_n,
        obstruction_at_d: obstruction_value(input, input.d)?,
        obstruction_identically_zero: degenerate,
        obstruction,
        chi_m_prime,
        chi_n_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_branched(1, &q(7), &q(-3)).unwrap(), q(7));
        assert_eq!(chi_branched(2, &q(3), &q(-4)).unwrap(), q(10));
        assert_eq!(chi_branched(3, &q(6), &q(-2)).unwrap(), q(22));
        assert_eq!(chi_branched(0, &q(1), &q(1)), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn tower_coefficients_closed_forms() {
        for d in 1..=12i64 {
            let a = sigma_tower_coefficients(d, 4).unwrap();
            let d2 = q(d * d);
            assert_eq!(a[0], -(&d2 - q(1)) / q(3));
            assert_eq!(a[1], (&d2 - q(1)) * (&d2 - q(4)) / q(45));
        }
        assert!(sigma_tower_coefficients(2, 4).unwrap()[1].is_zero());
        assert_eq!(sigma_tower_coefficients(2, 3), Err(Error::OddDimension(3)));
    }

    #[test]
    fn tower_signature_examples() {
        let chi_np = q(-10);
        let normal = vec![&chi_np / q(2)];
        assert_eq!(
            sigma_y2k_from_normal_chern(1, 4, &normal).unwrap(),
            &chi_np / q(8)
        );
        assert_eq!(
            sigma_y2k_from_normal_chern(1, 1, &[q(5), q(6)]).unwrap(),
            q(5)
        );
        assert_eq!(
            sigma_y2k_from_normal_chern(2, 1, &[q(5), q(6)]).unwrap(),
            q(6)
        );
        assert_eq!(sigma_y2k_from_normal_chern(1, 3, &[q(-6)]).unwrap(), q(-2));
        assert_eq!(
            sigma_y2k_from_normal_chern(2, 3, &[q(-6)]),
            Err(Error::TowerIndex { k: 2, max: 1 })
        );
        assert!(sigma_y2k_from_normal_chern(0, 3, &[q(-6)]).is_err());
    }

    #[test]
    fn sigma_examples() {
        let a = CoverInput::new(2, 2, 1, 3, -4).with_sigma_m(q(1));
        assert_eq!(sigma_branched(&a).unwrap(), q(3));

        let b = CoverInput::new(2, 3, 1, 3, -6).with_sigma_m(q(1));
        assert_eq!(sigma_branched(&b).unwrap(), r(17, 3));

        let trivial = CoverInput::new(4, 1, 2, 15, -6).with_normal_chern(vec![q(4), q(-9)]);
        assert_eq!(sigma_branched(&trivial).unwrap(), trivial.sigma_m_prime());
    }

    #[test]
    fn missing_normal_chern_for_higher_n() {
        let input = CoverInput::new(4, 2, 1, 15, -6);
        assert!(matches!(
            sigma_branched(&input),
            Err(Error::InvalidCover(_))
        ));
        let short = input.with_normal_chern(vec![q(1)]);
        assert!(matches!(
            sigma_branched(&short),
            Err(Error::InvalidCover(_))
        ));
    }

    #[test]
    fn validation() {
        assert!(CoverInput::new(3, 2, 1, 3, -4).validate().is_err());
        assert!(CoverInput::new(2, 0, 1, 3, -4).validate().is_err());
        assert!(CoverInput::new(2, 2, 0, 3, -4).validate().is_err());
        assert!(CoverInput::new(2, 2, 1, 3, 0).validate().is_err());
        assert!(CoverInput::new(2, 2, 1, r(3, 2), -4).validate().is_err());
        assert!(CoverInput::new(2, 1, 1, 3, -4).validate().is_ok());
    }

    #[test]
    fn defect_examples() {
        let a = CoverInput::new(2, 2, 1, 3, -4);
        assert_eq!(defect_n2(&a).unwrap(), q(-1));
        assert_eq!(defect_n2_closed_form(1, 2, &q(-4)).unwrap(), q(-1));

        let trivial = CoverInput::new(2, 1, 3, 3, -4);
        assert_eq!(defect_n2(&trivial).unwrap(), q(0));

        let b = CoverInput::new(2, 3, 2, 9, -2);
        assert_eq!(defect_n2(&b).unwrap(), r(-8, 3));
        assert_eq!(defect_n2_closed_form(2, 3, &q(-2)).unwrap(), r(-8, 3));

        let c = CoverInput::new(4, 3, 2, 9, -2).with_normal_chern(vec![q(0), q(0)]);
        assert!(matches!(defect_n2(&c), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn obstruction_examples() {
        let chi_np = q(-6);
        for d in 1..=9 {
            let input = CoverInput::new(2, d, 1, 3, -6);
            let expected = q((d - 1) * (d - 1)) / q(6 * d) * &chi_np;
            assert_eq!(obstruction_value(&input, d).unwrap(), expected);
            assert_eq!(q(3) * &expected, defect_n2(&input).unwrap());
        }
        let n4 = CoverInput::new(4, 2, 1, 15, -10).with_normal_chern(vec![q(0), q(0)]);
        assert_eq!(obstruction_value(&n4, 2).unwrap(), q(-2));
        assert_eq!(obstruction_value(&n4, 1).unwrap(), q(0));
        assert_eq!(obstruction_terms(&n4, 5).unwrap().len(), 3);
    }

    #[test]
    fn obstruction_polynomial_n2() {
        let input = CoverInput::new(2, 2, 1, 3, -6).with_normal_chern(vec![q(-3)]);
        let ob = obstruction_polynomial(&input, 1000).unwrap();
        assert_eq!(ob.polynomial, UniPoly::new(vec![q(-1), q(2), q(-1)]));
        assert!(ob.roots.is_empty());
        assert_eq!(ob.roots_by_sweep(), ob.roots);
    }

    #[test]
    fn degenerate_obstruction() {
        let input = CoverInput::new(4, 2, 1, 15, 0).with_normal_chern(vec![q(0), q(0)]);
        assert_eq!(
            obstruction_polynomial(&input, 100),
            Err(Error::DegenerateObstruction)
        );
        let report = cover_report(&input, 100).unwrap();
        assert!(report.obstruction_identically_zero);
        assert!(report.obstruction.is_none());
    }

    #[test]
    fn n4_instance_with_a_root() {
        // Divided by (d−1), T(d) is dχ/5 − (d+1)c₁/3 + (d+1)(d²−4)c₂/45; with
        // χ(N′) = −10, c₂ = 45 and c₁ = 58 it vanishes at d = 5.
        let input = CoverInput::new(4, 2, 1, 15, -10).with_normal_chern(vec![q(58), q(45)]);
        assert!(obstruction_value(&input, 5).unwrap().is_zero());
        let ob = obstruction_polynomial(&input, 10_000).unwrap();
        assert!(ob.roots.contains(&5));
        assert_eq!(ob.roots, ob.roots_by_sweep());
    }

    #[test]
    fn report_for_worked_example() {
        let report = cover_report(&CoverInput::new(2, 2, 1, 3, -4), 1000).unwrap();
        assert_eq!(report.sigma_x, q(3));
        assert_eq!(report.chi_x, q(10));
        assert_eq!(report.defect_n2, Some(q(-1)));
        assert_eq!(report.defect_n2_closed_form, Some(q(-1)));
        assert_eq!(report.defect_slope_per_m, Some(q(-1)));
        assert!(!report.obstruction_identically_zero);
        assert!(report.obstruction.unwrap().roots.is_empty());
    }

    #[test]
    fn report_for_trivial_cover() {
        let input = CoverInput::new(2, 1, 1, 3, -4);
        let report = cover_report(&input, 100).unwrap();
        assert_eq!(report.sigma_x, report.sigma_m_prime);
        assert_eq!(report.chi_x, q(3));
        assert_eq!(report.defect_n2, Some(q(0)));
    }

    #[test]
    fn eq1_eq2_round_trip() {
        let input = CoverInput::new(4, 3, 2, 15, -10).with_normal_chern(vec![q(7), r(-5, 2)]);
        let sigma_x = sigma_branched(&input).unwrap();
        let tower = tower_signatures(&input).unwrap();
        assert_eq!(
            sigma_base_from_cover(3, &sigma_x, &tower).unwrap(),
            input.sigma_m_prime()
        );
    }

    #[test]
    fn json_round_trip() {
        let report = cover_report(&CoverInput::new(2, 3, 2, 9, -2), 50).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<CoverReport>(&json).unwrap(), report);

        let input: CoverInput = serde_json::from_str(
            r#"{"n":4,"d":3,"m":1,"chi_m":"15","chi_n":-10,"normal_chern":["1/2",3]}"#,
        )
        .unwrap();
        assert_eq!(input.normal_chern, Some(vec![r(1, 2), q(3)]));
        assert_eq!(input.sigma_m, None);
    }
}
