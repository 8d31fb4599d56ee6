//! Graded polynomials in abstract Chern classes, Chern numbers of `CP^n`, and
//! Pontrjagin classes written in terms of Chern classes.
//!
//! A monomial `c_{i₁}·…·c_{i_r}` is indexed by the partition `[i₁,…,i_r]`, so
//! a weight-`n` polynomial evaluates against a manifold's Chern numbers by
//! plain table lookup.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_algebra::{binomial, partitions_of, Partition, Rational};

/// A homogeneous polynomial in `c₁, c₂, …` with rational coefficients.
///
/// All monomials share [`ChernPoly::weight`] and zero coefficients are never
/// stored. There is no fixed ambient dimension: generators `c_i` above the
/// dimension of the manifold only vanish when the polynomial is evaluated.
#[derive(Clone, PartialEq, Eq)]
pub struct ChernPoly {
    weight: u32,
    terms: BTreeMap<Partition, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    partition: Partition,
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct ChernPolyRepr {
    weight: u32,
    terms: Vec<TermRecord>,
}

impl ChernPoly {
    pub fn zero(weight: u32) -> Self {
        ChernPoly {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`, of weight zero.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    /// The generator `c_i`; `c_0` is the constant `1`.
    pub fn generator(i: u32) -> Self {
        Self::monomial(Partition::single(i), Rational::one())
    }

    pub fn monomial(partition: Partition, coefficient: Rational) -> Self {
        let mut p = Self::zero(partition.weight());
        if !coefficient.is_zero() {
            p.terms.insert(partition, coefficient);
        }
        p
    }

    /// Collects `(monomial, coefficient)` pairs of a single weight, merging
    /// repeated monomials. Mixed weights are rejected.
    pub fn from_terms(
        weight: u32,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(weight);
        for (partition, coefficient) in terms {
            let w = partition.weight();
            if w != weight {
                return Err(Error::InhomogeneousTerms {
                    left: weight,
                    right: w,
                });
            }
            p.add_term(partition, coefficient);
        }
        Ok(p)
    }

    fn add_term(&mut self, partition: Partition, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(partition) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Partition) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &ChernPoly) -> Result<ChernPoly> {
        if self.weight != other.weight {
            return Err(Error::InhomogeneousTerms {
                left: self.weight,
                right: other.weight,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> ChernPoly {
        if factor.is_zero() {
            return Self::zero(self.weight);
        }
        ChernPoly {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Product of homogeneous polynomials; weights add.
    pub fn mul(&self, other: &ChernPoly) -> ChernPoly {
        let mut out = Self::zero(self.weight + other.weight);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.union(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> ChernPoly {
        (0..exp).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `Σ coefficient · c_I(data)`. Monomials that use a generator above the
    /// dimension contribute zero.
    pub fn evaluate(&self, data: &ChernData) -> Result<Rational> {
        if self.weight != data.n {
            return Err(Error::WeightMismatch {
                partition: format!("polynomial of weight {}", self.weight),
                expected: data.n,
                actual: self.weight,
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|(m, _)| m.largest_part() <= data.n)
            .map(|(m, c)| c * data.number(m))
            .sum())
    }
}

impl fmt::Display for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                f.write_str("-")?;
            }
            let monomial = power_notation(m, 'c');
            match (mag == Rational::one(), monomial.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => f.write_str(&monomial)?,
                (false, false) => write!(f, "{mag}*{monomial}")?,
            }
        }
        Ok(())
    }
}

/// `c1^2*c3` style rendering of a monomial, indices ascending.
pub(crate) fn power_notation(monomial: &Partition, symbol: char) -> String {
    let mut factors: Vec<String> = Vec::new();
    let mut parts = monomial.parts().iter().rev().peekable();
    while let Some(&i) = parts.next() {
        let mut exp = 1;
        while parts.peek() == Some(&&i) {
            parts.next();
            exp += 1;
        }
        factors.push(if exp == 1 {
            format!("{symbol}{i}")
        } else {
            format!("{symbol}{i}^{exp}")
        });
    }
    factors.join("*")
}

impl fmt::Debug for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChernPoly[w={}]({self})", self.weight)
    }
}

impl Serialize for ChernPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ChernPolyRepr {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRecord {
                    partition: m.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ChernPolyRepr::deserialize(deserializer)?;
        ChernPoly::from_terms(
            repr.weight,
            repr.terms.into_iter().map(|t| (t.partition, t.coefficient)),
        )
        .map_err(D::Error::custom)
    }
}

/// The complete list of Chern numbers of a closed complex `n`-manifold.
///
/// Keys are exactly the partitions of `n`; the entry at `[n]` is the Euler
/// characteristic. JSON form: `{"n": 4, "numbers": {"[4]": "5", "[3,1]": "50", …}}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernData {
    n: u32,
    numbers: BTreeMap<Partition, Rational>,
}

impl ChernData {
    pub fn new(n: u32, numbers: BTreeMap<Partition, Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for key in numbers.keys() {
            key.expect_weight(n)?;
        }
        let expected = partitions_of(n);
        if numbers.len() != expected.len() || expected.iter().any(|p| !numbers.contains_key(p)) {
            return Err(Error::IncompleteChernData { n });
        }
        Ok(ChernData { n, numbers })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `c_I`; zero for any monomial that is not a partition of `n`.
    pub fn number(&self, partition: &Partition) -> Rational {
        self.numbers
            .get(partition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn euler_characteristic(&self) -> Rational {
        self.number(&Partition::single(self.n))
    }

    pub fn numbers(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.numbers.iter()
    }

    /// Every Chern number multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> ChernData {
        ChernData {
            n: self.n,
            numbers: self
                .numbers
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }
}

impl Serialize for ChernData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Numbers<'a>(&'a BTreeMap<Partition, Rational>);

        impl Serialize for Numbers<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (p, c) in self.0 {
                    map.serialize_entry(&p.to_string(), c)?;
                }
                map.end()
            }
        }

        #[derive(Serialize)]
        struct Repr<'a> {
            n: u32,
            numbers: Numbers<'a>,
        }

        Repr {
            n: self.n,
            numbers: Numbers(&self.numbers),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: u32,
            numbers: BTreeMap<String, Rational>,
        }

        let repr = Repr::deserialize(deserializer)?;
        let mut numbers = BTreeMap::new();
        for (key, value) in repr.numbers {
            let p: Partition = key.parse().map_err(D::Error::custom)?;
            if numbers.insert(p.clone(), value).is_some() {
                return Err(D::Error::custom(format!("duplicate partition {p}")));
            }
        }
        ChernData::new(repr.n, numbers).map_err(D::Error::custom)
    }
}

/// `c_I(CP^n) = Π_j C(n+1, i_j)`.
pub fn chern_number_cpn(n: u32, partition: &Partition) -> Result<Rational> {
    partition.expect_weight(n)?;
    Ok(partition
        .parts()
        .iter()
        .map(|&i| binomial(n + 1, i64::from(i)))
        .product())
}

/// Chern-number table of `CP^n` over every partition of `n`.
pub fn cpn_data(n: u32) -> Result<ChernData> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let numbers = partitions_of(n)
        .into_iter()
        .map(|p| {
            let c = chern_number_cpn(n, &p)?;
            Ok((p, c))
        })
        .collect::<Result<_>>()?;
    ChernData::new(n, numbers)
}

/// `c_I(CP^n) / c_J(CP^n)`, the ratio shared by every closed complex
/// hyperbolic `n`-manifold.
pub fn ratio_cpn(n: u32, num: &Partition, den: &Partition) -> Result<Rational> {
    let a = chern_number_cpn(n, num)?;
    let b = chern_number_cpn(n, den)?;
    a.checked_div(&b)
}

/// The total Chern class `1 + c₁ + … + c_top`, split into homogeneous parts,
/// optionally with the signs of the conjugate bundle (`c_j ↦ (−1)^j c_j`).
fn total_chern_class(top: u32, conjugate: bool) -> Vec<ChernPoly> {
    (0..=top)
        .map(|j| {
            let g = ChernPoly::generator(j);
            if conjugate && j % 2 == 1 {
                g.scale(&-Rational::one())
            } else {
                g
            }
        })
        .collect()
}

/// The Pontrjagin class `p_k` as a weight-`2k` polynomial in Chern classes.
///
/// Read off the weight-`2k` part of `c(E)·c(Ē) = (Σ c_i)(Σ (−1)^j c_j)`,
/// which is `(−1)^k p_k`.
pub fn pontrjagin_class(k: u32, n: u32) -> Result<ChernPoly> {
    if k == 0 || 2 * k > n {
        return Err(Error::PontrjaginOutOfRange { k, n });
    }
    let w = 2 * k;
    let c = total_chern_class(w, false);
    let c_bar = total_chern_class(w, true);
    let mut acc = ChernPoly::zero(w);
    for i in 0..=w {
        acc = acc.checked_add(&c[i as usize].mul(&c_bar[(w - i) as usize]))?;
    }
    Ok(if k % 2 == 1 {
        acc.scale(&-Rational::one())
    } else {
        acc
    })
}

/// `p_I[M] = ⟨p_{i₁}···p_{i_r}, [M]⟩` for a partition `I` of `n/2`.
pub fn pontrjagin_number(partition: &Partition, data: &ChernData) -> Result<Rational> {
    let n = data.n();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    partition.expect_weight(n / 2)?;
    let mut product = ChernPoly::one();
    for &i in partition.parts() {
        product = product.mul(&pontrjagin_class(i, n)?);
    }
    product.evaluate(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    fn poly(weight: u32, terms: &[(&[u32], i64)]) -> ChernPoly {
        ChernPoly::from_terms(weight, terms.iter().map(|(m, c)| (p(m), q(*c)))).unwrap()
    }

    #[test]
    fn cp2_numbers_give_ratio_three() {
        assert_eq!(chern_number_cpn(2, &p(&[1, 1])).unwrap(), q(9));
        assert_eq!(chern_number_cpn(2, &p(&[2])).unwrap(), q(3));
        assert_eq!(ratio_cpn(2, &p(&[1, 1]), &p(&[2])).unwrap(), q(3));
    }

    #[test]
    fn top_chern_number_is_euler_characteristic() {
        for n in 1..=10 {
            assert_eq!(
                chern_number_cpn(n, &Partition::single(n)).unwrap(),
                q(i64::from(n) + 1)
            );
            assert_eq!(
                cpn_data(n).unwrap().euler_characteristic(),
                q(i64::from(n) + 1)
            );
        }
    }

    #[test]
    fn cp4_all_ones() {
        assert_eq!(chern_number_cpn(4, &p(&[1, 1, 1, 1])).unwrap(), q(625));
    }

    #[test]
    fn wrong_weight_rejected() {
        assert!(matches!(
            chern_number_cpn(3, &p(&[2, 2])),
            Err(Error::WeightMismatch {
                expected: 3,
                actual: 4,
                ..
            })
        ));
    }

    #[test]
    fn cpn_tables() {
        let cp2 = cpn_data(2).unwrap();
        assert_eq!(cp2.numbers().count(), 2);
        assert_eq!(cp2.number(&p(&[2])), q(3));
        assert_eq!(cp2.number(&p(&[1, 1])), q(9));

        let cp1 = cpn_data(1).unwrap();
        assert_eq!(cp1.numbers().collect::<Vec<_>>(), vec![(&p(&[1]), &q(2))]);

        let cp4 = cpn_data(4).unwrap();
        assert_eq!(cp4.numbers().count(), 5);
        assert!(cp4.numbers().all(|(_, c)| c > &Rational::zero()));
        assert_eq!(cp4.number(&p(&[3, 1])), q(50));
    }

    #[test]
    fn ratio_examples() {
        for n in 2..=8u32 {
            let r = ratio_cpn(n, &p(&[n - 1, 1]), &p(&[n])).unwrap();
            assert_eq!(r, q(i64::from(n * (n + 1) / 2)));
            let i = p(&[n - 1, 1]);
            assert_eq!(ratio_cpn(n, &i, &i).unwrap(), Rational::one());
        }
        assert_eq!(ratio_cpn(4, &p(&[3, 1]), &p(&[4])).unwrap(), q(10));
    }

    #[test]
    fn pontrjagin_class_examples() {
        assert_eq!(
            pontrjagin_class(1, 2).unwrap(),
            poly(2, &[(&[1, 1], 1), (&[2], -2)])
        );
        assert_eq!(
            pontrjagin_class(2, 4).unwrap(),
            poly(4, &[(&[2, 2], 1), (&[3, 1], -2), (&[4], 2)])
        );
        assert_eq!(
            pontrjagin_class(1, 4).unwrap(),
            pontrjagin_class(1, 2).unwrap()
        );
        assert_eq!(
            pontrjagin_class(2, 3),
            Err(Error::PontrjaginOutOfRange { k: 2, n: 3 })
        );
        assert!(pontrjagin_class(0, 4).is_err());
    }

    // p_k = c_k² − 2c_{k−1}c_{k+1} + 2c_{k−2}c_{k+2} − … ± 2c_{2k}, written out
    // term by term.
    fn alternating_formula(k: u32) -> ChernPoly {
        let mut terms = vec![(Partition::new(vec![k, k]).unwrap(), Rational::one())];
        for j in 1..=k {
            let sign = if j % 2 == 1 { -2 } else { 2 };
            let mono = Partition::new(vec![k - j, k + j].into_iter().filter(|&x| x > 0).collect())
                .unwrap();
            terms.push((mono, q(sign)));
        }
        ChernPoly::from_terms(2 * k, terms).unwrap()
    }

    #[test]
    fn conjugate_bundle_identity_matches_alternating_formula() {
        for n in 2..=10 {
            for k in 1..=n / 2 {
                assert_eq!(
                    pontrjagin_class(k, n).unwrap(),
                    alternating_formula(k),
                    "p_{k}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let c1 = ChernPoly::generator(1);
        assert_eq!(c1.mul(&c1), poly(2, &[(&[1, 1], 1)]));

        let p1 = poly(2, &[(&[1, 1], 1), (&[2], -2)]);
        assert_eq!(
            p1.mul(&p1),
            poly(4, &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], -4), (&[2, 2], 4)])
        );
        let zero = ChernPoly::zero(3);
        assert!(p1.mul(&zero).is_zero());
        assert_eq!(p1.mul(&zero).weight(), 5);
    }

    #[test]
    fn inhomogeneous_terms_rejected() {
        let err = ChernPoly::from_terms(2, [(p(&[2]), q(1)), (p(&[3]), q(1))]).unwrap_err();
        assert_eq!(err, Error::InhomogeneousTerms { left: 2, right: 3 });
        assert!(ChernPoly::generator(1)
            .checked_add(&ChernPoly::generator(2))
            .is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = poly(2, &[(&[2], 3), (&[1, 1], 1)]);
        let b = poly(2, &[(&[2], -3)]);
        let s = a.checked_add(&b).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(&p(&[2])), Rational::zero());
    }

    #[test]
    fn evaluation_examples() {
        let cp2 = cpn_data(2).unwrap();
        let p1 = pontrjagin_class(1, 2).unwrap();
        assert_eq!(p1.evaluate(&cp2).unwrap(), q(3));
        assert_eq!(ChernPoly::generator(2).evaluate(&cp2).unwrap(), q(3));
        assert_eq!(ChernPoly::zero(2).evaluate(&cp2).unwrap(), Rational::zero());
        assert!(ChernPoly::generator(3).evaluate(&cp2).is_err());
    }

    #[test]
    fn generators_above_dimension_vanish() {
        // A weight-2 polynomial can never mention c_3, but weight-n monomials
        // are still filtered; exercise the path on data for n = 1.
        let cp1 = cpn_data(1).unwrap();
        assert_eq!(ChernPoly::generator(1).evaluate(&cp1).unwrap(), q(2));
    }

    #[test]
    fn pontrjagin_numbers_against_hand_expansion() {
        let cp2 = cpn_data(2).unwrap();
        assert_eq!(pontrjagin_number(&p(&[1]), &cp2).unwrap(), q(3));

        let cp4 = cpn_data(4).unwrap();
        let c = |m: &[u32]| cp4.number(&p(m));
        // (c1² − 2c2)² = c1⁴ − 4c1²c2 + 4c2²
        let p1_sq = c(&[1, 1, 1, 1]) - q(4) * c(&[2, 1, 1]) + q(4) * c(&[2, 2]);
        assert_eq!(pontrjagin_number(&p(&[1, 1]), &cp4).unwrap(), p1_sq);
        // c2² − 2c1c3 + 2c4
        let p2 = c(&[2, 2]) - q(2) * c(&[3, 1]) + q(2) * c(&[4]);
        assert_eq!(pontrjagin_number(&p(&[2]), &cp4).unwrap(), p2);
        // Known values for CP^4: p1² = 25, p2 = 10.
        assert_eq!(p1_sq, q(25));
        assert_eq!(p2, q(10));
    }

    #[test]
    fn pontrjagin_number_errors() {
        let cp3 = cpn_data(3).unwrap();
        assert_eq!(
            pontrjagin_number(&p(&[1]), &cp3),
            Err(Error::OddDimension(3))
        );
        let cp4 = cpn_data(4).unwrap();
        assert!(pontrjagin_number(&p(&[1]), &cp4).is_err());
    }

    #[test]
    fn chern_data_validation() {
        let mut numbers = BTreeMap::new();
        numbers.insert(p(&[2]), q(3));
        assert_eq!(
            ChernData::new(2, numbers.clone()),
            Err(Error::IncompleteChernData { n: 2 })
        );
        numbers.insert(p(&[3]), q(3));
        assert!(matches!(
            ChernData::new(2, numbers),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn chern_data_json() {
        let cp4 = cpn_data(4).unwrap();
        let json = serde_json::to_string(&cp4).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"numbers":{"[4]":"5","[3,1]":"50","[2,2]":"100","[2,1,1]":"250","[1,1,1,1]":"625"}}"#
        );
        let back: ChernData = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cp4);
        assert!(serde_json::from_str::<ChernData>(r#"{"n":2,"numbers":{"[2]":"3"}}"#).is_err());
        assert!(serde_json::from_str::<ChernData>(
            r#"{"n":2,"numbers":{"[2]":"3","[1,1]":"9","1,1":"9"}}"#
        )
        .is_err());
    }

    #[test]
    fn chern_poly_json_round_trip() {
        let p2 = pontrjagin_class(2, 4).unwrap();
        let json = serde_json::to_string(&p2).unwrap();
        assert_eq!(
            json,
            r#"{"weight":4,"terms":[{"partition":[4],"coefficient":"2"},{"partition":[3,1],"coefficient":"-2"},{"partition":[2,2],"coefficient":"1"}]}"#
        );
        assert_eq!(serde_json::from_str::<ChernPoly>(&json).unwrap(), p2);
    }

    fn arb_poly(weight: u32) -> impl Strategy<Value = ChernPoly> {
        let monos = partitions_of(weight);
        proptest::collection::vec((0..monos.len(), -6i64..7), 0..5).prop_map(move |picks| {
            ChernPoly::from_terms(
                weight,
                picks.into_iter().map(|(i, c)| (monos[i].clone(), q(c))),
            )
            .unwrap()
        })
    }

    fn arb_weighted() -> impl Strategy<Value = ChernPoly> {
        (0u32..=3).prop_flat_map(arb_poly)
    }

    proptest! {
        #[test]
        fn mul_is_commutative(a in arb_weighted(), b in arb_weighted()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_is_associative(a in arb_weighted(), b in arb_weighted(), c in arb_weighted()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn evaluate_is_linear(a in arb_poly(4), b in arb_poly(4), s in -9i64..10) {
            let data = cpn_data(4).unwrap();
            let s = q(s);
            let lhs = a.scale(&s).checked_add(&b).unwrap().evaluate(&data).unwrap();
            let rhs = s * a.evaluate(&data).unwrap() + b.evaluate(&data).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
