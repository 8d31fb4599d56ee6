//! The L-genus: Hirzebruch's multiplicative sequence for `x / tanh(x)`, the
//! signature of a manifold from its Chern numbers, and the proportionality
//! constant `Σ/χ` shared by all manifolds with the Chern ratios of `CP^n`.
//!
//! Two gradings appear here. In an [`LPolynomial`] the Pontrjagin generator
//! `p_j` has weight `j`, so `L_k` has weight `k`. After substituting the
//! Chern-class expression of `p_j` the same generator has weight `2j`, and
//! `L_{n/2}` becomes a weight-`n` [`ChernPoly`].

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chern_calculus::{
    cpn_data, pontrjagin_class, pontrjagin_number, power_notation, ChernData, ChernPoly,
};
use crate::error::{Error, Result};
use crate::exact_algebra::{Partition, Rational};
use crate::power_series::tanh_characteristic_series;

/// `L_k` as a polynomial in `p₁, …, p_k`, keyed by Pontrjagin partitions of `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LPolynomial {
    k: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl LPolynomial {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, pontrjagin_partition: &Partition) -> Rational {
        self.terms
            .get(pontrjagin_partition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Substitutes `p_j ↦ pontrjagin_class(j, n)`, giving a weight-`2k`
    /// Chern polynomial.
    pub fn to_chern_poly(&self, n: u32) -> Result<ChernPoly> {
        let mut acc = ChernPoly::zero(2 * self.k);
        for (partition, coefficient) in &self.terms {
            let mut product = ChernPoly::one();
            for &j in partition.parts() {
                product = product.mul(&pontrjagin_class(j, n)?);
            }
            acc = acc.checked_add(&product.scale(coefficient))?;
        }
        Ok(acc)
    }

    /// `L_k[p_I ↦ pontrjagin_number(I, data)]`.
    pub fn evaluate(&self, data: &ChernData) -> Result<Rational> {
        let mut total = Rational::zero();
        for (partition, coefficient) in &self.terms {
            total += coefficient * pontrjagin_number(partition, data)?;
        }
        Ok(total)
    }
}

impl fmt::Display for LPolynomial {
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
            let mono = power_notation(m, 'p');
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LTermRecord {
    pontrjagin_partition: Partition,
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct LPolynomialRepr {
    k: u32,
    terms: Vec<LTermRecord>,
}

impl Serialize for LPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LPolynomialRepr {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| LTermRecord {
                    pontrjagin_partition: p.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LPolynomialRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            t.pontrjagin_partition
                .expect_weight(repr.k)
                .map_err(D::Error::custom)?;
            if !t.coefficient.is_zero() {
                terms.insert(t.pontrjagin_partition, t.coefficient);
            }
        }
        Ok(LPolynomial { k: repr.k, terms })
    }
}

// Polynomials in finitely many variables z_1..z_v, dense exponent vectors.
type Exponents = Vec<u32>;
type MultiPoly = BTreeMap<Exponents, Rational>;

fn accumulate(poly: &mut MultiPoly, exps: Exponents, c: Rational) {
    if c.is_zero() {
        return;
    }
    match poly.entry(exps) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn multi_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            accumulate(&mut out, e, ca * cb);
        }
    }
    out
}

/// Elementary symmetric polynomial `e_j(z_1, …, z_v)`.
fn elementary(j: usize, vars: usize) -> MultiPoly {
    fn choose(start: usize, left: usize, cur: &mut Exponents, out: &mut MultiPoly) {
        if left == 0 {
            out.insert(cur.clone(), Rational::one());
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            choose(i + 1, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut out = MultiPoly::new();
    choose(0, j, &mut vec![0; vars], &mut out);
    out
}

/// Weight-`weight` part of `Π_{i=1..vars} Q(z_i)`, where `Q(z) = √z / tanh(√z)`
/// and `z_i` stands for the square of a Chern root.
fn characteristic_product(weight: u32, vars: usize) -> MultiPoly {
    let w = weight as usize;
    let series = tanh_characteristic_series(2 * w);
    let q: Vec<Rational> = (0..=w).map(|i| series.coefficient(2 * i)).collect();

    let mut acc = MultiPoly::new();
    acc.insert(vec![0; vars], Rational::one());
    for var in 0..vars {
        let mut next = MultiPoly::new();
        for (e, c) in &acc {
            let deg: u32 = e.iter().sum();
            for (i, qi) in q.iter().enumerate().take(w - deg as usize + 1) {
                let mut e2 = e.clone();
                e2[var] += i as u32;
                accumulate(&mut next, e2, c * qi);
            }
        }
        acc = next;
    }
    acc.retain(|e, _| e.iter().sum::<u32>() == weight);
    acc
}

/// Rewrites a symmetric homogeneous polynomial in the elementary symmetric
/// polynomials, by repeatedly cancelling the lex-leading monomial
/// `z^a` against `e_1^{a_1−a_2} e_2^{a_2−a_3} ⋯ e_v^{a_v}`.
///
/// The result is keyed by partitions: `e_j^m` contributes `m` copies of `j`.
fn reduce_to_elementary(mut poly: MultiPoly, vars: usize) -> BTreeMap<Partition, Rational> {
    let elementaries: Vec<MultiPoly> = (0..=vars).map(|j| elementary(j, vars)).collect();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = poly.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial {lead:?} of a symmetric polynomial must be non-increasing"
        );
        let mut parts = Vec::new();
        let mut product = MultiPoly::new();
        product.insert(vec![0; vars], Rational::one());
        for j in 1..=vars {
            let next = lead.get(j).copied().unwrap_or(0);
            let mult = lead[j - 1] - next;
            for _ in 0..mult {
                parts.push(j as u32);
                product = multi_mul(&product, &elementaries[j]);
            }
        }
        for (e, pc) in product {
            accumulate(&mut poly, e, -(&c * &pc));
        }
        debug_assert!(!poly.contains_key(&lead));
        out.insert(Partition::new(parts).expect("parts are positive"), c);
    }
    out
}

/// Weight-`weight` component of the multiplicative sequence for `x/tanh(x)`,
/// expanded in `vars` formal variables.
///
/// Any `vars >= weight` gives the same polynomial; [`l_polynomial`] uses
/// `vars = weight`. Fewer variables than the weight lose the generators
/// `p_j` with `j > vars`.
pub fn genus_component(weight: u32, vars: usize) -> LPolynomial {
    let product = characteristic_product(weight, vars);
    LPolynomial {
        k: weight,
        terms: reduce_to_elementary(product, vars),
    }
}

fn cache() -> &'static Mutex<HashMap<u32, LPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, LPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `k`-th Hirzebruch L-polynomial, memoized.
///
/// `L_1 = p₁/3`, `L_2 = (7p₂ − p₁²)/45`, `L_3 = (62p₃ − 13p₁p₂ + 2p₁³)/945`.
pub fn l_polynomial(k: u32) -> LPolynomial {
    if let Some(hit) = cache().lock().ok().and_then(|c| c.get(&k).cloned()) {
        return hit;
    }
    let computed = genus_component(k, k as usize);
    if let Ok(mut c) = cache().lock() {
        c.insert(k, computed.clone());
    }
    computed
}

fn require_even(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroDimension)
    } else if n % 2 == 1 {
        Err(Error::OddDimension(n))
    } else {
        Ok(())
    }
}

/// Signature by the Hirzebruch signature theorem: `L_{n/2}` evaluated on the
/// Pontrjagin numbers derived from `data`.
pub fn signature(data: &ChernData) -> Result<Rational> {
    require_even(data.n())?;
    l_polynomial(data.n() / 2).evaluate(data)
}

/// The universal weight-`n` Chern polynomial `Σ_I α(I, n) c_I` whose value on
/// any Chern data is the signature.
pub fn alpha_expansion(n: u32) -> Result<ChernPoly> {
    require_even(n)?;
    l_polynomial(n / 2).to_chern_poly(n)
}

/// `f(n) = Σ(CP^n) / χ(CP^n)`, the constant with `Σ(M) = f(n)·χ(M)` for every
/// `M` whose Chern ratios are those of `CP^n`.
pub fn proportionality_constant(n: u32) -> Result<Rational> {
    require_even(n)?;
    let data = cpn_data(n)?;
    signature(&data)?.checked_div(&data.euler_characteristic())
}
