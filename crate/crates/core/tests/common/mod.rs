//! Test fixtures shared by the integration targets.
//!
//! `l_genus_oracle` recomputes L-polynomials without touching the crate's
//! series or symmetric-function code: the characteristic series comes from
//! Bernoulli numbers, the product `Π Q(z_i)` is evaluated at concrete rational
//! points, and the coefficients in the `p`-basis are recovered by solving a
//! linear system.

#![allow(dead_code)]

use std::collections::BTreeMap;

use chern_ratios::exact_algebra::{binomial, partitions_of};
use chern_ratios::{Partition, Rational};

fn q(v: i64) -> Rational {
    Rational::from(v)
}

/// `B_0..=B_max` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=max {
        let s: Rational = (0..m)
            .map(|j| binomial(m as u32 + 1, j as i64) * &b[j])
            .sum();
        b.push(-s / Rational::from(m as u64 + 1));
    }
    b
}

/// Coefficients `q_j` of `√z / tanh(√z) = Σ q_j z^j`, i.e. `2^{2j} B_{2j} / (2j)!`.
pub fn coth_coefficients(max_j: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(2 * max_j);
    let mut factorial = Rational::one();
    let mut out = Vec::new();
    for j in 0..=max_j {
        if j > 0 {
            factorial = factorial * q((2 * j - 1) as i64) * q((2 * j) as i64);
        }
        out.push(Rational::from(4i64).pow(j as u32) * &b[2 * j] / &factorial);
    }
    out
}

fn elementary_values(z: &[Rational]) -> Vec<Rational> {
    // e_0..e_v via Π (1 + z_i X).
    let mut e = vec![Rational::one()];
    for zi in z {
        let mut next = e.clone();
        next.push(Rational::zero());
        for j in 1..next.len() {
            next[j] = &e.get(j).cloned().unwrap_or_else(Rational::zero) + zi * &e[j - 1];
        }
        e = next;
    }
    e
}

/// Weight-`k` part of `Π_i Q(z_i)` at a concrete point: coefficient of `λ^k`
/// in `Π_i Σ_j q_j (λ z_i)^j`.
fn weight_k_value(z: &[Rational], qs: &[Rational], k: usize) -> Rational {
    let mut acc = vec![Rational::zero(); k + 1];
    acc[0] = Rational::one();
    for zi in z {
        let factor: Vec<Rational> = (0..=k).map(|j| &qs[j] * zi.pow(j as u32)).collect();
        let mut next = vec![Rational::zero(); k + 1];
        for (a, ca) in acc.iter().enumerate() {
            for (b, cb) in factor.iter().enumerate().take(k + 1 - a) {
                next[a + b] += ca * cb;
            }
        }
        acc = next;
    }
    acc[k].clone()
}

/// Solves an overdetermined but consistent system exactly; panics if the
/// columns are dependent or the rows disagree.
fn solve_consistent(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> Vec<Rational> {
    for col in 0..unknowns {
        let pivot_row = col;
        let p = (pivot_row..rows.len())
            .find(|&r| !rows[r][col].is_zero())
            .expect("sample points must determine every coefficient");
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip().unwrap();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot = rows[pivot_row].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    for row in &rows[unknowns..] {
        assert!(row.iter().all(Rational::is_zero), "inconsistent sample");
    }
    (0..unknowns).map(|i| rows[i][unknowns].clone()).collect()
}

/// `L_k` keyed by Pontrjagin partitions, computed independently.
pub fn l_genus_oracle(k: u32) -> BTreeMap<Partition, Rational> {
    let k_us = k as usize;
    let qs = coth_coefficients(k_us);
    let basis = partitions_of(k);
    let samples = 3 * basis.len() + 2;
    let mut rows = Vec::with_capacity(samples);
    for s in 0..samples as i64 {
        let z: Vec<Rational> = (0..k as i64)
            .map(|i| {
                Rational::new((s + 1) * (i + 2) * (i + 2) + 3 * i * s + 1, i + 2 + s % 3).unwrap()
            })
            .collect();
        let e = elementary_values(&z);
        let mut row: Vec<Rational> = basis
            .iter()
            .map(|lam| lam.parts().iter().map(|&j| e[j as usize].clone()).product())
            .collect();
        row.push(weight_k_value(&z, &qs, k_us));
        rows.push(row);
    }
    let coefficients = solve_consistent(rows, basis.len());
    basis
        .into_iter()
        .zip(coefficients)
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Brute-force count of partitions of `n` with parts at most `max`.
pub fn partition_count(n: u32, max: u32) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|k| partition_count(n - k, k)).sum()
}
