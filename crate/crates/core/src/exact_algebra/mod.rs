//! Exact arithmetic substrate: rationals, binomial coefficients and integer
//! partitions. Nothing in the crate touches floating point.

mod partition;
mod rational;

pub use partition::{partitions_of, Partition, Partitions};
pub use rational::Rational;

use num_bigint::BigInt;

/// `C(n, k)`, and `0` whenever `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> Rational {
    if k < 0 || k > i64::from(n) {
        return Rational::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        // Exact at every step: the running product is C(n, i + 1).
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from(acc)
}
