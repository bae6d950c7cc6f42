//! Exact binomial and multinomial coefficients.
//!
//! Growth bounds must never overflow, so the authoritative binomial is
//! arbitrary precision. Checked machine-word variants exist for hot paths
//! that can prove their inputs small (matrix entries, pool sizes).

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient C(n, k) in arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// C(n, k) as u64, or `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n-i) is divisible by (i+1) after the multiply, because the
        // running product is itself a binomial coefficient.
        let next = (acc as u128).checked_mul((n - i) as u128)? / (i + 1) as u128;
        acc = u64::try_from(next).ok()?;
    }
    Some(acc)
}

/// Multinomial coefficient d! / (q_1! q_2! ... q_k!) where d = sum of parts,
/// as i64 (signed because it feeds integer matrices). `None` on overflow.
pub fn multinomial_i64(parts: &[u16]) -> Option<i64> {
    let mut acc: u64 = 1;
    let mut seen: u64 = 0;
    for &p in parts {
        for j in 1..=u64::from(p) {
            seen += 1;
            acc = acc.checked_mul(seen)?;
            acc /= j;
        }
    }
    i64::try_from(acc).ok()
}
