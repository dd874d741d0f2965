//! Small integer helpers shared across modules.

use num_bigint::BigUint;
use num_traits::One;

/// `n!` as a machine integer. Panics on overflow (`n > 20`).
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn factorial_big(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `1! + 2! + … + n!`, the length of `M_n`.
pub fn factorial_sum(n: usize) -> u64 {
    (1..=n).map(factorial).sum()
}
