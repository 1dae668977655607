//! Counter-based pseudorandom stream.
//!
//! Every draw is a pure function of `(seed, trial, unit)`, so trials are
//! reproducible and independent of evaluation order.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Uniform `u64` keyed by the three counters.
pub fn uniform64(seed: u64, trial: u64, unit: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed).wrapping_add(trial)).wrapping_add(unit))
}

/// Bernoulli draw with success probability `p`, quantized to 64 fixed-point
/// bits: returns true iff `u / 2^64 < p` for the uniform `u` at this counter.
/// Exact for dyadic `p`; bias below `2^-64` otherwise. Monotone in `p` for a
/// fixed counter, which gives trial-by-trial coupling of G_p and G_{p'}.
pub fn bernoulli(p: &BigRational, seed: u64, trial: u64, unit: u64) -> bool {
    let u = uniform64(seed, trial, unit);
    let lhs = BigInt::from(u) * p.denom();
    let rhs = p.numer() << 64u32;
    lhs < rhs
}

/// Uniform draw from `0..bound` by fixed-point scaling of a single 64-bit
/// counter value. Used by test drivers for reproducible instance generation.
pub fn below(bound: u64, seed: u64, trial: u64, unit: u64) -> u64 {
    let u = uniform64(seed, trial, unit);
    ((u as u128 * bound as u128) >> 64) as u64
}

/// Uniform rational in [0, 1) with 64-bit resolution.
pub fn unit_rational(seed: u64, trial: u64, unit: u64) -> BigRational {
    let u = uniform64(seed, trial, unit);
    BigRational::new(BigInt::from(u), BigInt::one() << 64u32)
}
