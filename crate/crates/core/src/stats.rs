//! Wilson score interval for binomial proportions. Stable near frequencies
//! of 0 and 1, which is where the harness usually operates.

/// Two-sided 99% normal quantile.
pub const Z_99: f64 = 2.5758293035489004;

/// Wilson interval at 99% confidence, clamped to [0, 1].
pub fn wilson_99(successes: u64, trials: u64) -> (f64, f64) {
    wilson(successes, trials, Z_99)
}

pub fn wilson(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "wilson interval needs at least one trial");
    assert!(successes <= trials);
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z * ((phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt()) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}
