//! Rational interval arithmetic with rigorous enclosures of the
//! logarithms the bound formulas need.
//!
//! All endpoints are exact rationals. Transcendental values are bracketed
//! by truncated series whose tail bound is added to the appropriate side,
//! so every enclosure is sound and comparisons against rationals can be
//! made in the conservative direction.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> RatInterval {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> RatInterval {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn from_i64(v: i64) -> RatInterval {
        Self::point(BigRational::from(BigInt::from(v)))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn recip(&self) -> Result<RatInterval> {
        if !self.lo.is_positive() && !self.hi.is_negative() {
            return Err(Error::InvalidArgument("interval reciprocal across zero".into()));
        }
        Ok(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, other: &RatInterval) -> Result<RatInterval> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn scale(&self, r: &BigRational) -> RatInterval {
        if r.is_negative() {
            RatInterval { lo: &self.hi * r, hi: &self.lo * r }
        } else {
            RatInterval { lo: &self.lo * r, hi: &self.hi * r }
        }
    }

    pub fn shift(&self, r: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo + r, hi: &self.hi + r }
    }

    /// Whole interval strictly below v.
    pub fn definitely_lt(&self, v: &BigRational) -> bool {
        &self.hi < v
    }

    /// Whole interval at or above v.
    pub fn definitely_ge(&self, v: &BigRational) -> bool {
        &self.lo >= v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lo": crate::ratio::rat_json(&self.lo),
            "hi": crate::ratio::rat_json(&self.hi),
        })
    }
}

fn big(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// atanh(z) for |z| <= 1/3, with the truncation tail pushed to both sides.
fn atanh_enclosure(z: &BigRational, terms: usize) -> RatInterval {
    debug_assert!(z.abs() <= BigRational::new(BigInt::from(1), BigInt::from(3)));
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for i in 0..terms {
        sum += &power / big(2 * i as i64 + 1);
        power *= &z2;
    }
    // |tail| <= |z|^(2N+1) / ((2N+1)(1 - z^2)); 1/(1-z^2) <= 9/8 here
    let tail = power.abs() * BigRational::new(BigInt::from(9), BigInt::from(8))
        / big(2 * terms as i64 + 1);
    RatInterval { lo: &sum - &tail, hi: &sum + &tail }
}

fn ln2_enclosure() -> RatInterval {
    // ln 2 = 2 atanh(1/3)
    atanh_enclosure(&BigRational::new(BigInt::from(1), BigInt::from(3)), 44).scale(&big(2))
}

/// Rigorous enclosure of ln(q) for a positive rational q.
pub fn ln_enclosure(q: &BigRational) -> Result<RatInterval> {
    if !q.is_positive() {
        return Err(Error::InvalidArgument(format!("ln of non-positive value {q}")));
    }
    // scale into [3/4, 3/2) by powers of two
    let mut m = q.clone();
    let mut k: i64 = 0;
    let lo_bound = BigRational::new(BigInt::from(3), BigInt::from(4));
    let hi_bound = BigRational::new(BigInt::from(3), BigInt::from(2));
    while m >= hi_bound {
        m /= big(2);
        k += 1;
    }
    while m < lo_bound {
        m *= big(2);
        k -= 1;
    }
    // ln m = 2 atanh((m-1)/(m+1)), argument within [-1/7, 1/5]
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let ln_m = atanh_enclosure(&z, 34).scale(&big(2));
    Ok(ln2_enclosure().scale(&big(k)).add(&ln_m))
}

/// Enclosure of log_{1/p}(e * s) = (1 + ln s) / (-ln p) for p in (0,1), s > 0.
pub fn log_recip_e_times(p: &BigRational, s: &BigRational) -> Result<RatInterval> {
    if !p.is_positive() || p >= &BigRational::one() {
        return Err(Error::InvalidArgument(format!("p must lie in (0,1), got {p}")));
    }
    let numer = ln_enclosure(s)?.shift(&BigRational::one());
    let denom = ln_enclosure(p)?.neg();
    if !denom.lo.is_positive() {
        return Err(Error::Internal(format!("p = {p} too close to 1 for ln precision")));
    }
    numer.div(&denom)
}

/// Enclosure of p^c for a positive rational p and rational c >= 0. Returns an
/// exact point interval whenever p^c is rational.
pub fn pow_enclosure(p: &BigRational, c: &BigRational) -> Result<RatInterval> {
    if !p.is_positive() {
        return Err(Error::InvalidArgument(format!("pow base must be positive, got {p}")));
    }
    if c.is_negative() {
        return pow_enclosure(&p.recip(), &-c.clone());
    }
    let cn = c.numer();
    let cd = c.denom();
    let exp: i32 = cn
        .try_into()
        .map_err(|_| Error::InvalidArgument(format!("exponent numerator {cn} too large")))?;
    let base = p.pow(exp);
    let root: u32 = cd
        .try_into()
        .map_err(|_| Error::InvalidArgument(format!("exponent denominator {cd} too large")))?;
    if root == 1 {
        return Ok(RatInterval::point(base));
    }
    // exact rational root, when one exists
    let num_root = base.numer().nth_root(root);
    let den_root = base.denom().nth_root(root);
    if num_root.pow(root) == *base.numer() && den_root.pow(root) == *base.denom() {
        return Ok(RatInterval::point(BigRational::new(num_root, den_root)));
    }
    // dyadic bisection of r^root = base
    let one = BigRational::one();
    let (mut lo, mut hi) = if base >= one {
        (one.clone(), base.clone())
    } else {
        (base.clone(), one.clone())
    };
    for _ in 0..140 {
        let mid = (&lo + &hi) / big(2);
        if mid.pow(root as i32) <= base {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RatInterval { lo, hi })
}
