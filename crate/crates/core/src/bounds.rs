//! Closed-form bound evaluation: the threshold and probability of the main
//! random-subgraph theorem, and the corollary obtained at c = log_{1/p}(et).

use crate::error::{Error, Result};
use crate::interval::{log_recip_e_times, pow_enclosure, RatInterval};
use crate::ratio::{rat_display, rat_json};
use num::rational::BigRational;
use num::{BigInt, One, Signed};
use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub t: BigRational,
    pub p: BigRational,
    pub c: BigRational,
    /// The theorem hypothesis requires t >= 2.
    pub applicable: bool,
    /// x = 2 log_{1/p}(e t) + 2c.
    pub x: RatInterval,
    /// t / (4 log_{1/p}(e t) + 4 + 4c).
    pub threshold: RatInterval,
    /// p^c, exact whenever it is rational.
    pub p_to_c: RatInterval,
    /// (1 - 2 p^c) / (1 - p^c); may be nonpositive (vacuous).
    pub prob_bound: RatInterval,
    /// Corollary: t / (8 log_{1/p}(e t) + 4).
    pub corollary_threshold: RatInterval,
    /// Corollary: 1 - 1/(2t), exact.
    pub corollary_prob: BigRational,
}

impl BoundReport {
    pub fn vacuous(&self) -> bool {
        !self.prob_bound.lo.is_positive()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "t": rat_json(&self.t),
            "p": rat_json(&self.p),
            "c": rat_json(&self.c),
            "applicable": self.applicable,
            "vacuous": self.vacuous(),
            "x": self.x.to_json(),
            "threshold": self.threshold.to_json(),
            "p_to_c": self.p_to_c.to_json(),
            "prob_bound": self.prob_bound.to_json(),
            "corollary_threshold": self.corollary_threshold.to_json(),
            "corollary_prob": rat_json(&self.corollary_prob),
        })
    }
}

pub fn theorem_bounds(t: &BigRational, p: &BigRational, c: &BigRational) -> Result<BoundReport> {
    if !p.is_positive() || p >= &BigRational::one() {
        return Err(Error::InvalidArgument(format!("p must lie in (0,1), got {}", rat_display(p))));
    }
    if !c.is_positive() {
        return Err(Error::InvalidArgument(format!("c must be positive, got {}", rat_display(c))));
    }
    if !t.is_positive() {
        return Err(Error::InvalidArgument(format!("t must be positive, got {}", rat_display(t))));
    }
    let two = BigRational::from(BigInt::from(2));
    let four = BigRational::from(BigInt::from(4));
    let applicable = t >= &two;
    let logq = log_recip_e_times(p, t)?;
    let x = logq.scale(&two).shift(&(&two * c));
    let t_iv = RatInterval::point(t.clone());
    let threshold = t_iv.div(&logq.scale(&four).shift(&(&four + &four * c)))?;
    let p_to_c = pow_enclosure(p, c)?;
    // (1 - 2q) / (1 - q), decreasing in q; q = p^c < 1
    let one = RatInterval::point(BigRational::one());
    let prob_bound = one
        .sub(&p_to_c.scale(&two))
        .div(&one.sub(&p_to_c))?;
    let eight = BigRational::from(BigInt::from(8));
    let corollary_threshold = t_iv.div(&logq.scale(&eight).shift(&four))?;
    let corollary_prob = BigRational::one() - BigRational::one() / (&two * t);
    Ok(BoundReport {
        t: t.clone(),
        p: p.clone(),
        c: c.clone(),
        applicable,
        x,
        threshold,
        p_to_c,
        prob_bound,
        corollary_threshold,
        corollary_prob,
    })
}
