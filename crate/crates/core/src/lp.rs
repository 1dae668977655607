//! Exact fractional chromatic number via the covering LP and its dual.
//!
//! The solver works on the dual side: maximize total vertex weight subject
//! to every maximal independent set having weight at most 1. The slack
//! basis is feasible, the optimum is the dual weight function, and the
//! simplex multipliers recover the primal fractional coloring. Both sides
//! are re-verified from scratch before a certificate is returned.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indset::{self, IndependentSetFamily};
use crate::ratio::rat_json;
use crate::simplex::{solve_max_leq, StandardLp};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde_json::{json, Value};

/// Default cap on the number of maximal independent sets fed to the LP.
pub const DEFAULT_MIS_CAP: usize = 100_000;

/// Nonnegative vertex weights together with the induced non-increasing
/// ordering (ties broken by ascending vertex index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    pub weights: Vec<BigRational>,
    pub ordering: Vec<usize>,
}

impl WeightFunction {
    pub fn new(weights: Vec<BigRational>) -> WeightFunction {
        let mut ordering: Vec<usize> = (0..weights.len()).collect();
        ordering.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        WeightFunction { weights, ordering }
    }

    pub fn uniform(n: usize, value: BigRational) -> WeightFunction {
        WeightFunction::new(vec![value; n])
    }

    pub fn total(&self) -> BigRational {
        self.weights.iter().sum()
    }

    pub fn set_weight(&self, a: &VertexSet) -> BigRational {
        a.iter().map(|v| &self.weights[v]).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weights": self.weights.iter().map(rat_json).collect::<Vec<_>>(),
            "ordering": self.ordering,
        })
    }
}

/// Self-checking optimality certificate for chi_f.
#[derive(Debug, Clone)]
pub struct ChiFCertificate {
    pub value: BigRational,
    /// Independent sets with strictly positive primal weight.
    pub primal: Vec<(VertexSet, BigRational)>,
    pub dual: WeightFunction,
}

impl ChiFCertificate {
    pub fn primal_support(&self) -> Vec<&VertexSet> {
        self.primal.iter().map(|(s, _)| s).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": rat_json(&self.value),
            "primal": self.primal.iter().map(|(s, y)| json!({
                "set": s.as_slice(),
                "y": rat_json(y),
            })).collect::<Vec<_>>(),
            "dual": self.dual.to_json(),
        })
    }
}

pub fn solve_chi_f(g: &Graph) -> Result<ChiFCertificate> {
    solve_chi_f_with_caps(g, indset::DEFAULT_MAXIMAL_CAP, DEFAULT_MIS_CAP)
}

pub fn solve_chi_f_with_caps(g: &Graph, n_cap: usize, mis_cap: usize) -> Result<ChiFCertificate> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("chi_f needs at least one vertex".into()));
    }
    let family = indset::maximal_independent_sets_with_cap(g, n_cap)?;
    if family.sets.len() > mis_cap {
        return Err(Error::CapExceeded(format!(
            "{} maximal independent sets exceed cap {mis_cap}",
            family.sets.len()
        )));
    }
    let n = g.n();
    let lp = StandardLp {
        a: family
            .sets
            .iter()
            .map(|s| {
                (0..n)
                    .map(|v| if s.contains(v) { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect(),
        b: vec![BigRational::one(); family.sets.len()],
        c: vec![BigRational::one(); n],
    };
    let sol = solve_max_leq(&lp)?;
    let primal: Vec<(VertexSet, BigRational)> = family
        .sets
        .iter()
        .zip(sol.duals.iter())
        .filter(|(_, y)| y.is_positive())
        .map(|(s, y)| (s.clone(), y.clone()))
        .collect();
    let cert = ChiFCertificate {
        value: sol.objective,
        primal,
        dual: WeightFunction::new(sol.x),
    };
    if !verify_certificate_against(g, &cert, &family)? {
        return Err(Error::Internal("solver produced an invalid certificate".into()));
    }
    Ok(cert)
}

/// Re-checks all three certificate invariants with exact arithmetic,
/// independently of how the certificate was produced.
pub fn verify_certificate(g: &Graph, cert: &ChiFCertificate) -> Result<bool> {
    let family = indset::maximal_independent_sets(g)?;
    verify_certificate_against(g, cert, &family)
}

fn verify_certificate_against(
    g: &Graph,
    cert: &ChiFCertificate,
    family: &IndependentSetFamily,
) -> Result<bool> {
    let n = g.n();
    if cert.dual.weights.len() != n {
        return Ok(false);
    }
    // primal feasibility: y >= 0 over independent sets, every vertex covered
    let mut cover = vec![BigRational::zero(); n];
    let mut primal_obj = BigRational::zero();
    for (set, y) in &cert.primal {
        if y.is_negative() || !indset::is_independent(g, set)? {
            return Ok(false);
        }
        for v in set.iter() {
            cover[v] += y;
        }
        primal_obj += y;
    }
    if cover.iter().any(|c| c < &BigRational::one()) {
        return Ok(false);
    }
    // dual feasibility: w >= 0 and w(I) <= 1 for every maximal independent set
    if cert.dual.weights.iter().any(|w| w.is_negative()) {
        return Ok(false);
    }
    if family.sets.iter().any(|s| cert.dual.set_weight(s) > BigRational::one()) {
        return Ok(false);
    }
    // exact strong duality against the claimed value
    Ok(primal_obj == cert.value && cert.dual.total() == cert.value)
}

/// The dual weight function with its ordering materialized.
pub fn dual_weights(cert: &ChiFCertificate) -> WeightFunction {
    cert.dual.clone()
}

/// Independence number, from the maximal-set family.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let family = indset::maximal_independent_sets(g)?;
    Ok(family.sets.iter().map(|s| s.len()).max().unwrap_or(0))
}
