//! End-to-end lemma property suite for a single graph: certificate check,
//! sparse characterization equivalence, the sparse weight bound, and the
//! decomposition/extraction chain, all with the graph's own dual weights.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::harness::{sample_subgraph, SampleConfig};
use crate::indset;
use crate::lp;
use crate::order::{self, OrderedGround};
use crate::ratio::{rat_from_i64, rat_json};
use crate::rng;
use crate::witness;
use num::rational::BigRational;
use num::One;
use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct LemmaSuiteReport {
    pub graph: String,
    pub chi_f: BigRational,
    pub s: BigRational,
    pub sparse_equivalence_checked: usize,
    pub sparse_weight_checked: usize,
    pub lemma6_confirmed: usize,
    pub lemma6_skipped: usize,
    pub violations: Vec<String>,
}

impl LemmaSuiteReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph": self.graph,
            "chi_f": rat_json(&self.chi_f),
            "s": rat_json(&self.s),
            "sparse_equivalence_checked": self.sparse_equivalence_checked,
            "sparse_weight_checked": self.sparse_weight_checked,
            "lemma6_confirmed": self.lemma6_confirmed,
            "lemma6_skipped": self.lemma6_skipped,
            "violations": self.violations,
            "ok": self.ok(),
        })
    }
}

pub fn run_lemma_suite(
    g: &Graph,
    label: &str,
    s_override: Option<BigRational>,
    trials: u64,
    seed: u64,
    corrupt_certificate: bool,
) -> Result<LemmaSuiteReport> {
    let mut cert = lp::solve_chi_f(g)?;
    if corrupt_certificate {
        cert.value += rat_from_i64(1, 100);
    }
    let mut violations = Vec::new();
    if !lp::verify_certificate(g, &cert)? {
        violations.push("certificate failed verification".to_string());
    }
    let w = lp::dual_weights(&cert);
    let ground = OrderedGround::from_weights(&w);
    let n = g.n();
    let s = s_override.unwrap_or_else(|| cert.value.clone().max(BigRational::one()));
    let whole = VertexSet::full(n);
    let s_grid = [
        rat_from_i64(1, 1),
        rat_from_i64(3, 2),
        rat_from_i64(2, 1),
        rat_from_i64(5, 2),
        rat_from_i64(3, 1),
    ];

    // characterization equivalence, exhaustive when n is small
    let mut eq_checked = 0;
    let masks: Vec<u64> = if n <= 8 {
        (0..1u64 << n).collect()
    } else {
        (0..trials).map(|i| rng::uniform64(seed, 100, i) & ((1u64 << n.min(63)) - 1)).collect()
    };
    for &mask in &masks {
        let x = VertexSet::from_mask(mask);
        for sv in &s_grid {
            let fast = order::is_sparse(&ground, &x, &whole, sv)?.sparse;
            let slow = order::is_sparse_bruteforce(&ground, &x, &whole, sv)?;
            eq_checked += 1;
            if fast != slow {
                violations.push(format!("sparse characterization mismatch on mask {mask}, s={sv}"));
            }
        }
    }

    // weight bound on sampled sparse sets
    let mut weight_checked = 0;
    for i in 0..trials {
        let mask = rng::uniform64(seed, 200, i) & ((1u64 << n.min(63)) - 1);
        let x = VertexSet::from_mask(mask);
        let sv = &s_grid[(rng::below(s_grid.len() as u64, seed, 201, i)) as usize];
        if order::is_sparse(&ground, &x, &whole, sv)?.sparse {
            let (holds, lhs, rhs) = order::sparse_weight_bound_check(&ground, &w, &x, &whole, sv)?;
            weight_checked += 1;
            if !holds {
                violations.push(format!("sparse weight bound failed: {lhs} > {rhs}"));
            }
        }
    }

    // decomposition and extraction on independent sets of sampled subgraphs
    let mut confirmed = 0;
    let mut skipped = 0;
    let half = rat_from_i64(1, 2);
    let cfg = SampleConfig::new(half, seed, trials.max(1))?;
    let x_thresh = rat_from_i64(2, 1);
    for trial in 0..trials {
        let sub = sample_subgraph(g, &cfg, trial);
        let fam = indset::maximal_independent_sets(&sub)?;
        if fam.sets.is_empty() {
            skipped += 1;
            continue;
        }
        let a = &fam.sets[(rng::below(fam.sets.len() as u64, seed, 300, trial)) as usize];
        if a.len() > 20 {
            skipped += 1;
            continue;
        }
        if witness::find_hypothesis_violation(g, &ground, a, &x_thresh, &s)?.is_some() {
            skipped += 1;
            continue;
        }
        confirmed += 1;
        let d = witness::decompose(g, &ground, a, &x_thresh, &s)?;
        if !d.l_covered {
            violations.push(format!("trial {trial}: L not covered by L1 ∪ L2"));
        }
        if !order::is_sparse(&ground, &d.l1, a, &rat_from_i64(2, 1))?.sparse {
            violations.push(format!("trial {trial}: L1 not 2-sparse in A"));
        }
        if !order::is_sparse(&ground, &d.l2, &whole, &s)?.sparse {
            violations.push(format!("trial {trial}: L2 not {s}-sparse in V"));
        }
        let heavy = witness::extract_heavy_independent(g, &ground, &w, a, &x_thresh, &s)?;
        if !indset::is_independent(g, &heavy)? {
            violations.push(format!("trial {trial}: extracted set not independent"));
        }
        let floor_x1 = rat_from_i64(3, 1); // floor(x+1) with x = 2
        let lower = (w.set_weight(a) / rat_from_i64(2, 1) - w.total() / &s) / floor_x1;
        if w.set_weight(&heavy) < lower {
            violations.push(format!("trial {trial}: extracted weight below bound"));
        }
        let (holds, lhs, rhs) = witness::lemma6_weight_check(&w, a, &x_thresh, &s)?;
        if !holds {
            violations.push(format!("trial {trial}: weight bound failed: {lhs} > {rhs}"));
        }
    }

    Ok(LemmaSuiteReport {
        graph: label.into(),
        chi_f: cert.value,
        s,
        sparse_equivalence_checked: eq_checked,
        sparse_weight_checked: weight_checked,
        lemma6_confirmed: confirmed,
        lemma6_skipped: skipped,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    #[test]
    fn cycle5_suite_passes() {
        let g = cycle_graph(5).unwrap();
        let report = run_lemma_suite(&g, "cycle:5", None, 40, 7, false).unwrap();
        assert!(report.ok(), "violations: {:?}", report.violations);
        assert_eq!(report.chi_f, rat_from_i64(5, 2));
        assert!(report.sparse_equivalence_checked > 0);
        assert!(report.lemma6_confirmed > 0);
    }

    #[test]
    fn corrupted_certificate_is_caught() {
        let g = complete_graph(4).unwrap();
        let report = run_lemma_suite(&g, "complete:4", None, 10, 3, true).unwrap();
        assert!(!report.ok());
    }
}
