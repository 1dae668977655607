//! Random subgraph sampling, Monte Carlo estimation of the bad-event and
//! theorem-event probabilities, and the exhaustive exact oracle for tiny
//! edge sets.
//!
//! Average degrees of candidate sets are always measured in the base graph;
//! independence is tested in the sample.

use crate::bounds::{theorem_bounds, BoundReport};
use crate::error::{Error, Result};
use crate::graph::{average_degree, Graph, VertexSet};
use crate::indset::is_independent;
use crate::interval::{log_recip_e_times, pow_enclosure, RatInterval};
use crate::lp::{solve_chi_f, WeightFunction};
use crate::order::OrderedGround;
use crate::ratio::{floor_usize, rat_display, rat_json, rat_to_f64};
use crate::rng;
use crate::stats::wilson_99;
use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};
use std::time::{Duration, Instant};

/// Vertex cap for principal-candidate enumeration.
pub const DEFAULT_HARNESS_N_CAP: usize = 16;
/// Edge cap for the exhaustive subgraph oracle.
pub const EXACT_EDGE_CAP: usize = 20;
/// Per-solve time budget before the trial count is cut short.
pub const DEFAULT_TIME_BUDGET_MS: u64 = 10_000;

#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub p: BigRational,
    pub seed: u64,
    pub trials: u64,
}

impl SampleConfig {
    pub fn new(p: BigRational, seed: u64, trials: u64) -> Result<SampleConfig> {
        if !p.is_positive() || p >= BigRational::one() {
            return Err(Error::InvalidArgument(format!(
                "edge probability must lie in (0,1), got {}",
                rat_display(&p)
            )));
        }
        if trials == 0 {
            return Err(Error::InvalidArgument("trial count must be positive".into()));
        }
        Ok(SampleConfig { p, seed, trials })
    }
}

/// Spanning random subgraph: each edge kept independently, with the draw
/// keyed by (seed, trial, edge rank) so identical inputs reproduce
/// identical outputs.
pub fn sample_subgraph(g: &Graph, cfg: &SampleConfig, trial_index: u64) -> Graph {
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter_map(|(rank, &e)| {
            rng::bernoulli(&cfg.p, cfg.seed, trial_index, rank as u64).then_some(e)
        })
        .collect();
    Graph::new(g.n(), edges).expect("subgraph of a valid graph is valid")
}

/// Erdos-Renyi style sample as a subgraph of the complete graph.
pub fn gnp(n: usize, p: &BigRational, seed: u64, trial_index: u64) -> Result<Graph> {
    let base = crate::graph::complete_graph(n)?;
    let cfg = SampleConfig::new(p.clone(), seed, 1)?;
    Ok(sample_subgraph(&base, &cfg, trial_index))
}

/// Exact probability of `event` over all 2^|E| spanning subgraphs,
/// weighting each by p^kept (1-p)^dropped.
pub fn exact_event_probability(
    g: &Graph,
    p: &BigRational,
    event: &mut dyn FnMut(&Graph) -> Result<bool>,
) -> Result<BigRational> {
    let m = g.edge_count();
    if m > EXACT_EDGE_CAP {
        return Err(Error::CapExceeded(format!(
            "exact enumeration capped at {EXACT_EDGE_CAP} edges, got {m}"
        )));
    }
    let q = BigRational::one() - p;
    let mut p_pow = vec![BigRational::one()];
    let mut q_pow = vec![BigRational::one()];
    for i in 1..=m {
        p_pow.push(&p_pow[i - 1] * p);
        q_pow.push(&q_pow[i - 1] * &q);
    }
    let mut total = BigRational::zero();
    for mask in 0u64..1 << m {
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (mask >> i & 1 == 1).then_some(e))
            .collect();
        let k = kept.len();
        let sub = Graph::new(g.n(), kept)?;
        if event(&sub)? {
            total += &p_pow[k] * &q_pow[m - k];
        }
    }
    Ok(total)
}

/// All s-principal sets (in the whole ground set) whose average degree in
/// `g` is at least `threshold`.
pub fn enumerate_principal_candidates(
    g: &Graph,
    ground: &OrderedGround,
    s: &BigRational,
    threshold: &BigRational,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > DEFAULT_HARNESS_N_CAP {
        return Err(Error::CapExceeded(format!(
            "principal candidate enumeration capped at n = {DEFAULT_HARNESS_N_CAP}, got {n}"
        )));
    }
    if s < &BigRational::one() {
        return Err(Error::InvalidArgument(format!("s must be >= 1, got {s}")));
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let m = floor_usize(&(s * BigRational::from(BigInt::from(k))), n);
        if m < k {
            continue;
        }
        // every k-subset of the first m vertices in ground order is principal
        let pool: Vec<usize> = ground.ordering[..m].to_vec();
        let mut pick = vec![0usize; k];
        combinations(&pool, k, &mut pick, 0, 0, &mut |subset| {
            let set = VertexSet::new(subset.to_vec(), n)?;
            if average_degree(g, &set)? >= *threshold {
                out.push(set);
            }
            Ok(())
        })?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn combinations(
    pool: &[usize],
    k: usize,
    pick: &mut Vec<usize>,
    depth: usize,
    start: usize,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if depth == k {
        return visit(pick);
    }
    for i in start..=pool.len() - (k - depth) {
        pick[depth] = pool[i];
        combinations(pool, k, pick, depth + 1, i + 1, visit)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent,
    VacuousBound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent => "inconsistent",
            Verdict::VacuousBound => "vacuous",
        }
    }
}

/// Monte Carlo report for one configuration.
#[derive(Debug, Clone)]
pub struct McReport {
    pub event: String,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub t: Option<BigRational>,
    pub p: BigRational,
    pub c: BigRational,
    pub s: Option<BigRational>,
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    pub freq: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    /// Event threshold (chi_f threshold for the theorem, degree threshold x
    /// for the bad-event lemma).
    pub threshold: RatInterval,
    /// The probability bound under test.
    pub bound: RatInterval,
    /// True when the bound caps the frequency from above (bad event);
    /// false when it floors it (theorem event).
    pub bound_is_upper: bool,
    pub verdict: Verdict,
    /// Set when the time budget cut the trial count short.
    pub trials_reduced: bool,
}

impl McReport {
    pub fn to_json(&self) -> Value {
        json!({
            "event": self.event,
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "t": self.t.as_ref().map(rat_json),
            "p": rat_json(&self.p),
            "c": rat_json(&self.c),
            "s": self.s.as_ref().map(rat_json),
            "seed": self.seed,
            "trials": self.trials,
            "successes": self.successes,
            "freq": self.freq,
            "ci_lo": self.ci_lo,
            "ci_hi": self.ci_hi,
            "threshold": self.threshold.to_json(),
            "bound": self.bound.to_json(),
            "bound_is_upper": self.bound_is_upper,
            "verdict": self.verdict.as_str(),
            "trials_reduced": self.trials_reduced,
        })
    }

    pub fn csv_header() -> &'static str {
        "graph,n,m,t,p,c,threshold_lo,threshold_hi,trials,successes,freq,ci_lo,ci_hi,bound,verdict"
    }

    pub fn to_csv_row(&self) -> String {
        let bound = if self.bound_is_upper { &self.bound.hi } else { &self.bound.lo };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{:.6},{:.6},{:.6},{},{}",
            self.graph,
            self.n,
            self.m,
            self.t.as_ref().map(rat_display).unwrap_or_default(),
            rat_display(&self.p),
            rat_display(&self.c),
            rat_display(&self.threshold.lo),
            rat_display(&self.threshold.hi),
            self.trials,
            self.successes,
            self.freq,
            self.ci_lo,
            self.ci_hi,
            rat_display(bound),
            self.verdict.as_str(),
        )
    }
}

/// Monte Carlo check of the bad-event bound: with the degree threshold
/// x = 2 log_{1/p}(es) + 2c, the probability that some s-principal set with
/// average degree >= x in `g` is independent in the sample is at most
/// p^c / (1 - p^c).
pub fn mc_lemma5(
    g: &Graph,
    graph_label: &str,
    w: &WeightFunction,
    s: &BigRational,
    c: &BigRational,
    cfg: &SampleConfig,
) -> Result<McReport> {
    if !c.is_positive() {
        return Err(Error::InvalidArgument(format!("c must be positive, got {c}")));
    }
    let ground = OrderedGround::from_weights(w);
    let two = BigRational::from(BigInt::from(2));
    let x = log_recip_e_times(&cfg.p, s)?.scale(&two).shift(&(&two * c));
    // qualifying test shrunk to the sound side: avg degree >= hi endpoint
    let candidates = enumerate_principal_candidates(g, &ground, s, &x.hi)?;
    let p_to_c = pow_enclosure(&cfg.p, c)?;
    let one = RatInterval::point(BigRational::one());
    let cap = p_to_c.div(&one.sub(&p_to_c))?;

    let mut successes = 0u64;
    for trial in 0..cfg.trials {
        let sub = sample_subgraph(g, cfg, trial);
        let bad = candidates.iter().any(|cand| is_independent(&sub, cand).unwrap_or(false));
        if bad {
            successes += 1;
        }
    }
    let freq = successes as f64 / cfg.trials as f64;
    let (ci_lo, ci_hi) = wilson_99(successes, cfg.trials);
    let verdict = if cap.hi >= BigRational::one() {
        Verdict::VacuousBound
    } else if ci_lo > rat_to_f64(&cap.hi) {
        Verdict::Inconsistent
    } else {
        Verdict::Consistent
    };
    Ok(McReport {
        event: "some qualifying principal set independent in sample".into(),
        graph: graph_label.into(),
        n: g.n(),
        m: g.edge_count(),
        t: None,
        p: cfg.p.clone(),
        c: c.clone(),
        s: Some(s.clone()),
        seed: cfg.seed,
        trials: cfg.trials,
        successes,
        freq,
        ci_lo,
        ci_hi,
        threshold: x,
        bound: cap,
        bound_is_upper: true,
        verdict,
        trials_reduced: false,
    })
}

/// Monte Carlo check of the main theorem (or its corollary): the frequency
/// of chi_f(G_p) clearing the threshold must not fall below the probability
/// bound. Successes are counted against the upper threshold endpoint, so
/// rounding never manufactures a violation.
pub fn mc_theorem(
    g: &Graph,
    graph_label: &str,
    c: &BigRational,
    cfg: &SampleConfig,
    corollary: bool,
    time_budget: Duration,
) -> Result<McReport> {
    let cert = solve_chi_f(g)?;
    let t = cert.value.clone();
    let report = theorem_bounds(&t, &cfg.p, c)?;
    let (threshold, bound) = select_bounds(&report, corollary);

    let mut successes = 0u64;
    let mut completed = 0u64;
    let mut reduced = false;
    for trial in 0..cfg.trials {
        let sub = sample_subgraph(g, cfg, trial);
        let started = Instant::now();
        let value = solve_chi_f(&sub)?.value;
        completed += 1;
        if value >= threshold.hi {
            successes += 1;
        }
        if started.elapsed() > time_budget {
            reduced = completed < cfg.trials;
            break;
        }
    }
    let freq = successes as f64 / completed as f64;
    let (ci_lo, ci_hi) = wilson_99(successes, completed);
    let verdict = if !bound.lo.is_positive() {
        Verdict::VacuousBound
    } else if ci_hi < rat_to_f64(&bound.lo) {
        Verdict::Inconsistent
    } else {
        Verdict::Consistent
    };
    Ok(McReport {
        event: if corollary {
            "chi_f of sample clears corollary threshold".into()
        } else {
            "chi_f of sample clears theorem threshold".into()
        },
        graph: graph_label.into(),
        n: g.n(),
        m: g.edge_count(),
        t: Some(t),
        p: cfg.p.clone(),
        c: c.clone(),
        s: None,
        seed: cfg.seed,
        trials: completed,
        successes,
        freq,
        ci_lo,
        ci_hi,
        threshold,
        bound,
        bound_is_upper: false,
        verdict,
        trials_reduced: reduced,
    })
}

fn select_bounds(report: &BoundReport, corollary: bool) -> (RatInterval, RatInterval) {
    if corollary {
        (
            report.corollary_threshold.clone(),
            RatInterval::point(report.corollary_prob.clone()),
        )
    } else {
        (report.threshold.clone(), report.prob_bound.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, edgeless_graph};
    use crate::ratio::rat_from_i64 as ratio;

    fn cfg(p: BigRational, seed: u64, trials: u64) -> SampleConfig {
        SampleConfig::new(p, seed, trials).unwrap()
    }

    #[test]
    fn sampling_is_deterministic_and_spanning() {
        let g = complete_graph(6).unwrap();
        let c = cfg(ratio(1, 2), 11, 4);
        let a = sample_subgraph(&g, &c, 2);
        let b = sample_subgraph(&g, &c, 2);
        assert_eq!(a, b);
        assert_eq!(a.n(), g.n());
        assert_ne!(sample_subgraph(&g, &c, 0), sample_subgraph(&g, &c, 1));
    }

    #[test]
    fn near_one_probability_keeps_almost_everything() {
        let g = complete_graph(5).unwrap();
        let p = BigRational::one() - BigRational::new(BigInt::from(1), BigInt::from(1u64 << 30));
        let c = cfg(p, 5, 100);
        let intact = (0..100)
            .filter(|&trial| sample_subgraph(&g, &c, trial).edge_count() == g.edge_count())
            .count();
        // per-trial failure chance is about 10 * 2^-30
        assert!(intact >= 99, "only {intact} intact samples");
    }

    #[test]
    fn monotone_coupling() {
        let g = complete_graph(7).unwrap();
        let lo = cfg(ratio(1, 3), 99, 1);
        let hi = cfg(ratio(2, 3), 99, 1);
        for trial in 0..50 {
            let a = sample_subgraph(&g, &lo, trial);
            let b = sample_subgraph(&g, &hi, trial);
            for e in a.edges() {
                assert!(b.edges().contains(e), "trial {trial}");
            }
        }
    }

    #[test]
    fn exact_probability_examples() {
        let k3 = complete_graph(3).unwrap();
        let p_none = exact_event_probability(&k3, &ratio(1, 2), &mut |sub| {
            Ok(sub.edge_count() == 0)
        })
        .unwrap();
        assert_eq!(p_none, ratio(1, 8));
        let p_all = exact_event_probability(&k3, &ratio(1, 3), &mut |_| Ok(true)).unwrap();
        assert_eq!(p_all, ratio(1, 1));
        // 21 edges exceeds the oracle cap
        assert!(exact_event_probability(&complete_graph(7).unwrap(), &ratio(1, 2), &mut |_| Ok(true)).is_err());
    }

    #[test]
    fn exact_matches_binomial_on_edge_count() {
        // P(exactly one edge survives in K_3 at p = 1/4) = 3 * 1/4 * 9/16
        let k3 = complete_graph(3).unwrap();
        let p = exact_event_probability(&k3, &ratio(1, 4), &mut |sub| Ok(sub.edge_count() == 1))
            .unwrap();
        assert_eq!(p, ratio(27, 64));
    }

    #[test]
    fn candidate_enumeration_examples() {
        let c5 = cycle_graph(5).unwrap();
        let ground = OrderedGround::identity(5);
        // s = 1: the only principal k-sets are the exact prefixes
        let cands = enumerate_principal_candidates(&c5, &ground, &ratio(1, 1), &ratio(0, 1)).unwrap();
        assert_eq!(cands.len(), 5);
        for (k, cand) in cands.iter().enumerate() {
            assert_eq!(cand.as_slice(), &(0..=k).collect::<Vec<_>>()[..]);
        }
        // threshold 0 on an edgeless graph keeps every principal set
        let e4 = edgeless_graph(4).unwrap();
        let g4 = OrderedGround::identity(4);
        let all = enumerate_principal_candidates(&e4, &g4, &ratio(4, 1), &ratio(0, 1)).unwrap();
        assert_eq!(all.len(), 15);
        // brute-force cross-check on C_5, s = 2, threshold 2
        let cands = enumerate_principal_candidates(&c5, &ground, &ratio(2, 1), &ratio(2, 1)).unwrap();
        let whole = VertexSet::full(5);
        let mut expected = Vec::new();
        for mask in 1u64..1 << 5 {
            let set = VertexSet::from_mask(mask);
            if crate::order::is_principal(&ground, &set, &whole, &ratio(2, 1)).unwrap()
                && average_degree(&c5, &set).unwrap() >= ratio(2, 1)
            {
                expected.push(set);
            }
        }
        expected.sort();
        assert_eq!(cands, expected);
    }

    #[test]
    fn lemma5_edgeless_has_no_bad_event() {
        let g = edgeless_graph(6).unwrap();
        let w = WeightFunction::uniform(6, ratio(1, 6));
        // c = 2 keeps the cap at 1/3, so the verdict is not vacuous
        let report = mc_lemma5(&g, "edgeless6", &w, &ratio(2, 1), &ratio(2, 1), &cfg(ratio(1, 2), 3, 200))
            .unwrap();
        assert_eq!(report.successes, 0);
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn lemma5_vacuous_cap_flagged() {
        // p = 1/4, c = 1/2 -> p^c = 1/2 -> cap = 1
        let g = complete_graph(4).unwrap();
        let w = WeightFunction::uniform(4, ratio(1, 1));
        let report = mc_lemma5(&g, "k4", &w, &ratio(4, 1), &ratio(1, 2), &cfg(ratio(1, 4), 3, 50))
            .unwrap();
        assert_eq!(report.verdict, Verdict::VacuousBound);
    }

    #[test]
    fn lemma5_k8_within_cap() {
        let g = complete_graph(8).unwrap();
        let w = WeightFunction::uniform(8, ratio(1, 1));
        let report = mc_lemma5(&g, "k8", &w, &ratio(8, 1), &ratio(1, 1), &cfg(ratio(1, 2), 7, 300))
            .unwrap();
        assert!(report.freq <= rat_to_f64(&report.bound.hi) + (report.ci_hi - report.freq));
        assert_ne!(report.verdict, Verdict::Inconsistent);
    }

    #[test]
    fn lemma5_cross_check_against_exact_oracle() {
        // K_5, s = 5, p = 1/2, c = 1: compare MC frequency to the exact
        // bad-event probability computed by subgraph enumeration
        let g = complete_graph(5).unwrap();
        let w = WeightFunction::uniform(5, ratio(1, 1));
        let s = ratio(5, 1);
        let c = ratio(1, 1);
        let p = ratio(1, 2);
        let report = mc_lemma5(&g, "k5", &w, &s, &c, &cfg(p.clone(), 21, 400)).unwrap();
        let ground = OrderedGround::from_weights(&w);
        let two = BigRational::from(BigInt::from(2));
        let x = log_recip_e_times(&p, &s).unwrap().scale(&two).shift(&two);
        let candidates = enumerate_principal_candidates(&g, &ground, &s, &x.hi).unwrap();
        let exact = exact_event_probability(&g, &p, &mut |sub| {
            for cand in &candidates {
                if is_independent(sub, cand)? {
                    return Ok(true);
                }
            }
            Ok(false)
        })
        .unwrap();
        let exact_f = rat_to_f64(&exact);
        assert!(
            report.ci_lo <= exact_f && exact_f <= report.ci_hi,
            "exact {exact_f} outside [{}, {}]",
            report.ci_lo,
            report.ci_hi
        );
    }

    #[test]
    fn theorem_on_k2_always_succeeds() {
        // threshold 2/(4 log_{1/p}(2e) + 4 + 4c) < 1 <= chi_f of any sample
        let g = complete_graph(2).unwrap();
        let report = mc_theorem(
            &g,
            "k2",
            &ratio(1, 2),
            &cfg(ratio(1, 2), 17, 64),
            false,
            Duration::from_secs(10),
        )
        .unwrap();
        assert!(report.threshold.hi < ratio(1, 1));
        assert_eq!(report.successes, report.trials);
        assert_ne!(report.verdict, Verdict::Inconsistent);
    }

    #[test]
    fn theorem_vacuous_bound_flagged() {
        let g = complete_graph(3).unwrap();
        // p = 1/4, c = 1/2 -> bound = 0 -> vacuous
        let report = mc_theorem(
            &g,
            "k3",
            &ratio(1, 2),
            &cfg(ratio(1, 4), 1, 16),
            false,
            Duration::from_secs(10),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::VacuousBound);
    }

    #[test]
    fn estimator_ci_covers_exact_value() {
        // event with exactly computable probability: sample has no edges
        let g = complete_graph(4).unwrap();
        let p = ratio(1, 2);
        let exact = exact_event_probability(&g, &p, &mut |sub| Ok(sub.edge_count() == 0)).unwrap();
        let exact_f = rat_to_f64(&exact);
        let mut covered = 0;
        for run in 0..100u64 {
            let c = cfg(p.clone(), 1000 + run, 500);
            let hits =
                (0..c.trials).filter(|&t| sample_subgraph(&g, &c, t).edge_count() == 0).count() as u64;
            let (lo, hi) = wilson_99(hits, c.trials);
            if lo <= exact_f && exact_f <= hi {
                covered += 1;
            }
        }
        assert!(covered >= 95, "only {covered}/100 runs covered the exact value");
    }

    #[test]
    fn report_serialization_shapes() {
        let g = cycle_graph(5).unwrap();
        let report = mc_theorem(
            &g,
            "cycle:5",
            &ratio(1, 1),
            &cfg(ratio(1, 2), 4, 8),
            true,
            Duration::from_secs(10),
        )
        .unwrap();
        let json = report.to_json();
        assert_eq!(json["graph"], "cycle:5");
        assert_eq!(json["t"], serde_json::json!({"num": "5", "den": "2"}));
        let row = report.to_csv_row();
        assert_eq!(row.split(',').count(), McReport::csv_header().split(',').count());
        assert!(!report.trials_reduced);
    }
}
