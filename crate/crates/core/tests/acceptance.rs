//! End-to-end acceptance suite. Each test covers one criterion and prints a
//! single pass/fail line; run with `--nocapture` to see them.

use fracsub::bounds::theorem_bounds;
use fracsub::graph::{
    average_degree, complete_graph, cycle_graph, kneser_graph, mycielskian, Graph, VertexSet,
};
use fracsub::harness::{
    enumerate_principal_candidates, exact_event_probability, mc_lemma5, mc_theorem, SampleConfig,
    Verdict,
};
use fracsub::indset::is_independent;
use fracsub::interval::{log_recip_e_times, pow_enclosure, RatInterval};
use fracsub::lp::{solve_chi_f, verify_certificate, WeightFunction};
use fracsub::order::{is_sparse, is_sparse_bruteforce, sparse_weight_bound_check, OrderedGround};
use fracsub::ratio::rat_from_i64 as ratio;
use fracsub::rng::{below, unit_rational};
use fracsub::witness::{extract_heavy_independent, find_hypothesis_violation, lemma6_weight_check};
use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use std::time::Duration;

fn report(id: u32, label: &str, ok: bool) {
    println!("acceptance {id} ({label}): {}", if ok { "pass" } else { "FAIL" });
    assert!(ok, "acceptance {id} ({label}) failed");
}

fn rat_u(v: usize) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Named desk-scale suite: complete graphs, odd and even cycles, the
/// Kneser (5,2) graph, and the triangle-free Mycielskian of C_5.
fn named_suite() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push((format!("K_{n}"), complete_graph(n).unwrap()));
    }
    for n in 3..=9 {
        out.push((format!("C_{n}"), cycle_graph(n).unwrap()));
    }
    out.push(("petersen".into(), kneser_graph(5, 2).unwrap()));
    out.push(("mycielski(C_5)".into(), mycielskian(&cycle_graph(5).unwrap()).unwrap()));
    out
}

fn random_graph(n: usize, seed: u64, trial: u64) -> Graph {
    let mut edges = Vec::new();
    let mut unit = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if below(2, seed, trial, unit) == 0 {
                edges.push((u, v));
            }
            unit += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

#[test]
fn acceptance_1_duality_certificates() {
    let mut ok = true;
    let mut graphs = named_suite();
    for trial in 0..200u64 {
        let n = 2 + below(9, 0xace1, trial, 0) as usize;
        graphs.push((format!("random-{trial}"), random_graph(n, 0xace1, trial)));
    }
    for (label, g) in &graphs {
        let cert = solve_chi_f(g).unwrap();
        let primal: BigRational = cert.primal.iter().map(|(_, y)| y.clone()).sum();
        let dual = cert.dual.total();
        if primal != cert.value || dual != cert.value || !verify_certificate(g, &cert).unwrap() {
            eprintln!("certificate check failed on {label}");
            ok = false;
        }
    }
    report(1, "duality certificates", ok);
}

#[test]
fn acceptance_2_known_exact_values() {
    let mut ok = true;
    let mut check = |label: &str, g: &Graph, expected: BigRational| {
        let cert = solve_chi_f(g).unwrap();
        let alpha = fracsub::lp::independence_number(g).unwrap();
        let ratio_bound = rat_u(g.n()) / rat_u(alpha);
        if cert.value != expected || cert.value < ratio_bound {
            eprintln!("{label}: got {}, expected {expected} (>= {ratio_bound})", cert.value);
            ok = false;
        }
    };
    for n in 2..=8 {
        check(&format!("K_{n}"), &complete_graph(n).unwrap(), rat_u(n));
    }
    for k in 1..=4i64 {
        let n = (2 * k + 1) as usize;
        check(
            &format!("C_{n}"),
            &cycle_graph(n).unwrap(),
            ratio(2, 1) + ratio(1, k),
        );
    }
    check("petersen", &kneser_graph(5, 2).unwrap(), ratio(5, 2));
    report(2, "known exact values", ok);
}

#[test]
fn acceptance_3_sparse_equivalence_exhaustive() {
    let s_values = [ratio(1, 1), ratio(3, 2), ratio(2, 1), ratio(5, 2), ratio(3, 1)];
    let mut checked = 0usize;
    let mut ok = true;
    for n in [6usize, 8, 10, 12] {
        let ground = OrderedGround::identity(n);
        let y = VertexSet::full(n);
        for s in &s_values {
            for mask in 0u64..1 << n {
                let x = VertexSet::from_mask(mask);
                let fast = is_sparse(&ground, &x, &y, s).unwrap().sparse;
                let slow = is_sparse_bruteforce(&ground, &x, &y, s).unwrap();
                if fast != slow {
                    eprintln!("disagreement at n={n} s={s} mask={mask:#x}");
                    ok = false;
                }
                checked += 1;
            }
        }
    }
    eprintln!("sparse equivalence: {checked} cases");
    report(3, "sparse characterization equivalence", ok && checked > 0);
}

#[test]
fn acceptance_4_sparse_weight_bound_randomized() {
    let n = 12usize;
    let s_values = [ratio(1, 1), ratio(3, 2), ratio(2, 1), ratio(5, 2), ratio(3, 1)];
    let mut verified = 0usize;
    let mut ok = true;
    let mut trial = 0u64;
    while verified < 10_000 && trial < 400_000 {
        let weights: Vec<BigRational> = (0..n).map(|v| unit_rational(7, trial, v as u64)).collect();
        let w = WeightFunction::new(weights);
        let ground = OrderedGround::from_weights(&w);
        let y = VertexSet::full(n);
        let members: Vec<usize> =
            (0..n).filter(|&v| below(4, 11, trial, v as u64) == 0).collect();
        let x = VertexSet::new(members, n).unwrap();
        let s = &s_values[below(5, 13, trial, 99) as usize];
        if is_sparse(&ground, &x, &y, s).unwrap().sparse {
            let (holds, lhs, rhs) = sparse_weight_bound_check(&ground, &w, &x, &y, s).unwrap();
            if !holds {
                eprintln!("weight bound violated at trial {trial}: {lhs} > {rhs}");
                ok = false;
            }
            verified += 1;
        }
        trial += 1;
    }
    eprintln!("sparse weight bound: {verified} sparse instances verified");
    report(4, "sparse weight bound", ok && verified >= 10_000);
}

#[test]
fn acceptance_5_bad_event_exact() {
    // p = 1/4 with c = 1/2 gives cap p^c/(1-p^c) = 1; c = 1 gives 1/3
    let p = ratio(1, 4);
    let mut ok = true;
    for (label, g) in [
        ("C_5", cycle_graph(5).unwrap()),
        ("K_4", complete_graph(4).unwrap()),
        ("K_5", complete_graph(5).unwrap()),
    ] {
        let cert = solve_chi_f(&g).unwrap();
        let s = cert.value.clone();
        let ground = OrderedGround::from_weights(&cert.dual);
        for c in [ratio(1, 2), ratio(1, 1)] {
            let two = ratio(2, 1);
            let x = log_recip_e_times(&p, &s)
                .unwrap()
                .scale(&two)
                .shift(&(&two * &c));
            let candidates = enumerate_principal_candidates(&g, &ground, &s, &x.hi).unwrap();
            let prob = exact_event_probability(&g, &p, &mut |sub| {
                for cand in &candidates {
                    if is_independent(sub, cand)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            })
            .unwrap();
            let p_to_c = pow_enclosure(&p, &c).unwrap();
            let one = RatInterval::point(BigRational::one());
            let cap = p_to_c.div(&one.sub(&p_to_c)).unwrap();
            if prob > cap.lo {
                eprintln!("{label} c={c}: exact probability {prob} exceeds cap {}", cap.lo);
                ok = false;
            }
        }
    }
    report(5, "bad event exact probabilities", ok);
}

#[test]
fn acceptance_6_extraction_end_to_end() {
    let s_values = [ratio(2, 1), ratio(5, 2), ratio(3, 1)];
    let x_values = [ratio(2, 1), ratio(5, 2), ratio(3, 1)];
    let mut confirmed = 0usize;
    let mut ok = true;
    for trial in 0..500u64 {
        let n = 4 + below(7, 0xbeef, trial, 0) as usize;
        let g = random_graph(n, 0xbeef, trial);
        let cert = solve_chi_f(&g).unwrap();
        let w = &cert.dual;
        let ground = OrderedGround::from_weights(w);
        let members: Vec<usize> =
            (0..n).filter(|&v| below(2, 0xfeed, trial, v as u64) == 0).collect();
        if members.is_empty() {
            continue;
        }
        let a = VertexSet::new(members, n).unwrap();
        let s = &s_values[below(3, 0xf00d, trial, 0) as usize];
        let x = &x_values[below(3, 0xf00d, trial, 1) as usize];
        if find_hypothesis_violation(&g, &ground, &a, x, s).unwrap().is_some() {
            continue;
        }
        confirmed += 1;
        let heavy = extract_heavy_independent(&g, &ground, w, &a, x, s).unwrap();
        if !heavy.is_empty() && !is_independent(&g, &heavy).unwrap() {
            eprintln!("trial {trial}: extracted set is not independent");
            ok = false;
        }
        let (holds, lhs, rhs) = lemma6_weight_check(w, &a, x, s).unwrap();
        if !holds {
            eprintln!("trial {trial}: weight bound {lhs} > {rhs}");
            ok = false;
        }
    }
    eprintln!("extraction: {confirmed}/500 trials had the hypothesis confirmed");
    report(6, "independent-set extraction", ok && confirmed >= 50);
}

#[test]
fn acceptance_7_threshold_exact_small_graphs() {
    let grids = [(ratio(1, 4), ratio(1, 2)), (ratio(1, 4), ratio(1, 1)), (ratio(1, 2), ratio(2, 1))];
    let mut ok = true;
    for (label, g) in named_suite() {
        if g.edge_count() > 12 {
            continue;
        }
        let t = solve_chi_f(&g).unwrap().value;
        for (p, c) in &grids {
            let bounds = theorem_bounds(&t, p, c).unwrap();
            let prob = exact_event_probability(&g, p, &mut |sub| {
                Ok(solve_chi_f(sub)?.value >= bounds.threshold.hi)
            })
            .unwrap();
            if prob < bounds.prob_bound.hi {
                eprintln!("{label} p={p} c={c}: probability {prob} below {}", bounds.prob_bound.hi);
                ok = false;
            }
        }
    }
    report(7, "threshold exact probabilities", ok);
}

#[test]
fn acceptance_8_corollary_monte_carlo() {
    let g = complete_graph(8).unwrap();
    let cfg = SampleConfig::new(ratio(1, 2), 2024, 2000).unwrap();
    let rep =
        mc_theorem(&g, "K_8", &BigRational::one(), &cfg, true, Duration::from_secs(600)).unwrap();
    let half_width = (rep.ci_hi - rep.ci_lo) / 2.0;
    let floor = 15.0 / 16.0 - half_width;
    let ok = rep.trials == 2000
        && !rep.trials_reduced
        && rep.freq >= floor
        && rep.verdict != Verdict::Inconsistent;
    eprintln!("corollary mc: freq {} vs floor {floor}", rep.freq);
    report(8, "corollary monte carlo", ok);
}

#[test]
fn acceptance_9_reproducibility() {
    let mut ok = true;

    // bad-event estimator (C_5), theorem estimator (K_4), corollary (K_5)
    let c5 = cycle_graph(5).unwrap();
    let cert = solve_chi_f(&c5).unwrap();
    let cfg = SampleConfig::new(ratio(1, 4), 99, 200).unwrap();
    let runs: Vec<String> = (0..2)
        .map(|_| {
            let r = mc_lemma5(&c5, "C_5", &cert.dual, &cert.value, &ratio(1, 1), &cfg).unwrap();
            format!("{}\n{}", serde_json::to_string(&r.to_json()).unwrap(), r.to_csv_row())
        })
        .collect();
    ok &= runs[0] == runs[1];

    let k4 = complete_graph(4).unwrap();
    let cfg = SampleConfig::new(ratio(1, 2), 7, 200).unwrap();
    let budget = Duration::from_secs(600);
    let runs: Vec<String> = (0..2)
        .map(|_| {
            let r = mc_theorem(&k4, "K_4", &ratio(2, 1), &cfg, false, budget).unwrap();
            format!("{}\n{}", serde_json::to_string(&r.to_json()).unwrap(), r.to_csv_row())
        })
        .collect();
    ok &= runs[0] == runs[1];

    let k5 = complete_graph(5).unwrap();
    let cfg = SampleConfig::new(ratio(1, 2), 2024, 200).unwrap();
    let runs: Vec<String> = (0..2)
        .map(|_| {
            let r = mc_theorem(&k5, "K_5", &BigRational::one(), &cfg, true, budget).unwrap();
            serde_json::to_string(&r.to_json()).unwrap()
        })
        .collect();
    ok &= runs[0] == runs[1];

    // exact computations must also reproduce bit for bit
    let exact: Vec<BigRational> = (0..2)
        .map(|_| {
            let t = solve_chi_f(&k4).unwrap().value;
            let bounds = theorem_bounds(&t, &ratio(1, 4), &ratio(1, 1)).unwrap();
            exact_event_probability(&k4, &ratio(1, 4), &mut |sub| {
                Ok(solve_chi_f(sub)?.value >= bounds.threshold.hi)
            })
            .unwrap()
        })
        .collect();
    ok &= exact[0] == exact[1];

    report(9, "reproducibility", ok);
}

#[test]
fn suite_smoke_nontrivial_inputs() {
    // guard against the named suite degenerating: the triangle-free member
    // must really be triangle-free and the bad-event caps must differ
    let groetzsch = mycielskian(&cycle_graph(5).unwrap()).unwrap();
    assert!(!fracsub::graph::has_triangle(&groetzsch));
    assert_eq!((groetzsch.n(), groetzsch.edge_count()), (11, 20));
    let half = pow_enclosure(&ratio(1, 4), &ratio(1, 2)).unwrap();
    assert!(half.is_point() && half.lo == ratio(1, 2));
    let quarter = pow_enclosure(&ratio(1, 4), &ratio(1, 1)).unwrap();
    assert!(quarter.is_point() && quarter.lo == ratio(1, 4));
    assert!(average_degree(&complete_graph(3).unwrap(), &VertexSet::full(3)).unwrap() == ratio(2, 1));
    assert!(!ratio(1, 3).is_negative() && !BigRational::zero().is_one());
}
