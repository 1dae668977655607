//! Dense exact-rational primal simplex with Bland's anti-cycling rule.
//!
//! Solves `max c·x  s.t.  A x <= b, x >= 0` with `b >= 0`, so the slack
//! basis is feasible and no phase-1 is needed. Everything is `BigRational`;
//! there is no floating point on the solve path.

use crate::error::{Error, Result};
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub struct StandardLp {
    /// m x n constraint matrix.
    pub a: Vec<Vec<BigRational>>,
    /// Right-hand sides, all nonnegative.
    pub b: Vec<BigRational>,
    /// Objective coefficients.
    pub c: Vec<BigRational>,
}

pub struct LpSolution {
    pub objective: BigRational,
    /// Optimal structural variables.
    pub x: Vec<BigRational>,
    /// Dual multipliers, one per constraint, nonnegative at optimality.
    pub duals: Vec<BigRational>,
}

pub fn solve_max_leq(lp: &StandardLp) -> Result<LpSolution> {
    let m = lp.a.len();
    let n = lp.c.len();
    if lp.b.len() != m || lp.a.iter().any(|row| row.len() != n) {
        return Err(Error::Internal("inconsistent LP dimensions".into()));
    }
    if lp.b.iter().any(|v| v.is_negative()) {
        return Err(Error::Internal("slack-basis simplex needs b >= 0".into()));
    }

    // tableau rows: [A | I | b]
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(width);
        row.extend(lp.a[i].iter().cloned());
        for j in 0..m {
            row.push(if i == j { BigRational::one() } else { BigRational::zero() });
        }
        row.push(lp.b[i].clone());
        t.push(row);
    }
    // reduced cost row (cost of slacks is zero)
    let mut cost: Vec<BigRational> = lp.c.iter().cloned().collect();
    cost.resize(n + m, BigRational::zero());
    let mut objective = BigRational::zero();
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering = lowest index with positive reduced cost
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_positive()) else {
            break;
        };
        // ratio test; ties by smallest basic variable index (Bland)
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::Internal("LP unbounded".into()));
        };

        let pivot = t[row][enter].clone();
        for v in t[row].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..m {
            if i == row || t[i][enter].is_zero() {
                continue;
            }
            let factor = t[i][enter].clone();
            for j in 0..width {
                let delta = &factor * &t[row][j];
                t[i][j] -= delta;
            }
        }
        let factor = cost[enter].clone();
        for j in 0..n + m {
            let delta = &factor * &t[row][j];
            cost[j] -= delta;
        }
        objective += &factor * &t[row][width - 1];
        basis[row] = enter;
    }

    let mut x = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][width - 1].clone();
        }
    }
    // dual of constraint i is the negated reduced cost of its slack
    let duals = (0..m).map(|i| -&cost[n + i]).collect();
    Ok(LpSolution { objective, x, duals })
}
