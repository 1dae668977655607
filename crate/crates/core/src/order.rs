//! Prefix sets in a weight ordering, the s-principal and s-sparse
//! predicates, and the sparse-set weight bound.
//!
//! A nonempty X ⊆ Y is s-principal when all of X lies among the first
//! ⌊s·|X|⌋ elements of Y (in ground order); X is s-sparse when it contains
//! no s-principal subset, equivalently |Y_k ∩ X| < k/s for every k.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::lp::WeightFunction;
use crate::ratio::floor_usize;
use num::rational::BigRational;
use num::BigInt;
use serde_json::{json, Value};

/// A ground ordering of the vertex set with its inverse (1-based ranks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGround {
    pub ordering: Vec<usize>,
    /// vertex -> position in the ordering, 1-based.
    pub rank: Vec<usize>,
}

impl OrderedGround {
    pub fn from_weights(w: &WeightFunction) -> OrderedGround {
        Self::from_ordering(w.ordering.clone())
    }

    pub fn identity(n: usize) -> OrderedGround {
        Self::from_ordering((0..n).collect())
    }

    pub fn from_ordering(ordering: Vec<usize>) -> OrderedGround {
        let mut rank = vec![0; ordering.len()];
        for (pos, &v) in ordering.iter().enumerate() {
            rank[v] = pos + 1;
        }
        OrderedGround { ordering, rank }
    }

    pub fn n(&self) -> usize {
        self.ordering.len()
    }

    /// Elements of `y` listed by ascending ground rank.
    pub fn sort_by_rank(&self, y: &VertexSet) -> Vec<usize> {
        let mut v: Vec<usize> = y.iter().collect();
        v.sort_by_key(|&u| self.rank[u]);
        v
    }
}

/// Outcome of a sparseness check, with the violating prefix on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseReport {
    pub sparse: bool,
    /// Prefix length k with |Y_k ∩ X| >= k/s when not sparse.
    pub witness_k: Option<usize>,
    /// |Y_k ∩ X| at the witness.
    pub count_at_witness: Option<usize>,
}

impl SparseReport {
    pub fn to_json(&self) -> Value {
        json!({
            "sparse": self.sparse,
            "witness_k": self.witness_k,
            "count_at_witness": self.count_at_witness,
        })
    }
}

/// First ⌊len⌋ elements of `y` in ground order; empty when len < 1.
pub fn prefix(ground: &OrderedGround, y: &VertexSet, len: &BigRational) -> VertexSet {
    let k = floor_usize(len, y.len());
    let ordered = ground.sort_by_rank(y);
    VertexSet::new(ordered[..k.min(ordered.len())].to_vec(), ground.n())
        .expect("prefix of a valid set is valid")
}

pub fn is_principal(
    ground: &OrderedGround,
    x: &VertexSet,
    y: &VertexSet,
    s: &BigRational,
) -> Result<bool> {
    check_host(x, y, s)?;
    if x.is_empty() {
        return Err(Error::InvalidArgument("principal is defined for nonempty sets only".into()));
    }
    let bound = floor_usize(&(s * BigRational::from(BigInt::from(x.len()))), y.len());
    let ranks = rank_within(ground, y);
    Ok(x.iter().all(|v| ranks[&v] <= bound))
}

/// Characterization form: sparse iff |Y_k ∩ X| < k/s for every k in 1..=|Y|.
pub fn is_sparse(
    ground: &OrderedGround,
    x: &VertexSet,
    y: &VertexSet,
    s: &BigRational,
) -> Result<SparseReport> {
    check_host(x, y, s)?;
    let ordered = ground.sort_by_rank(y);
    let mut count = 0usize;
    for (i, &v) in ordered.iter().enumerate() {
        let k = i + 1;
        if x.contains(v) {
            count += 1;
        }
        // violation: count >= k/s, i.e. count * s >= k
        let lhs = s * BigRational::from(BigInt::from(count));
        if lhs >= BigRational::from(BigInt::from(k)) {
            return Ok(SparseReport { sparse: false, witness_k: Some(k), count_at_witness: Some(count) });
        }
    }
    Ok(SparseReport { sparse: true, witness_k: None, count_at_witness: None })
}

/// Definition form: no nonempty subset of `x` is s-principal in `y`.
pub fn is_sparse_bruteforce(
    ground: &OrderedGround,
    x: &VertexSet,
    y: &VertexSet,
    s: &BigRational,
) -> Result<bool> {
    check_host(x, y, s)?;
    if x.len() > 20 {
        return Err(Error::CapExceeded(format!(
            "brute-force sparseness capped at |x| = 20, got {}",
            x.len()
        )));
    }
    let elems: Vec<usize> = x.iter().collect();
    for sub in 1u32..1 << elems.len() {
        let subset: Vec<usize> =
            (0..elems.len()).filter(|&i| sub >> i & 1 == 1).map(|i| elems[i]).collect();
        let subset = VertexSet::new(subset, ground.n())?;
        if is_principal(ground, &subset, y, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks w(X) <= w(Y)/s for an s-sparse X. Errors when X is not sparse.
pub fn sparse_weight_bound_check(
    ground: &OrderedGround,
    w: &WeightFunction,
    x: &VertexSet,
    y: &VertexSet,
    s: &BigRational,
) -> Result<(bool, BigRational, BigRational)> {
    let report = is_sparse(ground, x, y, s)?;
    if !report.sparse {
        return Err(Error::ContractViolation(format!(
            "set is not {}-sparse (witness prefix k = {:?})",
            s, report.witness_k
        )));
    }
    let lhs = w.set_weight(x);
    let rhs = w.set_weight(y) / s;
    let holds = lhs <= rhs;
    Ok((holds, lhs, rhs))
}

fn check_host(x: &VertexSet, y: &VertexSet, s: &BigRational) -> Result<()> {
    if s < &BigRational::from(BigInt::from(1)) {
        return Err(Error::InvalidArgument(format!("s must be >= 1, got {s}")));
    }
    if !x.is_subset_of(y) {
        return Err(Error::InvalidArgument("x must be a subset of the host y".into()));
    }
    Ok(())
}

/// 1-based rank of each element of `y` within `y` (by ground order).
fn rank_within(ground: &OrderedGround, y: &VertexSet) -> std::collections::HashMap<usize, usize> {
    ground
        .sort_by_rank(y)
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i + 1))
        .collect()
}
