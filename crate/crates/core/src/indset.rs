//! Independent set testing and enumeration. Maximal sets feed the LP as
//! constraints; the full family is the exhaustive oracle for tiny graphs.

use crate::error::{Error, Result};
use crate::graph::{validate_set, Graph, VertexSet};
use serde_json::Value;

/// Default vertex cap for maximal-set enumeration.
pub const DEFAULT_MAXIMAL_CAP: usize = 40;
/// Default vertex cap for enumerating every independent set.
pub const DEFAULT_ALL_CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct IndependentSetFamily {
    pub sets: Vec<VertexSet>,
    pub maximal_only: bool,
}

impl IndependentSetFamily {
    /// JSON form: array of index arrays.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sets
                .iter()
                .map(|s| Value::Array(s.iter().map(|v| Value::from(v as u64)).collect()))
                .collect(),
        )
    }
}

pub fn is_independent(g: &Graph, a: &VertexSet) -> Result<bool> {
    validate_set(g, a)?;
    for v in a.iter() {
        // sorted-list intersection walk
        let mut it = a.as_slice().iter().peekable();
        for &u in g.neighbors(v) {
            if u <= v {
                continue;
            }
            while let Some(&&w) = it.peek() {
                if w < u {
                    it.next();
                } else {
                    break;
                }
            }
            if it.peek() == Some(&&u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn maximal_independent_sets(g: &Graph) -> Result<IndependentSetFamily> {
    maximal_independent_sets_with_cap(g, DEFAULT_MAXIMAL_CAP)
}

/// Bron-Kerbosch with pivoting, run on complement adjacency expressed as
/// bitmask "non-neighbor" candidate filtering. The complement's edge list is
/// never built.
pub fn maximal_independent_sets_with_cap(g: &Graph, cap: usize) -> Result<IndependentSetFamily> {
    if g.n() > cap {
        return Err(Error::CapExceeded(format!(
            "maximal independent set enumeration capped at n = {cap}, got {}",
            g.n()
        )));
    }
    let masks = g
        .adjacency_masks()
        .ok_or_else(|| Error::CapExceeded("enumeration requires n <= 64".into()))?;
    let full: u64 = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    let mut out: Vec<u64> = Vec::new();
    bron_kerbosch(&masks, 0, full, 0, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    Ok(IndependentSetFamily { sets, maximal_only: true })
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot: vertex of P ∪ X with fewest candidate non-neighbors in P
    let pivot = iter_bits(p | x)
        .min_by_key(|&u| (p & !adj[u] & !(1 << u)).count_ones())
        .expect("p | x nonempty");
    // branch on P minus the pivot's complement-neighborhood
    let branch = p & (adj[pivot] | 1 << pivot);
    let mut p = p;
    let mut x = x;
    for v in iter_bits(branch) {
        let bit = 1u64 << v;
        let keep = !adj[v] & !bit;
        bron_kerbosch(adj, r | bit, p & keep, x & keep, out);
        p &= !bit;
        x |= bit;
    }
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn all_independent_sets(g: &Graph) -> Result<IndependentSetFamily> {
    all_independent_sets_with_cap(g, DEFAULT_ALL_CAP)
}

pub fn all_independent_sets_with_cap(g: &Graph, cap: usize) -> Result<IndependentSetFamily> {
    if g.n() > cap {
        return Err(Error::CapExceeded(format!(
            "full independent set enumeration capped at n = {cap}, got {}",
            g.n()
        )));
    }
    let masks = g
        .adjacency_masks()
        .ok_or_else(|| Error::CapExceeded("enumeration requires n <= 64".into()))?;
    let mut sets = Vec::new();
    for sub in 0u64..1 << g.n() {
        if iter_bits(sub).all(|v| masks[v] & sub == 0) {
            sets.push(VertexSet::from_mask(sub));
        }
    }
    sets.sort();
    Ok(IndependentSetFamily { sets, maximal_only: false })
}
