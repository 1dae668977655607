//! Constructive witness extraction: backward degrees, the L/L1/L2/S
//! decomposition, degeneracy coloring of the light part, and the scaled
//! weight function that certifies a lower bound for the sampled subgraph.

use crate::error::{Error, Result};
use crate::graph::{validate_set, Graph, VertexSet};
use crate::interval::RatInterval;
use crate::lp::WeightFunction;
use crate::order::{self, OrderedGround};
use crate::ratio::{floor_usize, rat_json};
use num::rational::BigRational;
use num::{BigInt, One, Signed};
use serde_json::{json, Value};
use std::collections::HashMap;

/// The heavy/light split of a vertex set at backward-degree threshold x.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub a: VertexSet,
    pub x: BigRational,
    pub s: BigRational,
    /// Vertices of `a` with backward degree >= x.
    pub l: VertexSet,
    /// Heavy vertices that sit late within `a` (|V_i ∩ A| > 2j).
    pub l1: VertexSet,
    /// Heavy vertices whose global prefix is long (|V_i| > s |V_i ∩ A|).
    pub l2: VertexSet,
    /// The light remainder, every backward degree < x.
    pub s_set: VertexSet,
    pub backward_degrees: HashMap<usize, usize>,
    /// Whether L ⊆ L1 ∪ L2; guaranteed under the no-principal hypothesis.
    pub l_covered: bool,
}

impl Decomposition {
    pub fn to_json(&self) -> Value {
        let mut degs: Vec<(usize, usize)> =
            self.backward_degrees.iter().map(|(&v, &d)| (v, d)).collect();
        degs.sort();
        json!({
            "a": self.a.as_slice(),
            "x": rat_json(&self.x),
            "s": rat_json(&self.s),
            "l": self.l.as_slice(),
            "l1": self.l1.as_slice(),
            "l2": self.l2.as_slice(),
            "s_set": self.s_set.as_slice(),
            "backward_degrees": degs,
            "l_covered": self.l_covered,
        })
    }
}

/// d^>(v): neighbors of v inside `a` that precede v in the ground ordering.
pub fn backward_degrees(
    g: &Graph,
    ground: &OrderedGround,
    a: &VertexSet,
) -> Result<HashMap<usize, usize>> {
    validate_set(g, a)?;
    let mut out = HashMap::with_capacity(a.len());
    for v in a.iter() {
        let d = g
            .neighbors(v)
            .iter()
            .filter(|&&u| a.contains(u) && ground.rank[u] < ground.rank[v])
            .count();
        out.insert(v, d);
    }
    Ok(out)
}

pub fn decompose(
    g: &Graph,
    ground: &OrderedGround,
    a: &VertexSet,
    x: &BigRational,
    s: &BigRational,
) -> Result<Decomposition> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("threshold x must be positive, got {x}")));
    }
    if s < &BigRational::one() {
        return Err(Error::InvalidArgument(format!("s must be >= 1, got {s}")));
    }
    let degs = backward_degrees(g, ground, a)?;
    // L in ground order, so the j-th member has global rank i_j
    let mut heavy: Vec<usize> = a
        .iter()
        .filter(|&v| BigRational::from(BigInt::from(degs[&v])) >= *x)
        .collect();
    heavy.sort_by_key(|&v| ground.rank[v]);

    let mut l1 = Vec::new();
    let mut l2 = Vec::new();
    let mut covered = true;
    for (idx, &v) in heavy.iter().enumerate() {
        let j = idx + 1;
        let i_j = ground.rank[v];
        let prefix_in_a = ground.ordering[..i_j].iter().filter(|&&u| a.contains(u)).count();
        let in_l1 = prefix_in_a > 2 * j;
        // condition (2): the global prefix is more than s times its trace on A
        let in_l2 = BigRational::from(BigInt::from(i_j))
            > s * BigRational::from(BigInt::from(prefix_in_a));
        if in_l1 {
            l1.push(v);
        }
        if in_l2 {
            l2.push(v);
        }
        if !in_l1 && !in_l2 {
            covered = false;
        }
    }
    let l = VertexSet::new(heavy.clone(), g.n())?;
    let s_vertices: Vec<usize> = a.iter().filter(|v| !l.contains(*v)).collect();
    Ok(Decomposition {
        a: a.clone(),
        x: x.clone(),
        s: s.clone(),
        l,
        l1: VertexSet::new(l1, g.n())?,
        l2: VertexSet::new(l2, g.n())?,
        s_set: VertexSet::new(s_vertices, g.n())?,
        backward_degrees: degs,
        l_covered: covered,
    })
}

/// Checks the extraction hypothesis by enumerating the nonempty subsets of
/// `a`: none may be s-principal in V with average degree >= x in `g`.
/// Returns the violating set, if any. Capped at |a| <= 20.
pub fn find_hypothesis_violation(
    g: &Graph,
    ground: &OrderedGround,
    a: &VertexSet,
    x: &BigRational,
    s: &BigRational,
) -> Result<Option<VertexSet>> {
    if a.len() > 20 {
        return Err(Error::CapExceeded(format!(
            "hypothesis enumeration capped at |a| = 20, got {}",
            a.len()
        )));
    }
    let whole = VertexSet::full(g.n());
    let elems: Vec<usize> = a.iter().collect();
    for sub in 1u32..1 << elems.len() {
        let subset: Vec<usize> =
            (0..elems.len()).filter(|&i| sub >> i & 1 == 1).map(|i| elems[i]).collect();
        let subset = VertexSet::new(subset, g.n())?;
        if crate::graph::average_degree(g, &subset)? >= *x
            && order::is_principal(ground, &subset, &whole, s)?
        {
            return Ok(Some(subset));
        }
    }
    Ok(None)
}

/// Greedy-colors the light part S along the ground ordering and returns the
/// heaviest color class, an independent set of weight at least
/// (w(a)/2 - w(V)/s) / ⌊x+1⌋ under the no-principal hypothesis.
pub fn extract_heavy_independent(
    g: &Graph,
    ground: &OrderedGround,
    w: &WeightFunction,
    a: &VertexSet,
    x: &BigRational,
    s: &BigRational,
) -> Result<VertexSet> {
    if a.is_empty() {
        return Ok(VertexSet::empty());
    }
    if a.len() <= 20 {
        if let Some(bad) = find_hypothesis_violation(g, ground, a, x, s)? {
            return Err(Error::ContractViolation(format!(
                "set {:?} is {s}-principal with average degree >= {x}",
                bad.as_slice()
            )));
        }
    }
    let decomp = decompose(g, ground, a, x, s)?;
    let classes = color_along_order(g, ground, &decomp.s_set);
    let class_cap = floor_usize(x, usize::MAX) + 1;
    if classes.len() > class_cap {
        return Err(Error::Internal(format!(
            "coloring used {} classes, degeneracy allows at most {class_cap}",
            classes.len()
        )));
    }
    // heaviest class, ties to the smallest class index
    let best = classes
        .iter()
        .enumerate()
        .max_by(|(i, c1), (j, c2)| {
            w.set_weight(c1).cmp(&w.set_weight(c2)).then(j.cmp(i))
        })
        .map(|(_, c)| c.clone())
        .unwrap_or_else(VertexSet::empty);
    Ok(best)
}

/// Greedy coloring of `s_set` along the ground ordering: each vertex takes
/// the smallest class absent among its earlier neighbors in the set.
fn color_along_order(g: &Graph, ground: &OrderedGround, s_set: &VertexSet) -> Vec<VertexSet> {
    let mut by_rank: Vec<usize> = s_set.iter().collect();
    by_rank.sort_by_key(|&v| ground.rank[v]);
    let mut color: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_rank {
        let taken: Vec<usize> =
            g.neighbors(v).iter().filter_map(|u| color.get(u).copied()).collect();
        let mut c = 0;
        while taken.contains(&c) {
            c += 1;
        }
        color.insert(v, c);
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    classes
        .into_iter()
        .map(|cls| VertexSet::new(cls, g.n()).expect("class vertices valid"))
        .collect()
}

/// Lemma check: w(a) <= 2⌊x+1⌋ + 2 w(V)/s.
pub fn lemma6_weight_check(
    w: &WeightFunction,
    a: &VertexSet,
    x: &BigRational,
    s: &BigRational,
) -> Result<(bool, BigRational, BigRational)> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("threshold x must be positive, got {x}")));
    }
    let lhs = w.set_weight(a);
    let floor_x1 = floor_usize(&(x + BigRational::one()), usize::MAX);
    let rhs = BigRational::from(BigInt::from(2 * floor_x1))
        + BigRational::from(BigInt::from(2)) * w.total() / s;
    let holds = lhs <= rhs;
    Ok((holds, lhs, rhs))
}

/// The witness weight function w' = w / (2x+4), divided by the upper
/// endpoint so its dual-feasibility claims stay conservative.
pub fn scaled_weight_function(w: &WeightFunction, x: &RatInterval) -> Result<WeightFunction> {
    if !x.lo.is_positive() {
        return Err(Error::InvalidArgument("scale threshold x must be positive".into()));
    }
    let denom = BigRational::from(BigInt::from(2)) * &x.hi + BigRational::from(BigInt::from(4));
    let weights = w.weights.iter().map(|wv| wv / &denom).collect();
    Ok(WeightFunction::new(weights))
}
