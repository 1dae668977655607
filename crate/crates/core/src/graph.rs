//! Undirected simple graphs on indexed vertices, generators for the test
//! instances, and the structural queries the rest of the crate builds on.

use crate::error::{Error, Result};
use num::rational::BigRational;
use num::{BigInt, Zero};

/// Hard cap on vertex count for graph construction. Downstream modules
/// enforce much lower caps of their own.
pub const DEFAULT_MAX_N: usize = 10_000;

/// Immutable undirected simple graph. Vertices are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// For Kneser graphs: the k-subset behind each vertex index.
    subset_labels: Option<Vec<Vec<usize>>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        Self::with_cap(n, edges, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: usize, edges: Vec<(usize, usize)>, max_n: usize) -> Result<Graph> {
        if n > max_n {
            return Err(Error::CapExceeded(format!("n = {n} exceeds cap {max_n}")));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj, subset_labels: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbor bitmasks, available when `n <= 64`. The enumeration modules
    /// rely on these for fast independence tests.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }

    /// Kneser subset labels, when this graph was built by [`kneser_graph`].
    pub fn subset_labels(&self) -> Option<&[Vec<usize>]> {
        self.subset_labels.as_deref()
    }
}

/// Sorted, duplicate-free set of vertex indices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    indices: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<VertexSet> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::InvalidArgument(format!(
                    "vertex {last} out of range for n = {n}"
                )));
            }
        }
        Ok(VertexSet { indices })
    }

    pub fn empty() -> VertexSet {
        VertexSet { indices: Vec::new() }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet { indices: (0..n).collect() }
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet { indices: (0..64).filter(|&i| mask >> i & 1 == 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indices.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.indices.iter().all(|&v| other.contains(v))
    }

    pub fn mask(&self) -> Option<u64> {
        if self.indices.last().is_some_and(|&v| v >= 64) {
            return None;
        }
        Some(self.indices.iter().fold(0u64, |m, &v| m | 1 << v))
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle graph needs n >= 3".into()));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, edges)
}

/// Edgeless graph on `n` vertices.
pub fn edgeless_graph(n: usize) -> Result<Graph> {
    Graph::new(n, Vec::new())
}

/// Kneser graph K(n, k): vertices are the k-subsets of {1..n} in
/// lexicographic order, adjacent iff disjoint.
pub fn kneser_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidArgument(format!(
            "kneser graph needs n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    let subsets = k_subsets(n, k);
    let count = subsets.len();
    let mut edges = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            if disjoint_sorted(&subsets[i], &subsets[j]) {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(count, edges)?;
    g.subset_labels = Some(subsets);
    Ok(g)
}

/// All k-subsets of {1..n} in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn disjoint_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Mycielski construction: original vertices 0..n, shadow of v at n+v,
/// apex at 2n. Shadow of v is adjacent to the original neighbors of v;
/// the apex is adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for v in 0..n {
        edges.push((n + v, 2 * n));
    }
    Graph::new(2 * n + 1, edges)
}

/// Induced subgraph on `a`, with the map from new indices back to `g`.
pub fn induced_subgraph(g: &Graph, a: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    validate_set(g, a)?;
    let map_back: Vec<usize> = a.iter().collect();
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, &v) in map_back.iter().enumerate() {
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| a.contains(u) && a.contains(v))
        .map(|&(u, v)| (new_index[u], new_index[v]))
        .collect();
    Ok((Graph::new(map_back.len(), edges)?, map_back))
}

/// Number of edges of `g` with both endpoints in `a`.
pub fn edge_count_within(g: &Graph, a: &VertexSet) -> Result<usize> {
    validate_set(g, a)?;
    Ok(g.edges().iter().filter(|&&(u, v)| a.contains(u) && a.contains(v)).count())
}

/// Average degree of the induced subgraph on `a`: `2 e(a) / |a|`.
pub fn average_degree(g: &Graph, a: &VertexSet) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("average degree of empty set".into()));
    }
    let e = edge_count_within(g, a)?;
    Ok(BigRational::new(BigInt::from(2 * e), BigInt::from(a.len())))
}

/// Degeneracy ordering: repeatedly remove a minimum-degree vertex (ties by
/// smallest index). Returns the removal order and the degeneracy d, the
/// maximum degree seen at removal time.
pub fn degeneracy_ordering(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    (order, d)
}

/// Greedy proper coloring along the reverse of `order`; each vertex takes
/// the smallest color unused by already-colored neighbors. Returns colors
/// and the number of colors used.
pub fn greedy_color_reverse(g: &Graph, order: &[usize]) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in order.iter().rev() {
        let taken: Vec<usize> =
            g.neighbors(v).iter().filter_map(|&u| (color[u] != usize::MAX).then_some(color[u])).collect();
        let mut c = 0;
        while taken.contains(&c) {
            c += 1;
        }
        color[v] = c;
        used = used.max(c + 1);
    }
    (color, used)
}

pub(crate) fn validate_set(g: &Graph, a: &VertexSet) -> Result<()> {
    if let Some(&last) = a.as_slice().last() {
        if last >= g.n() {
            return Err(Error::InvalidArgument(format!(
                "vertex {last} out of range for n = {}",
                g.n()
            )));
        }
    }
    Ok(())
}

/// True iff `g` contains a triangle. Exhaustive scan; test-instance sized
/// graphs only.
pub fn has_triangle(g: &Graph) -> bool {
    for &(u, v) in g.edges() {
        for &w in g.neighbors(u) {
            if w != v && g.has_edge(v, w) {
                return true;
            }
        }
    }
    false
}

pub fn rational_is_zero(r: &BigRational) -> bool {
    r.is_zero()
}
