use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_BOUND: usize = 32;

pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| s.difference(&g.closed_neighbors(v)).is_empty())
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

/// Visits cliques in lexicographic order of their ascending member lists.
/// `visit` sees every clique that could still reach `floor` vertices and
/// returns the new floor.
fn clique_search(
    g: &Graph,
    current: &mut VertexSet,
    cand: VertexSet,
    floor: &mut usize,
    visit: &mut dyn FnMut(&VertexSet) -> usize,
) {
    *floor = visit(current);
    for v in cand.iter() {
        let mut rest = cand.clone();
        // only extend with larger ids to keep each clique visited once
        for w in cand.iter().take_while(|&w| w <= v) {
            rest.remove(w);
        }
        rest.intersect_with(g.neighbors(v));
        if current.len() + 1 + rest.len() < *floor {
            continue;
        }
        current.insert(v);
        clique_search(g, current, rest, floor, visit);
        current.remove(v);
    }
}

/// A maximum clique, lexicographically smallest among the maximum ones.
/// Exhaustive; refuses graphs with more than `bound` vertices.
pub fn maximum_clique(g: &Graph, bound: usize) -> Result<VertexSet> {
    if g.n() > bound {
        return Err(Error::SizeGuard { n: g.n(), bound });
    }
    let mut best = VertexSet::empty(g.n());
    let mut floor = 0;
    let mut current = VertexSet::empty(g.n());
    clique_search(g, &mut current, g.vertices(), &mut floor, &mut |c| {
        if c.len() > best.len() {
            best = c.clone();
        }
        best.len() + 1
    });
    Ok(best)
}

/// All maximum cliques in lexicographic order.
pub fn maximum_cliques(g: &Graph, bound: usize) -> Result<Vec<VertexSet>> {
    let omega = maximum_clique(g, bound)?.len();
    let mut out = Vec::new();
    let mut floor = omega;
    let mut current = VertexSet::empty(g.n());
    clique_search(g, &mut current, g.vertices(), &mut floor, &mut |c| {
        if c.len() == omega {
            out.push(c.clone());
        }
        omega
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique.universe() == g.n()
            && self.independent.universe() == g.n()
            && self.clique.is_disjoint(&self.independent)
            && self.clique.union(&self.independent) == g.vertices()
            && is_clique(g, &self.clique)
            && is_independent(g, &self.independent)
    }
}

/// Degree-sequence split test: with degrees sorted descending and `m` the
/// largest index where `d_m >= m - 1`, the graph is split iff the top `m`
/// vertices account for exactly `m(m-1)` plus the degree sum of the rest.
/// Returns the top-`m` vertices as a candidate clique.
fn degree_sequence_clique(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n)
        .filter(|&i| deg[i] >= i)
        .map(|i| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    (head == m * m.saturating_sub(1) + tail)
        .then(|| VertexSet::from_vertices(n, order[..m].iter().copied()))
}

/// A clique/independent partition whose clique side is a maximum clique, or
/// `None` when the graph is not split. Among valid maximum cliques the
/// lexicographically smallest is used when the graph is small enough to
/// enumerate them.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let fallback = degree_sequence_clique(g)?;
    let clique = match maximum_cliques(g, DEFAULT_CLIQUE_BOUND) {
        Ok(all) => all
            .into_iter()
            .find(|c| is_independent(g, &c.complement()))
            .unwrap_or(fallback),
        Err(_) => fallback,
    };
    let p = SplitPartition {
        independent: clique.complement(),
        clique,
    };
    debug_assert!(p.is_valid_for(g));
    Some(p)
}
