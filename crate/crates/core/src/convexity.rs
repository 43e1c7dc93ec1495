//! Geodesic intervals, convex hulls, and the convex / isometric set predicates.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::Vertex;

/// Distance layers around every vertex: `layers[u][k]` holds the vertices at
/// distance exactly `k` from `u`.
fn distance_layers(g: &Graph) -> Vec<Vec<VertexSet>> {
    let dm = g.distances();
    (0..g.n())
        .map(|u| {
            let mut layers: Vec<VertexSet> = Vec::new();
            for (w, &d) in dm.row(u).iter().enumerate() {
                if d == DistanceMatrix::UNREACHABLE {
                    continue;
                }
                let d = d as usize;
                while layers.len() <= d {
                    layers.push(VertexSet::empty(g.n()));
                }
                layers[d].insert(w);
            }
            layers
        })
        .collect()
}

/// Precomputed intervals for every pair of vertices. Solvers build one of
/// these per graph and then query hulls and convexity many times.
pub struct Geodesics<'g> {
    g: &'g Graph,
    table: Vec<VertexSet>,
}

impl<'g> Geodesics<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let layers = distance_layers(g);
        let dm = g.distances();
        let mut table = vec![VertexSet::empty(n); n * n];
        for u in 0..n {
            for v in u..n {
                let Some(d) = dm.get(u, v) else { continue };
                let d = d as usize;
                let mut s = VertexSet::empty(n);
                for k in 0..=d {
                    s.union_with(&layers[u][k].intersection(&layers[v][d - k]));
                }
                table[v * n + u] = s.clone();
                table[u * n + v] = s;
            }
        }
        Geodesics { g, table }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Empty for vertices in different components.
    #[inline]
    pub fn interval(&self, u: Vertex, v: Vertex) -> &VertexSet {
        &self.table[u * self.g.n() + v]
    }

    /// Hull by interval closure, one snapshot per round. The caller has
    /// already checked the seed is nonempty and within one component.
    fn closure(&self, seed: &VertexSet, mut on_round: impl FnMut(&VertexSet)) -> VertexSet {
        let mut hull = seed.clone();
        let mut frontier = seed.clone();
        on_round(&hull);
        loop {
            let mut added = VertexSet::empty(self.g.n());
            for u in &frontier {
                for v in &hull {
                    added.union_with(self.interval(u, v));
                }
            }
            added.difference_with(&hull);
            if added.is_empty() {
                return hull;
            }
            hull.union_with(&added);
            on_round(&hull);
            frontier = added;
        }
    }

    /// Convex hull without a trace. Seeds spanning components keep only the
    /// closure of each component; use [`convex_hull`] for checked input.
    pub fn hull(&self, seed: &VertexSet) -> VertexSet {
        self.closure(seed, |_| {})
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| {
            s.iter()
                .filter(|&v| v > u)
                .all(|v| self.interval(u, v).is_subset(s))
        })
    }
}

/// The chain of sets produced while closing a seed under intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullTrace {
    rounds: Vec<VertexSet>,
}

impl HullTrace {
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    pub fn seed(&self) -> &VertexSet {
        &self.rounds[0]
    }

    pub fn hull(&self) -> &VertexSet {
        self.rounds.last().expect("trace holds at least the seed")
    }

    /// Vertices that entered in each round after the seed.
    pub fn added_per_round(&self) -> Vec<VertexSet> {
        self.rounds
            .windows(2)
            .map(|w| w[1].difference(&w[0]))
            .collect()
    }
}

/// `I(u, v)`: every vertex on some shortest `u,v`-path.
pub fn interval(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let dm = g.distances();
    let d = dm.get(u, v).ok_or(Error::NoPath(u, v))?;
    let mut out = VertexSet::empty(g.n());
    for w in 0..g.n() {
        let (a, b) = (dm.raw(u, w), dm.raw(w, v));
        if a != DistanceMatrix::UNREACHABLE && b != DistanceMatrix::UNREACHABLE && a + b == d {
            out.insert(w);
        }
    }
    Ok(out)
}

fn check_single_component(g: &Graph, t: &VertexSet) -> Result<Vertex> {
    let first = t
        .first()
        .ok_or_else(|| Error::Precondition("convex hull of the empty set".into()))?;
    let dm = g.distances();
    for v in t {
        if dm.get(first, v).is_none() {
            return Err(Error::NoPath(first, v));
        }
    }
    Ok(first)
}

/// Convex hull of `t` together with the rounds of the closure.
pub fn convex_hull(g: &Graph, t: &VertexSet) -> Result<HullTrace> {
    let t = g.check_set(t)?;
    check_single_component(g, &t)?;
    let geo = Geodesics::new(g);
    Ok(convex_hull_with(&geo, &t))
}

/// As [`convex_hull`], reusing a precomputed interval table.
pub fn convex_hull_with(geo: &Geodesics<'_>, t: &VertexSet) -> HullTrace {
    let mut rounds = Vec::new();
    geo.closure(t, |s| rounds.push(s.clone()));
    HullTrace { rounds }
}

/// True when every shortest path between two members (in the same component)
/// stays inside `s`.
pub fn is_convex(g: &Graph, s: &VertexSet) -> bool {
    let Ok(s) = g.check_set(s) else { return false };
    let dm = g.distances();
    for u in &s {
        for v in s.iter().filter(|&v| v > u) {
            if dm.get(u, v).is_some() {
                let i = interval(g, u, v).expect("connected pair");
                if !i.is_subset(&s) {
                    return false;
                }
            }
        }
    }
    true
}

/// True when distances inside the subgraph induced by `s` equal the distances
/// in `g` for every pair of members.
pub fn is_isometric(g: &Graph, s: &VertexSet) -> bool {
    let Ok(s) = g.check_set(s) else { return false };
    let dm = g.distances();
    for u in &s {
        // BFS restricted to s, one layer at a time
        let mut seen = VertexSet::singleton(g.n(), u);
        let mut frontier = seen.clone();
        let mut depth = 0u32;
        while !frontier.is_empty() {
            for w in &frontier {
                if dm.raw(u, w) != depth {
                    return false;
                }
            }
            let mut next = VertexSet::empty(g.n());
            for w in &frontier {
                next.union_with(g.neighbors(w));
            }
            next.intersect_with(&s);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
            depth += 1;
        }
        // members unreachable inside s must be unreachable in g too
        for w in s.difference(&seen).iter() {
            if dm.get(u, w).is_some() {
                return false;
            }
        }
    }
    true
}
