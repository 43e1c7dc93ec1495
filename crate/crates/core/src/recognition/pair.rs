use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

pub const DEFAULT_DP_BRUTEFORCE_BOUND: usize = 12;

/// A pair `(x, y)` (possibly `x == y`) such that every `x,y`-path dominates
/// the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DominatingPair {
    pub x: Vertex,
    pub y: Vertex,
    pub verified: bool,
}

impl DominatingPair {
    /// A pair that has not been checked yet.
    pub fn unverified(x: Vertex, y: Vertex) -> Self {
        DominatingPair {
            x,
            y,
            verified: false,
        }
    }

    /// Runs the component criterion and records the outcome.
    pub fn verify(g: &Graph, x: Vertex, y: Vertex) -> Result<Self> {
        Ok(DominatingPair {
            x,
            y,
            verified: is_dominating_pair(g, x, y)?,
        })
    }
}

/// Component criterion restricted to `within`: for every `v` in `within` whose
/// closed neighborhood misses both `x` and `y`, removing `N[v]` must separate
/// `x` from `y` inside `within`. A path avoiding `N[v]` is exactly a path that
/// leaves `v` undominated.
pub(crate) fn pair_criterion_within(g: &Graph, within: &VertexSet, x: Vertex, y: Vertex) -> bool {
    for v in within {
        let mut closed = g.closed_neighbors(v);
        closed.intersect_with(within);
        if closed.contains(x) || closed.contains(y) {
            continue;
        }
        let rest = within.difference(&closed);
        if g.reach_within(x, &rest).contains(y) {
            return false;
        }
    }
    true
}

/// True when every `x,y`-path dominates `g`. Requires `g` connected.
pub fn is_dominating_pair(g: &Graph, x: Vertex, y: Vertex) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    g.require_connected()?;
    Ok(pair_criterion_within(g, &g.vertices(), x, y))
}

/// First verified pair `(x, y)` with `x <= y` in lexicographic order.
pub fn find_dominating_pair(g: &Graph) -> Result<Option<DominatingPair>> {
    g.require_connected()?;
    let all = g.vertices();
    for x in 0..g.n() {
        for y in x..g.n() {
            if pair_criterion_within(g, &all, x, y) {
                return Ok(Some(DominatingPair {
                    x,
                    y,
                    verified: true,
                }));
            }
        }
    }
    Ok(None)
}

/// Every verified pair `(x, y)` with `x <= y`.
pub fn all_dominating_pairs(g: &Graph) -> Result<Vec<DominatingPair>> {
    g.require_connected()?;
    let all = g.vertices();
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in x..g.n() {
            if pair_criterion_within(g, &all, x, y) {
                out.push(DominatingPair {
                    x,
                    y,
                    verified: true,
                });
            }
        }
    }
    Ok(out)
}

/// Smallest connected induced subgraph (by size, then lexicographically) that
/// has no dominating pair, or `None` when `g` is a dominating pair graph.
/// Exponential; refuses graphs above `bound` (and above 64) vertices.
pub fn dp_bruteforce_counterexample(g: &Graph, bound: usize) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > bound || n > 64 {
        return Err(Error::SizeGuard {
            n,
            bound: bound.min(64),
        });
    }
    let mut found = None;
    for k in 1..=n {
        crate::bitset::for_each_k_subset(n, k, |members| {
            let s = VertexSet::from_vertices(n, members.iter().copied());
            if !g.is_connected_within(&s) {
                return true;
            }
            let has_pair = members.iter().enumerate().any(|(i, &x)| {
                members[i..]
                    .iter()
                    .any(|&y| pair_criterion_within(g, &s, x, y))
            });
            if has_pair {
                true
            } else {
                found = Some(s);
                false
            }
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// True when every connected induced subgraph of `g` has a dominating pair.
pub fn is_dp_graph_bruteforce(g: &Graph, bound: usize) -> Result<bool> {
    Ok(dp_bruteforce_counterexample(g, bound)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, make_a1, path, star};

    #[test]
    fn pair_examples() {
        assert!(is_dominating_pair(&path(5), 0, 4).unwrap());
        assert!(is_dominating_pair(&cycle(6), 0, 3).unwrap());
        assert!(!is_dominating_pair(&cycle(7), 0, 3).unwrap());
        assert!(is_dominating_pair(&star(4), 0, 0).unwrap());
        assert!(!is_dominating_pair(&star(4), 1, 1).unwrap());
        assert!(is_dominating_pair(&star(4), 1, 2).unwrap());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            is_dominating_pair(&two, 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn find_pair_examples() {
        let p = find_dominating_pair(&path(6)).unwrap().unwrap();
        // 0-1-2-3-4 already dominates 5, so (0,4) precedes (0,5)
        assert_eq!((p.x, p.y), (0, 4));
        assert!(is_dominating_pair(&path(6), 0, 5).unwrap());
        for x in 0..6 {
            for y in x..6 {
                if (x, y) < (0, 4) {
                    assert!(!is_dominating_pair(&path(6), x, y).unwrap());
                }
            }
        }
        assert!(find_dominating_pair(&cycle(7)).unwrap().is_none());
        let p = find_dominating_pair(&complete(1)).unwrap().unwrap();
        assert_eq!((p.x, p.y), (0, 0));
    }

    #[test]
    fn dp_bruteforce_examples() {
        assert!(is_dp_graph_bruteforce(&path(4), 12).unwrap());
        assert!(is_dp_graph_bruteforce(&complete(5), 12).unwrap());
        let a1 = make_a1();
        assert!(find_dominating_pair(&a1).unwrap().is_none());
        assert_eq!(
            dp_bruteforce_counterexample(&a1, 12).unwrap(),
            Some(a1.vertices())
        );
        assert!(matches!(
            is_dp_graph_bruteforce(&path(13), 12),
            Err(Error::SizeGuard { .. })
        ));
    }
}
