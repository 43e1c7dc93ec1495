//! Depth-first search over the shortest `a,b`-paths for one whose vertices
//! dominate everything outside a tolerated set.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::Vertex;

struct Search<'g> {
    g: &'g Graph,
    dm: &'g DistanceMatrix,
    b: Vertex,
    len: u32,
    /// `dead[j]`: vertices that no path vertex at layer `j` or later can dominate.
    dead: Vec<VertexSet>,
    failed: HashSet<(Vertex, VertexSet)>,
    expansions: u64,
    cap: u64,
    path: Vec<Vertex>,
}

impl Search<'_> {
    /// Extends the path ending at `u` (layer `layer`) given the required
    /// vertices still undominated.
    fn extend(&mut self, u: Vertex, layer: u32, pending: VertexSet) -> Result<bool> {
        self.expansions += 1;
        if self.expansions > self.cap {
            return Err(Error::ResourceExhausted { cap: self.cap });
        }
        if layer == self.len {
            return Ok(pending.is_empty());
        }
        if self.failed.contains(&(u, pending.clone())) {
            return Ok(false);
        }
        let next_layer = layer + 1;
        let rest = self.len - next_layer;
        let nexts: Vec<Vertex> = self
            .g
            .neighbors(u)
            .iter()
            .filter(|&w| self.dm.raw(self.b, w) == rest)
            .collect();
        for w in nexts {
            let mut p = pending.clone();
            p.difference_with(self.g.neighbors(w));
            p.remove(w);
            if p.intersects(&self.dead[(next_layer + 1) as usize]) {
                continue;
            }
            self.path.push(w);
            if self.extend(w, next_layer, p)? {
                return Ok(true);
            }
            self.path.pop();
        }
        self.failed.insert((u, pending));
        Ok(false)
    }
}

/// Shortest `a,b`-path (of length `len`) whose vertices dominate every vertex
/// outside `tolerated`. Returns the lexicographically first such path as a
/// vertex sequence, `None` when there is none, and a resource error when the
/// search needs more than `cap` node expansions.
pub fn find_shortest_path_within_tolerance(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    len: u32,
    tolerated: &VertexSet,
    cap: u64,
) -> Result<Option<Vec<Vertex>>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let dm = g.distances();
    if dm.get(a, b) != Some(len) {
        return Err(Error::Precondition(format!(
            "d({a},{b}) is {:?}, not {len}",
            dm.get(a, b)
        )));
    }
    let n = g.n();
    let on_geodesic = |w: Vertex| {
        let (x, y) = (dm.raw(a, w), dm.raw(w, b));
        x != DistanceMatrix::UNREACHABLE && y != DistanceMatrix::UNREACHABLE && x + y == len
    };

    // deepest layer of a geodesic vertex in N[w], per vertex
    let mut reach: Vec<Option<u32>> = vec![None; n];
    for (w, slot) in reach.iter_mut().enumerate() {
        for v in g.closed_neighbors(w).iter().filter(|&v| on_geodesic(v)) {
            let l = dm.raw(a, v);
            *slot = Some(slot.map_or(l, |m: u32| m.max(l)));
        }
    }
    let mut dead = vec![VertexSet::empty(n); len as usize + 2];
    for (j, set) in dead.iter_mut().enumerate() {
        for (w, r) in reach.iter().enumerate() {
            if r.is_none_or(|m| (m as usize) < j) {
                set.insert(w);
            }
        }
    }

    let mut pending = tolerated.complement();
    pending.difference_with(&g.closed_neighbors(a));
    if pending.intersects(&dead[1]) {
        return Ok(None);
    }
    let mut search = Search {
        g,
        dm,
        b,
        len,
        dead,
        failed: HashSet::new(),
        expansions: 0,
        cap,
        path: vec![a],
    };
    Ok(search.extend(a, 0, pending)?.then_some(search.path))
}

/// Shortest `a,b`-path of length `len` whose vertex set dominates `g`.
pub fn find_dominating_shortest_path(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    len: u32,
    cap: u64,
) -> Result<Option<Vec<Vertex>>> {
    find_shortest_path_within_tolerance(g, a, b, len, &VertexSet::empty(g.n()), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::DEFAULT_PATH_CAP;
    use crate::generators::{cycle, path};
    use crate::graph::is_dominating;

    #[test]
    fn path_examples() {
        assert_eq!(
            find_dominating_shortest_path(&path(6), 1, 4, 3, DEFAULT_PATH_CAP).unwrap(),
            Some(vec![1, 2, 3, 4])
        );
        assert_eq!(
            find_dominating_shortest_path(&cycle(6), 0, 3, 3, DEFAULT_PATH_CAP).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(
            find_dominating_shortest_path(&cycle(7), 0, 3, 3, DEFAULT_PATH_CAP).unwrap(),
            None
        );
    }

    #[test]
    fn precondition_and_cap() {
        assert!(matches!(
            find_dominating_shortest_path(&path(6), 1, 4, 2, DEFAULT_PATH_CAP),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_dominating_shortest_path(&path(6), 0, 5, 5, 2),
            Err(Error::ResourceExhausted { cap: 2 })
        ));
    }

    #[test]
    fn tolerance_lets_ends_go_undominated() {
        // P7: path 1..5 leaves nothing out; path 2..5 misses 0 only
        let g = path(7);
        let tol = VertexSet::from_vertices(7, [0]);
        assert_eq!(
            find_shortest_path_within_tolerance(&g, 2, 5, 3, &tol, DEFAULT_PATH_CAP).unwrap(),
            Some(vec![2, 3, 4, 5])
        );
        assert_eq!(
            find_dominating_shortest_path(&g, 2, 5, 3, DEFAULT_PATH_CAP).unwrap(),
            None
        );
    }

    /// Every shortest a,b-path, by plain DFS over the distance layers.
    fn all_shortest_paths(g: &Graph, a: Vertex, b: Vertex) -> Vec<Vec<Vertex>> {
        let d = g.distance(a, b).unwrap();
        let mut out = Vec::new();
        let mut stack = vec![vec![a]];
        while let Some(p) = stack.pop() {
            let u = *p.last().unwrap();
            if u == b {
                out.push(p);
                continue;
            }
            let l = p.len() as u32;
            for w in g.neighbors(u) {
                if g.distance(a, w) == Some(l) && g.distance(w, b) == Some(d - l) {
                    let mut q = p.clone();
                    q.push(w);
                    stack.push(q);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn agrees_with_enumerating_every_shortest_path() {
        for seed in 0..120 {
            let g = crate::generators::random_connected(10, seed, 0.25);
            for a in 0..g.n() {
                for b in 0..g.n() {
                    let d = g.distance(a, b).unwrap();
                    let expected = all_shortest_paths(&g, a, b).into_iter().find(|p| {
                        is_dominating(&g, &VertexSet::from_vertices(g.n(), p.iter().copied()))
                            .unwrap()
                    });
                    let got = find_dominating_shortest_path(&g, a, b, d, DEFAULT_PATH_CAP).unwrap();
                    assert_eq!(got, expected, "seed {seed} a {a} b {b}");
                }
            }
        }
    }
}
