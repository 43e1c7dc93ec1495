use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::Vertex;

/// Outcome of the chordality test, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Chordality {
    /// Each vertex's neighbors later in `peo` form a clique.
    Chordal { peo: Vec<Vertex> },
    /// A chordless cycle with at least four vertices, in cyclic order.
    NotChordal { cycle: Vec<Vertex> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lexicographic BFS visit order. Ties between equal labels go to the
/// smallest vertex id, so the order is deterministic.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .fold(None::<Vertex>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !done[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Checks that every vertex's later neighbors form a clique, using the
/// parent test: the earliest later neighbor must see all the others.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<Vertex> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Finds a chordless cycle of length at least four, if one exists. A vertex
/// `v` with non-adjacent neighbors `a`, `b` that stay connected after deleting
/// the rest of `N[v]` closes one through a shortest `a,b`-path.
pub fn find_induced_long_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<Vertex> = g.neighbors(v).iter().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = g.closed_neighbors(v).complement();
                allowed.insert(a);
                allowed.insert(b);
                if let Some(p) = shortest_path_within(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// BFS shortest path from `s` to `t` through `allowed`, lowest ids first.
pub(crate) fn shortest_path_within(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    allowed: &VertexSet,
) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    parent[s] = s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut p = vec![t];
            let mut c = t;
            while c != s {
                c = parent[c];
                p.push(c);
            }
            p.reverse();
            return Some(p);
        }
        for w in g.neighbors(u).intersection(allowed).iter() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        Chordality::Chordal { peo }
    } else {
        let cycle =
            find_induced_long_cycle(g).expect("LexBFS order failed, so a chordless cycle exists");
        Chordality::NotChordal { cycle }
    }
}
