#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use convdom::generators::{self, complete, cycle, make_a1, make_bn, path, star};
use convdom::{Graph, VertexSet};

/// Distances by Floyd–Warshall over the edge list, independent of the
/// library's BFS. `None` means unreachable.
pub fn floyd(g: &Graph, keep: Option<&VertexSet>) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let inside = |v: usize| keep.is_none_or(|k| k.contains(v));
    let mut d = vec![vec![None; n]; n];
    for v in (0..n).filter(|&v| inside(v)) {
        d[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        if inside(u) && inside(v) {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn dominates(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|w| s.contains(w)))
}

/// Convex straight from the definition: every vertex on a geodesic between
/// two members is a member.
pub fn convex_naive(d: &[Vec<Option<u32>>], s: &VertexSet) -> bool {
    let n = d.len();
    for u in s.iter() {
        for v in s.iter() {
            let Some(duv) = d[u][v] else { continue };
            for w in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if a + b == duv && !s.contains(w) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn isometric_naive(g: &Graph, d: &[Vec<Option<u32>>], s: &VertexSet) -> bool {
    let inner = floyd(g, Some(s));
    s.iter().all(|u| s.iter().all(|v| inner[u][v] == d[u][v]))
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

/// Smallest cardinality of a set accepted by `accept`, by scanning all
/// subsets.
pub fn min_accepted(n: usize, accept: impl Fn(&VertexSet) -> bool) -> Option<usize> {
    subsets(n).filter(|s| accept(s)).map(|s| s.len()).min()
}

pub fn gamma_con_naive(g: &Graph) -> usize {
    let d = floyd(g, None);
    min_accepted(g.n(), |s| {
        !s.is_empty() && dominates(g, s) && convex_naive(&d, s)
    })
    .unwrap()
}

pub fn gamma_iso_naive(g: &Graph) -> usize {
    let d = floyd(g, None);
    min_accepted(g.n(), |s| {
        !s.is_empty() && dominates(g, s) && isometric_naive(g, &d, s)
    })
    .unwrap()
}

/// Every simple `x,y`-path dominates `g`, by depth-first enumeration. Stops
/// at the first path that leaves a vertex undominated.
pub fn pair_by_paths(g: &Graph, x: usize, y: usize) -> bool {
    fn walk(g: &Graph, u: usize, y: usize, on: &mut VertexSet) -> bool {
        if u == y {
            return dominates(g, on);
        }
        for w in g.neighbors(u).iter() {
            if on.contains(w) {
                continue;
            }
            on.insert(w);
            let ok = walk(g, w, y, on);
            on.remove(w);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut on = VertexSet::singleton(g.n(), x);
    walk(g, x, y, &mut on)
}

pub fn connected_naive(g: &Graph, s: &VertexSet) -> bool {
    let d = floyd(g, Some(s));
    let Some(f) = s.first() else { return true };
    s.iter().all(|v| d[f][v].is_some())
}

/// Graphs with a fixed shape plus small seeded random instances of every
/// random family, each at most `max_n` vertices.
pub fn corpus(max_n: usize, seeds: u64) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=max_n {
        out.push((format!("path{n}"), path(n)));
        out.push((format!("complete{n}"), complete(n)));
        if n >= 3 {
            out.push((format!("cycle{n}"), cycle(n)));
        }
        if n >= 2 {
            out.push((format!("star{}", n - 1), star(n - 1)));
        }
    }
    if max_n >= 7 {
        out.push(("A1".into(), make_a1()));
    }
    for k in 1..=max_n.saturating_sub(5) {
        out.push((format!("B{k}"), make_bn(k).unwrap()));
    }
    for seed in 0..seeds {
        for n in 2..=max_n {
            let d = [0.15, 0.35, 0.6][(seed % 3) as usize];
            out.push((
                format!("chordal n{n} s{seed}"),
                generators::random_chordal(n, seed, d),
            ));
            out.push((
                format!("split n{n} s{seed}"),
                generators::random_split(n, seed, d),
            ));
            out.push((
                format!("interval n{n} s{seed}"),
                generators::random_interval(n, seed, d),
            ));
            out.push((
                format!("connected n{n} s{seed}"),
                generators::random_connected(n, seed, d),
            ));
        }
    }
    out
}

/// `g` with the edge `{u, v}` toggled.
pub fn toggle_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u.min(v), u.max(v))).collect();
    if !g.has_edge(u, v) {
        edges.push((u, v));
    }
    Graph::new(g.n(), edges).unwrap()
}
