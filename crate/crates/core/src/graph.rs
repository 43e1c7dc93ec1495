//! Simple undirected graphs over dense ids, all-pairs distances, and the basic
//! neighborhood and domination primitives.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::Vertex;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    dist: OnceLock<DistanceMatrix>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops, repeated edges and ids `>= n`
    /// are rejected; endpoint order does not matter.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            if !adj[u].insert(v) {
                return Err(Error::Precondition(format!("repeated edge {u}-{v}")));
            }
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            dist: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Accepts sets bound to a different universe as long as every member is a
    /// vertex of this graph, and rebinds them to `0..n`.
    pub fn check_set(&self, x: &VertexSet) -> Result<VertexSet> {
        if x.universe() == self.n {
            return Ok(x.clone());
        }
        let mut s = VertexSet::empty(self.n);
        for v in x {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing id
    /// order. The second value maps new ids back to the original ones.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = keep.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::empty(k); k];
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(keep).iter() {
                adj[i].insert(back[w]);
            }
        }
        (
            Graph {
                n: k,
                adj,
                dist: OnceLock::new(),
            },
            map,
        )
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    /// Empty when `start` itself is outside `within`.
    pub fn reach_within(&self, start: Vertex, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// True when `within` induces a connected subgraph (the empty set counts as
    /// connected).
    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(s) => self.reach_within(s, within).len() == within.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// All-pairs hop distances, computed on first use and cached.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| all_pairs_distances(self))
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.distances().get(u, v)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Precondition("graph is not connected".into()))
        }
    }
}

/// Hop counts between every ordered pair; `None` marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    /// Raw entry, [`DistanceMatrix::UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u) {
                if row[w] == DistanceMatrix::UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Largest distance in the graph, `None` when the graph is disconnected.
/// The empty graph has diameter 0.
pub fn diameter(g: &Graph) -> Option<u32> {
    let dm = g.distances();
    let mut best = 0;
    for u in 0..g.n() {
        for &x in dm.row(u) {
            if x == DistanceMatrix::UNREACHABLE {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

/// `N[X]`: every member of `x` together with all of their neighbors.
pub fn closed_neighborhood(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    let x = g.check_set(x)?;
    let mut out = x.clone();
    for v in &x {
        out.union_with(g.neighbors(v));
    }
    Ok(out)
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    Ok(closed_neighborhood(g, d)?.len() == g.n())
}

/// Vertices left undominated by `d`. Assumes `d` is bound to `g`.
pub(crate) fn undominated(g: &Graph, d: &VertexSet) -> VertexSet {
    let mut covered = d.clone();
    for v in d {
        covered.union_with(g.neighbors(v));
    }
    covered.complement()
}

/// `X`-private neighbors of `u`: vertices whose closed neighborhood meets `x`
/// exactly in `{u}`.
pub fn private_neighbors(g: &Graph, u: Vertex, x: &VertexSet) -> Result<VertexSet> {
    g.check_vertex(u)?;
    let x = g.check_set(x)?;
    if !x.contains(u) {
        return Err(Error::Precondition(format!("vertex {u} is not in {x}")));
    }
    let mut others = x.clone();
    others.remove(u);
    let mut out = VertexSet::empty(g.n());
    for w in g.closed_neighbors(u).iter() {
        if g.closed_neighbors(w).is_disjoint(&others) {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Parses the edge-list format: a `n m` header, then `m` lines `u v` with
/// `u < v < n`. `#` starts a comment, blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };

    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut adj: Vec<VertexSet> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        if !content.is_ascii() {
            let col = content.find(|c: char| !c.is_ascii()).unwrap_or(0) + 1;
            return Err(err(lineno, col, "non-ASCII character".into()));
        }
        let tokens: Vec<(usize, &str)> = tokens_with_columns(content);
        if tokens.is_empty() {
            continue;
        }
        last_line = lineno;
        if tokens.len() != 2 {
            let col = tokens.get(2).map_or(tokens[0].0, |t| t.0);
            return Err(err(
                lineno,
                col,
                format!("expected two integers, found {} fields", tokens.len()),
            ));
        }
        let parse = |(col, tok): (usize, &str)| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| {
                err(
                    lineno,
                    col,
                    format!("`{tok}` is not a non-negative integer"),
                )
            })
        };
        let a = parse(tokens[0])?;
        let b = parse(tokens[1])?;
        match header {
            None => {
                header = Some((a, b));
                adj = vec![VertexSet::empty(a); a];
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(err(
                        lineno,
                        tokens[0].0,
                        format!("more than the declared {m} edges"),
                    ));
                }
                if a >= n {
                    return Err(err(
                        lineno,
                        tokens[0].0,
                        format!("vertex {a} out of range for n = {n}"),
                    ));
                }
                if b >= n {
                    return Err(err(
                        lineno,
                        tokens[1].0,
                        format!("vertex {b} out of range for n = {n}"),
                    ));
                }
                if a == b {
                    return Err(err(lineno, tokens[0].0, format!("self-loop at vertex {a}")));
                }
                if a > b {
                    return Err(err(
                        lineno,
                        tokens[0].0,
                        format!("edge {a} {b} must be written with u < v"),
                    ));
                }
                if !adj[a].insert(b) {
                    return Err(err(lineno, tokens[0].0, format!("duplicate edge {a} {b}")));
                }
                adj[b].insert(a);
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| err(last_line.max(1), 1, "missing `n m` header".into()))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            1,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Ok(Graph {
        n,
        adj,
        dist: OnceLock::new(),
    })
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_ascii_whitespace() {
            if let Some(st) = start.take() {
                out.push((st + 1, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out
}

/// Canonical edge-list text: each comment line prefixed with `# `, then the
/// header, then edges in lexicographic order, LF line endings.
pub fn to_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
