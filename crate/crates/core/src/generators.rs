//! Deterministic graph families and seeded random generators.
//!
//! Every random family draws from ChaCha8 seeded with `seed_from_u64(seed)`.
//! The algorithm id [`RNG_ALGORITHM`] is written into every emitted fixture so
//! a file can always be regenerated bit-for-bit.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{to_edge_list, Graph};
use crate::recognition;
use crate::Vertex;

pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("generator produced a simple graph")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    build(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
}

/// `K_{1,leaves}` with the center at 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The spider with three legs of length two: center 0, legs 0-1-2, 0-3-4, 0-5-6.
pub fn make_a1() -> Graph {
    build(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
}

/// `B_n`: bottom path `0..=n+2`, apex `n+3` adjacent to the internal path
/// vertices `1..=n+1`, and a pendant `n+4` hanging off the apex.
pub fn make_bn(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Precondition("B_n needs n >= 1".into()));
    }
    let apex = n + 3;
    let pendant = n + 4;
    let bottom = (0..n + 2).map(|i| (i, i + 1));
    let spokes = (1..=n + 1).map(|i| (i, apex));
    Ok(build(n + 5, bottom.chain(spokes).chain([(apex, pendant)])))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    build(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// Connected chordal graph. Each new vertex is joined to a random clique
/// grown inside the closed neighborhood of a random earlier vertex, so the
/// reverse insertion order is a perfect elimination ordering. Larger
/// `density` grows larger cliques.
pub fn random_chordal(n: usize, seed: u64, density: f64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut cand = adj[anchor].clone();
        cand.shuffle(&mut rng);
        for w in cand {
            if rng.gen_bool(density) && clique.iter().all(|c| adj[*c].contains(&w)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    build(n, edges)
}

/// Connected split graph: a clique of random size, every independent vertex
/// joined to one random clique vertex plus each other with probability
/// `density`, then randomly relabelled.
pub fn random_split(n: usize, seed: u64, density: f64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng(seed);
    let k = rng.gen_range(1..=n);
    let mut edges: Vec<(Vertex, Vertex)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    for i in k..n {
        let forced = rng.gen_range(0..k);
        for c in 0..k {
            if c == forced || rng.gen_bool(density) {
                edges.push((c, i));
            }
        }
    }
    let g = build(n, edges);
    relabel(&g, &mut rng)
}

/// Connected interval graph. Intervals are laid left to right, each starting
/// inside the span covered so far; `density` scales the interval lengths
/// (small values give long, path-like graphs).
pub fn random_interval(n: usize, seed: u64, density: f64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng(seed);
    let max_len = 1 + (density * n as f64).round() as u64;
    let mut iv: Vec<(u64, u64)> = Vec::with_capacity(n);
    let mut left = 0u64;
    let mut reach = 0u64;
    for i in 0..n {
        if i > 0 {
            left = rng.gen_range(left..=reach);
        }
        let right = left + rng.gen_range(0..=max_len);
        reach = reach.max(right);
        iv.push((left, right));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1 {
                edges.push((u, v));
            }
        }
    }
    let g = build(n, edges);
    relabel(&g, &mut rng)
}

/// Connected graph with no class promise: a random spanning tree plus every
/// other pair independently with probability `density`.
pub fn random_connected(n: usize, seed: u64, density: f64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng(seed);
    let mut present = std::collections::BTreeSet::new();
    for v in 1..n {
        present.insert((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.gen_bool(density) {
                present.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = present.into_iter().collect();
    let g = build(n, edges);
    relabel(&g, &mut rng)
}

/// Rejection sampler for chordal dominating pair graphs: draws
/// `random_chordal(n, seed + i, density)` for `i = 0, 1, ...` and returns the
/// first draw with no induced `A_1` or `B_k`, with the seed that produced it.
pub fn random_chordal_dp(
    n: usize,
    seed: u64,
    density: f64,
    max_tries: u64,
) -> Option<(Graph, u64)> {
    (0..max_tries).find_map(|i| {
        let s = seed.wrapping_add(i);
        let g = random_chordal(n, s, density);
        recognition::is_chordal_dp_graph(&g)
            .is_member()
            .then_some((g, s))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    A1,
    Bn,
    RandomChordal,
    RandomSplit,
    RandomInterval,
    RandomConnected,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::A1,
        Family::Bn,
        Family::RandomChordal,
        Family::RandomSplit,
        Family::RandomInterval,
        Family::RandomConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::A1 => "A1",
            Family::Bn => "Bn",
            Family::RandomChordal => "random_chordal",
            Family::RandomSplit => "random_split",
            Family::RandomInterval => "random_interval",
            Family::RandomConnected => "random_connected",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::RandomChordal
                | Family::RandomSplit
                | Family::RandomInterval
                | Family::RandomConnected
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown family `{s}`")))
    }
}

/// Everything needed to rebuild a fixture.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenSpec {
    pub family: Family,
    /// Vertex count, leaf count for stars, or the index for `B_n`.
    pub n: usize,
    pub seed: u64,
    pub density: f64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GenSpec {
            family,
            n,
            seed: 0,
            density: 0.5,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min = match self.family {
            Family::A1 => 0,
            Family::Cycle => 3,
            Family::Star => 0,
            _ => 1,
        };
        if self.n < min {
            return Err(Error::Precondition(format!(
                "{} needs n >= {min}, got {}",
                self.family, self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Precondition(format!(
                "density {} outside [0, 1]",
                self.density
            )));
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let (n, s, d) = (self.n, self.seed, self.density);
        Ok(match self.family {
            Family::Path => path(n),
            Family::Cycle => cycle(n),
            Family::Star => star(n),
            Family::Complete => complete(n),
            Family::A1 => make_a1(),
            Family::Bn => make_bn(n)?,
            Family::RandomChordal => random_chordal(n, s, d),
            Family::RandomSplit => random_split(n, s, d),
            Family::RandomInterval => random_interval(n, s, d),
            Family::RandomConnected => random_connected(n, s, d),
        })
    }

    /// File stem encoding the spec, e.g. `Bn-n2` or `random_chordal-n8-s42-d0.5`.
    pub fn file_stem(&self) -> String {
        match self.family {
            Family::A1 => "A1".to_string(),
            f if f.is_random() => format!("{f}-n{}-s{}-d{}", self.n, self.seed, self.density),
            f => format!("{f}-n{}", self.n),
        }
    }

    /// Comment lines stored at the top of an emitted fixture.
    pub fn header(&self) -> Vec<String> {
        let mut h = vec![format!("family={} n={}", self.family, self.n)];
        if self.family.is_random() {
            h.push(format!(
                "seed={} density={} rng={RNG_ALGORITHM}",
                self.seed, self.density
            ));
        }
        h
    }

    pub fn to_edge_list(&self) -> Result<String> {
        Ok(to_edge_list(&self.generate()?, &self.header()))
    }
}
