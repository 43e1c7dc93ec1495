//! Class membership: chordality, split partitions, dominating pairs, and the
//! forbidden-subgraph test for chordal dominating pair graphs.

mod chordal;
mod clique;
mod induced;
mod pair;

use serde::{Serialize, Serializer};

pub use chordal::{
    find_induced_long_cycle, is_chordal, is_perfect_elimination_ordering, lex_bfs, Chordality,
};
pub use clique::{
    is_clique, is_independent, maximum_clique, maximum_cliques, split_partition, SplitPartition,
    DEFAULT_CLIQUE_BOUND,
};
pub use induced::{find_induced_embedding, is_induced_embedding};
pub use pair::{
    all_dominating_pairs, dp_bruteforce_counterexample, find_dominating_pair, is_dominating_pair,
    is_dp_graph_bruteforce, DominatingPair, DEFAULT_DP_BRUTEFORCE_BOUND,
};

use crate::generators::{make_a1, make_bn};
use crate::graph::Graph;
use crate::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenFamily {
    A1,
    /// `B_n` with its index.
    B(usize),
}

impl ForbiddenFamily {
    pub fn pattern(self) -> Graph {
        match self {
            ForbiddenFamily::A1 => make_a1(),
            ForbiddenFamily::B(n) => make_bn(n).expect("B_n index is at least 1"),
        }
    }
}

impl std::fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForbiddenFamily::A1 => write!(f, "A1"),
            ForbiddenFamily::B(n) => write!(f, "B{n}"),
        }
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An induced copy of `A_1` or `B_n`: `embedding[i]` is the host vertex
/// playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub family: ForbiddenFamily,
    pub embedding: Vec<Vertex>,
}

impl ForbiddenWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        is_induced_embedding(g, &self.family.pattern(), &self.embedding)
    }
}

/// Looks for an induced copy of `pattern`, reported as a witness of `family`.
pub fn contains_induced(
    g: &Graph,
    pattern: &Graph,
    family: ForbiddenFamily,
) -> Option<ForbiddenWitness> {
    find_induced_embedding(g, pattern).map(|embedding| ForbiddenWitness { family, embedding })
}

/// Verdict of [`is_chordal_dp_graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ChordalDpVerdict {
    Member,
    NotChordal { cycle: Vec<Vertex> },
    Forbidden { witness: ForbiddenWitness },
}

impl ChordalDpVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, ChordalDpVerdict::Member)
    }

    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        match self {
            ChordalDpVerdict::Forbidden { witness } => Some(witness),
            _ => None,
        }
    }
}

/// A chordal graph is a dominating pair graph exactly when it has no induced
/// `A_1` and no induced `B_n`. Searches `A_1` first, then `B_1, B_2, ...` up to
/// the largest index that fits, and reports the first hit.
pub fn is_chordal_dp_graph(g: &Graph) -> ChordalDpVerdict {
    if let Chordality::NotChordal { cycle } = is_chordal(g) {
        return ChordalDpVerdict::NotChordal { cycle };
    }
    if let Some(witness) = contains_induced(g, &make_a1(), ForbiddenFamily::A1) {
        return ChordalDpVerdict::Forbidden { witness };
    }
    for k in 1..=g.n().saturating_sub(5) {
        let family = ForbiddenFamily::B(k);
        if let Some(witness) = contains_induced(g, &family.pattern(), family) {
            return ChordalDpVerdict::Forbidden { witness };
        }
    }
    ChordalDpVerdict::Member
}
