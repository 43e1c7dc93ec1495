//! Convex and isometric domination solvers and their exhaustive oracles.

mod brute;
mod hull4;
mod iso;
mod paths;

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

pub use brute::{domination_number_bruteforce, gamma_con_bruteforce, gamma_iso_bruteforce};
pub use hull4::gamma_con_hull4;
pub use iso::{gamma_iso, gamma_iso_pair};
pub use paths::{find_dominating_shortest_path, find_shortest_path_within_tolerance};

use crate::bitset::VertexSet;
use crate::convexity::{is_convex, is_isometric, HullTrace};
use crate::graph::{is_dominating, Graph};
use crate::recognition::DominatingPair;

pub const DEFAULT_ORACLE_BOUND: usize = 14;
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for the candidate sweeps; 1 runs sequentially. Results
    /// do not depend on this value.
    pub jobs: usize,
    /// Node expansions allowed per shortest-path search.
    pub path_cap: u64,
    /// Largest vertex count the exhaustive oracles accept.
    pub oracle_bound: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            jobs: 1,
            path_cap: DEFAULT_PATH_CAP,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Convex,
    Isometric,
    /// Plain domination, used only by the chain checks.
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Hull4,
    StagedIso,
    Bruteforce,
}

/// How the class promise behind a polynomial solver was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassCheck {
    Verified,
    Assumed,
    NotRequired,
}

/// Predicates re-evaluated on the witness after solving.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub dominating: bool,
    pub convex: bool,
    pub isometric: bool,
    pub class: ClassCheck,
}

impl Certificate {
    pub fn evaluate(g: &Graph, witness: &VertexSet, class: ClassCheck) -> Self {
        Certificate {
            dominating: is_dominating(g, witness).unwrap_or(false),
            convex: is_convex(g, witness),
            isometric: is_isometric(g, witness),
            class,
        }
    }

    /// The predicates the objective requires all hold.
    pub fn satisfies(&self, objective: Objective) -> bool {
        self.dominating
            && match objective {
                Objective::Convex => self.convex,
                Objective::Isometric => self.isometric,
                Objective::Plain => true,
            }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub objective: Objective,
    pub method: Method,
    pub value: usize,
    pub witness: VertexSet,
    /// The seed `R` whose hull is the witness (hull solver only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<HullTrace>,
    /// Dominating pair the staged solver ran with.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<DominatingPair>,
    /// Stage of the staged solver that produced the answer (1..=5).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<u8>,
    pub certificate: Certificate,
}

impl SolverResult {
    fn new(
        g: &Graph,
        objective: Objective,
        method: Method,
        witness: VertexSet,
        class: ClassCheck,
    ) -> Self {
        SolverResult {
            objective,
            method,
            value: witness.len(),
            certificate: Certificate::evaluate(g, &witness, class),
            witness,
            seed: None,
            trace: None,
            pair: None,
            stage: None,
        }
    }

    /// Re-checks the witness from scratch, independently of how it was found.
    pub fn reverify(&self, g: &Graph) -> bool {
        let fresh = Certificate::evaluate(g, &self.witness, self.certificate.class);
        fresh == self.certificate
            && fresh.satisfies(self.objective)
            && self.value == self.witness.len()
            && self.seed.as_ref().is_none_or(|s| {
                s.len() <= 4
                    && crate::convexity::convex_hull(g, s)
                        .map(|t| t.hull() == &self.witness)
                        .unwrap_or(false)
            })
    }
}

/// Evaluates `f` over `items` and keeps the smallest result under `better`,
/// breaking remaining ties by item position. Runs on `jobs` threads; the
/// winner is the same for every thread count.
pub(crate) fn best_of<I, T, F, C>(jobs: usize, items: &[I], f: F, better: C) -> Option<(usize, T)>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> Option<T> + Sync,
    C: Fn(&T, &T) -> std::cmp::Ordering + Sync,
{
    let pick = |a: (usize, T), b: (usize, T)| match better(&a.1, &b.1).then(a.0.cmp(&b.0)) {
        std::cmp::Ordering::Greater => b,
        _ => a,
    };
    if jobs <= 1 {
        return items
            .iter()
            .enumerate()
            .filter_map(|(i, it)| f(it).map(|t| (i, t)))
            .reduce(pick);
    }
    with_pool(jobs, || {
        items
            .par_iter()
            .enumerate()
            .filter_map(|(i, it)| f(it).map(|t| (i, t)))
            .reduce_with(pick)
    })
}

/// First item (by position) for which `f` succeeds.
pub(crate) fn first_of<I, T, F>(jobs: usize, items: &[I], f: F) -> Option<(usize, T)>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> Option<T> + Sync,
{
    if jobs <= 1 {
        return items
            .iter()
            .enumerate()
            .find_map(|(i, it)| f(it).map(|t| (i, t)));
    }
    with_pool(jobs, || {
        items
            .par_iter()
            .enumerate()
            .filter_map(|(i, it)| f(it).map(|t| (i, t)))
            .find_first(|_| true)
    })
}

fn with_pool<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

/// All `k`-subsets of `0..n` as sets, in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    crate::bitset::for_each_k_subset(n, k, |s| {
        out.push(VertexSet::from_vertices(n, s.iter().copied()));
        true
    });
    out
}

/// Shared upper bound for pruning inside parallel sweeps.
pub(crate) struct Bound(AtomicUsize);

impl Bound {
    pub(crate) fn new() -> Self {
        Bound(AtomicUsize::new(usize::MAX))
    }

    pub(crate) fn get(&self) -> usize {
        self.0.load(Ordering::Relaxed)
    }

    pub(crate) fn lower_to(&self, v: usize) {
        self.0.fetch_min(v, Ordering::Relaxed);
    }
}
