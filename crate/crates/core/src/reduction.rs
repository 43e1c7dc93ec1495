//! Split graph to chordal weak dominating pair graph gadget, and an
//! exhaustive check that convex domination numbers carry across it.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::domination::{gamma_con_bruteforce, SolveOptions, SolverResult};
use crate::error::{Error, Result};
use crate::graph::{to_edge_list, Graph};
use crate::recognition::{is_chordal, is_dominating_pair, split_partition, SplitPartition};
use crate::Vertex;

/// Gadget vertex count exceeds the input's by this much.
pub const GADGET_EXTRA: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetOutput {
    #[serde(skip)]
    pub graph: Graph,
    pub x: Vertex,
    pub y: Vertex,
    pub y_prime: Vertex,
    /// `source_map[v]` is the gadget id of input vertex `v`.
    pub source_map: Vec<Vertex>,
    pub clique: VertexSet,
}

/// Adds `x` joined to every input vertex, `y` joined to the clique side, and
/// a pendant `y'` on `y`. Input vertices keep their ids; `x`, `y`, `y'` get
/// `n`, `n + 1`, `n + 2`.
///
/// The clique side of `partition` must be a maximum clique.
pub fn build_np_gadget(gprime: &Graph, partition: &SplitPartition) -> Result<GadgetOutput> {
    gprime.require_connected()?;
    if split_partition(gprime).is_none() {
        return Err(Error::wrong_class("input is not a split graph"));
    }
    if !partition.is_valid_for(gprime) {
        return Err(Error::Precondition(
            "partition is not a clique/independent split of the input".into(),
        ));
    }
    // in a split graph the clique side is maximum unless an independent vertex sees all of it
    let clique = &partition.clique;
    if let Some(v) = partition
        .independent
        .iter()
        .find(|&v| clique.is_subset(gprime.neighbors(v)))
    {
        return Err(Error::Precondition(format!(
            "clique {clique} is not maximum: vertex {v} extends it"
        )));
    }

    let n = gprime.n();
    let (x, y, y_prime) = (n, n + 1, n + 2);
    let mut edges: Vec<(Vertex, Vertex)> = gprime.edges().collect();
    edges.extend((0..n).map(|v| (v, x)));
    edges.extend(clique.iter().map(|c| (c, y)));
    edges.push((y, y_prime));
    let graph = Graph::new(n + GADGET_EXTRA, edges)?;

    if !is_chordal(&graph).is_chordal() {
        return Err(Error::Internal("gadget is not chordal".into()));
    }
    if !is_dominating_pair(&graph, x, y)? {
        return Err(Error::Internal(
            "(x, y) is not a dominating pair of the gadget".into(),
        ));
    }
    Ok(GadgetOutput {
        graph,
        x,
        y,
        y_prime,
        source_map: (0..n).collect(),
        clique: VertexSet::from_vertices(n + GADGET_EXTRA, clique.iter()),
    })
}

/// Builds the gadget on the partition found by [`split_partition`].
pub fn build_np_gadget_auto(gprime: &Graph) -> Result<GadgetOutput> {
    gprime.require_connected()?;
    let p =
        split_partition(gprime).ok_or_else(|| Error::wrong_class("input is not a split graph"))?;
    build_np_gadget(gprime, &p)
}

/// Canonical edge list with the special vertices and the source map in the
/// comment header.
pub fn gadget_edge_list(out: &GadgetOutput) -> String {
    let map = out
        .source_map
        .iter()
        .enumerate()
        .map(|(v, w)| format!("{v}:{w}"))
        .collect::<Vec<_>>()
        .join(",");
    let comments = vec![
        format!("x={} y={} y'={}", out.x, out.y, out.y_prime),
        format!("source_map={map}"),
    ];
    to_edge_list(&out.graph, &comments)
}

/// Outcome of comparing `γ_con(G') ≤ k` with `γ_con(G) ≤ k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub k: usize,
    pub input_value: usize,
    pub input_witness: VertexSet,
    pub gadget_value: usize,
    pub gadget_witness: VertexSet,
    pub input_side: bool,
    pub gadget_side: bool,
    pub holds: bool,
}

/// Both exhaustive optima, computed once and reused for every `k`.
#[derive(Clone, Debug)]
pub struct GadgetCheck {
    pub gadget: GadgetOutput,
    pub input: SolverResult,
    pub augmented: SolverResult,
}

impl GadgetCheck {
    /// Runs the convex oracle on the input and on its gadget. The gadget has
    /// three more vertices, so the input may have at most
    /// `opts.oracle_bound - 3`.
    pub fn new(gprime: &Graph, opts: &SolveOptions) -> Result<Self> {
        let bound = opts.oracle_bound.saturating_sub(GADGET_EXTRA);
        if gprime.n() > bound {
            return Err(Error::SizeGuard {
                n: gprime.n(),
                bound,
            });
        }
        let gadget = build_np_gadget_auto(gprime)?;
        let input = gamma_con_bruteforce(gprime, opts)?;
        let augmented = gamma_con_bruteforce(&gadget.graph, opts)?;
        Ok(GadgetCheck {
            gadget,
            input,
            augmented,
        })
    }

    pub fn report(&self, k: usize) -> EquivalenceReport {
        let input_side = self.input.value <= k;
        let gadget_side = self.augmented.value <= k + 1;
        EquivalenceReport {
            k,
            input_value: self.input.value,
            input_witness: self.input.witness.clone(),
            gadget_value: self.augmented.value,
            gadget_witness: self.augmented.witness.clone(),
            input_side,
            gadget_side,
            holds: input_side == gadget_side,
        }
    }
}

/// Checks `γ_con(G') ≤ k ⇔ γ_con(G) ≤ k + 1` by brute force on both sides.
pub fn verify_gadget_equivalence(
    gprime: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<EquivalenceReport> {
    Ok(GadgetCheck::new(gprime, opts)?.report(k))
}
