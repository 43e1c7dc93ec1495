use super::{best_of, k_subsets, Bound, ClassCheck, Method, Objective, SolveOptions, SolverResult};
use crate::bitset::{witness_order, VertexSet};
use crate::convexity::{convex_hull_with, Geodesics};
use crate::error::{Error, Result};
use crate::graph::{undominated, Graph};
use crate::recognition::{is_chordal_dp_graph, ChordalDpVerdict};

/// Minimum convex dominating set of a chordal dominating pair graph: the
/// smallest dominating hull over all seeds of one to four vertices.
///
/// With `trust == false` the class is checked first and a wrong-class error
/// (carrying the forbidden subgraph when there is one) is returned for inputs
/// outside it. Ties go to the lexicographically smallest witness, then to the
/// first seed in size-then-lexicographic order.
pub fn gamma_con_hull4(g: &Graph, trust: bool, opts: &SolveOptions) -> Result<SolverResult> {
    g.require_connected()?;
    let class = if trust {
        ClassCheck::Assumed
    } else {
        match is_chordal_dp_graph(g) {
            ChordalDpVerdict::Member => ClassCheck::Verified,
            ChordalDpVerdict::NotChordal { cycle } => {
                return Err(Error::wrong_class(format!(
                    "not chordal: induced cycle {cycle:?}"
                )))
            }
            ChordalDpVerdict::Forbidden { witness } => {
                return Err(Error::WrongClass {
                    reason: format!("not a dominating pair graph: induced {}", witness.family),
                    witness: Some(Box::new(witness)),
                })
            }
        }
    };

    let geo = Geodesics::new(g);
    let bound = Bound::new();
    let mut best: Option<(VertexSet, VertexSet)> = None;
    for k in 1..=4.min(g.n()) {
        if k > bound.get() {
            break;
        }
        let seeds = k_subsets(g.n(), k);
        let round = best_of(
            opts.jobs,
            &seeds,
            |seed| {
                // a hull is never smaller than its seed
                if seed.len() > bound.get() {
                    return None;
                }
                let hull = geo.hull(seed);
                if !undominated(g, &hull).is_empty() {
                    return None;
                }
                bound.lower_to(hull.len());
                Some(hull)
            },
            witness_order,
        );
        if let Some((i, hull)) = round {
            // earlier seed sizes win ties, so only a strictly better hull replaces
            if best
                .as_ref()
                .is_none_or(|(b, _)| witness_order(&hull, b).is_lt())
            {
                best = Some((hull, seeds[i].clone()));
            }
        }
    }

    let (witness, seed) = best.ok_or_else(|| {
        Error::Internal(
            "no hull of at most four vertices dominates; the class promise does not hold".into(),
        )
    })?;
    let trace = convex_hull_with(&geo, &seed);
    debug_assert_eq!(trace.hull(), &witness);
    let mut r = SolverResult::new(g, Objective::Convex, Method::Hull4, witness, class);
    r.seed = Some(seed);
    r.trace = Some(trace);
    if !r.certificate.satisfies(Objective::Convex) {
        return Err(Error::Internal(format!(
            "hull witness {} failed its certificate",
            r.witness
        )));
    }
    Ok(r)
}
