use super::{first_of, k_subsets, ClassCheck, Method, Objective, SolveOptions, SolverResult};
use crate::bitset::VertexSet;
use crate::convexity::{is_isometric, Geodesics};
use crate::error::{Error, Result};
use crate::graph::{undominated, Graph};

fn guard(g: &Graph, opts: &SolveOptions) -> Result<()> {
    if g.n() > opts.oracle_bound {
        return Err(Error::SizeGuard {
            n: g.n(),
            bound: opts.oracle_bound,
        });
    }
    g.require_connected()
}

/// Smallest subset (by size, then lexicographically) accepted by `accept`.
fn first_subset(
    g: &Graph,
    opts: &SolveOptions,
    accept: impl Fn(&VertexSet) -> bool + Sync,
) -> Option<VertexSet> {
    (1..=g.n()).find_map(|k| {
        let subsets = k_subsets(g.n(), k);
        first_of(opts.jobs, &subsets, |s| accept(s).then(|| s.clone())).map(|(_, s)| s)
    })
}

/// Exhaustive convex domination number.
pub fn gamma_con_bruteforce(g: &Graph, opts: &SolveOptions) -> Result<SolverResult> {
    guard(g, opts)?;
    let geo = Geodesics::new(g);
    let witness = first_subset(g, opts, |s| {
        undominated(g, s).is_empty() && geo.is_convex(s)
    })
    .ok_or_else(|| Error::Internal("the vertex set itself is a convex dominating set".into()))?;
    Ok(SolverResult::new(
        g,
        Objective::Convex,
        Method::Bruteforce,
        witness,
        ClassCheck::NotRequired,
    ))
}

/// Exhaustive isometric domination number.
pub fn gamma_iso_bruteforce(g: &Graph, opts: &SolveOptions) -> Result<SolverResult> {
    guard(g, opts)?;
    let witness = first_subset(g, opts, |s| {
        undominated(g, s).is_empty() && is_isometric(g, s)
    })
    .ok_or_else(|| {
        Error::Internal("the vertex set itself is an isometric dominating set".into())
    })?;
    Ok(SolverResult::new(
        g,
        Objective::Isometric,
        Method::Bruteforce,
        witness,
        ClassCheck::NotRequired,
    ))
}

/// Exhaustive domination number, for the `γ ≤ γ_iso ≤ γ_con` chain checks.
pub fn domination_number_bruteforce(g: &Graph, opts: &SolveOptions) -> Result<SolverResult> {
    guard(g, opts)?;
    let witness = first_subset(g, opts, |s| undominated(g, s).is_empty())
        .ok_or_else(|| Error::Internal("the vertex set itself dominates".into()))?;
    Ok(SolverResult::new(
        g,
        Objective::Plain,
        Method::Bruteforce,
        witness,
        ClassCheck::NotRequired,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn convex_examples() {
        let o = SolveOptions::default();
        let r = gamma_con_bruteforce(&star(4), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (1, set(5, &[0])));
        let r = gamma_con_bruteforce(&path(4), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (2, set(4, &[1, 2])));
        let r = gamma_con_bruteforce(&path(6), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (4, set(6, &[1, 2, 3, 4])));
        assert!(r.reverify(&path(6)));
    }

    #[test]
    fn isometric_examples() {
        let o = SolveOptions::default();
        let r = gamma_iso_bruteforce(&cycle(4), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (2, set(4, &[0, 1])));
        let r = gamma_iso_bruteforce(&path(6), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (4, set(6, &[1, 2, 3, 4])));
        let r = gamma_iso_bruteforce(&complete(1), &o).unwrap();
        assert_eq!((r.value, r.witness.clone()), (1, set(1, &[0])));
    }

    #[test]
    fn guards() {
        let o = SolveOptions::default();
        assert!(matches!(
            gamma_con_bruteforce(&path(15), &o),
            Err(Error::SizeGuard { n: 15, bound: 14 })
        ));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            gamma_iso_bruteforce(&two, &o),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn parallel_sweep_matches_sequential() {
        let par = SolveOptions {
            jobs: 4,
            ..SolveOptions::default()
        };
        for seed in 0..10 {
            let g = crate::generators::random_connected(9, seed, 0.3);
            let a = gamma_con_bruteforce(&g, &SolveOptions::default()).unwrap();
            let b = gamma_con_bruteforce(&g, &par).unwrap();
            assert_eq!(a, b);
        }
    }
}
