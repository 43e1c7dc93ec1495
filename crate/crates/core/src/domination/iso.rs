use super::paths::find_shortest_path_within_tolerance;
use super::{first_of, k_subsets, ClassCheck, Method, Objective, SolveOptions, SolverResult};
use crate::bitset::VertexSet;
use crate::convexity::is_isometric;
use crate::error::{Error, Result};
use crate::graph::{undominated, Graph};
use crate::recognition::{find_dominating_pair, is_dominating_pair, DominatingPair};
use crate::Vertex;

/// Candidate endpoint pairs `(a, b)` in `N(x) × N(y)` at distance `dist`,
/// in lexicographic order.
fn endpoint_pairs(g: &Graph, x: Vertex, y: Vertex, dist: u32) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for a in g.neighbors(x) {
        for b in g.neighbors(y) {
            if g.distance(a, b) == Some(dist) {
                out.push((a, b));
            }
        }
    }
    out
}

enum Found {
    Path(Vec<Vertex>),
    /// A path plus the dominating pair end that completes it.
    Extended(Vec<Vertex>, Vertex),
}

/// Searches the pairs in order and returns the first hit. Resource errors
/// from any searched pair abort the sweep.
fn sweep_pairs<F>(jobs: usize, pairs: &[(Vertex, Vertex)], search: F) -> Result<Option<Found>>
where
    F: Fn(Vertex, Vertex) -> Result<Option<Found>> + Sync,
{
    let hit = first_of(jobs, pairs, |&(a, b)| match search(a, b) {
        Ok(None) => None,
        other => Some(other),
    });
    match hit {
        None => Ok(None),
        Some((_, r)) => r,
    }
}

/// Isometric domination number of a graph with a known dominating pair.
///
/// Stage 1 tries every set of at most four vertices. Otherwise, with
/// `s = d(x,y) - 2`, the answer is `s + 1` if a shortest path between some
/// `a ∈ N(x)` and `b ∈ N(y)` at distance `s` dominates (stage 2); `s + 2` if
/// such a path misses only vertices of `N(x)` or only of `N(y)` and the
/// matching end is added (stage 3), or a shortest path between a pair at
/// distance `s + 1` dominates (stage 4); and `s + 3`, a shortest `x,y`-path,
/// otherwise (stage 5).
pub fn gamma_iso_pair(
    g: &Graph,
    pair: DominatingPair,
    opts: &SolveOptions,
) -> Result<SolverResult> {
    g.require_connected()?;
    let (x, y) = (pair.x, pair.y);
    if !is_dominating_pair(g, x, y)? {
        return Err(Error::Precondition(format!(
            "({x}, {y}) is not a dominating pair"
        )));
    }
    let pair = DominatingPair {
        x,
        y,
        verified: true,
    };
    let n = g.n();
    let finish = |witness: VertexSet, stage: u8| -> Result<SolverResult> {
        let mut r = SolverResult::new(
            g,
            Objective::Isometric,
            Method::StagedIso,
            witness,
            ClassCheck::Verified,
        );
        r.pair = Some(pair);
        r.stage = Some(stage);
        if !r.certificate.satisfies(Objective::Isometric) {
            return Err(Error::Internal(format!(
                "stage {stage} witness {} is not an isometric dominating set",
                r.witness
            )));
        }
        Ok(r)
    };

    // stage 1
    for k in 1..=4.min(n) {
        let subsets = k_subsets(n, k);
        let hit = first_of(opts.jobs, &subsets, |s| {
            (undominated(g, s).is_empty() && is_isometric(g, s)).then(|| s.clone())
        });
        if let Some((_, s)) = hit {
            return finish(s, 1);
        }
    }

    let d = g.distance(x, y).expect("connected");
    // a shortest x,y-path has at most four vertices when d <= 3 and stage 1 would have found it
    if d < 4 {
        return Err(Error::Internal(format!(
            "stage 1 missed a shortest path of length {d}"
        )));
    }
    let s = d - 2;
    let as_set = |p: &[Vertex]| VertexSet::from_vertices(n, p.iter().copied());
    let none = VertexSet::empty(n);
    let near = endpoint_pairs(g, x, y, s);

    // stage 2
    let found = sweep_pairs(opts.jobs, &near, |a, b| {
        Ok(find_shortest_path_within_tolerance(g, a, b, s, &none, opts.path_cap)?.map(Found::Path))
    })?;
    if let Some(Found::Path(p)) = found {
        return finish(as_set(&p), 2);
    }

    // stage 3
    let (nx, ny) = (g.neighbors(x).clone(), g.neighbors(y).clone());
    let found = sweep_pairs(opts.jobs, &near, |a, b| {
        if let Some(p) = find_shortest_path_within_tolerance(g, a, b, s, &nx, opts.path_cap)? {
            return Ok(Some(Found::Extended(p, x)));
        }
        Ok(
            find_shortest_path_within_tolerance(g, a, b, s, &ny, opts.path_cap)?
                .map(|p| Found::Extended(p, y)),
        )
    })?;
    if let Some(Found::Extended(p, end)) = found {
        let mut w = as_set(&p);
        w.insert(end);
        return finish(w, 3);
    }

    // stage 4
    let far = endpoint_pairs(g, x, y, s + 1);
    let found = sweep_pairs(opts.jobs, &far, |a, b| {
        Ok(
            find_shortest_path_within_tolerance(g, a, b, s + 1, &none, opts.path_cap)?
                .map(Found::Path),
        )
    })?;
    if let Some(Found::Path(p)) = found {
        return finish(as_set(&p), 4);
    }

    // stage 5: any shortest x,y-path, lexicographically first
    let all = VertexSet::full(n);
    let p = find_shortest_path_within_tolerance(g, x, y, d, &all, opts.path_cap)?
        .ok_or_else(|| Error::Internal("no shortest path between the pair".into()))?;
    finish(as_set(&p), 5)
}

/// Finds the first dominating pair and runs [`gamma_iso_pair`] with it.
pub fn gamma_iso(g: &Graph, opts: &SolveOptions) -> Result<SolverResult> {
    let pair = find_dominating_pair(g)?
        .ok_or_else(|| Error::wrong_class("graph has no dominating pair"))?;
    gamma_iso_pair(g, pair, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::gamma_iso_bruteforce;
    use crate::generators::{complete, cycle, path, star};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn pair_examples() {
        let r = gamma_iso_pair(&path(6), DominatingPair::unverified(0, 5), &opts()).unwrap();
        assert_eq!(
            (r.value, r.witness.clone(), r.stage),
            (4, set(6, &[1, 2, 3, 4]), Some(1))
        );

        let r = gamma_iso_pair(&cycle(6), DominatingPair::unverified(0, 3), &opts()).unwrap();
        // an edge covers only four vertices of C6; three consecutive ones miss the antipode
        assert_eq!((r.value, r.stage), (4, Some(1)));
        assert_eq!(r.witness, set(6, &[0, 1, 2, 3]));
        assert_eq!(gamma_iso_bruteforce(&cycle(6), &opts()).unwrap().value, 4);

        let r = gamma_iso_pair(&star(4), DominatingPair::unverified(1, 2), &opts()).unwrap();
        assert_eq!(
            (r.value, r.witness.clone(), r.stage),
            (1, set(5, &[0]), Some(1))
        );
    }

    #[test]
    fn unverified_pair_is_rejected() {
        assert!(matches!(
            gamma_iso_pair(&cycle(7), DominatingPair::unverified(0, 3), &opts()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn composed_solver() {
        let r = gamma_iso(&path(7), &opts()).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(
            r.value,
            gamma_iso_bruteforce(&path(7), &opts()).unwrap().value
        );
        assert!(matches!(
            gamma_iso(&cycle(7), &opts()),
            Err(Error::WrongClass { .. })
        ));
        assert_eq!(gamma_iso(&complete(2), &opts()).unwrap().value, 1);
    }

    #[test]
    fn stage_three_adds_the_pair_end() {
        // P7 with (0,5): path 1..4 leaves only 6, a neighbour of 5, undominated
        let r = gamma_iso_pair(&path(7), DominatingPair::unverified(0, 5), &opts()).unwrap();
        assert_eq!((r.value, r.stage), (5, Some(3)));
        assert_eq!(r.witness, set(7, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn stage_five_takes_a_shortest_pair_path() {
        // P7 with (1,5): 2..4 misses both ends and no pair is at distance three
        let r = gamma_iso_pair(&path(7), DominatingPair::unverified(1, 5), &opts()).unwrap();
        assert_eq!((r.value, r.stage), (5, Some(5)));
        assert_eq!(r.witness, set(7, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn long_paths_reach_the_later_stages() {
        // P_n with pair (0, n-1): the internal path 1..n-2 dominates, value n-2 = d-1
        for n in 7..=12 {
            let g = path(n);
            let r = gamma_iso_pair(&g, DominatingPair::unverified(0, n - 1), &opts()).unwrap();
            assert_eq!(r.value, n - 2);
            assert_eq!(r.stage, Some(2));
        }
    }
}
