use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::Vertex;

/// Pattern vertices in BFS order from the highest-degree vertex of each
/// component, so every vertex after the first of its component has an
/// already-mapped neighbor that constrains its candidates.
fn search_order(p: &Graph) -> Vec<Vertex> {
    let k = p.n();
    let mut placed = VertexSet::empty(k);
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let root = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by(|&a, &b| p.degree(a).cmp(&p.degree(b)).then(b.cmp(&a)))
            .expect("unplaced vertex");
        placed.insert(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for w in p.neighbors(u) {
                if placed.insert(w) {
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Induced-subgraph embedding of `pattern` into `g`: a map from pattern
/// vertices to distinct host vertices preserving both edges and non-edges.
/// Backtracking with degree pruning; candidates for each step are the
/// intersection of the mapped vertices' neighborhoods (or their complements).
pub fn find_induced_embedding(g: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::empty(g.n());
    if extend(g, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    p: &Graph,
    order: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut cand = used.complement();
    for &q in &order[..depth] {
        let host = map[q];
        if p.has_edge(pv, q) {
            cand.intersect_with(g.neighbors(host));
        } else {
            let mut non = g.closed_neighbors(host).complement();
            non.intersect_with(&cand);
            cand = non;
        }
        if cand.is_empty() {
            return false;
        }
    }
    let need = p.degree(pv);
    for h in cand.iter() {
        if g.degree(h) < need {
            continue;
        }
        map[pv] = h;
        used.insert(h);
        if extend(g, p, order, depth + 1, map, used) {
            return true;
        }
        used.remove(h);
    }
    map[pv] = usize::MAX;
    false
}

/// True when `map` is an injective induced embedding of `pattern` into `g`.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, map: &[Vertex]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&h| h >= g.n()) {
        return false;
    }
    let image = VertexSet::from_vertices(g.n(), map.iter().copied());
    if image.len() != map.len() {
        return false;
    }
    (0..pattern.n())
        .all(|a| (a + 1..pattern.n()).all(|b| pattern.has_edge(a, b) == g.has_edge(map[a], map[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, make_a1, make_bn, path};

    #[test]
    fn self_embedding() {
        let a1 = make_a1();
        let m = find_induced_embedding(&a1, &a1).unwrap();
        assert!(is_induced_embedding(&a1, &a1, &m));
    }

    #[test]
    fn no_induced_path_in_clique() {
        assert!(find_induced_embedding(&complete(5), &path(3)).is_none());
        assert!(find_induced_embedding(&complete(5), &complete(3)).is_some());
    }

    #[test]
    fn induced_versus_plain_subgraph() {
        // C4 contains P4 as a subgraph, never as an induced one
        assert!(find_induced_embedding(&cycle(4), &path(4)).is_none());
        assert!(find_induced_embedding(&cycle(6), &path(5)).is_some());
    }

    #[test]
    fn matches_exhaustive_search() {
        let patterns = [path(3), path(4), cycle(4), make_bn(1).unwrap(), complete(3)];
        for seed in 0..40 {
            let g = crate::generators::random_connected(7, seed, 0.4);
            for p in &patterns {
                let brute = exhaustive(&g, p);
                let found = find_induced_embedding(&g, p);
                assert_eq!(found.is_some(), brute, "seed {seed}");
                if let Some(m) = found {
                    assert!(is_induced_embedding(&g, p, &m));
                }
            }
        }
    }

    fn exhaustive(g: &Graph, p: &Graph) -> bool {
        fn rec(g: &Graph, p: &Graph, map: &mut Vec<Vertex>) -> bool {
            if map.len() == p.n() {
                return is_induced_embedding(g, p, map);
            }
            for h in 0..g.n() {
                if !map.contains(&h) {
                    map.push(h);
                    if rec(g, p, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(g, p, &mut Vec::new())
    }
}
