use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GraphError, SimpleGraph};

/// Fewest vertices a `degree`-regular graph of girth `girth` can have.
pub fn moore_lower_bound(degree: u64, girth: u64) -> u64 {
    assert!(degree >= 2 && girth >= 3, "needs degree >= 2 and girth >= 3");
    let t = girth / 2;
    let geometric: u64 = (0..t).map(|i| (degree - 1).pow(i as u32)).sum();
    if girth % 2 == 1 {
        1 + degree * geometric
    } else {
        2 * geometric
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGraph {
    pub graph: SimpleGraph,
    pub girth: usize,
    /// Connected with girth at least the target.
    pub met: bool,
    pub iterations: u64,
}

/// Random simple regular graph from the configuration model; `None` if no
/// simple pairing turned up within the retry budget.
fn configuration_model(degree: usize, vertices: usize, rng: &mut ChaCha8Rng) -> Option<SimpleGraph> {
    let mut stubs: Vec<usize> = (0..vertices).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    'retry: for _ in 0..10_000 {
        stubs.shuffle(rng);
        let mut g = SimpleGraph::new(vertices);
        for pair in stubs.chunks(2) {
            if g.add_edge(pair[0], pair[1]).is_err() {
                continue 'retry;
            }
        }
        return Some(g);
    }
    None
}

/// `(components - 1, edges on a cycle shorter than target)`; zero means done.
fn score(g: &SimpleGraph, target: usize) -> (usize, usize, Vec<usize>) {
    let bad: Vec<usize> = (0..g.edge_count())
        .filter(|&e| g.shortest_cycle_through(e, target).is_some())
        .collect();
    (g.component_count() - 1, bad.len(), bad)
}

fn swapped(g: &SimpleGraph, e: usize, f: usize, flip: bool) -> Option<SimpleGraph> {
    let (u, w) = g.edge(e);
    let (x, y) = if flip { (g.edge(f).1, g.edge(f).0) } else { g.edge(f) };
    if [u, w].contains(&x) || [u, w].contains(&y) {
        return None;
    }
    let mut edges = g.edges().to_vec();
    edges[e] = (u, x);
    edges[f] = (w, y);
    SimpleGraph::from_edges(g.vertex_count(), &edges).ok()
}

/// Connected `degree`-regular graph on `budget` vertices with girth at least
/// `girth_target`, searched by edge swaps on a configuration-model start.
///
/// Each step moves an edge that lies on a too-short cycle (or any edge while
/// the graph is disconnected) by a double swap with a random second edge, and
/// keeps the result unless it scores worse. Stalled runs restart from a fresh
/// pairing. After `10^4 * E` steps the best graph seen is returned with
/// `met = false`. Fully determined by `seed`.
pub fn generate_regular_girth(
    degree: usize,
    girth_target: usize,
    budget: usize,
    seed: u64,
) -> Result<GeneratedGraph, GraphError> {
    if degree < 2 || girth_target < 3 || degree >= budget {
        return Err(GraphError::InvalidParams(format!(
            "needs degree >= 2, girth >= 3 and degree < vertices (degree {degree}, girth {girth_target}, vertices {budget})"
        )));
    }
    if degree * budget % 2 == 1 {
        return Err(GraphError::Parity { degree, vertices: budget });
    }
    let moore = moore_lower_bound(degree as u64, girth_target as u64);
    if (budget as u64) < moore {
        return Err(GraphError::Infeasible {
            degree,
            girth: girth_target,
            vertices: budget,
            moore,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edge_count = degree * budget / 2;
    let cap = 10_000 * edge_count as u64;
    let stall_limit = 200 * edge_count as u64;
    let fresh = |rng: &mut ChaCha8Rng| {
        configuration_model(degree, budget, rng).ok_or_else(|| GraphError::InvalidParams("no simple pairing found".into()))
    };
    let mut g = fresh(&mut rng)?;
    let mut cur = score(&g, girth_target);
    let mut best = (g.clone(), (cur.0, cur.1));
    let mut since_improvement = 0u64;
    let mut iterations = 0u64;
    while iterations < cap && (cur.0, cur.1) != (0, 0) {
        iterations += 1;
        since_improvement += 1;
        if since_improvement > stall_limit {
            g = fresh(&mut rng)?;
            cur = score(&g, girth_target);
            since_improvement = 0;
            continue;
        }
        let e = if cur.0 > 0 || cur.2.is_empty() {
            rng.gen_range(0..edge_count)
        } else {
            cur.2[rng.gen_range(0..cur.2.len())]
        };
        let f = rng.gen_range(0..edge_count);
        if e == f {
            continue;
        }
        let Some(next) = swapped(&g, e, f, rng.gen()) else {
            continue;
        };
        let s = score(&next, girth_target);
        if (s.0, s.1) <= (cur.0, cur.1) {
            if (s.0, s.1) < (cur.0, cur.1) {
                since_improvement = 0;
            }
            g = next;
            cur = s;
            if (cur.0, cur.1) < best.1 {
                best = (g.clone(), (cur.0, cur.1));
            }
        }
    }
    let (graph, (components, bad)) = best;
    Ok(GeneratedGraph {
        girth: graph.girth(),
        met: components == 0 && bad == 0,
        graph,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_values() {
        assert_eq!(moore_lower_bound(3, 5), 10);
        assert_eq!(moore_lower_bound(3, 6), 14);
        assert_eq!(moore_lower_bound(3, 4), 6);
        assert_eq!(moore_lower_bound(3, 3), 4);
        for g in 3..12 {
            assert_eq!(moore_lower_bound(2, g), g);
        }
    }

    #[test]
    fn petersen_from_moore_equality() {
        let out = generate_regular_girth(3, 5, 10, 42).unwrap();
        assert!(out.met);
        assert_eq!(out.girth, 5);
        assert_eq!(out.graph.regular_degree(), Some(3));
        assert!(out.graph.is_connected());
    }

    #[test]
    fn cycle_at_budget() {
        for g in [3, 5, 8] {
            let out = generate_regular_girth(2, g, g, 1).unwrap();
            assert!(out.met);
            assert_eq!(out.girth, g);
            assert_eq!(out.graph.edge_count(), g);
        }
    }

    #[test]
    fn deterministic_for_seed() {
        let a = generate_regular_girth(3, 4, 14, 7).unwrap();
        let b = generate_regular_girth(3, 4, 14, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_infeasible() {
        assert!(matches!(generate_regular_girth(3, 14, 20, 0), Err(GraphError::Infeasible { .. })));
        assert!(matches!(generate_regular_girth(3, 4, 11, 0), Err(GraphError::Parity { .. })));
        assert!(generate_regular_girth(1, 3, 4, 0).is_err());
    }
}
