use crate::algebra::{Field, LinearCode, Matrix, PrimeField};
use crate::verify::brute_min_distance;
use crate::FpMatrix;

use super::{GraphError, SimpleGraph};

/// Cycle code of a graph: variables are edges, constraints are vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct TannerCode {
    graph: SimpleGraph,
    h: FpMatrix,
    code: LinearCode,
    girth: usize,
}

/// Vertex-edge incidence matrix over GF(2) and its null space.
pub fn extend_to_tanner(graph: &SimpleGraph) -> TannerCode {
    let f = PrimeField::binary();
    let mut h = Matrix::zeros(&f, graph.vertex_count(), graph.edge_count());
    for (e, &(u, w)) in graph.edges().iter().enumerate() {
        h.set(u, e, f.one());
        h.set(w, e, f.one());
    }
    TannerCode {
        graph: graph.clone(),
        code: LinearCode::from_parity_check(&h),
        h,
        girth: graph.girth(),
    }
}

impl TannerCode {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn parity_check(&self) -> &FpMatrix {
        &self.h
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    /// The other edges at each endpoint of edge `j`.
    pub fn repair_groups(&self, j: usize) -> [Vec<usize>; 2] {
        let (u, w) = self.graph.edge(j);
        let star = |v: usize| self.graph.star(v).filter(|&e| e != j).collect();
        [star(u), star(w)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceSource {
    BruteForce,
    /// Taken equal to the girth without enumeration (guard exceeded).
    ByTheorem,
}

impl DistanceSource {
    pub fn name(&self) -> &'static str {
        match self {
            DistanceSource::BruteForce => "brute-force",
            DistanceSource::ByTheorem => "by-theorem",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleCodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_source: DistanceSource,
    pub locality: usize,
    pub availability: usize,
}

/// `(n, k, d, locality, availability)` of a cycle code. `d` is enumerated
/// when `2^k` fits the guard and must then equal the girth; the two repair
/// groups of every edge are checked against the generator.
pub fn cycle_code_params(t: &TannerCode, guard_bits: u32) -> Result<CycleCodeParams, GraphError> {
    if t.girth == 0 {
        return Err(GraphError::Acyclic);
    }
    let code = &t.code;
    let (d, d_source) = match brute_min_distance(code, guard_bits) {
        Ok(Some(d)) => {
            if d != t.girth {
                return Err(GraphError::GirthMismatch { girth: t.girth, distance: d });
            }
            (d, DistanceSource::BruteForce)
        }
        Ok(None) => return Err(GraphError::Acyclic),
        Err(_) => (t.girth, DistanceSource::ByTheorem),
    };
    let g = code.generator();
    for j in 0..code.n() {
        let groups = t.repair_groups(j);
        if groups[0].iter().any(|e| groups[1].contains(e)) {
            return Err(GraphError::RepairCheck(j));
        }
        for group in &groups {
            for row in 0..g.rows() {
                let sum = group.iter().fold(*g.get(row, j), |acc, &e| acc + *g.get(row, e));
                if !sum.is_zero() {
                    return Err(GraphError::RepairCheck(j));
                }
            }
        }
    }
    Ok(CycleCodeParams {
        n: code.n(),
        k: code.k(),
        d,
        d_source,
        locality: t.graph.max_degree().saturating_sub(1),
        availability: 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_lrc::named_graph;
    use crate::Fp;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tanner(name: &str) -> TannerCode {
        extend_to_tanner(&named_graph(name).unwrap())
    }

    #[test]
    fn k33_matches_example_matrix() {
        let t = tanner("k33");
        #[rustfmt::skip]
        let vals = [
            1, 0, 0, 1, 0, 0, 1, 0, 0,
            0, 1, 0, 0, 1, 0, 0, 1, 0,
            0, 0, 1, 0, 0, 1, 0, 0, 1,
            1, 0, 0, 0, 1, 0, 0, 0, 1,
            0, 1, 0, 0, 0, 1, 1, 0, 0,
            0, 0, 1, 1, 0, 0, 0, 1, 0,
        ];
        let h = Matrix::from_values(PrimeField::binary(), 6, 9, &vals).unwrap();
        assert_eq!(t.parity_check(), &h);
        let p = cycle_code_params(&t, 24).unwrap();
        assert_eq!((p.n, p.k, p.d, p.locality, p.availability), (9, 4, 4, 2, 2));
        assert_eq!(t.repair_groups(0), [vec![3, 6], vec![4, 8]]);
    }

    #[test]
    fn library_parameters() {
        for (name, n, k, d) in [("petersen", 15, 6, 5), ("heawood", 21, 8, 6), ("k4", 6, 3, 3)] {
            let p = cycle_code_params(&tanner(name), 24).unwrap();
            assert_eq!((p.n, p.k, p.d, p.d_source), (n, k, d, DistanceSource::BruteForce), "{name}");
        }
    }

    #[test]
    fn by_theorem_above_guard() {
        let p = cycle_code_params(&tanner("tutte_coxeter"), 8).unwrap();
        assert_eq!((p.k, p.d, p.d_source), (16, 8, DistanceSource::ByTheorem));
    }

    #[test]
    fn cycle_graph_code() {
        let t = tanner("cycle(6)");
        let p = cycle_code_params(&t, 24).unwrap();
        assert_eq!((p.n, p.k, p.d, p.locality), (6, 1, 6, 1));
        assert!(t.code().generator().row(0).iter().all(|e| !e.is_zero()));
        assert_eq!(t.repair_groups(0), [vec![5], vec![1]]);
    }

    #[test]
    fn rejects_forests() {
        let tree = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(cycle_code_params(&extend_to_tanner(&tree), 24), Err(GraphError::Acyclic));
    }

    #[test]
    fn dimension_counts_components() {
        let mut g = SimpleGraph::new(7);
        for (u, w) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5)] {
            g.add_edge(u, w).unwrap();
        }
        let t = extend_to_tanner(&g);
        assert_eq!(t.code().k(), g.edge_count() - g.vertex_count() + g.component_count());
    }

    #[test]
    fn codewords_are_even_subgraphs() {
        let t = tanner("petersen");
        let g = t.graph();
        let f = PrimeField::binary();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let bits: Vec<bool> = (0..g.edge_count()).map(|_| rng.gen()).collect();
            let word: Vec<Fp> = bits.iter().map(|&b| f.elem(b as i64)).collect();
            let even = (0..g.vertex_count()).all(|v| g.star(v).filter(|&e| bits[e]).count() % 2 == 0);
            assert_eq!(t.code().is_codeword(&word), even);
        }
    }

    #[test]
    fn repair_groups_reconstruct() {
        let t = tanner("petersen");
        let f = PrimeField::binary();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let msg: Vec<Fp> = (0..t.code().k()).map(|_| f.elem(rng.gen_range(0..2))).collect();
            let cw = t.code().encode(&msg);
            let j = rng.gen_range(0..cw.len());
            for group in t.repair_groups(j) {
                let sum = group.iter().fold(f.zero(), |acc, &e| acc + cw[e]);
                assert_eq!(sum, cw[j]);
            }
        }
    }
}
