use super::{GraphError, SimpleGraph};

/// Expected `(vertices, edges, degree, girth)` for the fixed library graphs.
const LIBRARY: &[(&str, usize, usize, usize, usize)] = &[
    ("k33", 6, 9, 3, 4),
    ("k4", 4, 6, 3, 3),
    ("petersen", 10, 15, 3, 5),
    ("heawood", 14, 21, 3, 6),
    ("mcgee", 24, 36, 3, 7),
    ("tutte_coxeter", 30, 45, 3, 8),
];

pub fn library_names() -> Vec<&'static str> {
    LIBRARY.iter().map(|e| e.0).collect()
}

/// Hamiltonian cycle `0..n` plus chords from LCF notation.
fn lcf(n: usize, shifts: &[i64]) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).expect("cycle edge");
    }
    for i in 0..n {
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j).expect("chord");
        }
    }
    g
}

fn complete(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b).expect("distinct");
        }
    }
    g
}

fn cycle(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).expect("cycle edge");
    }
    g
}

/// K3,3 with constraints `c1..c6` as vertices `0..6` and edges in the order
/// `x1..x9`, so its incidence matrix is the 6 x 9 example parity check.
fn k33() -> SimpleGraph {
    SimpleGraph::from_edges(
        6,
        &[(0, 3), (1, 4), (2, 5), (0, 5), (1, 3), (2, 4), (0, 4), (1, 5), (2, 3)],
    )
    .expect("simple")
}

fn petersen() -> SimpleGraph {
    let mut g = SimpleGraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("outer");
    }
    for i in 0..5 {
        g.add_edge(i, i + 5).expect("spoke");
    }
    for i in 0..5 {
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("inner");
    }
    g
}

fn parse_arg(name: &str, prefix: &str) -> Option<Result<usize, GraphError>> {
    let inner = name.strip_prefix(prefix)?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse()
            .map_err(|_| GraphError::UnknownGraph(name.to_string())),
    )
}

/// Looks up a library graph by name: `k33`, `k4`, `petersen`, `heawood`,
/// `mcgee`, `tutte_coxeter`, `cycle(n)` or `complete(n)`.
pub fn named_graph(name: &str) -> Result<SimpleGraph, GraphError> {
    if let Some(n) = parse_arg(name, "cycle(") {
        let n = n?;
        if n < 3 {
            return Err(GraphError::InvalidParams(format!("cycle needs n >= 3, got {n}")));
        }
        return Ok(cycle(n));
    }
    if let Some(n) = parse_arg(name, "complete(") {
        return Ok(complete(n?));
    }
    let g = match name {
        "k33" => k33(),
        "k4" => complete(4),
        "petersen" => petersen(),
        "heawood" => lcf(14, &[5, -5]),
        "mcgee" => lcf(24, &[12, 7, -7]),
        "tutte_coxeter" => lcf(30, &[-13, -9, 7, -7, 9, 13]),
        _ => return Err(GraphError::UnknownGraph(name.to_string())),
    };
    let &(_, v, e, d, girth) = LIBRARY.iter().find(|x| x.0 == name).expect("listed");
    assert_eq!(
        (g.vertex_count(), g.edge_count(), g.regular_degree(), g.girth()),
        (v, e, Some(d), girth),
        "library graph {name} does not match its metadata"
    );
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_metadata() {
        for name in library_names() {
            let g = named_graph(name).unwrap();
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn parametric_families() {
        let c7 = named_graph("cycle(7)").unwrap();
        assert_eq!((c7.vertex_count(), c7.edge_count(), c7.girth()), (7, 7, 7));
        let k5 = named_graph("complete(5)").unwrap();
        assert_eq!((k5.edge_count(), k5.girth(), k5.regular_degree()), (10, 3, Some(4)));
        assert!(named_graph("cycle(2)").is_err());
        assert!(named_graph("cycle(x)").is_err());
        assert!(matches!(named_graph("dodecahedron"), Err(GraphError::UnknownGraph(_))));
    }

    #[test]
    fn k33_edge_order() {
        let g = named_graph("k33").unwrap();
        // x1 touches c1 and c4; x5 touches c2 and c4
        assert_eq!(g.edge(0), (0, 3));
        assert_eq!(g.edge(4), (1, 3));
    }
}
