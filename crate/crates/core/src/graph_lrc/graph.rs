use std::collections::VecDeque;
use std::fmt::Write as _;

use super::GraphError;

/// Undirected simple graph with stable edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    edges: Vec<(usize, usize)>,
    /// `incidence[v]` lists `(neighbor, edge index)` in insertion order.
    incidence: Vec<Vec<(usize, usize)>>,
}

impl SimpleGraph {
    pub fn new(vertices: usize) -> Self {
        Self {
            edges: Vec::new(),
            incidence: vec![Vec::new(); vertices],
        }
    }

    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(vertices);
        for &(u, w) in edges {
            g.add_edge(u, w)?;
        }
        Ok(g)
    }

    /// Adds edge `{u, w}` and returns its index.
    pub fn add_edge(&mut self, u: usize, w: usize) -> Result<usize, GraphError> {
        let count = self.vertex_count();
        for v in [u, w] {
            if v >= count {
                return Err(GraphError::VertexOutOfRange { vertex: v, count });
            }
        }
        if u == w {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, w) {
            return Err(GraphError::MultiEdge(u.min(w), u.max(w)));
        }
        let e = self.edges.len();
        self.edges.push((u, w));
        self.incidence[u].push((w, e));
        self.incidence[w].push((u, e));
        Ok(e)
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.incidence[u].iter().any(|&(x, _)| x == w)
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(|&(w, _)| w)
    }

    /// Indices of the edges at `v`.
    pub fn star(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(|&(_, e)| e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.incidence.first()?.len();
        self.incidence.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Component label of every vertex, labels in order of first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Length of a shortest cycle, 0 when the graph is acyclic.
    pub fn girth(&self) -> usize {
        (0..self.vertex_count())
            .filter_map(|s| self.shortest_cycle_from(s, usize::MAX))
            .min()
            .unwrap_or(0)
    }

    /// Shortest cycle found by a breadth-first search rooted at `s`.
    ///
    /// Minimizing over all roots gives the girth; for a single root the value
    /// is at least the length of the shortest cycle through `s`.
    fn shortest_cycle_from(&self, s: usize, bound: usize) -> Option<usize> {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut best: Option<usize> = None;
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) || 2 * dist[v] + 1 >= bound {
                break;
            }
            for &(w, e) in &self.incidence[v] {
                if e == parent_edge[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    /// Length of the shortest cycle through edge `e`, if shorter than `bound`.
    pub fn shortest_cycle_through(&self, e: usize, bound: usize) -> Option<usize> {
        let (u, w) = self.edges[e];
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(v) = queue.pop_front() {
            if dist[v] + 2 >= bound {
                break;
            }
            for &(x, f) in &self.incidence[v] {
                if f == e || dist[x] != usize::MAX {
                    continue;
                }
                dist[x] = dist[v] + 1;
                if x == w {
                    return Some(dist[x] + 1);
                }
                queue.push_back(x);
            }
        }
        None
    }

    /// Edge list format: `V E` then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, w) in &self.edges {
            let _ = writeln!(s, "{u} {w}");
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let parse_err = |line: usize, msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let nums: Vec<&str> = l.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(parse_err(line, "expected two integers"));
            }
            let a = nums[0].parse().map_err(|_| parse_err(line, "not a nonnegative integer"))?;
            let b = nums[1].parse().map_err(|_| parse_err(line, "not a nonnegative integer"))?;
            Ok((a, b))
        };
        let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let (v, e) = pair(line, header)?;
        let mut g = Self::new(v);
        let mut last_line = line;
        for _ in 0..e {
            let (line, l) = lines
                .next()
                .ok_or_else(|| parse_err(last_line + 1, "fewer edges than declared"))?;
            let (a, b) = pair(line, l)?;
            g.add_edge(a, b).map_err(|err| parse_err(line, &err.to_string()))?;
            last_line = line;
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "more edges than declared"));
        }
        Ok(g)
    }
}
