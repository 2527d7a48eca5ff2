//! Cycle codes of regular graphs: the Tanner extension, girth, named graphs
//! and girth-targeted random generation.

mod generate;
mod graph;
mod named;
mod tanner;

pub use generate::{generate_regular_girth, moore_lower_bound, GeneratedGraph};
pub use graph::SimpleGraph;
pub use named::{library_names, named_graph};
pub use tanner::{cycle_code_params, extend_to_tanner, CycleCodeParams, DistanceSource, TannerCode};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("repeated edge {0}-{1}")]
    MultiEdge(usize, usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("unknown graph {0:?}")]
    UnknownGraph(String),
    #[error("{0}")]
    InvalidParams(String),
    #[error("degree {degree} times {vertices} vertices is odd")]
    Parity { degree: usize, vertices: usize },
    #[error("{vertices} vertices is below the Moore bound {moore} for degree {degree}, girth {girth}")]
    Infeasible {
        degree: usize,
        girth: usize,
        vertices: usize,
        moore: u64,
    },
    #[error("graph is acyclic; its cycle code is trivial")]
    Acyclic,
    #[error("minimum distance {distance} differs from girth {girth}")]
    GirthMismatch { girth: usize, distance: usize },
    #[error("repair groups of edge {0} do not reconstruct it")]
    RepairCheck(usize),
}
