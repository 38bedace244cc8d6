//! Embedded graphs as combinatorial maps, with canonical forms, automorphism
//! orbits, vertex connectivity and planar_code I/O.

mod canon;
mod connectivity;
mod graph;
pub mod planar_code;

pub use canon::{
    automorphism_orbits, canonical_code, canonical_form, code_from, Automorphism, Canonical,
    CanonicalCode, Mode, Orbits, Start,
};
pub use connectivity::vertex_connectivity;
pub use graph::{rev, DartCycle, FaceWalk, PlaneGraph};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no edges")]
    Empty,
    #[error("inconsistent rotation data: {0}")]
    Inconsistent(String),
    #[error("loop at vertex {}", .0 + 1)]
    Loop(usize),
    #[error("vertex {} has no incident edges", .0 + 1)]
    IsolatedVertex(usize),
    #[error("vertex index {} out of range", .0 + 1)]
    VertexOutOfRange(usize),
    #[error("graph is not connected")]
    Disconnected,
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::PlaneGraph;

    pub fn cube() -> PlaneGraph {
        PlaneGraph::from_rotations(&[
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ])
        .unwrap()
    }

    pub fn octahedron() -> PlaneGraph {
        // 0 top, 5 bottom, equator 1..4 counterclockwise seen from the top
        PlaneGraph::from_rotations(&[
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
        .unwrap()
    }
}
