//! The planar_code interchange format.
//!
//! Optional header `>>planar_code<<`, then per graph: one byte `n`, and for
//! each vertex `1..=n` its neighbours in counterclockwise order as bytes,
//! terminated by `0`. Graphs with more than 255 vertices cannot be encoded.
//! A designated outer face is written as the face on the right of the first
//! dart of vertex 1.

use thiserror::Error;

use super::{GraphError, PlaneGraph};

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanarCodeError {
    #[error("unexpected end of planar_code stream")]
    Truncated,
    #[error("malformed header")]
    BadHeader,
    #[error("vertex index {0} out of range for graph with {1} vertices")]
    IndexOutOfRange(u8, u8),
    #[error("graph with {0} vertices exceeds the 255 vertex limit")]
    TooLarge(usize),
    #[error("graph has zero vertices")]
    ZeroVertices,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn write_planar_code(graphs: &[PlaneGraph]) -> Result<Vec<u8>, PlanarCodeError> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        write_graph(g, &mut out)?;
    }
    Ok(out)
}

pub fn write_graph(g: &PlaneGraph, out: &mut Vec<u8>) -> Result<(), PlanarCodeError> {
    let root = g.outer_face().map_or(g.vertex_dart(0), |f| g.face_dart(f));
    write_graph_from(g, root, out).map(|_| ())
}

/// Writes `g` with `root` as the first dart of vertex 1 and returns the new
/// 0-based label of every vertex.
pub fn write_graph_from(g: &PlaneGraph, root: usize, out: &mut Vec<u8>) -> Result<Vec<usize>, PlanarCodeError> {
    let n = g.vertex_count();
    if n > 255 {
        return Err(PlanarCodeError::TooLarge(n));
    }
    out.push(n as u8);
    let r = g.origin(root);
    // swap vertex 1 with the root's origin
    let mut order: Vec<usize> = (0..n).collect();
    order.swap(0, r);
    let mut label = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    for &v in &order {
        let first = if v == r { root } else { g.vertex_dart(v) };
        for d in g.darts_from(first) {
            out.push((label[g.head(d)] + 1) as u8);
        }
        out.push(0);
    }
    Ok(label)
}

/// The graph with the face right of the first dart of vertex 1 as outer face.
pub fn rooted(g: PlaneGraph) -> PlaneGraph {
    let d = g.vertex_dart(0);
    g.with_outer_dart(d)
}

pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, PlanarCodeError> {
    let mut pos = 0;
    if bytes.first() == Some(&b'>') {
        if !bytes.starts_with(b">>planar_code") {
            return Err(PlanarCodeError::BadHeader);
        }
        let end = bytes
            .windows(2)
            .position(|w| w == b"<<")
            .ok_or(PlanarCodeError::BadHeader)?;
        pos = end + 2;
    }
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let n = bytes[pos];
        pos += 1;
        if n == 0 {
            return Err(PlanarCodeError::ZeroVertices);
        }
        let mut rot = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let b = *bytes.get(pos).ok_or(PlanarCodeError::Truncated)?;
                pos += 1;
                if b == 0 {
                    break;
                }
                if b > n {
                    return Err(PlanarCodeError::IndexOutOfRange(b, n));
                }
                list.push(b as usize - 1);
            }
            rot.push(list);
        }
        graphs.push(PlaneGraph::from_rotations(&rot)?);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedded::test_graphs::{cube, octahedron};
    use crate::embedded::{canonical_code, Mode};

    #[test]
    fn round_trip_cube() {
        let bytes = write_planar_code(&[cube()]).unwrap();
        let back = read_planar_code(&bytes).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(
            canonical_code(&back[0], Mode::OrientationPreserving, None),
            canonical_code(&cube(), Mode::OrientationPreserving, None)
        );
    }

    #[test]
    fn outer_face_survives() {
        let g = cube();
        let g = g.clone().with_outer_dart(g.vertex_dart(5));
        let back = rooted(read_planar_code(&write_planar_code(&[g.clone()]).unwrap()).unwrap().remove(0));
        let size = |h: &PlaneGraph| h.face_size(h.outer_face().unwrap());
        assert_eq!(size(&back), size(&g));
        let d = back.face_dart(back.outer_face().unwrap());
        assert_eq!(back.origin(d), 0);
    }

    #[test]
    fn two_graphs() {
        let bytes = write_planar_code(&[cube(), octahedron()]).unwrap();
        assert_eq!(read_planar_code(&bytes).unwrap().len(), 2);
    }

    #[test]
    fn garbage_rejected() {
        assert_eq!(read_planar_code(b">>garbage<<"), Err(PlanarCodeError::BadHeader));
        assert_eq!(read_planar_code(&[3, 2, 0, 1]), Err(PlanarCodeError::Truncated));
        assert!(matches!(
            read_planar_code(&[2, 5, 0, 1, 0]),
            Err(PlanarCodeError::IndexOutOfRange(5, 2))
        ));
    }
}
