//! Decorations: typed triangulated disks with three marked corners.
//!
//! Vertex types live in `{0, 1, 2}`; the type of an edge is the one type its
//! endpoints do not have. Corners are stored normalized: walking the outer
//! face (face on the right, so the disk is on the left) from `v0`, `v1` comes
//! before `v2`.

mod class;
pub mod format;

use std::fmt;

use crate::embedded::{code_from, CanonicalCode, PlaneGraph, Start};
use crate::predecoration::Predecoration;

pub use class::connectivity_class;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoration {
    graph: PlaneGraph,
    types: Vec<u8>,
    corners: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoOuterFace,
    TypeOutOfRange(usize),
    NotTriangle(usize),
    SameTypeEdge(usize),
    Alternation(usize),
    BoundaryNotSimple(usize),
    CornerNotOnBoundary(usize),
    DuplicateCorner,
    CornerType(usize),
    CornerOrder,
    Degree(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NoOuterFace => write!(f, "no outer face designated"),
            Violation::TypeOutOfRange(v) => write!(f, "vertex {} has a type outside 0..=2", v + 1),
            Violation::NotTriangle(x) => write!(f, "inner face {x} is not a triangle"),
            Violation::SameTypeEdge(e) => write!(f, "edge {e} joins two vertices of equal type"),
            Violation::Alternation(v) => {
                write!(f, "edge types do not alternate around vertex {}", v + 1)
            }
            Violation::BoundaryNotSimple(v) => {
                write!(f, "vertex {} occurs twice on the boundary", v + 1)
            }
            Violation::CornerNotOnBoundary(v) => write!(f, "corner {} is not on the boundary", v + 1),
            Violation::DuplicateCorner => write!(f, "corners are not distinct"),
            Violation::CornerType(v) => write!(f, "corner {} has a forbidden type", v + 1),
            Violation::CornerOrder => write!(f, "corners are not in boundary order v0, v1, v2"),
            Violation::Degree(v) => write!(f, "vertex {} has a forbidden degree", v + 1),
        }
    }
}

/// Lists every violation of the decoration axioms; empty means valid.
pub fn validate(graph: &PlaneGraph, types: &[u8], corners: [usize; 3]) -> Vec<Violation> {
    let mut out = Vec::new();
    let Some(outer) = graph.outer_face() else {
        return vec![Violation::NoOuterFace];
    };
    let n = graph.vertex_count();
    if types.len() != n {
        return vec![Violation::TypeOutOfRange(types.len().min(n))];
    }
    for (v, &t) in types.iter().enumerate() {
        if t > 2 {
            out.push(Violation::TypeOutOfRange(v));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..graph.face_count() {
        if f == outer {
            continue;
        }
        let vs = graph.face_vertices(f);
        if vs.len() != 3 || vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2] {
            out.push(Violation::NotTriangle(f));
        }
    }
    for e in 0..graph.edge_count() {
        let d = 2 * e;
        if types[graph.origin(d)] == types[graph.head(d)] {
            out.push(Violation::SameTypeEdge(e));
        }
    }
    for v in 0..n {
        // consecutive edges around v that enclose an inner face must differ in type
        let bad = graph.darts_around(v).any(|d| {
            let nd = graph.next(d);
            nd != d
                && !graph.is_outer_dart(nd)
                && types[graph.head(d)] == types[graph.head(nd)]
        });
        if bad {
            out.push(Violation::Alternation(v));
        }
    }
    let walk: Vec<usize> = graph.face_darts(outer).map(|d| graph.origin(d)).collect();
    let mut seen = vec![false; n];
    let mut on_boundary = vec![false; n];
    for &v in &walk {
        if seen[v] {
            out.push(Violation::BoundaryNotSimple(v));
        }
        seen[v] = true;
        on_boundary[v] = true;
    }
    let [v0, v1, v2] = corners;
    if corners.iter().any(|&c| c >= n) {
        out.push(Violation::DuplicateCorner);
        return out;
    }
    if v0 == v1 || v1 == v2 || v0 == v2 {
        out.push(Violation::DuplicateCorner);
    }
    for c in corners {
        if !on_boundary[c] {
            out.push(Violation::CornerNotOnBoundary(c));
        }
    }
    if types[v0] == 1 {
        out.push(Violation::CornerType(v0));
    }
    if types[v2] == 1 {
        out.push(Violation::CornerType(v2));
    }
    if !out.is_empty() {
        return out;
    }
    let pos = |x: usize| walk.iter().position(|&v| v == x).unwrap();
    let (p0, p1, p2) = (pos(v0), pos(v1), pos(v2));
    let l = walk.len();
    if (p1 + l - p0) % l > (p2 + l - p0) % l {
        out.push(Violation::CornerOrder);
    }
    for v in 0..n {
        let deg = graph.degree(v);
        let ok = if v == v0 || v == v2 {
            true
        } else if v == v1 {
            if types[v] == 1 {
                deg == 2
            } else {
                deg > 2
            }
        } else if on_boundary[v] {
            if types[v] == 1 {
                deg == 3
            } else {
                deg > 3
            }
        } else if types[v] == 1 {
            deg == 4
        } else {
            deg > 4
        };
        if !ok {
            out.push(Violation::Degree(v));
        }
    }
    out
}

impl Decoration {
    /// Builds a decoration, checking every axiom.
    pub fn new(graph: PlaneGraph, types: Vec<u8>, corners: [usize; 3]) -> Result<Self, Vec<Violation>> {
        let v = validate(&graph, &types, corners);
        if v.is_empty() {
            Ok(Decoration { graph, types, corners })
        } else {
            Err(v)
        }
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn vertex_type(&self, v: usize) -> u8 {
        self.types[v]
    }

    pub fn types(&self) -> &[u8] {
        &self.types
    }

    /// Type of the edge carrying dart `d`.
    pub fn edge_type(&self, d: usize) -> u8 {
        3 - self.types[self.graph.origin(d)] - self.types[self.graph.head(d)]
    }

    pub fn corners(&self) -> [usize; 3] {
        self.corners
    }

    /// The boundary dart leaving `v`; `v` must be on the boundary.
    pub fn boundary_dart(&self, v: usize) -> Option<usize> {
        self.graph.darts_around(v).find(|&d| self.graph.is_outer_dart(d))
    }

    /// Boundary vertices in walk order starting at `v0`.
    pub fn boundary(&self) -> Vec<usize> {
        let d0 = self.boundary_dart(self.corners[0]).unwrap();
        self.graph.face_walk(d0).map(|d| self.graph.origin(d)).collect()
    }

    /// Number of chambers, i.e. inner triangles.
    pub fn inflation_rate(&self) -> usize {
        self.graph.face_count() - 1
    }

    /// Sides indexed by k: the boundary path between the two corners other
    /// than `v_k`, both endpoints included.
    pub fn sides(&self) -> [Vec<usize>; 3] {
        let walk = self.boundary();
        let p1 = walk.iter().position(|&v| v == self.corners[1]).unwrap();
        let p2 = walk.iter().position(|&v| v == self.corners[2]).unwrap();
        let side2 = walk[..=p1].to_vec();
        let side0 = walk[p1..=p2].to_vec();
        let mut side1 = walk[p2..].to_vec();
        side1.push(walk[0]);
        [side0, side1, side2]
    }

    /// Bit k set when the vertex lies on side k.
    pub fn side_mask(&self) -> Vec<u8> {
        let mut mask = vec![0u8; self.graph.vertex_count()];
        for (k, side) in self.sides().iter().enumerate() {
            for &v in side {
                mask[v] |= 1 << k;
            }
        }
        mask
    }

    /// Side of a boundary dart (its face on the right is the outer face).
    pub fn dart_side(&self, d: usize) -> Option<usize> {
        if !self.graph.is_outer_dart(d) {
            return None;
        }
        let walk = self.boundary();
        let i = walk.iter().position(|&v| v == self.graph.origin(d)).unwrap();
        let p1 = walk.iter().position(|&v| v == self.corners[1]).unwrap();
        let p2 = walk.iter().position(|&v| v == self.corners[2]).unwrap();
        Some(if i < p1 {
            2
        } else if i < p2 {
            0
        } else {
            1
        })
    }

    pub fn connectivity_class(&self) -> u8 {
        connectivity_class(self)
    }

    /// Reflection with `v0` and `v2` exchanged, so the corner order stays normalized.
    pub fn mirror(&self) -> Decoration {
        let [v0, v1, v2] = self.corners;
        Decoration { graph: self.graph.mirrored(), types: self.types.clone(), corners: [v2, v1, v0] }
    }

    /// Exchanges types 0 and 2 everywhere; corners stay in place.
    pub fn swap02(&self) -> Decoration {
        let types = self.types.iter().map(|&t| 2 - t).collect();
        Decoration { graph: self.graph.clone(), types, corners: self.corners }
    }

    /// Code under orientation-preserving, corner- and type-preserving
    /// isomorphism. Such isomorphisms are unique when they exist, so the
    /// traversal from the boundary dart at `v0` is already canonical.
    pub fn identity(&self) -> CanonicalCode {
        let labels: Vec<u32> = (0..self.graph.vertex_count())
            .map(|v| {
                let corner = self.corners.iter().position(|&c| c == v).map_or(0, |i| i + 1);
                1 + self.types[v] as u32 + 3 * corner as u32
            })
            .collect();
        let start = Start { dart: self.boundary_dart(self.corners[0]).unwrap(), mirrored: false };
        let (code, _) = code_from(&self.graph, start, Some(&labels), None).unwrap();
        CanonicalCode { code, mode_full: false }
    }

    /// The subgraph of type-1 edges with the inherited embedding.
    pub fn type1_subgraph(&self) -> Predecoration {
        let g = &self.graph;
        let keep: Vec<bool> = (0..g.dart_count()).map(|d| self.edge_type(d) == 1).collect();
        let mut index = vec![usize::MAX; g.vertex_count()];
        let mut count = 0;
        for v in 0..g.vertex_count() {
            if self.types[v] != 1 {
                index[v] = count;
                count += 1;
            }
        }
        let mut edge_id = vec![usize::MAX; g.edge_count()];
        let mut edges = 0;
        for e in 0..g.edge_count() {
            if keep[2 * e] {
                edge_id[e] = edges;
                edges += 1;
            }
        }
        let sub = |d: usize| 2 * edge_id[d / 2] + (d & 1);
        let mut rot = vec![Vec::new(); count];
        for v in 0..g.vertex_count() {
            if index[v] != usize::MAX {
                rot[index[v]] = g.darts_around(v).filter(|&d| keep[d]).map(sub).collect();
            }
        }
        let p = PlaneGraph::from_dart_rotations(&rot).expect("type-1 subgraph is connected");
        // the sub-dart whose right-hand face contains the outer corner at a boundary vertex
        let x = self.boundary().into_iter().find(|&v| self.types[v] != 1).unwrap();
        let d0 = self.boundary_dart(x).unwrap();
        let s = g.darts_from(d0).find(|&d| keep[d]).unwrap();
        Predecoration::new_unchecked(p.with_outer_dart(sub(s)))
    }

    pub(crate) fn from_parts(graph: PlaneGraph, types: Vec<u8>, corners: [usize; 3]) -> Self {
        debug_assert!(validate(&graph, &types, corners).is_empty());
        Decoration { graph, types, corners }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The single chamber with `v0`, `v1`, `v2` of types 0, 1, 2.
    pub fn identity() -> Decoration {
        // v0=0, v1=1, v2=2 counterclockwise; outer face walks 0 -> 1 -> 2
        let g = PlaneGraph::from_rotations(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let d = (0..g.dart_count()).find(|&d| g.origin(d) == 0 && g.head(d) == 1).unwrap();
        let g = g.with_outer_dart(d);
        Decoration::new(g, vec![0, 1, 2], [0, 1, 2]).unwrap()
    }

    #[test]
    fn identity_is_valid_rate_one() {
        let d = identity();
        assert_eq!(d.inflation_rate(), 1);
        assert_eq!(d.boundary(), vec![0, 1, 2]);
        assert_eq!(d.sides(), [vec![1, 2], vec![2, 0], vec![0, 1]]);
    }

    #[test]
    fn dual_differs_from_identity() {
        let d = identity();
        assert_ne!(d.identity(), d.swap02().identity());
        assert_eq!(d.swap02().swap02().identity(), d.identity());
    }

    #[test]
    fn mirror_is_an_involution() {
        let d = identity();
        assert_eq!(d.mirror().mirror().identity(), d.identity());
        assert!(validate(d.mirror().graph(), d.types(), d.mirror().corners()).is_empty());
    }

    #[test]
    fn wrong_corner_order_is_reported() {
        let d = identity();
        let v = validate(d.graph(), d.types(), [2, 1, 0]);
        assert!(v.contains(&Violation::CornerOrder));
    }

    #[test]
    fn type1_subgraph_of_identity_is_k2() {
        let p = identity().type1_subgraph();
        assert_eq!(p.graph().vertex_count(), 2);
        assert_eq!(p.graph().edge_count(), 1);
    }
}
