//! Predecorations: the type-1 skeletons of decorations.
//!
//! A predecoration is a connected plane graph with an outer face whose inner
//! faces are quadrangles, whose inner vertices have degree at least 3, and
//! whose boundary defects stay within budget: `n_a <= 2` and
//! `n_a + n_b + n_c <= 3`.

use std::fmt;

use crate::embedded::PlaneGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predecoration {
    graph: PlaneGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Counters {
    pub n_a: usize,
    pub n_b: usize,
    pub n_c: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RateBounds {
    pub lo: usize,
    pub hi: usize,
}

impl RateBounds {
    pub fn contains(&self, r: usize) -> bool {
        self.lo <= r && r <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredecorationViolation {
    NoOuterFace,
    NotPlane,
    InnerFace(usize),
    InnerDegree(usize),
    Budget(Counters),
}

impl fmt::Display for PredecorationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoOuterFace => write!(f, "no outer face designated"),
            Self::NotPlane => write!(f, "embedding is not plane"),
            Self::InnerFace(x) => write!(f, "inner face {x} is not a quadrangle"),
            Self::InnerDegree(v) => write!(f, "inner vertex {} has degree below 3", v + 1),
            Self::Budget(c) => write!(f, "defect budget exceeded: {c:?}"),
        }
    }
}

/// Outer-face occurrences per vertex (0 for inner vertices).
pub fn outer_occurrences(g: &PlaneGraph) -> Vec<usize> {
    let mut occ = vec![0; g.vertex_count()];
    if let Some(f) = g.outer_face() {
        for d in g.face_darts(f) {
            occ[g.origin(d)] += 1;
        }
    }
    occ
}

pub fn counters(g: &PlaneGraph) -> Counters {
    let deg = g.degrees();
    let mut c = Counters { n_a: 0, n_b: 0, n_c: 0 };
    for v in 0..g.vertex_count() {
        if deg[v] == 1 {
            let w = g.head(g.vertex_dart(v));
            if deg[w] == 2 {
                c.n_a += 1;
            } else {
                c.n_b += 1;
            }
        }
    }
    for f in 0..g.face_count() {
        if Some(f) == g.outer_face() {
            continue;
        }
        let vs = g.face_vertices(f);
        if vs.len() == 4 && vs.iter().filter(|&&v| deg[v] == 2).count() >= 3 {
            c.n_c += 1;
        }
    }
    c
}

pub fn validate_predecoration(g: &PlaneGraph) -> Vec<PredecorationViolation> {
    let Some(outer) = g.outer_face() else {
        return vec![PredecorationViolation::NoOuterFace];
    };
    if !g.is_plane() {
        return vec![PredecorationViolation::NotPlane];
    }
    let mut out = Vec::new();
    for f in 0..g.face_count() {
        if f != outer && g.face_size(f) != 4 {
            out.push(PredecorationViolation::InnerFace(f));
        }
    }
    let occ = outer_occurrences(g);
    for v in 0..g.vertex_count() {
        if occ[v] == 0 && g.degree(v) < 3 {
            out.push(PredecorationViolation::InnerDegree(v));
        }
    }
    let c = counters(g);
    if c.n_a > 2 || c.n_a + c.n_b + c.n_c > 3 {
        out.push(PredecorationViolation::Budget(c));
    }
    out
}

impl Predecoration {
    pub fn new(graph: PlaneGraph) -> Result<Self, Vec<PredecorationViolation>> {
        let v = validate_predecoration(&graph);
        if v.is_empty() {
            Ok(Predecoration { graph })
        } else {
            Err(v)
        }
    }

    pub(crate) fn new_unchecked(graph: PlaneGraph) -> Self {
        Predecoration { graph }
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    pub fn outer_face(&self) -> usize {
        self.graph.outer_face().expect("predecorations carry an outer face")
    }

    pub fn counters(&self) -> Counters {
        counters(&self.graph)
    }

    pub fn quad_count(&self) -> usize {
        self.graph.face_count() - 1
    }

    pub fn outer_size(&self) -> usize {
        self.graph.face_size(self.outer_face())
    }

    pub fn rate_bounds(&self) -> RateBounds {
        let cut: usize = outer_occurrences(&self.graph).iter().map(|&m| m.saturating_sub(1)).sum();
        RateBounds { lo: 4 * self.quad_count() + 2 * cut, hi: 2 * self.graph.edge_count() }
    }

    /// The same predecoration with reversed orientation.
    pub fn mirrored(&self) -> Predecoration {
        Predecoration { graph: self.graph.mirrored() }
    }

    /// The two base predecorations: a single edge and a quadrangle.
    pub fn k2() -> Predecoration {
        let g = PlaneGraph::from_rotations(&[vec![1], vec![0]]).unwrap();
        Predecoration { graph: g.with_outer_dart(0) }
    }

    pub fn c4() -> Predecoration {
        let g = PlaneGraph::from_rotations(&[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        // either face can be outer; pick the one on the right of 0 -> 1
        let d = (0..g.dart_count()).find(|&d| g.origin(d) == 0 && g.head(d) == 1).unwrap();
        Predecoration { graph: g.with_outer_dart(d) }
    }

    pub fn is_base(&self) -> bool {
        let g = &self.graph;
        g.edge_count() == 1 || (g.vertex_count() == 4 && g.edge_count() == 4 && g.face_count() == 2)
    }
}
