//! Chamber systems and the application of decorations.
//!
//! A chamber is a flag (vertex, edge, face) of a plane graph, with involutions
//! `sigma[i]` that change the type-`i` component. The chambers of one
//! orientation class are the positive ones; each positive chamber is a dart,
//! with `rev = sigma0 sigma2` and `next = sigma1 sigma2` (apply `sigma2` first).
//!
//! For a dart `d` of a map, chamber `2d` ("R") has the face on the right of
//! `d` and runs vertex, edge, face clockwise; chamber `2d + 1` ("L") has the
//! face on the left and runs counterclockwise.

use std::collections::{HashMap, HashSet};

use crate::decoration::Decoration;
use crate::embedded::{rev, GraphError, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSystem {
    sigma: [Vec<usize>; 3],
    positive: Vec<bool>,
}

impl ChamberSystem {
    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn sigma(&self, i: usize, c: usize) -> usize {
        self.sigma[i][c]
    }

    pub fn is_positive(&self, c: usize) -> bool {
        self.positive[c]
    }

    /// Orbit ids of the group generated by `sigma[a]` and `sigma[b]`.
    pub fn orbits(&self, a: usize, b: usize) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if id[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            id[s] = count;
            while let Some(c) = stack.pop() {
                for i in [a, b] {
                    let x = self.sigma[i][c];
                    if id[x] == usize::MAX {
                        id[x] = count;
                        stack.push(x);
                    }
                }
            }
            count += 1;
        }
        (id, count)
    }

    /// The map whose vertices are the type-0 orbits and whose edges are the
    /// type-1 orbits.
    pub fn to_graph(&self) -> Result<PlaneGraph, GraphError> {
        let n = self.len();
        let s = &self.sigma;
        let mut dart = vec![usize::MAX; n];
        let mut edges = 0;
        for c in (0..n).filter(|&c| self.positive[c]) {
            if dart[c] == usize::MAX {
                let r = s[0][s[2][c]];
                dart[c] = 2 * edges;
                dart[r] = 2 * edges + 1;
                edges += 1;
            }
        }
        let mut done = vec![false; n];
        let mut rot = Vec::new();
        for c in (0..n).filter(|&c| self.positive[c]) {
            if done[c] {
                continue;
            }
            let mut around = Vec::new();
            let mut x = c;
            while !done[x] {
                done[x] = true;
                around.push(dart[x]);
                x = s[1][s[2][x]];
            }
            rot.push(around);
        }
        PlaneGraph::from_dart_rotations(&rot)
    }
}

/// The chambers of a plane graph.
pub fn barycentric_subdivision(g: &PlaneGraph) -> ChamberSystem {
    let n = 2 * g.dart_count();
    let mut sigma = [vec![0; n], vec![0; n], vec![0; n]];
    for d in 0..g.dart_count() {
        let (r, l) = (2 * d, 2 * d + 1);
        sigma[0][r] = 2 * rev(d) + 1;
        sigma[0][l] = 2 * rev(d);
        sigma[1][r] = 2 * g.prev(d) + 1;
        sigma[1][l] = 2 * g.next(d);
        sigma[2][r] = l;
        sigma[2][l] = r;
    }
    let positive = (0..n).map(|c| c % 2 == 0).collect();
    ChamberSystem { sigma, positive }
}

/// Triangles of a decoration with their neighbours across each edge type:
/// `Ok(t)` for an inner neighbour, `Err(k)` for side `k`, and whether the
/// types run 0, 1, 2 clockwise.
fn triangles(d: &Decoration) -> Vec<([Result<usize, usize>; 3], bool)> {
    let g = d.graph();
    let outer = g.outer_face().unwrap();
    let faces: Vec<usize> = (0..g.face_count()).filter(|&f| f != outer).collect();
    let mut index = vec![usize::MAX; g.face_count()];
    for (i, &f) in faces.iter().enumerate() {
        index[f] = i;
    }
    faces
        .iter()
        .map(|&f| {
            let walk: Vec<usize> = g.face_darts(f).collect();
            let mut across = [Err(usize::MAX); 3];
            for &x in &walk {
                let i = d.edge_type(x) as usize;
                let h = g.face_of(rev(x));
                across[i] = if h == outer { Err(d.dart_side(rev(x)).unwrap()) } else { Ok(index[h]) };
            }
            let t0 = d.vertex_type(g.origin(walk[0]));
            let t1 = d.vertex_type(g.origin(walk[1]));
            // face walks are clockwise, so types 0, 1, 2 in walk order is clockwise
            (across, (t0 + 1) % 3 == t1)
        })
        .collect()
}

/// The chamber system of the decorated graph: every chamber of `g` replaced
/// by a copy of `d`, reflected in the clockwise chambers.
pub fn apply_decoration(d: &Decoration, g: &PlaneGraph) -> ChamberSystem {
    let base = barycentric_subdivision(g);
    let tri = triangles(d);
    let t = tri.len();
    let n = base.len() * t;
    let mut sigma = [vec![0; n], vec![0; n], vec![0; n]];
    let mut positive = vec![false; n];
    for c in 0..base.len() {
        for (j, (across, clockwise)) in tri.iter().enumerate() {
            let f = c * t + j;
            for i in 0..3 {
                sigma[i][f] = match across[i] {
                    Ok(h) => c * t + h,
                    Err(k) => base.sigma[k][c] * t + j,
                };
            }
            let ccw_chamber = !base.positive[c];
            positive[f] = ccw_chamber == *clockwise;
        }
    }
    ChamberSystem { sigma, positive }
}

/// The graph produced by applying `d` to `g`. Fails when the result has
/// loops, which only happens for decorations of class 1.
pub fn apply(d: &Decoration, g: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    apply_decoration(d, g).to_graph()
}

/// `min(3, connectivity)` of the graph described by a chamber system, read
/// off the incidences of vertices and faces: a vertex met twice by a face
/// leaves a cut vertex, and two vertices sharing two faces without an edge
/// between them along both, or sharing three faces, leave a 2-cut.
pub fn connectivity_of_chamber_system(cs: &ChamberSystem) -> usize {
    let (vertex, _) = cs.orbits(1, 2);
    let (face, _) = cs.orbits(0, 1);
    let (edge, _) = cs.orbits(0, 2);
    // type-1 edges are the sigma1 pairs, joining a vertex to a face
    let mut incidences: HashMap<(usize, usize), usize> = HashMap::new();
    for c in 0..cs.len() {
        if c < cs.sigma[1][c] {
            *incidences.entry((vertex[c], face[c])).or_default() += 1;
        }
    }
    if incidences.values().any(|&m| m > 1) {
        return 1;
    }
    // (vertex pair, face pair) bordered by an edge
    let mut spans: HashSet<(usize, usize, usize, usize)> = HashSet::new();
    let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
    for c in 0..cs.len() {
        members.entry(edge[c]).or_default().push(c);
    }
    for cs_of_edge in members.values() {
        let mut vs: Vec<usize> = cs_of_edge.iter().map(|&c| vertex[c]).collect();
        let mut fs: Vec<usize> = cs_of_edge.iter().map(|&c| face[c]).collect();
        vs.sort_unstable();
        vs.dedup();
        fs.sort_unstable();
        fs.dedup();
        if vs.len() == 2 && fs.len() == 2 && !spans.insert((vs[0], vs[1], fs[0], fs[1])) {
            return 2;
        }
    }
    let mut common: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut by_face: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(v, f) in incidences.keys() {
        by_face.entry(f).or_default().push(v);
    }
    for (&f, vs) in &by_face {
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                common.entry((x.min(y), x.max(y))).or_default().push(f);
            }
        }
    }
    for ((x, y), fs) in common {
        match fs.len() {
            0 | 1 => {}
            2 => {
                let (f, g) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
                if !spans.contains(&(x, y, f, g)) {
                    return 2;
                }
            }
            _ => return 2,
        }
    }
    3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::tests::identity;
    use crate::embedded::test_graphs::cube;
    use crate::embedded::{canonical_code, Mode};

    #[test]
    fn subdivision_round_trip() {
        let g = cube();
        let back = barycentric_subdivision(&g).to_graph().unwrap();
        assert_eq!(canonical_code(&g, Mode::Full, None), canonical_code(&back, Mode::Full, None));
    }

    #[test]
    fn identity_preserves_the_cube() {
        let g = cube();
        let o = apply(&identity(), &g).unwrap();
        assert_eq!(
            canonical_code(&g, Mode::OrientationPreserving, None),
            canonical_code(&o, Mode::OrientationPreserving, None)
        );
        assert_eq!(connectivity_of_chamber_system(&barycentric_subdivision(&g)), 3);
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::catalog::{self, OPERATIONS};

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            // the result depends on the map, not on how its vertices are numbered
            #[test]
            fn relabeling_the_seed(op in 0..OPERATIONS.len(), perm in Just((0..12).collect::<Vec<usize>>()).prop_shuffle()) {
                let d = catalog::lookup(OPERATIONS[op]).unwrap().decoration;
                let g = catalog::seed("icosahedron").unwrap();
                let a = apply(&d, &g).unwrap();
                let b = apply(&d, &g.relabeled(&perm)).unwrap();
                prop_assert_eq!(a.edge_count(), d.inflation_rate() * g.edge_count());
                prop_assert_eq!(
                    canonical_code(&a, Mode::OrientationPreserving, None),
                    canonical_code(&b, Mode::OrientationPreserving, None)
                );
            }
        }
    }
}
