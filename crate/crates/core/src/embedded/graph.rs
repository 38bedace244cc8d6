//! Combinatorial maps: darts, rotations and derived faces.
//!
//! Darts come in pairs: dart `2e` and `2e + 1` are the two halves of edge `e`,
//! so the reverse of a dart is `d ^ 1`. `next` is the counterclockwise
//! successor around the origin vertex. Faces are the orbits of
//! `face_next(d) = next(rev(d))`; a face walk keeps the face on its right.

use std::collections::VecDeque;

use super::GraphError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    origin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    vertex_dart: Vec<usize>,
    face_of: Vec<usize>,
    face_dart: Vec<usize>,
    outer: Option<usize>,
}

#[inline]
pub fn rev(d: usize) -> usize {
    d ^ 1
}

impl PlaneGraph {
    /// Builds a map from per-vertex dart lists in counterclockwise order.
    ///
    /// Dart ids must be exactly `0..2E`; dart `d ^ 1` is the reverse of `d`.
    pub fn from_dart_rotations(rotations: &[Vec<usize>]) -> Result<Self, GraphError> {
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        if dart_count == 0 {
            return Err(GraphError::Empty);
        }
        if dart_count % 2 != 0 {
            return Err(GraphError::Inconsistent("odd number of darts".into()));
        }
        let unset = usize::MAX;
        let mut origin = vec![unset; dart_count];
        let mut next = vec![unset; dart_count];
        let mut prev = vec![unset; dart_count];
        let mut vertex_dart = Vec::with_capacity(rotations.len());
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(GraphError::IsolatedVertex(v));
            }
            vertex_dart.push(rot[0]);
            for (i, &d) in rot.iter().enumerate() {
                if d >= dart_count {
                    return Err(GraphError::Inconsistent(format!("dart {d} out of range")));
                }
                if origin[d] != unset {
                    return Err(GraphError::Inconsistent(format!("dart {d} listed twice")));
                }
                origin[d] = v;
                let n = rot[(i + 1) % rot.len()];
                next[d] = n;
            }
        }
        for d in 0..dart_count {
            if origin[d] == unset {
                return Err(GraphError::Inconsistent(format!("dart {d} not listed")));
            }
            prev[next[d]] = d;
        }
        for d in (0..dart_count).step_by(2) {
            if origin[d] == origin[d + 1] {
                return Err(GraphError::Loop(origin[d]));
            }
        }
        let mut g = PlaneGraph {
            origin,
            next,
            prev,
            vertex_dart,
            face_of: Vec::new(),
            face_dart: Vec::new(),
            outer: None,
        };
        g.trace_faces();
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Builds a map from counterclockwise neighbour lists (0-based).
    ///
    /// Every adjacency must appear on both endpoints with equal multiplicity.
    /// Parallel edges are paired in opposite order on the two endpoints, which
    /// is the planar pairing when the parallel edges are listed consecutively.
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self, GraphError> {
        let n = rotations.len();
        let mut pending: std::collections::HashMap<(usize, usize), Vec<usize>> =
            std::collections::HashMap::new();
        let mut dart_rot: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut edge_count = 0usize;
        // first endpoint (lower id) allocates darts, the second consumes them in reverse
        for (u, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w));
                }
                if w == u {
                    return Err(GraphError::Loop(u));
                }
                if u < w {
                    let d = 2 * edge_count;
                    edge_count += 1;
                    pending.entry((u, w)).or_default().push(d + 1);
                    dart_rot[u].push(d);
                } else {
                    dart_rot[u].push(usize::MAX);
                }
            }
        }
        for (u, rot) in rotations.iter().enumerate() {
            // count occurrences from the end so parallel edges pair in reverse
            let mut used: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
            for (i, &w) in rot.iter().enumerate() {
                if w < u {
                    let list = pending.get(&(w, u)).ok_or_else(|| {
                        GraphError::Inconsistent(format!(
                            "vertex {} lists {} but not vice versa",
                            u + 1,
                            w + 1
                        ))
                    })?;
                    let k = used.entry(w).or_insert(0);
                    if *k >= list.len() {
                        return Err(GraphError::Inconsistent(format!(
                            "multiplicity mismatch between {} and {}",
                            w + 1,
                            u + 1
                        )));
                    }
                    dart_rot[u][i] = list[list.len() - 1 - *k];
                    *k += 1;
                }
            }
            for (&w, &k) in &used {
                if k != pending[&(w, u)].len() {
                    return Err(GraphError::Inconsistent(format!(
                        "multiplicity mismatch between {} and {}",
                        w + 1,
                        u + 1
                    )));
                }
            }
        }
        for ((u, w), list) in &pending {
            let listed = rotations[*w].iter().filter(|&&x| x == *u).count();
            if listed != list.len() {
                return Err(GraphError::Inconsistent(format!(
                    "vertex {} lists {} but not vice versa",
                    u + 1,
                    w + 1
                )));
            }
        }
        Self::from_dart_rotations(&dart_rot)
    }

    /// Builds a simple map from counterclockwise face cycles (0-based).
    ///
    /// The faces need not cover the surface: whatever is left over becomes
    /// further faces, so a triangulated disk can be given by its triangles.
    pub fn from_faces(faces: &[Vec<usize>]) -> Result<Self, GraphError> {
        let n = faces.iter().flatten().max().map_or(0, |&m| m + 1);
        // at p_i the counterclockwise turn goes from p_{i+1} to p_{i-1}
        let mut turn: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); n];
        for f in faces {
            let l = f.len();
            for i in 0..l {
                let (p, a, b) = (f[i], f[(i + 1) % l], f[(i + l - 1) % l]);
                if turn[p].insert(a, b).is_some() {
                    return Err(GraphError::Inconsistent(format!("edge {} {} used twice", p + 1, a + 1)));
                }
            }
        }
        let mut rot = Vec::with_capacity(n);
        for (v, t) in turn.iter().enumerate() {
            if t.is_empty() {
                return Err(GraphError::IsolatedVertex(v));
            }
            // chains of faces around v, each started at a gap of the surface
            let mut starts: Vec<usize> = t.keys().copied().filter(|a| !t.values().any(|b| b == a)).collect();
            starts.sort_unstable();
            if starts.is_empty() {
                starts.push(*t.keys().min().unwrap());
            }
            let mut r = Vec::new();
            for start in starts {
                r.push(start);
                let mut x = start;
                while let Some(&y) = t.get(&x) {
                    if y == start {
                        break;
                    }
                    r.push(y);
                    x = y;
                }
            }
            rot.push(r);
        }
        Self::from_rotations(&rot)
    }

    fn trace_faces(&mut self) {
        let n = self.origin.len();
        let mut face_of = vec![usize::MAX; n];
        let mut face_dart = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = face_dart.len();
            face_dart.push(start);
            let mut d = start;
            loop {
                face_of[d] = f;
                d = self.next[rev(d)];
                if d == start {
                    break;
                }
            }
        }
        self.face_of = face_of;
        self.face_dart = face_dart;
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for d in self.darts_around(v) {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_dart.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_dart.len()
    }

    /// Euler genus, assuming an orientable surface: `V - E + F = 2 - 2g`.
    pub fn genus(&self) -> usize {
        let chi = self.vertex_count() as isize - self.edge_count() as isize
            + self.face_count() as isize;
        ((2 - chi) / 2) as usize
    }

    pub fn is_plane(&self) -> bool {
        self.genus() == 0
    }

    #[inline]
    pub fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        self.origin[rev(d)]
    }

    #[inline]
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    #[inline]
    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    /// Successor of `d` in its face walk.
    #[inline]
    pub fn face_next(&self, d: usize) -> usize {
        self.next[rev(d)]
    }

    #[inline]
    pub fn face_prev(&self, d: usize) -> usize {
        rev(self.prev[d])
    }

    #[inline]
    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn face_dart(&self, f: usize) -> usize {
        self.face_dart[f]
    }

    pub fn vertex_dart(&self, v: usize) -> usize {
        self.vertex_dart[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_around(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &o in &self.origin {
            deg[o] += 1;
        }
        deg
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn darts_around(&self, v: usize) -> DartCycle<'_> {
        DartCycle::new(self.vertex_dart[v], &self.next)
    }

    /// Darts leaving `origin(d)`, counterclockwise, starting at `d`.
    pub fn darts_from(&self, d: usize) -> DartCycle<'_> {
        DartCycle::new(d, &self.next)
    }

    pub fn face_darts(&self, f: usize) -> FaceWalk<'_> {
        FaceWalk { g: self, start: self.face_dart[f], cur: Some(self.face_dart[f]) }
    }

    /// Face walk starting at dart `d`.
    pub fn face_walk(&self, d: usize) -> FaceWalk<'_> {
        FaceWalk { g: self, start: d, cur: Some(d) }
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.face_darts(f).count()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.darts_around(v).map(|d| self.head(d)).collect()
    }

    /// Counterclockwise neighbour lists, the inverse of [`PlaneGraph::from_rotations`].
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.neighbours(v)).collect()
    }

    /// Dart lists per vertex, the inverse of [`PlaneGraph::from_dart_rotations`].
    pub fn dart_rotations(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.darts_around(v).collect()).collect()
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer
    }

    pub fn set_outer_face(&mut self, f: Option<usize>) {
        assert!(f.map_or(true, |f| f < self.face_count()));
        self.outer = f;
    }

    /// Marks the face containing dart `d` as the outer face.
    pub fn with_outer_dart(mut self, d: usize) -> Self {
        self.outer = Some(self.face_of[d]);
        self
    }

    pub fn is_outer_dart(&self, d: usize) -> bool {
        self.outer == Some(self.face_of[d])
    }

    /// The same map with every rotation reversed. Faces keep their ids.
    pub fn mirrored(&self) -> Self {
        let n = self.dart_count();
        let mut next = vec![0; n];
        let mut prev = vec![0; n];
        for d in 0..n {
            next[d] = self.prev[d];
            prev[d] = self.next[d];
        }
        // the face walk of rev(d) in the mirror visits the old face of d in reverse
        let mut face_of = vec![0; n];
        for d in 0..n {
            face_of[rev(d)] = self.face_of[d];
        }
        let mut face_dart = vec![0; self.face_count()];
        for (f, &d) in self.face_dart.iter().enumerate() {
            face_dart[f] = rev(d);
        }
        PlaneGraph {
            origin: self.origin.clone(),
            next,
            prev,
            vertex_dart: self.vertex_dart.clone(),
            face_of,
            face_dart,
            outer: self.outer,
        }
    }

    /// Relabels vertices by `perm[old] = new`; embedding is unchanged.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vertex_count());
        let mut rot = vec![Vec::new(); self.vertex_count()];
        for v in 0..self.vertex_count() {
            rot[perm[v]] = self.darts_around(v).collect();
        }
        let mut g = Self::from_dart_rotations(&rot).expect("relabeling keeps validity");
        if let Some(f) = self.outer {
            g = g.with_outer_dart(self.face_dart[f]);
        }
        g
    }

    /// Vertices visited by the walk of face `f`, with repetitions.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.face_darts(f).map(|d| self.origin(d)).collect()
    }
}

pub struct DartCycle<'a> {
    start: usize,
    cur: Option<usize>,
    next: &'a [usize],
}

impl<'a> DartCycle<'a> {
    fn new(start: usize, next: &'a [usize]) -> Self {
        DartCycle { start, cur: Some(start), next }
    }
}

impl Iterator for DartCycle<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        let d = self.cur?;
        let n = self.next[d];
        self.cur = if n == self.start { None } else { Some(n) };
        Some(d)
    }
}

pub struct FaceWalk<'a> {
    g: &'a PlaneGraph,
    start: usize,
    cur: Option<usize>,
}

impl Iterator for FaceWalk<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        let d = self.cur?;
        let n = self.g.face_next(d);
        self.cur = if n == self.start { None } else { Some(n) };
        Some(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> PlaneGraph {
        // outer square 0..3 counterclockwise, inner square 4..7
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

    #[test]
    fn cube_counts() {
        let g = cube();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (8, 12, 6));
        assert_eq!(g.genus(), 0);
        assert!((0..6).all(|f| g.face_size(f) == 4));
    }

    #[test]
    fn single_edge() {
        let g = PlaneGraph::from_rotations(&[vec![1], vec![0]]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (2, 1, 1));
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn inconsistent_rotation_rejected() {
        let err = PlaneGraph::from_rotations(&[vec![1], vec![]]).unwrap_err();
        assert!(matches!(err, GraphError::Inconsistent(_) | GraphError::IsolatedVertex(_)));
        let err = PlaneGraph::from_rotations(&[vec![1, 2], vec![0], vec![]]).unwrap_err();
        assert!(matches!(err, GraphError::Inconsistent(_) | GraphError::IsolatedVertex(_)));
    }

    #[test]
    fn loop_rejected() {
        assert!(matches!(
            PlaneGraph::from_rotations(&[vec![0, 0]]),
            Err(GraphError::Loop(0))
        ));
    }

    #[test]
    fn double_edge_is_plane() {
        let g = PlaneGraph::from_rotations(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!((g.edge_count(), g.face_count()), (2, 2));
        assert!(g.is_plane());
    }

    #[test]
    fn mirror_keeps_face_sizes() {
        let g = cube();
        let m = g.mirrored();
        for f in 0..g.face_count() {
            assert_eq!(g.face_size(f), m.face_size(f));
            let mut a = g.face_vertices(f);
            let mut b = m.face_vertices(f);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}
