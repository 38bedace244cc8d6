//! Mutable dart-level map editing. Neighbour lists are ambiguous once there
//! are parallel edges, so edits address darts directly.

use crate::embedded::PlaneGraph;

#[derive(Clone, Debug)]
pub(crate) struct Builder {
    pub rot: Vec<Vec<usize>>,
    edges: usize,
}

impl Builder {
    pub fn new(g: &PlaneGraph) -> Self {
        Builder { rot: g.dart_rotations(), edges: g.edge_count() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Allocates an edge `u -> w` without placing its darts.
    pub fn add_edge(&mut self) -> usize {
        self.edges += 1;
        2 * (self.edges - 1)
    }

    fn position(&self, v: usize, anchor: usize) -> usize {
        self.rot[v].iter().position(|&x| x == anchor).expect("anchor dart at vertex")
    }

    /// Places `d` counterclockwise right after `anchor` around `v`.
    pub fn insert_after(&mut self, v: usize, anchor: usize, d: usize) {
        let i = self.position(v, anchor);
        self.rot[v].insert(i + 1, d);
    }

    /// Places `d` counterclockwise right before `anchor` around `v`.
    pub fn insert_before(&mut self, v: usize, anchor: usize, d: usize) {
        let i = self.position(v, anchor);
        self.rot[v].insert(i, d);
    }

    /// Darts of `v` starting just after the contiguous block of `removed`.
    pub fn rest_after(&self, v: usize, removed: &[usize]) -> Vec<usize> {
        let r = &self.rot[v];
        let n = r.len();
        let start = (0..n)
            .find(|&i| removed.contains(&r[i]) && !removed.contains(&r[(i + 1) % n]))
            .map_or(0, |i| i + 1);
        (0..n).map(|k| r[(start + k) % n]).filter(|d| !removed.contains(d)).collect()
    }

    /// Deletes the given edges and vertices, renumbering the rest in order.
    /// Returns the map and the dart renumbering (`usize::MAX` for removed),
    /// or `None` if the result is not a connected map.
    pub fn finish(
        &self,
        dead_edges: &[usize],
        dead_vertices: &[usize],
        outer: usize,
    ) -> Option<(PlaneGraph, Vec<usize>)> {
        let mut map = vec![usize::MAX; 2 * self.edges];
        let mut k = 0;
        for e in 0..self.edges {
            if !dead_edges.contains(&e) {
                map[2 * e] = 2 * k;
                map[2 * e + 1] = 2 * k + 1;
                k += 1;
            }
        }
        let rot: Vec<Vec<usize>> = self
            .rot
            .iter()
            .enumerate()
            .filter(|(v, _)| !dead_vertices.contains(v))
            .map(|(_, r)| r.iter().filter(|&&d| map[d] != usize::MAX).map(|&d| map[d]).collect())
            .collect();
        let g = PlaneGraph::from_dart_rotations(&rot).ok()?;
        Some((g.with_outer_dart(map[outer]), map))
    }
}
