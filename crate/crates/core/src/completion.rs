//! Completing a predecoration to decorations.
//!
//! Each inner quadrangle gets a type-1 vertex joined to its four corners.
//! Darts of the outer walk are covered by type-1 vertices on the outer side:
//! a vertex of degree 3 covers two consecutive darts, and at most one vertex
//! of degree 2 covers a single dart and becomes `v1`. Darts left uncovered
//! are boundary edges of the decoration. The result is a disk exactly when
//! its boundary visits no vertex twice.

use std::collections::{BTreeSet, HashSet};

use crate::decoration::{validate, Decoration};
use crate::embedded::{CanonicalCode, PlaneGraph};
use crate::predecoration::Predecoration;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Block {
    start: usize,
    len: usize,
}

struct Search {
    walk: Vec<usize>,
    vert: Vec<usize>,
    min_cover: usize,
    max_cover: usize,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
    emitted: Vec<bool>,
    covered: usize,
    found: Vec<Vec<Block>>,
}

impl Search {
    fn swallowed(&self, i: usize) -> bool {
        let l = self.walk.len();
        let b = self.block_of[(i + l - 1) % l];
        b != NONE && b == self.block_of[i]
    }

    /// Marks the vertex at corner `i` as on the boundary; false if it already is.
    fn emit(&mut self, i: usize, undo: &mut Vec<usize>) -> bool {
        if self.swallowed(i) {
            return true;
        }
        let v = self.vert[i];
        if self.emitted[v] {
            return false;
        }
        self.emitted[v] = true;
        undo.push(v);
        true
    }

    fn push(&mut self, start: usize, len: usize) {
        let l = self.walk.len();
        let id = self.blocks.len();
        self.blocks.push(Block { start, len });
        for k in 0..len {
            self.block_of[(start + k) % l] = id;
        }
        self.covered += len;
    }

    fn pop(&mut self) {
        let l = self.walk.len();
        let b = self.blocks.pop().unwrap();
        for k in 0..b.len {
            self.block_of[(b.start + k) % l] = NONE;
        }
        self.covered -= b.len;
    }

    /// Darts before `i` are decided; darts from `end` on belong to a block
    /// wrapping around the start of the walk.
    fn run(&mut self, i: usize, end: usize, has_two: bool) {
        let l = self.walk.len();
        if i >= end {
            let mut undo = Vec::new();
            let ok = end == l || self.emit(l - 1, &mut undo);
            let boundary = self.emitted.iter().filter(|&&e| e).count();
            if ok && self.covered >= self.min_cover && boundary + self.blocks.len() >= 3 {
                self.found.push(self.blocks.clone());
            }
            for v in undo {
                self.emitted[v] = false;
            }
            return;
        }
        let options: [(usize, bool); 3] = [(0, true), (1, !has_two), (2, i + 1 < end)];
        for (len, allowed) in options {
            if !allowed || self.covered + len > self.max_cover {
                continue;
            }
            if len > 0 {
                self.push(i, len);
            }
            let step = len.max(1);
            let mut undo = Vec::new();
            // corners i .. i+step-1 are now decided; corner 0 is handled up front
            let ok = (i.max(1)..i + step).all(|c| self.emit(c, &mut undo));
            if ok {
                self.run(i + step, end, has_two || len == 1);
            }
            for v in undo {
                self.emitted[v] = false;
            }
            if len > 0 {
                self.pop();
            }
        }
    }
}

/// All covers of the outer walk with between `min_cover` and `max_cover`
/// covered darts and a simple boundary.
fn covers(g: &PlaneGraph, min_cover: usize, max_cover: usize) -> (Vec<usize>, Vec<Vec<Block>>) {
    let outer = g.outer_face().unwrap();
    let walk: Vec<usize> = g.face_darts(outer).collect();
    let l = walk.len();
    let vert: Vec<usize> = walk.iter().map(|&d| g.origin(d)).collect();
    let mut s = Search {
        vert,
        min_cover,
        max_cover,
        blocks: Vec::new(),
        block_of: vec![NONE; l],
        emitted: vec![false; g.vertex_count()],
        covered: 0,
        found: Vec::new(),
        walk,
    };
    // without a block wrapping from the last dart to the first
    let mut undo = Vec::new();
    if s.emit(0, &mut undo) {
        s.run(0, l, false);
    }
    for v in undo.drain(..) {
        s.emitted[v] = false;
    }
    // with one: corner 0 is swallowed, and the search ends before dart l-1
    if l >= 2 && max_cover >= 2 {
        s.push(l - 1, 2);
        s.run(1, l - 1, false);
        s.pop();
    }
    (s.walk, s.found)
}

/// The triangulated disk for one cover, vertex ids: predecoration vertices,
/// then one per quadrangle, then one per block. Also returns the id of the
/// degree-2 vertex, if any.
fn assemble(g: &PlaneGraph, walk: &[usize], blocks: &[Block]) -> (PlaneGraph, Option<usize>) {
    let n = g.vertex_count();
    let l = walk.len();
    let outer = g.outer_face().unwrap();
    let quads: Vec<usize> = (0..g.face_count()).filter(|&f| f != outer).collect();
    let mut edges = g.edge_count();
    let mut fresh = || {
        edges += 1;
        edges - 1
    };
    let mut fill_edge = vec![NONE; g.dart_count()];
    for &f in &quads {
        for d in g.face_darts(f) {
            fill_edge[d] = fresh();
        }
    }
    let mut pos = vec![NONE; g.dart_count()];
    let mut block_of = vec![NONE; l];
    for (i, &d) in walk.iter().enumerate() {
        pos[d] = i;
    }
    // tail, mid and head edge of each block
    let mut slots = Vec::with_capacity(blocks.len());
    for (b, blk) in blocks.iter().enumerate() {
        for k in 0..blk.len {
            block_of[(blk.start + k) % l] = b;
        }
        let tail = fresh();
        let mid = if blk.len == 2 { fresh() } else { NONE };
        slots.push([tail, mid, fresh()]);
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n + quads.len() + blocks.len()];
    for x in 0..n {
        for d in g.darts_around(x) {
            rot[x].push(d);
            let nd = g.next(d);
            if g.face_of(nd) != outer {
                rot[x].push(2 * fill_edge[nd]);
                continue;
            }
            let i = pos[nd];
            let (b1, b2) = (block_of[(i + l - 1) % l], block_of[i]);
            if b1 != NONE {
                let last = (blocks[b1].start + blocks[b1].len - 1) % l == (i + l - 1) % l;
                rot[x].push(2 * slots[b1][if last { 2 } else { 1 }]);
            }
            if b2 != NONE && b2 != b1 {
                rot[x].push(2 * slots[b2][0]);
            }
        }
    }
    for (qi, &f) in quads.iter().enumerate() {
        let w: Vec<usize> = g.face_darts(f).collect();
        rot[n + qi] = [w[0], w[3], w[2], w[1]].iter().map(|&d| 2 * fill_edge[d] + 1).collect();
    }
    let mut two = None;
    for (b, [tail, mid, head]) in slots.iter().copied().enumerate() {
        let c = n + quads.len() + b;
        rot[c] = if mid == NONE {
            two = Some(c);
            vec![2 * head + 1, 2 * tail + 1]
        } else {
            vec![2 * head + 1, 2 * mid + 1, 2 * tail + 1]
        };
    }
    let d = PlaneGraph::from_dart_rotations(&rot).expect("completions are connected maps");
    let start = walk
        .iter()
        .copied()
        .find(|&w| block_of[pos[w]] == NONE)
        .unwrap_or_else(|| 2 * slots[0][0]);
    (d.with_outer_dart(start), two)
}

/// Proper 2-colourings of the predecoration with types 0 and 2.
fn colourings(g: &PlaneGraph) -> [Vec<u8>; 2] {
    let n = g.vertex_count();
    let mut t = vec![NONE; n];
    t[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for d in g.darts_around(v) {
            let w = g.head(d);
            if t[w] == NONE {
                t[w] = 2 - t[v];
                stack.push(w);
            }
        }
    }
    let a: Vec<u8> = t.iter().map(|&x| x as u8).collect();
    let b = a.iter().map(|&x| 2 - x).collect();
    [a, b]
}

/// Corner triples allowed by the degree conditions, in normalized order.
fn corner_choices(d: &PlaneGraph, n_pre: usize, two: Option<usize>) -> Vec<[usize; 3]> {
    let outer = d.outer_face().unwrap();
    let walk: Vec<usize> = d.face_darts(outer).map(|x| d.origin(x)).collect();
    let mut on_boundary = vec![false; d.vertex_count()];
    for &v in &walk {
        on_boundary[v] = true;
    }
    let deg = d.degrees();
    if (0..n_pre).any(|v| !on_boundary[v] && deg[v] <= 4) {
        return Vec::new();
    }
    let forced: Vec<usize> = walk.iter().copied().filter(|&v| v < n_pre && deg[v] <= 3).chain(two).collect();
    if forced.len() > 3 {
        return Vec::new();
    }
    let l = walk.len();
    let mut out = Vec::new();
    for p1 in 0..l {
        let v1 = walk[p1];
        let ok = match two {
            Some(t) => v1 == t,
            None => v1 < n_pre && deg[v1] > 2,
        };
        if !ok {
            continue;
        }
        // walking on from v1 we meet v2 before v0
        for a in 1..l {
            let v2 = walk[(p1 + a) % l];
            if v2 >= n_pre {
                continue;
            }
            for b in a + 1..l {
                let v0 = walk[(p1 + b) % l];
                if v0 >= n_pre {
                    continue;
                }
                let c = [v0, v1, v2];
                if forced.iter().all(|f| c.contains(f)) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// All decorations of connectivity class at least `k` with rate in
/// `rate_min..=rate_max` whose type-1 subgraph is `p`, one per identity.
pub fn complete(p: &Predecoration, rate_min: usize, rate_max: usize, k: u8) -> Vec<Decoration> {
    let q = p.quad_count();
    if rate_max < 4 * q {
        return Vec::new();
    }
    let (min_cover, max_cover) = (rate_min.saturating_sub(4 * q), rate_max - 4 * q);
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    for g in [p.graph().clone(), p.graph().mirrored()] {
        let n = g.vertex_count();
        let colours = colourings(&g);
        let (walk, found) = covers(&g, min_cover, max_cover);
        for blocks in found {
            let (d, two) = assemble(&g, &walk, &blocks);
            let corners = corner_choices(&d, n, two);
            if corners.is_empty() {
                continue;
            }
            for colour in &colours {
                let mut types = colour.clone();
                types.resize(d.vertex_count(), 1);
                for &c in &corners {
                    debug_assert!(validate(&d, &types, c).is_empty(), "{:?}", validate(&d, &types, c));
                    let dec = Decoration::from_parts(d.clone(), types.clone(), c);
                    if dec.connectivity_class() >= k && seen.insert(dec.identity()) {
                        out.push(dec);
                    }
                }
            }
        }
    }
    out
}

/// Rates of the decorations that complete `p` within the bounds.
pub fn completion_rates(p: &Predecoration, rate_min: usize, rate_max: usize, k: u8) -> BTreeSet<usize> {
    complete(p, rate_min, rate_max, k).iter().map(Decoration::inflation_rate).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{generate, GenerationTask};
    use std::sync::Mutex;

    fn counts(rate_max: usize, k: u8) -> Vec<usize> {
        let out = Mutex::new(vec![0; rate_max + 1]);
        generate(&GenerationTask::new(1, rate_max, k), |p| {
            let ds = complete(p, 1, rate_max, k);
            let mut o = out.lock().unwrap();
            for d in ds {
                o[d.inflation_rate()] += 1;
            }
        });
        out.into_inner().unwrap()
    }

    #[test]
    fn small_rates() {
        assert_eq!(&counts(8, 1)[1..], &[2, 2, 4, 6, 6, 20, 28, 58]);
        assert_eq!(&counts(8, 2)[1..], &[2, 2, 4, 6, 6, 20, 28, 58]);
        assert_eq!(&counts(8, 3)[1..], &[2, 2, 4, 6, 4, 20, 20, 54]);
    }

    #[test]
    fn uncompletable() {
        // a quadrangle hanging from the middle of a path of four edges
        let rot = [vec![2, 1, 6], vec![3, 0], vec![3, 0], vec![1, 2], vec![5], vec![6, 4], vec![7, 0, 5], vec![8, 6], vec![7]];
        let g = PlaneGraph::from_rotations(&rot).unwrap();
        let d = (0..g.dart_count()).find(|&d| g.origin(d) == 4).unwrap();
        let p = Predecoration::new(g.with_outer_dart(d)).unwrap();
        for k in 1..=3 {
            assert!(complete(&p, 1, 40, k).is_empty());
        }
    }

    #[test]
    fn k2_completions() {
        let ds = complete(&Predecoration::k2(), 1, 2, 3);
        assert_eq!(ds.len(), 2);
        assert!(ds.iter().all(|d| d.inflation_rate() == 1));
    }
}
