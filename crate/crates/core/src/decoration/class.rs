//! Connectivity class of a decoration.
//!
//! Two-connectivity fails exactly when there are parallel type-1 edges or an
//! inner type-1 edge joining two vertices of one side; that is read off the
//! disk directly. Telling 2 from 3 needs the non-empty 4-cycles of the
//! tiling the decoration generates, including the ones that run through
//! several copies of the disk. Those are found by applying the decoration
//! to a hexagonal torus, which contains every chamber neighbourhood of the
//! tiling up to the radius such a cycle can reach.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::Decoration;
use crate::chamber::{apply_decoration, connectivity_of_chamber_system};
use crate::embedded::PlaneGraph;

pub fn connectivity_class(d: &Decoration) -> u8 {
    if !locally_two_connected(d) {
        return 1;
    }
    let c = connectivity_of_chamber_system(&apply_decoration(d, probe()));
    debug_assert!(c >= 2, "torus found a 2-cycle the disk check missed");
    c.min(3) as u8
}

fn locally_two_connected(d: &Decoration) -> bool {
    let g = d.graph();
    let mask = d.side_mask();
    let mut pairs = HashSet::new();
    for e in 0..g.edge_count() {
        let x = 2 * e;
        if d.edge_type(x) != 1 {
            continue;
        }
        let (u, w) = (g.origin(x), g.head(x));
        if !pairs.insert((u.min(w), u.max(w))) {
            return false;
        }
        let inner = !g.is_outer_dart(x) && !g.is_outer_dart(x ^ 1);
        if inner && mask[u] & mask[w] != 0 {
            return false;
        }
    }
    true
}

fn probe() -> &'static PlaneGraph {
    static PROBE: OnceLock<PlaneGraph> = OnceLock::new();
    PROBE.get_or_init(|| hex_torus(6, 6))
}

/// The hexagonal tiling of the torus as a `w` by `h` brick wall; both even.
pub fn hex_torus(w: usize, h: usize) -> PlaneGraph {
    let id = |i: usize, j: usize| (j % h) * w + (i % w);
    let mut rot = vec![Vec::new(); w * h];
    for j in 0..h {
        for i in 0..w {
            let (r, l) = (id(i + 1, j), id(i + w - 1, j));
            rot[id(i, j)] = if (i + j) % 2 == 0 {
                vec![r, id(i, j + 1), l]
            } else {
                vec![r, l, id(i, j + h - 1)]
            };
        }
    }
    PlaneGraph::from_rotations(&rot).expect("brick wall is a valid map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_is_cubic_genus_one() {
        let t = hex_torus(6, 6);
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (36, 54, 18));
    }
}
