//! Vertex connectivity by direct cut search, capped at 3.

use super::PlaneGraph;

fn connected_without(g: &PlaneGraph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = removed.len() + 1;
    while let Some(v) = stack.pop() {
        for d in g.darts_around(v) {
            let w = g.head(d);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Returns `min(3, κ(G))` where κ is the vertex connectivity; a graph on
/// `k + 1` vertices counts as `k`-connected only if it is complete enough to
/// have no smaller cut, so small graphs are capped by `V - 1`.
pub fn vertex_connectivity(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    // connectivity never exceeds V - 1
    let cap = 3.min(n.saturating_sub(1));
    for v in 0..n {
        if cap > 1 && !connected_without(g, &[v]) {
            return 1;
        }
    }
    if cap <= 1 {
        return cap;
    }
    for v in 0..n {
        for w in v + 1..n {
            if !connected_without(g, &[v, w]) {
                return 2;
            }
        }
    }
    cap
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedded::test_graphs::cube;

    #[test]
    fn cube_is_3_connected() {
        assert_eq!(vertex_connectivity(&cube()), 3);
    }

    #[test]
    fn bowtie_and_k4_minus_edge() {
        let bowtie = PlaneGraph::from_rotations(&[
            vec![1, 2, 3, 4],
            vec![2, 0],
            vec![0, 1],
            vec![4, 0],
            vec![0, 3],
        ])
        .unwrap();
        assert_eq!(vertex_connectivity(&bowtie), 1);
        let k4e = PlaneGraph::from_rotations(&[
            vec![1, 2, 3],
            vec![2, 0],
            vec![3, 1, 0],
            vec![0, 2],
        ])
        .unwrap();
        assert_eq!(vertex_connectivity(&k4e), 2);
    }
}
