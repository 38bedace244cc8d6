//! The ten reductions, each the inverse of the extension with the same number.
//! A reduction is identified by the darts of the edges it deletes.

use super::builder::Builder;
use crate::embedded::{rev, PlaneGraph};
use crate::predecoration::validate_predecoration;

pub struct Reduced {
    pub site: Vec<usize>,
    pub parent: PlaneGraph,
}

/// Deletes edges and vertices, optionally merging `y` into `x` first.
fn reduce(g: &PlaneGraph, edges: &[usize], vertices: &[usize], merge: Option<(usize, usize)>) -> Option<PlaneGraph> {
    let removed: Vec<usize> = edges.iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect();
    let mut b = Builder::new(g);
    let mut dead = vertices.to_vec();
    if let Some((x, y)) = merge {
        let mut r = b.rest_after(x, &removed);
        r.extend(b.rest_after(y, &removed));
        b.rot[x] = r;
        dead.push(y);
    }
    let start = removed.iter().copied().find(|&d| g.is_outer_dart(d))?;
    let mut outer = g.face_next(start);
    while removed.contains(&outer) {
        outer = g.face_next(outer);
        if outer == start {
            return None;
        }
    }
    let (parent, _) = b.finish(edges, &dead, outer)?;
    validate_predecoration(&parent).is_empty().then_some(parent)
}

fn site(edges: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = edges.iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect();
    s.sort_unstable();
    s
}

fn quad(g: &PlaneGraph, f: usize) -> Option<[usize; 4]> {
    if Some(f) == g.outer_face() || g.face_size(f) != 4 {
        return None;
    }
    let w: Vec<usize> = g.face_darts(f).collect();
    Some([w[0], w[1], w[2], w[3]])
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

/// Structural candidates for one reduction kind, as (deleted edges, deleted
/// vertices, merge).
type Plan = (Vec<usize>, Vec<usize>, Option<(usize, usize)>);

fn plans(g: &PlaneGraph, kind: u8) -> Vec<Plan> {
    let deg = g.degrees();
    let outer = |d: usize| g.is_outer_dart(d);
    let mut out: Vec<Plan> = Vec::new();
    let quads = || (0..g.face_count()).filter_map(|f| quad(g, f));
    match kind {
        1 => {
            for e in 0..g.edge_count() {
                let d = 2 * e;
                let (x, y) = (g.origin(d), g.head(d));
                if g.face_of(d) == g.face_of(rev(d)) && deg[x] >= 2 && deg[y] >= 2 {
                    out.push((vec![e], vec![], Some((x, y))));
                }
            }
        }
        2 => {
            for v in 0..g.vertex_count() {
                let d = g.vertex_dart(v);
                if deg[v] == 1 && deg[g.head(d)] >= 2 {
                    out.push((vec![d / 2], vec![v], None));
                }
            }
        }
        3 | 4 | 8 | 9 => {
            for w in quads() {
                let all_outer = w.iter().all(|&d| outer(rev(d)));
                for j in 0..4 {
                    let d = |i: usize| w[(j + i) % 4];
                    let o = |i: usize| g.origin(d(i));
                    let edges: Vec<usize> = (0..4).map(|i| d(i) / 2).collect();
                    match kind {
                        3 if j < 2 && all_outer => {
                            let (x, p, y, q) = (o(0), o(1), o(2), o(3));
                            if deg[p] == 2 && deg[q] == 2 && x != y && deg[x] >= 3 && deg[y] >= 3 {
                                out.push((edges, vec![p, q], Some((x, y))));
                            }
                        }
                        4 if all_outer => {
                            let (x, y, q, p) = (o(0), o(1), o(2), o(3));
                            if deg[p] == 2 && deg[q] == 2 && deg[x] >= 3 && deg[y] >= 3 {
                                out.push((edges, vec![p, q], Some((x, y))));
                            }
                        }
                        8 => {
                            let (p, q) = (o(2), o(3));
                            if deg[p] == 2 && deg[q] == 2 && (1..4).all(|i| outer(rev(d(i)))) {
                                out.push((edges[1..].to_vec(), vec![p, q], None));
                            }
                        }
                        9 => {
                            let (u, w, z) = (o(0), o(2), o(3));
                            if deg[z] == 2 && u != w && outer(rev(d(2))) && outer(rev(d(3))) {
                                out.push((edges[2..].to_vec(), vec![z], None));
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        5 => {
            for w in quads() {
                let vs: Vec<usize> = w.iter().map(|&d| g.origin(d)).collect();
                let light: Vec<usize> = vs.iter().copied().filter(|&v| deg[v] == 2).collect();
                if light.len() == 3 && distinct(&vs) {
                    out.push((w.iter().map(|&d| d / 2).collect(), light, None));
                }
            }
        }
        6 => {
            for dm in 0..g.dart_count() {
                let (x, m) = (g.origin(dm), g.head(dm));
                if deg[m] != 3 || deg[x] < 4 {
                    continue;
                }
                let (Some(a), Some(b)) = (quad(g, g.face_of(dm)), quad(g, g.face_of(rev(dm)))) else {
                    continue;
                };
                let others: Vec<usize> = a
                    .iter()
                    .chain(b.iter())
                    .map(|&d| g.origin(d))
                    .filter(|&v| v != x && v != m)
                    .collect();
                let mut vs = others.clone();
                vs.extend([x, m]);
                if distinct(&vs) && others.iter().all(|&v| deg[v] == 2) {
                    let mut edges: Vec<usize> = a.iter().chain(b.iter()).map(|&d| d / 2).collect();
                    edges.sort_unstable();
                    edges.dedup();
                    let mut dead = others;
                    dead.push(m);
                    out.push((edges, dead, None));
                }
            }
        }
        7 => {
            for hx in 0..g.dart_count() {
                let (h, x) = (g.origin(hx), g.head(hx));
                if deg[h] != 3 || deg[x] < 3 {
                    continue;
                }
                for f in [g.face_of(hx), g.face_of(rev(hx))] {
                    let Some(q1) = quad(g, f) else { continue };
                    let vs1: Vec<usize> = q1.iter().map(|&d| g.origin(d)).collect();
                    if !distinct(&vs1) {
                        continue;
                    }
                    let ix = vs1.iter().position(|&v| v == x).unwrap();
                    let w = vs1[(ix + 2) % 4];
                    let u = if vs1[(ix + 1) % 4] == h { vs1[(ix + 3) % 4] } else { vs1[(ix + 1) % 4] };
                    if deg[w] != 3 || deg[u] != 2 {
                        continue;
                    }
                    let hw = q1.iter().copied().find(|&d| {
                        let (a, b) = (g.origin(d), g.head(d));
                        (a == h && b == w) || (a == w && b == h)
                    });
                    let Some(q2) = hw.and_then(|d| quad(g, g.face_of(rev(d)))) else { continue };
                    let mut vs: Vec<usize> = vs1.clone();
                    let extra: Vec<usize> =
                        q2.iter().map(|&d| g.origin(d)).filter(|&v| v != h && v != w).collect();
                    vs.extend(&extra);
                    if !distinct(&vs) || extra.iter().any(|&v| deg[v] != 2) {
                        continue;
                    }
                    let mut edges: Vec<usize> = q1.iter().chain(q2.iter()).map(|&d| d / 2).collect();
                    edges.sort_unstable();
                    edges.dedup();
                    let mut dead = extra;
                    dead.extend([h, w, u]);
                    out.push((edges, dead, None));
                }
            }
        }
        10 => {
            for d in 0..g.dart_count() {
                if quad(g, g.face_of(d)).is_some() && outer(rev(d)) {
                    out.push((vec![d / 2], vec![], None));
                }
            }
        }
        _ => unreachable!("reduction kinds are 1..=10"),
    }
    out
}

/// Reductions of one kind whose result is a valid predecoration, one per site.
pub fn reductions(g: &PlaneGraph, kind: u8) -> Vec<Reduced> {
    let mut out: Vec<Reduced> = Vec::new();
    for (edges, vertices, merge) in plans(g, kind) {
        let s = site(&edges);
        if out.iter().any(|r| r.site == s) {
            continue;
        }
        if let Some(parent) = reduce(g, &edges, &vertices, merge) {
            out.push(Reduced { site: s, parent });
        }
    }
    out
}

/// Whether some reduction of this kind yields a valid predecoration.
pub fn any_reduction(g: &PlaneGraph, kind: u8) -> bool {
    plans(g, kind).into_iter().any(|(e, v, m)| reduce(g, &e, &v, m).is_some())
}
