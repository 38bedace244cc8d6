//! The ten extensions. A corner is named by the outer dart leaving it
//! counterclockwise, so the corner before `c` lies between `prev(c)` and `c`.

use super::builder::Builder;
use crate::embedded::{rev, Automorphism, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    /// Split a vertex at two corners and join the halves by an edge (1) or by
    /// two paths of length 2 (3). The corner pair is unordered.
    Split { kind: u8, a: usize, b: usize },
    /// Split at two corners; the halves become adjacent corners of a new
    /// quadrangle placed at corner `quad`, the joining edge at corner `edge`.
    SplitQuad { edge: usize, quad: usize },
    /// Attach a leaf (2), a quadrangle (5) or two quadrangles sharing an
    /// edge (6) at a corner.
    Corner { kind: u8, c: usize },
    /// Attach a strip of two quadrangles at a corner.
    Strip { c: usize, left: bool },
    /// Glue a quadrangle on the outer side of a dart.
    Edge { d: usize },
    /// Close a quadrangle over the outer path starting at `d` of 2 (9) or 3
    /// (10) edges.
    Path { kind: u8, d: usize },
}

impl Site {
    pub fn kind(&self) -> u8 {
        match *self {
            Site::Split { kind, .. } | Site::Corner { kind, .. } | Site::Path { kind, .. } => kind,
            Site::SplitQuad { .. } => 4,
            Site::Strip { .. } => 7,
            Site::Edge { .. } => 8,
        }
    }

    /// Image under an automorphism of the host.
    pub fn map(&self, g: &PlaneGraph, a: &Automorphism) -> Site {
        let r = a.reverses_orientation;
        let corner = |c: usize| if r { g.next(a.perm[c]) } else { a.perm[c] };
        match *self {
            Site::Split { kind, a: x, b: y } => {
                let (x, y) = (corner(x), corner(y));
                Site::Split { kind, a: x.min(y), b: x.max(y) }
            }
            Site::SplitQuad { edge, quad } => Site::SplitQuad { edge: corner(edge), quad: corner(quad) },
            Site::Corner { kind, c } => Site::Corner { kind, c: corner(c) },
            Site::Strip { c, left } => Site::Strip { c: corner(c), left: left != r },
            Site::Edge { d } => Site::Edge { d: if r { rev(a.perm[d]) } else { a.perm[d] } },
            Site::Path { kind, d } => {
                if r {
                    let mut last = d;
                    for _ in 0..kind - 8 {
                        last = g.face_next(last);
                    }
                    Site::Path { kind, d: rev(a.perm[last]) }
                } else {
                    Site::Path { kind, d: a.perm[d] }
                }
            }
        }
    }
}

/// All sites of one extension kind on a host with an outer face.
pub fn sites(g: &PlaneGraph, kind: u8) -> Vec<Site> {
    let outer: Vec<usize> = (0..g.dart_count()).filter(|&d| g.is_outer_dart(d)).collect();
    let mut out = Vec::new();
    match kind {
        1 | 3 | 4 => {
            for &a in &outer {
                for &b in &outer {
                    if a == b || g.origin(a) != g.origin(b) {
                        continue;
                    }
                    if kind == 4 {
                        out.push(Site::SplitQuad { edge: a, quad: b });
                    } else if a < b {
                        out.push(Site::Split { kind, a, b });
                    }
                }
            }
        }
        2 | 5 | 6 => out.extend(outer.iter().map(|&c| Site::Corner { kind, c })),
        7 => {
            for &c in &outer {
                out.push(Site::Strip { c, left: false });
                out.push(Site::Strip { c, left: true });
            }
        }
        8 => out.extend(outer.iter().map(|&d| Site::Edge { d })),
        9 | 10 => {
            for &d in &outer {
                let mut last = d;
                for _ in 0..kind - 8 {
                    last = g.face_next(last);
                }
                if g.origin(d) != g.head(last) {
                    out.push(Site::Path { kind, d });
                }
            }
        }
        _ => unreachable!("extension kinds are 1..=10"),
    }
    out
}

/// The extended map and the darts of the edges the inverse reduction removes
/// (in the child's numbering).
pub struct Extended {
    pub graph: PlaneGraph,
    pub site: Vec<usize>,
}

fn split(b: &mut Builder, a: usize, c: usize) -> (usize, usize, Vec<usize>, Vec<usize>) {
    let x = b.rot.iter().position(|r| r.contains(&a)).unwrap();
    let r = b.rot[x].clone();
    let n = r.len();
    let i = r.iter().position(|&d| d == a).unwrap();
    let j = r.iter().position(|&d| d == c).unwrap();
    let first: Vec<usize> = (0..(j + n - i) % n).map(|k| r[(i + k) % n]).collect();
    let second: Vec<usize> = (0..(i + n - j) % n).map(|k| r[(j + k) % n]).collect();
    let y = b.add_vertex();
    (x, y, first, second)
}

pub fn apply(g: &PlaneGraph, site: Site) -> Extended {
    let mut b = Builder::new(g);
    let m = g.dart_count();
    let (outer, site_edges) = match site {
        Site::Split { kind: 1, a, b: c } => {
            let (x, y, mut first, mut second) = split(&mut b, a, c);
            let e = b.add_edge();
            first.push(e);
            second.push(e + 1);
            b.rot[x] = first;
            b.rot[y] = second;
            (e, 1)
        }
        Site::Split { a, b: c, .. } => {
            let (x, y, mut first, mut second) = split(&mut b, a, c);
            let (p, q) = (b.add_vertex(), b.add_vertex());
            let [xp, xq, yq, yp] = [b.add_edge(), b.add_edge(), b.add_edge(), b.add_edge()];
            first.extend([xp, xq]);
            second.extend([yq, yp]);
            b.rot[x] = first;
            b.rot[y] = second;
            b.rot[p] = vec![xp + 1, yp + 1];
            b.rot[q] = vec![xq + 1, yq + 1];
            (xp, 4)
        }
        Site::SplitQuad { edge, quad } => {
            let (x, y, mut first, mut second) = split(&mut b, edge, quad);
            let (p, q) = (b.add_vertex(), b.add_vertex());
            let [xy, xp, pq, qy] = [b.add_edge(), b.add_edge(), b.add_edge(), b.add_edge()];
            first.extend([xp, xy]);
            second.extend([xy + 1, qy + 1]);
            b.rot[x] = first;
            b.rot[y] = second;
            b.rot[p] = vec![xp + 1, pq];
            b.rot[q] = vec![pq + 1, qy];
            (xy + 1, 4)
        }
        Site::Corner { kind: 2, c } => {
            let x = g.origin(c);
            let y = b.add_vertex();
            let e = b.add_edge();
            b.insert_before(x, c, e);
            b.rot[y] = vec![e + 1];
            (e + 1, 1)
        }
        Site::Corner { kind: 5, c } => {
            let x = g.origin(c);
            let (p, w, q) = (b.add_vertex(), b.add_vertex(), b.add_vertex());
            let [xp, pw, wq, xq] = [b.add_edge(), b.add_edge(), b.add_edge(), b.add_edge()];
            b.insert_before(x, c, xp);
            b.insert_before(x, c, xq);
            b.rot[p] = vec![xp + 1, pw];
            b.rot[w] = vec![pw + 1, wq];
            b.rot[q] = vec![wq + 1, xq + 1];
            (xp, 4)
        }
        Site::Corner { c, .. } => {
            let x = g.origin(c);
            let [mm, s1, t1, s2, t2] = [0; 5].map(|_| b.add_vertex());
            let [xs1, s1t1, t1m, xm, mt2, t2s2, s2x] = [0; 7].map(|_| b.add_edge());
            for d in [xs1, xm, s2x + 1] {
                b.insert_before(x, c, d);
            }
            b.rot[mm] = vec![xm + 1, t1m + 1, mt2];
            b.rot[s1] = vec![xs1 + 1, s1t1];
            b.rot[t1] = vec![s1t1 + 1, t1m];
            b.rot[t2] = vec![mt2 + 1, t2s2];
            b.rot[s2] = vec![t2s2 + 1, s2x];
            (xs1, 7)
        }
        Site::Strip { c, left } => {
            let x = g.origin(c);
            let [u1, u2, w, y4, y5] = [0; 5].map(|_| b.add_vertex());
            let [xu1, xu2, u2w, u1w] = [0; 4].map(|_| b.add_edge());
            b.insert_before(x, c, xu1);
            b.insert_before(x, c, xu2);
            if !left {
                // the degree-3 neighbour of x is the later one counterclockwise
                let [hy4, y4y5, y5w] = [0; 3].map(|_| b.add_edge());
                b.rot[u2] = vec![xu2 + 1, u2w, hy4];
                b.rot[w] = vec![y5w + 1, u2w + 1, u1w + 1];
                b.rot[y4] = vec![hy4 + 1, y4y5];
                b.rot[y5] = vec![y4y5 + 1, y5w];
                b.rot[u1] = vec![xu1 + 1, u1w];
            } else {
                let [hy4, y4y5, y5w] = [0; 3].map(|_| b.add_edge());
                b.rot[u1] = vec![hy4, u1w, xu1 + 1];
                b.rot[w] = vec![u2w + 1, u1w + 1, y5w + 1];
                b.rot[y4] = vec![hy4 + 1, y4y5];
                b.rot[y5] = vec![y4y5 + 1, y5w];
                b.rot[u2] = vec![xu2 + 1, u2w];
            }
            (xu1, 7)
        }
        Site::Edge { d } => {
            let (u, w) = (g.origin(d), g.head(d));
            let (p, q) = (b.add_vertex(), b.add_vertex());
            let [uq, qp, pw] = [0; 3].map(|_| b.add_edge());
            b.insert_after(w, rev(d), pw + 1);
            b.insert_before(u, d, uq);
            b.rot[p] = vec![pw, qp + 1];
            b.rot[q] = vec![qp, uq + 1];
            (qp, 3)
        }
        Site::Path { kind: 9, d } => {
            let d2 = g.face_next(d);
            let (u, w) = (g.origin(d), g.head(d2));
            let z = b.add_vertex();
            let [wz, zu] = [0; 2].map(|_| b.add_edge());
            b.insert_after(w, rev(d2), wz);
            b.insert_before(u, d, zu + 1);
            b.rot[z] = vec![zu, wz + 1];
            (wz + 1, 2)
        }
        Site::Path { d, .. } => {
            let d3 = g.face_next(g.face_next(d));
            let (u, w) = (g.origin(d), g.head(d3));
            let wu = b.add_edge();
            b.insert_after(w, rev(d3), wu);
            b.insert_before(u, d, wu + 1);
            (wu + 1, 1)
        }
    };
    let (graph, _) = b.finish(&[], &[], outer).expect("extensions keep the map connected");
    debug_assert!(graph.is_plane());
    let site = (m..m + 2 * site_edges).collect();
    Extended { graph, site }
}
