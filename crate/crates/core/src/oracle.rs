//! Brute-force decorations for small rates, independent of the generator.
//!
//! Every triangulated disk is grown one triangle at a time, either by an ear
//! on a boundary edge or by a fold over two consecutive boundary edges, and
//! deduplicated at each size. The disks with `r` triangles are then given all
//! proper 3-colourings and all corner choices, validated, classified by
//! applying them to small hosts and testing vertex connectivity directly, and
//! deduplicated by identity code.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog;
use crate::chamber::apply;
use crate::completion::complete;
use crate::decoration::Decoration;
use crate::embedded::{code_from, vertex_connectivity, CanonicalCode, PlaneGraph, Start};
use crate::generator::{generate, GenerationTask};

pub const MAX_RATE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("rate {0} outside 1..={MAX_RATE}")]
    RateOutOfRange(usize),
}

/// A disk as triangles of darts; dart `2e` and `2e + 1` are the halves of
/// edge `e`, and every triangle lists its darts counterclockwise.
#[derive(Clone, Debug)]
struct Disk {
    tail: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    // darts with the disk on their left, in walk order
    boundary: Vec<usize>,
    vertices: usize,
}

impl Disk {
    fn triangle() -> Disk {
        Disk { tail: vec![0, 1, 1, 2, 2, 0], triangles: vec![[0, 2, 4]], boundary: vec![0, 2, 4], vertices: 3 }
    }

    fn head(&self, d: usize) -> usize {
        self.tail[d ^ 1]
    }

    fn new_edge(&mut self, a: usize, b: usize) -> usize {
        self.tail.push(a);
        self.tail.push(b);
        self.tail.len() - 2
    }

    fn ear(&self, i: usize) -> Disk {
        let mut d = self.clone();
        let e = self.boundary[i];
        let (a, b) = (self.tail[e], self.head(e));
        let x = d.vertices;
        d.vertices += 1;
        let ax = d.new_edge(a, x);
        let xb = d.new_edge(x, b);
        d.triangles.push([e ^ 1, ax, xb]);
        d.boundary.splice(i..=i, [ax, xb]);
        d
    }

    fn fold(&self, i: usize) -> Disk {
        let mut d = self.clone();
        let l = self.boundary.len();
        let (e1, e2) = (self.boundary[i], self.boundary[(i + 1) % l]);
        let ac = d.new_edge(self.tail[e1], self.head(e2));
        d.triangles.push([e2 ^ 1, e1 ^ 1, ac]);
        d.boundary[i] = ac;
        d.boundary.remove((i + 1) % l);
        d
    }

    fn graph(&self) -> PlaneGraph {
        // counterclockwise at the tail of a triangle dart comes the reverse of its predecessor
        let mut turn = HashMap::new();
        for t in &self.triangles {
            for k in 0..3 {
                turn.insert(t[k], t[(k + 2) % 3] ^ 1);
            }
        }
        let mut rot = vec![Vec::new(); self.vertices];
        let mut placed = vec![false; self.tail.len()];
        // a boundary vertex starts at its outgoing boundary dart
        let mut starts = self.boundary.clone();
        starts.extend(0..self.tail.len());
        for s in starts {
            if placed[s] {
                continue;
            }
            let v = self.tail[s];
            let mut x = s;
            loop {
                placed[x] = true;
                rot[v].push(x);
                match turn.get(&x) {
                    Some(&y) if !placed[y] => x = y,
                    _ => break,
                }
            }
        }
        PlaneGraph::from_dart_rotations(&rot).expect("grown disk is a map").with_outer_dart(self.boundary[0])
    }

    /// Orientation-preserving isomorphism key of the disk with its outer face.
    fn key(&self, g: &PlaneGraph) -> Vec<u32> {
        self.boundary
            .iter()
            .map(|&b| code_from(g, Start { dart: b, mirrored: false }, None, None).unwrap().0)
            .min()
            .unwrap()
    }
}

/// All triangulated disks with `r` triangles, one per isomorphism class.
fn disks(r: usize) -> Vec<(Disk, PlaneGraph)> {
    let mut level = vec![Disk::triangle()];
    for _ in 1..r {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for d in &level {
            let l = d.boundary.len();
            let folds = if l > 3 { l } else { 0 };
            let children = (0..l).map(|i| d.ear(i)).chain((0..folds).map(|i| d.fold(i)));
            for c in children {
                let g = c.graph();
                if seen.insert(c.key(&g)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|d| { let g = d.graph(); (d, g) }).collect()
}

/// Vertex types making every triangle rainbow, one per choice for the first triangle.
fn colourings(d: &Disk) -> Vec<Vec<u8>> {
    const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    'perm: for p in PERMS {
        let mut t = vec![u8::MAX; d.vertices];
        let first = d.triangles[0];
        for k in 0..3 {
            t[d.tail[first[k]]] = p[k];
        }
        // triangles in growth order each share an edge with an earlier one
        for tri in &d.triangles[1..] {
            let vs = tri.map(|x| d.tail[x]);
            let known: Vec<u8> = vs.iter().filter(|&&v| t[v] != u8::MAX).map(|&v| t[v]).collect();
            for &v in &vs {
                if t[v] == u8::MAX {
                    t[v] = 3 - known.iter().sum::<u8>();
                }
            }
            let mut s = vs.map(|v| t[v]);
            s.sort_unstable();
            if s != [0, 1, 2] {
                continue 'perm;
            }
        }
        out.push(t);
    }
    out
}

fn hosts() -> (Vec<PlaneGraph>, Vec<PlaneGraph>) {
    let two = ["k4-minus-edge", "tetrahedron"].map(|n| catalog::seed(n).unwrap()).to_vec();
    let three = ["tetrahedron", "cube", "octahedron"].map(|n| catalog::seed(n).unwrap()).to_vec();
    (two, three)
}

/// Largest k such that the decoration keeps every tested k-connected host k-connected.
fn class_by_hosts(d: &Decoration, two: &[PlaneGraph], three: &[PlaneGraph]) -> u8 {
    let keeps = |hosts: &[PlaneGraph], k: usize| {
        hosts.iter().all(|g| vertex_connectivity(&apply(d, g).expect("application is a map")) >= k)
    };
    if !keeps(two, 2) {
        1
    } else if !keeps(three, 3) {
        2
    } else {
        3
    }
}

/// Identity codes of all decorations of rate `r` and class at least `k`.
pub fn bruteforce_decorations(r: usize, k: u8) -> Result<BTreeSet<CanonicalCode>, OracleError> {
    if r == 0 || r > MAX_RATE {
        return Err(OracleError::RateOutOfRange(r));
    }
    let (two, three) = hosts();
    Ok(all_decorations(r)
        .into_par_iter()
        .filter(|(_, d)| class_by_hosts(d, &two, &three) >= k)
        .map(|(c, _)| c)
        .collect())
}

fn all_decorations(r: usize) -> HashMap<CanonicalCode, Decoration> {
    let found: Vec<(CanonicalCode, Decoration)> = disks(r)
        .into_par_iter()
        .flat_map_iter(|(disk, g)| {
            let walk: Vec<usize> = g.face_darts(g.outer_face().unwrap()).map(|x| g.origin(x)).collect();
            let l = walk.len();
            let mut out = Vec::new();
            for types in colourings(&disk) {
                for i in 0..l {
                    for j in 1..l {
                        for h in j + 1..l {
                            let corners = [walk[i], walk[(i + j) % l], walk[(i + h) % l]];
                            if let Ok(d) = Decoration::new(g.clone(), types.clone(), corners) {
                                out.push((d.identity(), d));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut best = HashMap::new();
    for (code, d) in found {
        best.entry(code).or_insert(d);
    }
    best
}

/// Identity codes from the generator and completion at rate `r` and class `k`.
pub fn pipeline_decorations(r: usize, k: u8) -> BTreeSet<CanonicalCode> {
    let out = std::sync::Mutex::new(BTreeSet::new());
    generate(&GenerationTask::new(r, r, k), |p| {
        let codes: Vec<CanonicalCode> = complete(p, r, r, k).iter().map(Decoration::identity).collect();
        out.lock().unwrap().extend(codes);
    });
    out.into_inner().unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub rate: usize,
    pub k: u8,
    pub oracle: usize,
    pub pipeline: usize,
    pub only_oracle: Vec<CanonicalCode>,
    pub only_pipeline: Vec<CanonicalCode>,
}

impl Report {
    pub fn agrees(&self) -> bool {
        self.only_oracle.is_empty() && self.only_pipeline.is_empty()
    }
}

pub fn cross_check(r: usize, k: u8) -> Result<Report, OracleError> {
    let oracle = bruteforce_decorations(r, k)?;
    let pipeline = pipeline_decorations(r, k);
    Ok(Report {
        rate: r,
        k,
        oracle: oracle.len(),
        pipeline: pipeline.len(),
        only_oracle: oracle.difference(&pipeline).cloned().collect(),
        only_pipeline: pipeline.difference(&oracle).cloned().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_counts() {
        // one triangle, the rhombus, and the two 3-triangle disks (fan and strip coincide)
        assert_eq!(disks(1).len(), 1);
        assert_eq!(disks(2).len(), 1);
        for (d, g) in disks(4) {
            assert!(g.is_plane());
            assert_eq!(g.face_count(), d.triangles.len() + 1);
        }
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|r| bruteforce_decorations(r, 1).unwrap().len()).collect();
        assert_eq!(counts, [2, 2, 4, 6, 6]);
        assert_eq!(bruteforce_decorations(5, 3).unwrap().len(), 4);
        assert!(bruteforce_decorations(9, 1).is_err());
    }

    #[test]
    fn agrees_at_rate_6() {
        let r = cross_check(6, 2).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.oracle, 20);
    }
}
