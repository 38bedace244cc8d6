//! Canonical codes and automorphism groups of embedded graphs.
//!
//! A code is produced by a breadth-first traversal from a start dart: vertices
//! are numbered in the order they are reached, and each vertex contributes its
//! label (when labels are given) followed by the numbers of its neighbours in
//! rotation order, starting from the dart it was reached by, terminated by 0.
//! The canonical code is the lexicographic minimum over all admissible start
//! darts, in one or both orientations.

use super::graph::{rev, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Only orientation-preserving isomorphisms.
    OrientationPreserving,
    /// Orientation-preserving and orientation-reversing isomorphisms.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub code: Vec<u32>,
    pub mode_full: bool,
}

/// A start for a traversal: dart plus orientation (`true` = mirrored).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Start {
    pub dart: usize,
    pub mirrored: bool,
}

/// Result of canonical labeling: the minimal code, the dart order it induces,
/// and all automorphisms as dart permutations.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub code: Vec<u32>,
    /// Darts listed in the order the canonical traversal emits them.
    pub dart_order: Vec<usize>,
    /// `dart_label[d]` = position of `d` in `dart_order`.
    pub dart_label: Vec<usize>,
    /// `vertex_label[v]` = 0-based canonical number of `v`.
    pub vertex_label: Vec<usize>,
    /// Each automorphism maps dart `d` to `perm[d]`; identity included.
    pub automorphisms: Vec<Automorphism>,
}

#[derive(Clone, Debug)]
pub struct Automorphism {
    pub perm: Vec<usize>,
    pub reverses_orientation: bool,
}

impl Canonical {
    /// Number of distinct dart permutations. On paths and cycles a
    /// reflection can act trivially on darts and is then not counted twice.
    pub fn group_order(&self) -> usize {
        self.automorphisms.iter().filter(|a| !a.reverses_orientation || !self.has_preserving(&a.perm)).count()
    }

    fn has_preserving(&self, perm: &[usize]) -> bool {
        self.automorphisms.iter().any(|b| !b.reverses_orientation && b.perm == perm)
    }

    /// Orbit id per dart under the automorphism group (smallest dart label in
    /// the orbit, so ids are themselves canonical).
    pub fn dart_orbits(&self) -> Vec<usize> {
        let n = self.dart_label.len();
        let mut orbit = vec![usize::MAX; n];
        for d in 0..n {
            if orbit[d] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = self.automorphisms.iter().map(|a| a.perm[d]).collect();
            let id = members.iter().map(|&x| self.dart_label[x]).min().unwrap();
            for m in members {
                orbit[m] = id;
            }
        }
        orbit
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.automorphisms.iter().any(|aut| aut.perm[a] == b)
    }

    pub fn to_code(&self, full: bool) -> CanonicalCode {
        CanonicalCode { code: self.code.clone(), mode_full: full }
    }
}

/// Traversal from one start; returns the code and the dart emission order.
/// When `bound` is given, stops early (returning `None`) as soon as the code
/// becomes lexicographically larger than `bound`.
pub fn code_from(
    g: &PlaneGraph,
    start: Start,
    labels: Option<&[u32]>,
    bound: Option<&[u32]>,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut number = vec![0u32; n];
    let mut entry = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(g.dart_count() + 2 * n);
    let mut order = Vec::with_capacity(g.dart_count());
    let mut smaller = false;
    let v0 = g.origin(start.dart);
    number[v0] = 1;
    entry[v0] = start.dart;
    queue.push(v0);
    let mut next_number = 2u32;
    let mut qi = 0;
    macro_rules! emit {
        ($x:expr) => {{
            let x: u32 = $x;
            if let Some(b) = bound {
                if !smaller {
                    let pos = code.len();
                    match b.get(pos) {
                        Some(&bx) if x > bx => return None,
                        Some(&bx) if x < bx => smaller = true,
                        _ => {}
                    }
                }
            }
            code.push(x);
        }};
    }
    while qi < queue.len() {
        let v = queue[qi];
        qi += 1;
        if let Some(l) = labels {
            emit!(l[v]);
        }
        let e = entry[v];
        let mut d = e;
        loop {
            let w = g.head(d);
            if number[w] == 0 {
                number[w] = next_number;
                next_number += 1;
                entry[w] = rev(d);
                queue.push(w);
            }
            emit!(number[w]);
            order.push(d);
            d = if start.mirrored { g.prev(d) } else { g.next(d) };
            if d == e {
                break;
            }
        }
        emit!(0);
    }
    Some((code, order))
}

/// Admissible starts. When the graph has a designated outer face, only starts
/// whose traversal keeps the outer face distinguished are used.
fn starts(g: &PlaneGraph, mode: Mode) -> Vec<Start> {
    let mut out = Vec::new();
    for d in 0..g.dart_count() {
        let ok = g.outer_face().map_or(true, |_| g.is_outer_dart(d));
        if ok {
            out.push(Start { dart: d, mirrored: false });
        }
        if mode == Mode::Full {
            // a reflection carries the face of d to the face of the reversed image
            let ok = g.outer_face().map_or(true, |_| g.is_outer_dart(rev(d)));
            if ok {
                out.push(Start { dart: d, mirrored: true });
            }
        }
    }
    out
}

/// Canonical code, canonical labels and the full automorphism group.
pub fn canonical_form(g: &PlaneGraph, mode: Mode, labels: Option<&[u32]>) -> Canonical {
    let starts = starts(g, mode);
    let mut best: Option<(Vec<u32>, Vec<usize>, Start)> = None;
    let mut ties: Vec<(Vec<usize>, bool)> = Vec::new();
    for s in starts {
        let bound = best.as_ref().map(|b| b.0.as_slice());
        if let Some((code, order)) = code_from(g, s, labels, bound) {
            match &best {
                Some((b, _, _)) if code == *b => ties.push((order, s.mirrored)),
                _ => {
                    ties.clear();
                    ties.push((order.clone(), s.mirrored));
                    best = Some((code, order, s));
                }
            }
        }
    }
    let (code, dart_order, best_start) = best.expect("graph has at least one dart");
    let mut dart_label = vec![0; g.dart_count()];
    for (i, &d) in dart_order.iter().enumerate() {
        dart_label[d] = i;
    }
    // several starts can realize one automorphism; dedupe by permutation and orientation
    let mut seen = std::collections::HashSet::new();
    let automorphisms = ties
        .into_iter()
        .filter_map(|(order, mirrored)| {
            let mut perm = vec![0; g.dart_count()];
            for (i, &d) in dart_order.iter().enumerate() {
                perm[d] = order[i];
            }
            let reverses_orientation = mirrored != best_start.mirrored;
            seen.insert((perm.clone(), reverses_orientation))
                .then_some(Automorphism { perm, reverses_orientation })
        })
        .collect();
    let mut vertex_label = vec![usize::MAX; g.vertex_count()];
    let mut k = 0;
    for &d in &dart_order {
        let v = g.origin(d);
        if vertex_label[v] == usize::MAX {
            vertex_label[v] = k;
            k += 1;
        }
    }
    Canonical { code, dart_order, dart_label, vertex_label, automorphisms }
}

pub fn canonical_code(g: &PlaneGraph, mode: Mode, labels: Option<&[u32]>) -> CanonicalCode {
    let full = mode == Mode::Full;
    let starts = starts(g, mode);
    let mut best: Option<Vec<u32>> = None;
    for s in starts {
        if let Some((code, _)) = code_from(g, s, labels, best.as_deref()) {
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    CanonicalCode { code: best.expect("graph has at least one dart"), mode_full: full }
}

/// Dart orbits and group order of the automorphism group, optionally
/// restricted to automorphisms fixing each vertex in `fixed`.
#[derive(Clone, Debug)]
pub struct Orbits {
    pub dart_orbit: Vec<usize>,
    pub group_order: usize,
}

pub fn automorphism_orbits(
    g: &PlaneGraph,
    mode: Mode,
    labels: Option<&[u32]>,
    fixed: &[usize],
) -> Orbits {
    let canon = canonical_form(g, mode, labels);
    let auts: Vec<&Automorphism> = canon
        .automorphisms
        .iter()
        .filter(|a| {
            fixed.iter().all(|&v| {
                let d = g.vertex_dart(v);
                g.origin(a.perm[d]) == v
            })
        })
        .collect();
    let n = g.dart_count();
    let mut orbit = vec![usize::MAX; n];
    let mut next_id = 0;
    for d in 0..n {
        if orbit[d] != usize::MAX {
            continue;
        }
        for a in &auts {
            orbit[a.perm[d]] = next_id;
        }
        next_id += 1;
    }
    let perms: std::collections::HashSet<&[usize]> = auts.iter().map(|a| a.perm.as_slice()).collect();
    Orbits { dart_orbit: orbit, group_order: perms.len() }
}
