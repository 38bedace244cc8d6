//! Isomorph-free generation of predecorations by canonical construction path.
//!
//! Every predecoration other than the single edge and the quadrangle has a
//! reduction to a smaller one. Among the valid reductions, the canonical one
//! has the smallest kind and, within that kind, the smallest set of canonical
//! dart labels. A child is accepted when the extension that produced it is
//! equivalent under its automorphism group to its canonical reduction, and
//! extensions are applied to one site per orbit of the parent.

mod builder;
pub mod extend;
pub mod reduce;

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::embedded::{canonical_form, Canonical, Mode};
use crate::predecoration::{validate_predecoration, Predecoration};
pub use extend::Site;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerationTask {
    pub rate_min: usize,
    pub rate_max: usize,
    pub k: u8,
    /// Refuse closing a path of 3 edges on small outer faces, which cannot
    /// lead to decorations of the requested class.
    pub restrict_closing: bool,
    pub parallel: bool,
}

impl GenerationTask {
    pub fn new(rate_min: usize, rate_max: usize, k: u8) -> Self {
        GenerationTask { rate_min, rate_max, k, restrict_closing: true, parallel: true }
    }

    fn refuses(&self, kind: u8, outer_size: usize) -> bool {
        self.restrict_closing
            && kind == 10
            && ((self.k >= 2 && outer_size == 4) || (self.k >= 3 && outer_size == 6))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenerationStats {
    /// Predecorations passed to the visitor.
    pub visited: usize,
    /// Children rejected as non-canonical.
    pub rejected: usize,
    /// Children dropped because their lower rate bound is too large.
    pub pruned: usize,
}

fn site_key(c: &Canonical, site: &[usize]) -> Vec<usize> {
    let mut k: Vec<usize> = site.iter().map(|&d| c.dart_label[d]).collect();
    k.sort_unstable();
    k
}

/// Canonical form with the outer vertices marked, so that automorphisms keep
/// the outer face. Only the quadrangle has two faces on the same vertices, and
/// it is never a child.
fn canon(p: &Predecoration) -> Canonical {
    let g = p.graph();
    let mut labels = vec![1u32; g.vertex_count()];
    for d in g.face_darts(p.outer_face()) {
        labels[g.origin(d)] = 2;
    }
    canonical_form(g, Mode::Full, Some(&labels))
}

/// Whether the child produced by an extension of `kind` at `site` (darts in
/// the child) lies on the canonical construction path.
pub fn is_canonical(child: &Predecoration, kind: u8, site: &[usize]) -> bool {
    let g = child.graph();
    if (1..kind).any(|j| reduce::any_reduction(g, j)) {
        return false;
    }
    let c = canon(child);
    let best = reduce::reductions(g, kind)
        .into_iter()
        .map(|r| site_key(&c, &r.site))
        .min()
        .expect("the applied reduction is valid");
    let mut mine = site_key(&c, site);
    if mine == best {
        return true;
    }
    // the key is label-based, so an automorphism image of the site has the
    // same key exactly when it is the canonical site
    c.automorphisms.iter().any(|a| {
        mine = site.iter().map(|&d| c.dart_label[a.perm[d]]).collect();
        mine.sort_unstable();
        mine == best
    })
}

/// One site per orbit of the automorphism group.
pub fn orbit_sites(p: &Predecoration, kind: u8, canon: &Canonical) -> Vec<Site> {
    let g = p.graph();
    let all = extend::sites(g, kind);
    let mut seen: HashSet<Site> = HashSet::new();
    let mut out = Vec::new();
    for s in all {
        if seen.contains(&s) {
            continue;
        }
        for a in &canon.automorphisms {
            seen.insert(s.map(g, a));
        }
        out.push(s);
    }
    out
}

/// Accepted children of `p` with their lower rate bound at most `rate_max`.
pub fn children(p: &Predecoration, task: &GenerationTask, stats: &Counters) -> Vec<Predecoration> {
    let canon = canon(p);
    let outer_size = p.outer_size();
    let mut out = Vec::new();
    for kind in 1..=10u8 {
        if task.refuses(kind, outer_size) {
            continue;
        }
        for s in orbit_sites(p, kind, &canon) {
            let ext = extend::apply(p.graph(), s);
            if !validate_predecoration(&ext.graph).is_empty() {
                continue;
            }
            let child = Predecoration::new_unchecked(ext.graph);
            if child.is_base() {
                continue;
            }
            if child.rate_bounds().lo > task.rate_max {
                stats.pruned.fetch_add(1, Ordering::Relaxed);
                continue;
            }
            if is_canonical(&child, kind, &ext.site) {
                out.push(child);
            } else {
                stats.rejected.fetch_add(1, Ordering::Relaxed);
            }
        }
    }
    out
}

#[derive(Default)]
pub struct Counters {
    visited: AtomicUsize,
    rejected: AtomicUsize,
    pruned: AtomicUsize,
}

fn walk<F: Fn(&Predecoration) + Sync>(p: Predecoration, task: &GenerationTask, visit: &F, stats: &Counters) {
    visit(&p);
    stats.visited.fetch_add(1, Ordering::Relaxed);
    let kids = children(&p, task, stats);
    if task.parallel {
        kids.into_par_iter().for_each(|c| walk(c, task, visit, stats));
    } else {
        kids.into_iter().for_each(|c| walk(c, task, visit, stats));
    }
}

/// Visits every predecoration (up to orientation-reversing isomorphism) whose
/// lower rate bound is at most `task.rate_max`, each exactly once.
pub fn generate<F: Fn(&Predecoration) + Sync>(task: &GenerationTask, visit: F) -> GenerationStats {
    let stats = Counters::default();
    for base in [Predecoration::k2(), Predecoration::c4()] {
        if base.rate_bounds().lo <= task.rate_max {
            walk(base, task, &visit, &stats);
        }
    }
    GenerationStats {
        visited: stats.visited.into_inner(),
        rejected: stats.rejected.into_inner(),
        pruned: stats.pruned.into_inner(),
    }
}

/// All generated predecorations, for small bounds and tests.
pub fn collect(task: &GenerationTask) -> Vec<Predecoration> {
    let out = std::sync::Mutex::new(Vec::new());
    generate(task, |p| out.lock().unwrap().push(p.clone()));
    out.into_inner().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(p: &Predecoration) -> Vec<u32> {
        canon(p).code
    }

    /// Every extension at every site, deduplicated by canonical code.
    fn closure(rate_max: usize) -> HashSet<Vec<u32>> {
        let mut seen = HashSet::new();
        let mut stack = vec![Predecoration::k2(), Predecoration::c4()];
        while let Some(p) = stack.pop() {
            if !seen.insert(key(&p)) {
                continue;
            }
            for kind in 1..=10 {
                for s in extend::sites(p.graph(), kind) {
                    let ext = extend::apply(p.graph(), s);
                    if let Ok(c) = Predecoration::new(ext.graph) {
                        if c.rate_bounds().lo <= rate_max {
                            stack.push(c);
                        }
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn matches_closure_without_duplicates() {
        for rmax in [4, 6, 8, 10, 12] {
            let mut task = GenerationTask::new(0, rmax, 1);
            task.parallel = false;
            let got = collect(&task);
            let keys: HashSet<Vec<u32>> = got.iter().map(key).collect();
            assert_eq!(keys.len(), got.len(), "duplicates at {rmax}");
            assert_eq!(keys, closure(rmax), "rate bound {rmax}");
        }
    }
}
