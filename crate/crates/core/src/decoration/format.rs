//! The line-oriented `.deco` text format.
//!
//! ```text
//! deco 1
//! n 3 rate 1 k 3
//! corners 1 2 3
//! types 0 1 2
//! rot 1: 2 3
//! rot 2: 3 1
//! rot 3: 1 2
//! et 1 2 2
//! et 1 3 1
//! et 2 3 0
//! ```
//!
//! Ids are 1-based and rotations counterclockwise. The outer face is the face
//! on the right of the first listed dart of `v0`. Records are separated by
//! blank lines. Edge type lines are redundant with vertex types and are
//! checked on reading.

use std::fmt::Write as _;

use thiserror::Error;

use super::{validate, Decoration, Violation};
use crate::embedded::{GraphError, PlaneGraph};

#[derive(Debug, Error)]
pub enum DecoError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("not a decoration: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

/// Writes one record, vertices numbered in canonical traversal order.
pub fn write_deco(d: &Decoration) -> String {
    let g = d.graph();
    let n = g.vertex_count();
    let start = d.boundary_dart(d.corners()[0]).unwrap();
    // breadth-first order from the boundary dart at v0, as in the identity code
    let mut order = Vec::with_capacity(n);
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let v0 = d.corners()[0];
    label[v0] = 0;
    entry[v0] = start;
    order.push(v0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for x in g.darts_from(entry[v]) {
            let w = g.head(x);
            if label[w] == usize::MAX {
                label[w] = order.len();
                entry[w] = x ^ 1;
                order.push(w);
            }
        }
    }
    let mut s = String::new();
    writeln!(s, "deco 1").unwrap();
    writeln!(s, "n {} rate {} k {}", n, d.inflation_rate(), d.connectivity_class()).unwrap();
    let [c0, c1, c2] = d.corners().map(|c| label[c] + 1);
    writeln!(s, "corners {c0} {c1} {c2}").unwrap();
    let types: Vec<String> = order.iter().map(|&v| d.vertex_type(v).to_string()).collect();
    writeln!(s, "types {}", types.join(" ")).unwrap();
    for (i, &v) in order.iter().enumerate() {
        let rot: Vec<String> = g.darts_from(entry[v]).map(|x| (label[g.head(x)] + 1).to_string()).collect();
        writeln!(s, "rot {}: {}", i + 1, rot.join(" ")).unwrap();
    }
    for (i, &v) in order.iter().enumerate() {
        for x in g.darts_from(entry[v]) {
            let w = label[g.head(x)];
            if i < w {
                writeln!(s, "et {} {} {}", i + 1, w + 1, d.edge_type(x)).unwrap();
            }
        }
    }
    s
}

pub fn write_decos<'a>(ds: impl IntoIterator<Item = &'a Decoration>) -> String {
    ds.into_iter().map(write_deco).collect::<Vec<_>>().join("\n")
}

fn syntax(line: usize, msg: impl Into<String>) -> DecoError {
    DecoError::Syntax { line, msg: msg.into() }
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>, DecoError> {
    words.iter().map(|w| w.parse().map_err(|_| syntax(line, format!("bad number `{w}`")))).collect()
}

/// Reads all records of a `.deco` stream.
pub fn read_decos(text: &str) -> Result<Vec<Decoration>, DecoError> {
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).peekable();
    loop {
        while lines.peek().map_or(false, |(_, l)| l.is_empty()) {
            lines.next();
        }
        let Some((ln, header)) = lines.next() else { break };
        if header != "deco 1" {
            return Err(syntax(ln, "expected `deco 1`"));
        }
        let (ln, size) = lines.next().ok_or_else(|| syntax(ln, "missing size line"))?;
        let w: Vec<&str> = size.split_whitespace().collect();
        if w.len() != 6 || w[0] != "n" || w[2] != "rate" || w[4] != "k" {
            return Err(syntax(ln, "expected `n <count> rate <r> k <class>`"));
        }
        let nums = numbers(ln, &[w[1], w[3], w[5]])?;
        let (n, rate, class) = (nums[0], nums[1], nums[2]);
        let (ln, corner_line) = lines.next().ok_or_else(|| syntax(ln, "missing corners"))?;
        let w: Vec<&str> = corner_line.split_whitespace().collect();
        if w.len() != 4 || w[0] != "corners" {
            return Err(syntax(ln, "expected `corners <v0> <v1> <v2>`"));
        }
        let c = numbers(ln, &w[1..])?;
        if c.iter().any(|&x| x == 0 || x > n) {
            return Err(syntax(ln, "corner out of range"));
        }
        let (ln, type_line) = lines.next().ok_or_else(|| syntax(ln, "missing types"))?;
        let w: Vec<&str> = type_line.split_whitespace().collect();
        if w.len() != n + 1 || w[0] != "types" {
            return Err(syntax(ln, "expected one type per vertex"));
        }
        let types: Vec<u8> = numbers(ln, &w[1..])?.into_iter().map(|t| t.min(3) as u8).collect();
        let mut rot = vec![Vec::new(); n];
        for (v, slot) in rot.iter_mut().enumerate() {
            let (ln, l) = lines.next().ok_or_else(|| syntax(ln, "missing rotation"))?;
            let (head, rest) = l.split_once(':').ok_or_else(|| syntax(ln, "expected `rot <v>: ...`"))?;
            if head.trim() != format!("rot {}", v + 1) {
                return Err(syntax(ln, format!("expected rotation of vertex {}", v + 1)));
            }
            let nb = numbers(ln, &rest.split_whitespace().collect::<Vec<_>>())?;
            if nb.iter().any(|&x| x == 0 || x > n) {
                return Err(syntax(ln, "neighbour out of range"));
            }
            *slot = nb.into_iter().map(|x| x - 1).collect();
        }
        let graph = PlaneGraph::from_rotations(&rot)?;
        let v0 = c[0] - 1;
        let start = graph.vertex_dart(v0);
        let graph = graph.with_outer_dart(start);
        let mut edge_lines = 0;
        while let Some(&(ln, l)) = lines.peek() {
            if !l.starts_with("et ") {
                break;
            }
            lines.next();
            let w: Vec<&str> = l.split_whitespace().collect();
            if w.len() != 4 {
                return Err(syntax(ln, "expected `et <v> <u> <t>`"));
            }
            let e = numbers(ln, &w[1..])?;
            let (a, b) = (e[0].wrapping_sub(1), e[1].wrapping_sub(1));
            if a >= n || b >= n || e[2] > 2 || types[a].max(types[b]) > 2 {
                return Err(syntax(ln, "edge type out of range"));
            }
            if 3 - types[a] as usize - types[b] as usize != e[2] {
                return Err(syntax(ln, "edge type disagrees with vertex types"));
            }
            edge_lines += 1;
        }
        if edge_lines != graph.edge_count() {
            return Err(syntax(ln, "edge type lines do not match the edge count"));
        }
        let corners = [c[0] - 1, c[1] - 1, c[2] - 1];
        let violations = validate(&graph, &types, corners);
        if !violations.is_empty() {
            return Err(DecoError::Invalid(violations));
        }
        let d = Decoration::from_parts(graph, types, corners);
        if d.inflation_rate() != rate || d.connectivity_class() as usize != class {
            return Err(syntax(ln, "rate or class disagrees with the graph"));
        }
        out.push(d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::tests::identity;

    #[test]
    fn identity_round_trip() {
        let d = identity();
        let text = write_deco(&d);
        assert!(text.starts_with("deco 1\nn 3 rate 1 k 3\ncorners 1 2 3\n"));
        let back = read_decos(&text).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].identity(), d.identity());
    }

    #[test]
    fn two_records() {
        let d = identity();
        let text = write_decos([&d, &d.swap02()]);
        let back = read_decos(&text).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[1].identity(), d.swap02().identity());
    }

    #[test]
    fn rejects_wrong_edge_type() {
        let text = write_deco(&identity()).replace("et 1 2 2", "et 1 2 1");
        assert!(read_decos(&text).is_err());
    }
}
