//! Named classical operations and seed polyhedra.
//!
//! Each operation is drawn inside the chamber with `v0` at a vertex, `v1` at
//! an edge midpoint and `v2` at a face centre of the host, counterclockwise.
//! Vertices 0, 1, 2 are the corners; extra vertices are listed after them.

use thiserror::Error;

use crate::decoration::Decoration;
use crate::embedded::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown operation {0:?}")]
    UnknownOperation(String),
    #[error("unknown seed {0:?}")]
    UnknownSeed(String),
}

#[derive(Clone, Debug)]
pub struct NamedOperation {
    pub name: &'static str,
    pub decoration: Decoration,
    pub conway_symbol: Option<char>,
}

pub const OPERATIONS: [&str; 10] =
    ["identity", "dual", "ambo", "join", "truncate", "zip", "needle", "kiss", "chamfer", "subdivide"];

pub const SEEDS: [&str; 8] =
    ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "k2", "bowtie", "k4-minus-edge"];

struct Drawing {
    types: &'static [u8],
    triangles: &'static [[usize; 3]],
}

// the four operations that are not 0/2 swaps of another catalog entry
const IDENTITY: Drawing = Drawing { types: &[0, 1, 2], triangles: &[[0, 1, 2]] };

// 3 on v2..v0 at the middle of a host corner
const AMBO: Drawing = Drawing { types: &[2, 0, 2, 1], triangles: &[[0, 1, 3], [3, 1, 2]] };

// 3 on v0..v1 cuts the corner off, 4 on v2..v0 is the middle of the cut edge
const TRUNCATE: Drawing = Drawing {
    types: &[2, 1, 2, 0, 1],
    triangles: &[[0, 3, 4], [3, 1, 2], [3, 2, 4]],
};

// 3 on v1..v2 is the new face centre, 4 on v2..v0 the middle of the new edge
const KISS: Drawing = Drawing {
    types: &[0, 1, 0, 2, 1],
    triangles: &[[0, 1, 3], [0, 3, 4], [4, 3, 2]],
};

// side v2..v0 reads 2, 5, 3, 0: the new vertex 5 and the middle 3 of its spoke
const CHAMFER: Drawing = Drawing {
    types: &[0, 2, 2, 1, 1, 0],
    triangles: &[[0, 1, 3], [3, 1, 5], [5, 1, 4], [5, 4, 2]],
};

// 3 halves v0..v1; side v2..v0 reads 2, 5, 4, 0 with 4 the corner triangle centre
const SUBDIVIDE: Drawing = Drawing {
    types: &[0, 0, 2, 1, 2, 1],
    triangles: &[[0, 3, 4], [3, 1, 4], [1, 5, 4], [1, 2, 5]],
};

fn draw(d: &Drawing) -> Decoration {
    let faces: Vec<Vec<usize>> = d.triangles.iter().map(|t| t.to_vec()).collect();
    let g = PlaneGraph::from_faces(&faces).expect("catalog drawing is a disk");
    // the boundary edge leaving v0 along v0..v1 has the outer face on its right
    let x = g.darts_around(0).find(|&x| d.triangles.iter().any(|t| t[0] == 0 && t[1] == g.head(x)) && {
        let w = g.head(x);
        !d.triangles.iter().any(|t| (0..3).any(|i| t[i] == w && t[(i + 1) % 3] == 0))
    });
    let g = g.with_outer_dart(x.expect("v0 is on the boundary"));
    Decoration::new(g, d.types.to_vec(), [0, 1, 2]).expect("catalog drawing is a decoration")
}

pub fn lookup(name: &str) -> Result<NamedOperation, CatalogError> {
    let (decoration, conway_symbol) = match name {
        "identity" => (draw(&IDENTITY), None),
        "dual" => (draw(&IDENTITY).swap02(), Some('d')),
        "ambo" => (draw(&AMBO), Some('a')),
        "join" => (draw(&AMBO).swap02(), Some('j')),
        "truncate" => (draw(&TRUNCATE), Some('t')),
        "needle" => (draw(&TRUNCATE).swap02(), Some('n')),
        "kiss" => (draw(&KISS), Some('k')),
        "zip" => (draw(&KISS).swap02(), Some('z')),
        "chamfer" => (draw(&CHAMFER), Some('c')),
        "subdivide" => (draw(&SUBDIVIDE), Some('u')),
        _ => return Err(CatalogError::UnknownOperation(name.to_string())),
    };
    let name = OPERATIONS.iter().find(|&&n| n == name).unwrap();
    Ok(NamedOperation { name, decoration, conway_symbol })
}

pub fn seed(name: &str) -> Result<PlaneGraph, CatalogError> {
    let g = match name {
        "tetrahedron" => PlaneGraph::from_faces(&[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]),
        "cube" => PlaneGraph::from_faces(&[
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ]),
        "octahedron" => {
            // 0 top, 5 bottom, equator 1..4
            let mut faces = Vec::new();
            for i in 0..4 {
                let (a, b) = (1 + i, 1 + (i + 1) % 4);
                faces.push(vec![0, a, b]);
                faces.push(vec![5, b, a]);
            }
            PlaneGraph::from_faces(&faces)
        }
        "icosahedron" => PlaneGraph::from_faces(&icosahedron_faces()),
        "dodecahedron" => {
            // one vertex per icosahedron face, faces around its vertices
            let tri = icosahedron_faces();
            let faces: Vec<Vec<usize>> = (0..12)
                .map(|v| {
                    let mut around = Vec::new();
                    let mut f = tri.iter().position(|t| t.contains(&v)).unwrap();
                    while !around.contains(&f) {
                        around.push(f);
                        // next triangle clockwise around v shares the edge v -> successor
                        let t = &tri[f];
                        let i = t.iter().position(|&x| x == v).unwrap();
                        let w = t[(i + 1) % 3];
                        f = tri.iter().position(|s| (0..3).any(|j| s[j] == w && s[(j + 1) % 3] == v)).unwrap();
                    }
                    around.reverse();
                    around
                })
                .collect();
            PlaneGraph::from_faces(&faces)
        }
        "k2" => PlaneGraph::from_rotations(&[vec![1], vec![0]]),
        "bowtie" => PlaneGraph::from_faces(&[vec![0, 1, 2], vec![0, 3, 4]]),
        "k4-minus-edge" => PlaneGraph::from_faces(&[vec![0, 1, 2], vec![0, 2, 3]]),
        _ => return Err(CatalogError::UnknownSeed(name.to_string())),
    };
    Ok(g.expect("seed tables are consistent"))
}

fn icosahedron_faces() -> Vec<Vec<usize>> {
    // 0 top, 11 bottom, upper ring 1..5, lower ring 6..10 with 6 + i between 1 + i and its successor
    let mut faces = Vec::new();
    for i in 0..5 {
        let (u, u1) = (1 + i, 1 + (i + 1) % 5);
        let (l, l1) = (6 + i, 6 + (i + 1) % 5);
        faces.push(vec![0, u, u1]);
        faces.push(vec![u, l, u1]);
        faces.push(vec![u1, l, l1]);
        faces.push(vec![11, l1, l]);
    }
    faces
}
