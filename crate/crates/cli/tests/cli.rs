use std::collections::BTreeSet;
use std::process::{Command, Output};

use lspgen::decoration::format::read_decos;
use lspgen::decoration::Decoration;
use lspgen::embedded::planar_code::{read_planar_code, rooted};

fn lspgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lspgen")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> Vec<u8> {
    let out = lspgen(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn text(args: &[&str]) -> String {
    String::from_utf8(stdout(args)).unwrap()
}

#[test]
fn count_lines() {
    assert_eq!(text(&["generate", "--rate", "5", "-k", "3", "--count"]), "5 3 4\n");
    assert_eq!(text(&["generate", "--rate", "1-4", "--count"]), "1 1 2\n2 1 2\n3 1 4\n4 1 6\n");
}

#[test]
fn count_matches_emitted() {
    for k in ["1", "2", "3"] {
        let counts = text(&["generate", "--rate", "1-6", "-k", k, "--count"]);
        let total: usize = counts.lines().map(|l| l.rsplit(' ').next().unwrap().parse::<usize>().unwrap()).sum();
        let decos = read_decos(&text(&["generate", "--rate", "1-6", "-k", k])).unwrap();
        assert_eq!(decos.len(), total, "k = {k}");
        let distinct: BTreeSet<_> = decos.iter().map(Decoration::identity).collect();
        assert_eq!(distinct.len(), total, "k = {k}");
    }
    let counts = text(&["generate", "--rate", "1-7", "--predecorations", "--count"]);
    let total: usize = counts.lines().map(|l| l.rsplit(' ').next().unwrap().parse::<usize>().unwrap()).sum();
    let graphs = read_planar_code(&stdout(&["generate", "--rate", "1-7", "--predecorations"])).unwrap();
    assert_eq!(graphs.len(), total);
}

#[test]
fn sorted_output_ignores_threads() {
    let one = stdout(&["--threads", "1", "generate", "--rate", "7", "-k", "2", "--sorted"]);
    let four = stdout(&["--threads", "4", "generate", "--rate", "7", "-k", "2", "--sorted"]);
    assert_eq!(one, four);
    let unsorted = read_decos(&text(&["generate", "--rate", "7", "-k", "2"])).unwrap();
    let mut a: Vec<_> = unsorted.iter().map(Decoration::identity).collect();
    let mut b: Vec<_> = read_decos(&String::from_utf8(one).unwrap()).unwrap().iter().map(Decoration::identity).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn planar_code_with_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let side = dir.path().join("types.txt");
    let pc = stdout(&["generate", "--rate", "5", "-k", "2", "--format", "pc", "--types", side.to_str().unwrap()]);
    let graphs = read_planar_code(&pc).unwrap();
    let lines = std::fs::read_to_string(&side).unwrap();
    assert_eq!(graphs.len(), lines.lines().count());
    let mut got = BTreeSet::new();
    for (g, line) in graphs.into_iter().zip(lines.lines()) {
        let (types, corners) = line.strip_prefix("types ").unwrap().split_once(" corners ").unwrap();
        let types: Vec<u8> = types.split(' ').map(|t| t.parse().unwrap()).collect();
        let c: Vec<usize> = corners.split(' ').map(|t| t.parse::<usize>().unwrap() - 1).collect();
        assert_eq!(c[0], 0);
        let d = Decoration::new(rooted(g), types, [c[0], c[1], c[2]]).unwrap();
        got.insert(d.identity());
    }
    let want: BTreeSet<_> =
        read_decos(&text(&["generate", "--rate", "5", "-k", "2"])).unwrap().iter().map(Decoration::identity).collect();
    assert_eq!(got, want);
}

#[test]
fn apply_named() {
    let g = read_planar_code(&stdout(&["apply", "--op", "ambo", "--seed", "cube"])).unwrap();
    assert_eq!((g[0].vertex_count(), g[0].edge_count()), (12, 24));
    let g = read_planar_code(&stdout(&["apply", "--op", "identity", "--seed", "cube"])).unwrap();
    assert_eq!((g[0].vertex_count(), g[0].edge_count(), g[0].face_count()), (8, 12, 6));
}

#[test]
fn apply_files_inflates_edges() {
    let dir = tempfile::tempdir().unwrap();
    let seeds = dir.path().join("seeds.pc");
    let mut bytes = stdout(&["apply", "--op", "identity", "--seed", "octahedron"]);
    bytes.extend_from_slice(&stdout(&["apply", "--op", "dual", "--seed", "icosahedron"])[15..]);
    std::fs::write(&seeds, &bytes).unwrap();
    let edges: Vec<usize> = read_planar_code(&bytes).unwrap().iter().map(|g| g.edge_count()).collect();

    let ops = text(&["generate", "--rate", "6", "-k", "3"]);
    let deco = dir.path().join("op.deco");
    for record in ops.split("\n\n").filter(|r| !r.is_empty()) {
        std::fs::write(&deco, record).unwrap();
        let out = stdout(&["apply", "--op-file", deco.to_str().unwrap(), "--seed-file", seeds.to_str().unwrap()]);
        let got: Vec<usize> = read_planar_code(&out).unwrap().iter().map(|g| g.edge_count()).collect();
        assert_eq!(got, edges.iter().map(|e| 6 * e).collect::<Vec<_>>());
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(lspgen(&["verify", "--rate", "6", "-k", "1"]).status.code(), Some(0));
    assert_eq!(lspgen(&["verify", "--rate", "8", "-k", "3"]).status.code(), Some(0));
    assert_eq!(lspgen(&["verify", "--rate", "9"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [
        &["generate", "--rate", "0"][..],
        &["generate", "--rate", "5-3"],
        &["generate", "--rate", "3", "-k", "4"],
        &["generate", "--rate", "3", "--format", "pc"],
        &["generate", "--rate", "3", "--predecorations", "--format", "deco"],
        &["apply", "--op", "gyro", "--seed", "cube"],
        &["apply", "--op", "ambo", "--seed", "torus"],
        &["apply", "--op", "ambo", "--op-file", "x", "--seed", "cube"],
        &["apply", "--op", "ambo", "--seed-file", "/nonexistent"],
    ] {
        assert_eq!(lspgen(args).status.code(), Some(2), "{args:?}");
    }
}
