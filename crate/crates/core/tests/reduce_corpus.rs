//! Every configuration found anywhere in a mixed corpus reduces, recolors
//! and extends, not only the first one `detect` reports.

use std::collections::BTreeSet;

use lfec_core::facial::is_valid;
use lfec_core::generate::{dodecahedron, from_faces, prism, random_planar};
use lfec_core::reduce::{apply, construct_7_coloring, detect_all, extend, Configuration, ReduceError};
use lfec_core::{Coloring, EdgeId, PlaneGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Triangulation grown by stacking, then flipped towards even degrees.
fn even_triangulation(n: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let has_edge = |faces: &[[usize; 3]], x: usize, y: usize| {
        faces.iter().any(|h| (0..3).any(|i| (h[i], h[(i + 1) % 3]) == (x, y) || (h[i], h[(i + 1) % 3]) == (y, x)))
    };
    for _ in 0..20 * n {
        let fi = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let f = faces[fi];
        let (u, v, x) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        let Some(gi) = faces.iter().position(|g| (0..3).any(|i| g[i] == v && g[(i + 1) % 3] == u)) else {
            continue;
        };
        let g = faces[gi];
        let i = (0..3).find(|&i| g[i] == v).unwrap();
        let y = g[(i + 2) % 3];
        if x == y || has_edge(&faces, x, y) {
            continue;
        }
        let deg = |w: usize| faces.iter().filter(|h| h.contains(&w)).count();
        if deg(u) + deg(v) <= deg(x) + deg(y) + 2 {
            continue;
        }
        faces[fi] = [y, v, x];
        faces[gi] = [x, u, y];
    }
    let lists: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    from_faces(n, &lists).unwrap()
}

fn subdivide_random(mut g: PlaneGraph, times: usize, rng: &mut ChaCha8Rng) -> PlaneGraph {
    for _ in 0..times {
        let e = EdgeId(rng.gen_range(0..g.num_edges()));
        g = g.subdivide_edge(e).unwrap().0;
    }
    g
}

fn subdivide_each(mut g: PlaneGraph) -> PlaneGraph {
    for e in 0..g.num_edges() {
        g = g.subdivide_edge(EdgeId(e)).unwrap().0;
    }
    g
}

fn corpus(seeds: u64) -> Vec<PlaneGraph> {
    let mut out = vec![
        subdivide_each(prism(4).unwrap()),
        subdivide_each(prism(5).unwrap()),
        subdivide_each(dodecahedron().unwrap()),
    ];
    for seed in 0..seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_planar(4 + (seed % 26) as usize, seed).unwrap();
        let times = rng.gen_range(0..6);
        out.push(subdivide_random(g.dual().unwrap(), times, &mut rng));
        if seed % 3 == 0 {
            out.push(g.medial_graph().unwrap());
        }
        out.push(g);
        let cubic = even_triangulation(6 + (seed % 20) as usize, seed).dual().unwrap();
        let times = rng.gen_range(0..cubic.num_vertices() / 2 + 1);
        out.push(subdivide_random(cubic, times, &mut rng));
        let times = (seed % 8) as usize;
        out.push(subdivide_random(dodecahedron().unwrap(), times, &mut rng));
    }
    out.retain(|g| g.num_edges() <= 60);
    out
}

/// Colors one part the way the engine would, honoring a forced
/// configuration.
fn color_part(g: &PlaneGraph, forced: Option<&Configuration>) -> Result<Coloring, ReduceError> {
    match forced {
        None => construct_7_coloring(g).map(|c| c.coloring),
        Some(c) => {
            let step = apply(g, c)?;
            let parts: Result<Vec<_>, _> = step.parts.iter().map(|p| color_part(&p.graph, p.forced.as_ref())).collect();
            extend(g, &step, &parts?).map(|x| x.coloring)
        }
    }
}

#[test]
fn every_configuration_in_the_corpus_extends() {
    let mut seen = BTreeSet::new();
    for g in corpus(40) {
        for c in detect_all(&g) {
            let step = apply(&g, &c).unwrap_or_else(|e| panic!("{} {}: {e}", c.kind, c.witness));
            let parts: Vec<Coloring> =
                step.parts.iter().map(|p| color_part(&p.graph, p.forced.as_ref()).unwrap()).collect();
            let ext = extend(&g, &step, &parts).unwrap_or_else(|e| panic!("{} {}: {e}", c.kind, c.witness));
            assert!(is_valid(&g, 2, &ext.coloring));
            seen.insert(c.kind.to_string());
        }
    }
    let all = [
        "Cutvertex",
        "DegreeLE1",
        "AdjacentTwoVertices",
        "FaceLE3",
        "SeparatingCycleLE5",
        "SixFace",
        "SmallFaceWithTwoVertex(4)",
        "SmallFaceWithTwoVertex(5)",
        "SmallFaceWithTwoVertex(7)",
        "TwoVerticesClose(2)",
        "TwoVerticesClose(3)",
        "EightFaceTwoTwoVertices",
        "AdjacentFourFaces",
        "FourFiveLowDegree",
        "FiveFiveLowDegree",
        "FourFaceAllThrees",
    ];
    let missing: Vec<&str> = all.iter().copied().filter(|k| !seen.contains(*k)).collect();
    assert!(missing.is_empty(), "kinds never exercised: {missing:?}");
}

#[test]
fn construct_on_the_corpus() {
    for g in corpus(60) {
        let out = construct_7_coloring(&g).unwrap();
        assert!(is_valid(&g, 2, &out.coloring));
        assert_eq!(out.detect_gaps, 0);
    }
}
