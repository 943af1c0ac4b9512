//! Deterministic plane graph families and seeded random plane multigraphs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::{Dart, Draft, EdgeId, EmbedError, PlaneGraph, RotationSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    /// Wheel with `n` rim vertices.
    Wheel(usize),
    /// Two `n`-cycles joined by a perfect matching.
    Prism(usize),
    Cube,
    Dodecahedron,
    Octahedron,
    /// Theta graph of three paths with lengths ℓ, ℓ and ℓ+1 between two
    /// poles; its ℓ-facial chromatic index is 3ℓ+1.
    TightFamily(usize),
    /// K4 with the three edges at one vertex subdivided ℓ-1 times.
    SubdividedK4(usize),
    /// Random triangulation on `vertices` vertices thinned to a random
    /// connected plane multigraph.
    RandomPlanar {
        vertices: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("invalid parameter: {0}")]
    BadParameter(&'static str),
    #[error("face list does not describe a plane graph: {0}")]
    BadFaces(&'static str),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

pub fn generate(spec: &GeneratorSpec) -> Result<PlaneGraph, GenerateError> {
    match *spec {
        GeneratorSpec::Cycle(n) => cycle(n),
        GeneratorSpec::Wheel(n) => wheel(n),
        GeneratorSpec::Prism(n) => prism(n),
        GeneratorSpec::Cube => prism(4),
        GeneratorSpec::Dodecahedron => dodecahedron(),
        GeneratorSpec::Octahedron => octahedron(),
        GeneratorSpec::TightFamily(l) => tight_family(l),
        GeneratorSpec::SubdividedK4(l) => subdivided_k4(l),
        GeneratorSpec::RandomPlanar { vertices, seed } => random_planar(vertices, seed),
    }
}

/// Builds a simple plane graph on vertices `0..n` from its face boundaries.
/// Faces may be listed in either orientation; they are made coherent here.
/// Edge ids follow the sorted order of the vertex pairs, and dart `2i`
/// leaves the smaller endpoint of edge `i`.
pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<PlaneGraph, GenerateError> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for f in faces {
        if f.len() < 3 {
            return Err(GenerateError::BadFaces("face shorter than 3"));
        }
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            if a >= n || b >= n || a == b {
                return Err(GenerateError::BadFaces("bad vertex on face"));
            }
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs.sort();
    pairs.dedup();
    let edge_index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let dart = |a: usize, b: usize| -> usize {
        let i = edge_index[&(a.min(b), a.max(b))];
        if a < b {
            2 * i
        } else {
            2 * i + 1
        }
    };

    // orient faces coherently: every directed edge on exactly one face
    let oriented = orient_faces(faces, &edge_index)?;
    let darts = 2 * pairs.len();
    let mut sigma = vec![usize::MAX; darts];
    for f in &oriented {
        let k = f.len();
        for i in 0..k {
            let (a, v, b) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            let from = dart(v, a);
            if sigma[from] != usize::MAX {
                return Err(GenerateError::BadFaces("directed edge on two faces"));
            }
            sigma[from] = dart(v, b);
        }
    }
    if sigma.contains(&usize::MAX) {
        return Err(GenerateError::BadFaces("edge missing a side"));
    }
    let mut rotations = vec![Vec::new(); n];
    let mut seen = vec![false; darts];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (v, d) in [(a, 2 * i), (b, 2 * i + 1)] {
            if seen[d] {
                continue;
            }
            if !rotations[v].is_empty() {
                return Err(GenerateError::BadFaces("vertex neighbourhood is not a disk"));
            }
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                rotations[v].push(Dart(x));
                x = sigma[x];
            }
        }
    }
    let edges = (0..pairs.len()).map(|i| [Dart(2 * i), Dart(2 * i + 1)]).collect();
    Ok(PlaneGraph::from_rotation(RotationSpec { edges, rotations })?)
}

fn orient_faces(
    faces: &[Vec<usize>],
    edge_index: &BTreeMap<(usize, usize), usize>,
) -> Result<Vec<Vec<usize>>, GenerateError> {
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); edge_index.len()];
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            by_edge[edge_index[&(a.min(b), a.max(b))]].push(fi);
        }
    }
    let directed = |f: &[usize], a: usize, b: usize| (0..f.len()).any(|i| f[i] == a && f[(i + 1) % f.len()] == b);
    let mut out: Vec<Option<Vec<usize>>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if out[root].is_some() {
            continue;
        }
        out[root] = Some(faces[root].clone());
        let mut queue = VecDeque::from([root]);
        while let Some(fi) = queue.pop_front() {
            let f = out[fi].clone().expect("oriented");
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                for &gi in &by_edge[edge_index[&(a.min(b), a.max(b))]] {
                    if gi == fi || out[gi].is_some() {
                        continue;
                    }
                    let mut g = faces[gi].clone();
                    if directed(&g, a, b) {
                        g.reverse();
                    }
                    out[gi] = Some(g);
                    queue.push_back(gi);
                }
            }
        }
    }
    Ok(out.into_iter().map(|f| f.expect("every face oriented")).collect())
}

/// Builds a plane multigraph from edge endpoints and, per vertex, the cyclic
/// order of incident edges. Dart `2i` leaves the first endpoint of edge `i`;
/// a loop is listed twice in its vertex's order, first for dart `2i`.
pub fn from_edge_orders(ends: &[(usize, usize)], orders: &[Vec<usize>]) -> Result<PlaneGraph, EmbedError> {
    let mut used_first = vec![false; ends.len()];
    let rotations = orders
        .iter()
        .enumerate()
        .map(|(v, order)| {
            order
                .iter()
                .map(|&e| {
                    let (a, b) = ends[e];
                    if a == b {
                        let d = if used_first[e] { 2 * e + 1 } else { 2 * e };
                        used_first[e] = true;
                        Dart(d)
                    } else if a == v {
                        Dart(2 * e)
                    } else {
                        Dart(2 * e + 1)
                    }
                })
                .collect()
        })
        .collect();
    let edges = (0..ends.len()).map(|i| [Dart(2 * i), Dart(2 * i + 1)]).collect();
    PlaneGraph::from_rotation(RotationSpec { edges, rotations })
}

pub fn cycle(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameter("cycle needs n >= 3"));
    }
    let f: Vec<usize> = (0..n).collect();
    let mut r = f.clone();
    r.reverse();
    from_faces(n, &[f, r])
}

pub fn wheel(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameter("wheel needs n >= 3"));
    }
    let mut faces: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n, n]).collect();
    faces.push((0..n).rev().collect());
    from_faces(n + 1, &faces)
}

pub fn prism(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameter("prism needs n >= 3"));
    }
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i, n + j]);
    }
    from_faces(2 * n, &faces)
}

pub fn octahedron() -> Result<PlaneGraph, GenerateError> {
    let eq = [0, 2, 1, 3];
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (eq[i], eq[(i + 1) % 4]);
        faces.push(vec![4, a, b]);
        faces.push(vec![5, b, a]);
    }
    from_faces(6, &faces)
}

pub fn dodecahedron() -> Result<PlaneGraph, GenerateError> {
    // outer 5-cycle u (0..5), middle 10-cycle m (5..15), inner 5-cycle w (15..20)
    let u = |i: usize| i % 5;
    let m = |j: usize| 5 + j % 10;
    let w = |i: usize| 15 + i % 5;
    let mut faces = vec![(0..5).collect::<Vec<_>>(), (15..20).collect()];
    for i in 0..5 {
        faces.push(vec![u(i), u(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)]);
        faces.push(vec![w(i), w(i + 1), m(2 * i + 3), m(2 * i + 2), m(2 * i + 1)]);
    }
    from_faces(20, &faces)
}

pub fn tight_family(l: usize) -> Result<PlaneGraph, GenerateError> {
    if l == 0 {
        return Err(GenerateError::BadParameter("tight family needs l >= 1"));
    }
    theta(&[l, l, l + 1])
}

/// Three internally disjoint paths of the given lengths between vertex 0
/// and vertex 1.
pub fn theta(lengths: &[usize; 3]) -> Result<PlaneGraph, GenerateError> {
    if lengths.contains(&0) || lengths.iter().filter(|&&l| l == 1).count() > 2 {
        return Err(GenerateError::BadParameter("theta paths must have positive length"));
    }
    let mut ends = Vec::new();
    let mut orders: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
    let mut first = [0; 3];
    let mut last = [0; 3];
    for (p, &len) in lengths.iter().enumerate() {
        let mut prev = 0;
        for step in 0..len {
            let next = if step + 1 == len {
                1
            } else {
                orders.push(Vec::new());
                orders.len() - 1
            };
            let e = ends.len();
            ends.push((prev, next));
            if step == 0 {
                first[p] = e;
            } else {
                orders[prev].push(e);
            }
            if next != 1 {
                orders[next].push(e);
            }
            last[p] = e;
            prev = next;
        }
    }
    orders[0] = first.to_vec();
    orders[1] = vec![last[0], last[2], last[1]];
    Ok(from_edge_orders(&ends, &orders)?)
}

pub fn subdivided_k4(l: usize) -> Result<PlaneGraph, GenerateError> {
    if l == 0 {
        return Err(GenerateError::BadParameter("subdivided K4 needs l >= 1"));
    }
    // K4 on a=0, b=1, c=2, d=3; paths replace ab, ac, ad
    let mut next = 4;
    let mut interior: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in 1..4 {
        let inner: Vec<usize> = (next..next + l - 1).collect();
        next += l - 1;
        interior.insert(t, inner);
    }
    let expand = |f: &[usize]| -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..f.len() {
            let (x, y) = (f[i], f[(i + 1) % f.len()]);
            out.push(x);
            if x == 0 {
                out.extend(interior[&y].iter().copied());
            } else if y == 0 {
                out.extend(interior[&x].iter().rev().copied());
            }
        }
        out
    };
    let faces: Vec<Vec<usize>> = [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]].iter().map(|f| expand(f)).collect();
    from_faces(next, &faces)
}

/// Random connected plane multigraph. A triangulation is grown by stacking
/// vertices into random faces and mixed by random edge flips; random edges
/// are then deleted while keeping the graph connected, and a few random
/// subdivisions, parallel edges, pendant edges and loops may be added.
pub fn random_planar(n: usize, seed: u64) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameter("random_planar needs n >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    for _ in 0..2 * n {
        flip_random_edge(&mut faces, &mut rng);
    }
    let face_lists: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    let mut g = from_faces(n, &face_lists)?;

    let keep_fraction = rng.gen_range(0.35..1.0);
    let mut order: Vec<usize> = (0..g.num_edges()).collect();
    order.shuffle(&mut rng);
    let target = ((g.num_edges() as f64) * keep_fraction) as usize;
    // delete by original id, translating through successive surgeries
    let mut alive: Vec<Option<EdgeId>> = (0..g.num_edges()).map(|e| Some(EdgeId(e))).collect();
    for orig in order {
        if g.num_edges() <= target.max(n - 1) {
            break;
        }
        let Some(e) = alive[orig] else { continue };
        let (h, map) = g.delete_edge(e)?;
        if h.is_connected() {
            for a in alive.iter_mut() {
                *a = a.and_then(|x| map.edge(x));
            }
            g = h;
        }
    }

    for _ in 0..rng.gen_range(0..3) {
        if rng.gen_bool(0.5) {
            let e = EdgeId(rng.gen_range(0..g.num_edges()));
            let mut draft = Draft::new(&g);
            draft.subdivide(e);
            g = draft.finish()?.0;
        }
    }
    if rng.gen_bool(0.2) {
        let d = Dart(rng.gen_range(0..g.num_darts()));
        let mut draft = Draft::new(&g);
        let (u, v) = (draft.slot_of_dart(d), draft.slot_of_dart(g.phi(d)));
        draft.add_edge((u, Some(d)), (v, Some(g.phi(d))));
        g = draft.finish()?.0;
    }
    if rng.gen_bool(0.2) {
        let d = Dart(rng.gen_range(0..g.num_darts()));
        let mut draft = Draft::new(&g);
        let s = draft.add_vertex();
        draft.add_edge((draft.slot_of_dart(d), Some(d)), (s, None));
        g = draft.finish()?.0;
    }
    if rng.gen_bool(0.05) {
        let d = Dart(rng.gen_range(0..g.num_darts()));
        let mut draft = Draft::new(&g);
        let s = draft.slot_of_dart(d);
        draft.add_edge((s, Some(d)), (s, Some(d)));
        g = draft.finish()?.0;
    }
    Ok(g)
}

fn flip_random_edge(faces: &mut [[usize; 3]], rng: &mut ChaCha8Rng) {
    let fi = rng.gen_range(0..faces.len());
    let k = rng.gen_range(0..3);
    let f = faces[fi];
    let (u, v, x) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
    let Some(gi) = faces.iter().position(|g| (0..3).any(|i| g[i] == v && g[(i + 1) % 3] == u)) else {
        return;
    };
    let g = faces[gi];
    let i = (0..3).find(|&i| g[i] == v).expect("shared edge");
    let y = g[(i + 2) % 3];
    if x == y {
        return;
    }
    let adjacent =
        faces.iter().any(|h| (0..3).any(|i| (h[i] == x && h[(i + 1) % 3] == y) || (h[i] == y && h[(i + 1) % 3] == x)));
    if adjacent {
        return;
    }
    let degree = |w: usize| faces.iter().filter(|h| h.contains(&w)).count();
    if degree(u) <= 3 || degree(v) <= 3 {
        return;
    }
    faces[fi] = [y, v, x];
    faces[gi] = [x, u, y];
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families_have_expected_sizes() {
        let check = |g: PlaneGraph, v: usize, e: usize, f: usize| {
            assert_eq!((g.num_vertices(), g.num_edges(), g.num_faces()), (v, e, f));
        };
        check(cycle(5).unwrap(), 5, 5, 2);
        check(wheel(5).unwrap(), 6, 10, 6);
        check(prism(6).unwrap(), 12, 18, 8);
        check(generate(&GeneratorSpec::Cube).unwrap(), 8, 12, 6);
        check(octahedron().unwrap(), 6, 12, 8);
        check(dodecahedron().unwrap(), 20, 30, 12);
        check(subdivided_k4(1).unwrap(), 4, 6, 4);
        check(subdivided_k4(2).unwrap(), 7, 9, 4);
        check(tight_family(1).unwrap(), 3, 4, 3);
        check(tight_family(2).unwrap(), 6, 7, 3);
    }

    #[test]
    fn tight_family_face_lengths() {
        for l in 1..5 {
            let g = tight_family(l).unwrap();
            let mut lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
            lens.sort();
            assert_eq!(lens, vec![2 * l, 2 * l + 1, 2 * l + 1]);
        }
    }

    #[test]
    fn dodecahedron_is_cubic_with_pentagons() {
        let g = dodecahedron().unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(cycle(2).is_err());
        assert!(tight_family(0).is_err());
        assert!(random_planar(2, 1).is_err());
    }

    #[test]
    fn random_planar_is_reproducible_and_connected() {
        for seed in 0..40 {
            let a = random_planar(8, seed).unwrap();
            let b = random_planar(8, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.is_connected());
            assert_eq!(a.euler_characteristic(), 2);
        }
    }
}
