//! Finding configurations and re-checking their witnesses.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::apply::zip_across;
use super::{Configuration, Kind, SmallFaceCase, Witness};
use crate::embed::{Cycle, Dart, EdgeId, FaceId, PlaneGraph, SurgeryMap, VertexId};

type Built = Result<Configuration, &'static str>;

/// Where a witness is rooted. Rebuilding from the anchor reproduces the
/// whole witness, which is how witnesses are re-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Anchor {
    Vertex(VertexId),
    Dart(Dart),
    Face(FaceId),
    Edge(EdgeId),
    Cycle(Vec<Dart>),
}

/// The first configuration in kind order, with the least anchor among
/// those whose side conditions hold.
pub fn detect(g: &PlaneGraph) -> Option<Configuration> {
    let small = Kind::SmallFaceWithTwoVertex(SmallFaceCase::Four);
    first(g, Kind::Cutvertex, g.cut_vertices().into_iter().map(Anchor::Vertex))
        .or_else(|| first(g, Kind::DegreeLE1, g.vertices().map(Anchor::Vertex)))
        .or_else(|| first(g, Kind::AdjacentTwoVertices, g.darts().map(Anchor::Dart)))
        .or_else(|| first(g, Kind::FaceLE3, face_ids(g).map(Anchor::Face)))
        .or_else(|| {
            let cycles = g.separating_cycles_up_to(5);
            first(g, Kind::SeparatingCycleLE5, cycles.into_iter().map(|c| Anchor::Cycle(c.darts)))
        })
        .or_else(|| first(g, Kind::SixFace, face_darts(g, &[6], 3)))
        .or_else(|| first(g, small, face_darts(g, &[4, 5, 7], usize::MAX)))
        .or_else(|| first(g, Kind::TwoVerticesClose(2), face_darts_any(g)))
        .or_else(|| first(g, Kind::TwoVerticesClose(3), face_darts_any(g)))
        .or_else(|| first(g, Kind::EightFaceTwoTwoVertices, face_darts(g, &[8], 4)))
        .or_else(|| first(g, Kind::AdjacentFourFaces, g.edges().map(Anchor::Edge)))
        .or_else(|| first(g, Kind::FourFiveLowDegree, g.darts().map(Anchor::Dart)))
        .or_else(|| first(g, Kind::FiveFiveLowDegree, g.darts().map(Anchor::Dart)))
        .or_else(|| first(g, Kind::FourFaceAllThrees, face_ids(g).map(Anchor::Face)))
}

/// Every configuration present in `g`, in kind order and then by anchor.
pub fn detect_all(g: &PlaneGraph) -> Vec<Configuration> {
    let mut out = Vec::new();
    let mut push = |kind: Kind, anchors: &mut dyn Iterator<Item = Anchor>| {
        for a in anchors {
            if let Ok(c) = build(g, kind, &a) {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    };
    push(Kind::Cutvertex, &mut g.cut_vertices().into_iter().map(Anchor::Vertex));
    push(Kind::DegreeLE1, &mut g.vertices().map(Anchor::Vertex));
    push(Kind::AdjacentTwoVertices, &mut g.darts().map(Anchor::Dart));
    push(Kind::FaceLE3, &mut face_ids(g).map(Anchor::Face));
    push(Kind::SeparatingCycleLE5, &mut g.separating_cycles_up_to(5).into_iter().map(|c| Anchor::Cycle(c.darts)));
    push(Kind::SixFace, &mut face_darts(g, &[6], 3));
    push(Kind::SmallFaceWithTwoVertex(SmallFaceCase::Four), &mut face_darts(g, &[4, 5, 7], usize::MAX));
    push(Kind::TwoVerticesClose(2), &mut face_darts_any(g));
    push(Kind::TwoVerticesClose(3), &mut face_darts_any(g));
    push(Kind::EightFaceTwoTwoVertices, &mut face_darts(g, &[8], 4));
    push(Kind::AdjacentFourFaces, &mut g.edges().map(Anchor::Edge));
    push(Kind::FourFiveLowDegree, &mut g.darts().map(Anchor::Dart));
    push(Kind::FiveFiveLowDegree, &mut g.darts().map(Anchor::Dart));
    push(Kind::FourFaceAllThrees, &mut face_ids(g).map(Anchor::Face));
    out
}

/// Whether the witness of `c` still describes its configuration in `g`,
/// side conditions included.
pub fn witness_holds(g: &PlaneGraph, c: &Configuration) -> bool {
    check(g, c).is_ok()
}

pub(crate) fn check(g: &PlaneGraph, c: &Configuration) -> Result<(), &'static str> {
    let anchor = anchor_of(c).ok_or("witness lacks its anchor")?;
    let rebuilt = build(g, c.kind, &anchor)?;
    if rebuilt == *c {
        Ok(())
    } else {
        Err("witness does not match the configuration rooted at its anchor")
    }
}

fn first(g: &PlaneGraph, kind: Kind, anchors: impl Iterator<Item = Anchor>) -> Option<Configuration> {
    anchors.into_iter().find_map(|a| build(g, kind, &a).ok())
}

fn face_ids(g: &PlaneGraph) -> impl Iterator<Item = FaceId> + '_ {
    (0..g.num_faces()).map(FaceId)
}

/// For each face whose length is listed (in list order, then by face id),
/// the first `per_face` darts of its walk.
fn face_darts<'a>(g: &'a PlaneGraph, lens: &'a [usize], per_face: usize) -> impl Iterator<Item = Anchor> + 'a {
    lens.iter().flat_map(move |&len| {
        g.faces()
            .iter()
            .filter(move |w| w.len() == len)
            .flat_map(move |w| w.darts.iter().take(per_face).map(|&d| Anchor::Dart(d)))
    })
}

fn face_darts_any(g: &PlaneGraph) -> impl Iterator<Item = Anchor> + '_ {
    g.faces().iter().flat_map(|w| w.darts.iter().map(|&d| Anchor::Dart(d)))
}

fn anchor_of(c: &Configuration) -> Option<Anchor> {
    let w = &c.witness;
    Some(match c.kind {
        Kind::Cutvertex | Kind::DegreeLE1 => Anchor::Vertex(*w.vertices.first()?),
        Kind::FaceLE3 | Kind::FourFaceAllThrees => Anchor::Face(*w.faces.first()?),
        Kind::SeparatingCycleLE5 => Anchor::Cycle(w.darts.clone()),
        Kind::AdjacentFourFaces => Anchor::Edge(*w.edges.first()?),
        _ => Anchor::Dart(*w.darts.first()?),
    })
}

fn in_range(g: &PlaneGraph, a: &Anchor) -> bool {
    match a {
        Anchor::Vertex(v) => v.0 < g.num_vertices(),
        Anchor::Dart(d) => d.0 < g.num_darts(),
        Anchor::Face(f) => f.0 < g.num_faces(),
        Anchor::Edge(e) => e.0 < g.num_edges(),
        Anchor::Cycle(ds) => ds.iter().all(|d| d.0 < g.num_darts()),
    }
}

pub(crate) fn build(g: &PlaneGraph, kind: Kind, anchor: &Anchor) -> Built {
    if !in_range(g, anchor) {
        return Err("witness refers to an unknown element");
    }
    let config = |witness: Witness| Ok(Configuration { kind, witness });
    match (kind, anchor) {
        (Kind::Cutvertex, &Anchor::Vertex(x)) => {
            if !g.cut_vertices().contains(&x) {
                return Err("vertex is not a cut vertex");
            }
            config(Witness { vertices: vec![x], ..Witness::default() })
        }
        (Kind::DegreeLE1, &Anchor::Vertex(v)) => {
            if g.degree(v) > 1 {
                return Err("vertex has degree at least 2");
            }
            let edges = g.rotation(v).iter().map(|&d| g.edge_of(d)).collect();
            config(Witness { vertices: vec![v], edges, ..Witness::default() })
        }
        (Kind::AdjacentTwoVertices, &Anchor::Dart(d)) => adjacent_two(g, d).and_then(config),
        (Kind::FaceLE3, &Anchor::Face(f)) => {
            if g.face_len(f) > 3 {
                return Err("face is longer than 3");
            }
            if g.face_len(f) == 3 && !g.face_is_cycle(f) {
                return Err("3-face is not bounded by a cycle");
            }
            let darts = g.face(f).darts.clone();
            let edges = darts.iter().map(|&d| g.edge_of(d)).collect();
            config(Witness { faces: vec![f], edges, darts, ..Witness::default() })
        }
        (Kind::SeparatingCycleLE5, Anchor::Cycle(darts)) => separating_cycle(g, darts).and_then(config),
        (Kind::SixFace, &Anchor::Dart(d)) => six_face(g, d).and_then(config),
        (Kind::SmallFaceWithTwoVertex(_), &Anchor::Dart(d)) => small_face(g, d),
        (Kind::TwoVerticesClose(dist), &Anchor::Dart(d)) if dist == 2 || dist == 3 => {
            two_close(g, d, dist as usize).and_then(config)
        }
        (Kind::EightFaceTwoTwoVertices, &Anchor::Dart(d)) => eight_face(g, d).and_then(config),
        (Kind::AdjacentFourFaces, &Anchor::Edge(e)) => {
            let [d, t] = g.edge_darts(e);
            let (a, b) = (g.face_of(d), g.face_of(t));
            if a == b || g.face_len(a) != 4 || g.face_len(b) != 4 {
                return Err("edge does not separate two distinct 4-faces");
            }
            config(Witness { edges: vec![e], faces: vec![a, b], ..Witness::default() })
        }
        (Kind::FourFiveLowDegree, &Anchor::Dart(d)) => four_five(g, d).and_then(config),
        (Kind::FiveFiveLowDegree, &Anchor::Dart(d)) => five_five(g, d).and_then(config),
        (Kind::FourFaceAllThrees, &Anchor::Face(f)) => four_all_threes(g, f).and_then(config),
        _ => Err("anchor does not fit the kind"),
    }
}

fn distinct<T: Ord + Copy>(xs: &[T]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

fn far_apart(g: &PlaneGraph, e: EdgeId, f: EdgeId) -> bool {
    matches!(g.facial_distance(e, f), Ok(None) | Ok(Some(3..)))
}

fn edges_of(g: &PlaneGraph, darts: &[Dart]) -> Vec<EdgeId> {
    darts.iter().map(|&d| g.edge_of(d)).collect()
}

/// The other dart at a vertex of degree 2.
fn other_dart(g: &PlaneGraph, d: Dart) -> Dart {
    let rot = g.rotation(g.tail(d));
    if rot[0] == d {
        rot[1]
    } else {
        rot[0]
    }
}

fn adjacent_two(g: &PlaneGraph, d: Dart) -> Result<Witness, &'static str> {
    let (u, v) = (g.tail(d), g.head(d));
    if u == v || g.degree(u) != 2 || g.degree(v) != 2 {
        return Err("dart does not join two 2-vertices");
    }
    let o = other_dart(g, g.twin(d));
    let w = g.head(o);
    Ok(Witness {
        vertices: vec![u, v, w],
        edges: vec![g.edge_of(d), g.edge_of(o)],
        darts: vec![d, o],
        ..Witness::default()
    })
}

fn separating_cycle(g: &PlaneGraph, darts: &[Dart]) -> Result<Witness, &'static str> {
    let k = darts.len();
    if k == 0 || k > 5 {
        return Err("cycle length is not in 1..=5");
    }
    for i in 0..k {
        if g.head(darts[i]) != g.tail(darts[(i + 1) % k]) {
            return Err("darts do not form a closed walk");
        }
    }
    let vertices: Vec<VertexId> = darts.iter().map(|&d| g.tail(d)).collect();
    let edges = edges_of(g, darts);
    if !distinct(&vertices) || !distinct(&edges) {
        return Err("walk is not a cycle");
    }
    let cycle = Cycle { darts: darts.to_vec() };
    if !g.is_separating(&cycle) {
        return Err("cycle is not separating");
    }
    Ok(Witness { vertices, edges, darts: darts.to_vec(), ..Witness::default() })
}

/// Walk of a face that is a cycle of the given length, starting at `d`.
fn cycle_walk(g: &PlaneGraph, d: Dart, len: usize) -> Result<Vec<Dart>, &'static str> {
    let f = g.face_of(d);
    if g.face_len(f) != len {
        return Err("face has the wrong length");
    }
    if !g.face_is_cycle(f) {
        return Err("face boundary is not a cycle");
    }
    Ok(g.walk_from(d))
}

fn six_face(g: &PlaneGraph, d: Dart) -> Result<Witness, &'static str> {
    let walk = cycle_walk(g, d, 6)?;
    if !far_apart(g, g.edge_of(walk[5]), g.edge_of(walk[2])) {
        return Err("identified edges are 2-facial neighbors");
    }
    Ok(Witness { faces: vec![g.face_of(d)], edges: edges_of(g, &walk), darts: walk, ..Witness::default() })
}

fn small_face(g: &PlaneGraph, a0: Dart) -> Built {
    let v = g.tail(a0);
    if g.degree(v) != 2 {
        return Err("vertex is not a 2-vertex");
    }
    let alpha = g.face_of(a0);
    let len = g.face_len(alpha);
    if !matches!(len, 4 | 5 | 7) {
        return Err("face length is not 4, 5 or 7");
    }
    let walk = cycle_walk(g, a0, len)?;
    let o = other_dart(g, a0);
    let beta = g.face_of(o);
    if beta == alpha {
        return Err("both sides of the 2-vertex lie on one face");
    }
    let u = g.tail(walk[len - 1]);
    let w = g.head(walk[0]);
    let mut witness = Witness { vertices: vec![v, u, w], faces: vec![alpha, beta], ..Witness::default() };
    let case = match len {
        4 => SmallFaceCase::Four,
        7 => {
            if !far_apart(g, g.edge_of(walk[5]), g.edge_of(walk[2])) {
                return Err("identified edges are 2-facial neighbors");
            }
            SmallFaceCase::Seven
        }
        _ => {
            let blen = g.face_len(beta);
            if !g.face_is_cycle(beta) {
                return Err("second face is not a cycle");
            }
            let on_alpha: BTreeSet<VertexId> = walk.iter().map(|&d| g.tail(d)).collect();
            let bwalk = g.walk_from(o);
            if blen == 5 {
                let shared = bwalk.iter().filter(|&&d| on_alpha.contains(&g.tail(d))).count();
                if shared != 3 {
                    return Err("the two 5-faces share more than the 2-vertex and its neighbors");
                }
                SmallFaceCase::FiveBesideFive
            } else if blen >= 7 {
                let zdart = bwalk[1];
                let ydart = bwalk[blen - 2];
                let (y1, z1) = (g.tail(ydart), g.head(zdart));
                if y1 == z1 || on_alpha.contains(&y1) || on_alpha.contains(&z1) {
                    return Err("vertices to identify are not distinct from the 5-face");
                }
                witness.vertices.extend([y1, z1]);
                witness.darts.extend(walk.iter().copied());
                witness.darts.extend([ydart, zdart]);
                witness.edges = edges_of(g, &witness.darts);
                return Ok(Configuration {
                    kind: Kind::SmallFaceWithTwoVertex(SmallFaceCase::FiveBesideLong),
                    witness,
                });
            } else {
                return Err("second face has length 4 or 6 or less than 4");
            }
        }
    };
    witness.edges = edges_of(g, &walk);
    witness.darts = walk;
    Ok(Configuration { kind: Kind::SmallFaceWithTwoVertex(case), witness })
}

fn two_close(g: &PlaneGraph, d0: Dart, dist: usize) -> Result<Witness, &'static str> {
    let f = g.face_of(d0);
    let len = g.face_len(f);
    if len < dist + 3 || !g.face_is_cycle(f) {
        return Err("face is too short or not a cycle");
    }
    let darts: Vec<Dart> = g.walk_from(d0)[..dist + 2].to_vec();
    let u = g.head(darts[0]);
    let v = g.head(darts[dist]);
    if g.degree(u) != 2 || g.degree(v) != 2 {
        return Err("ends are not both 2-vertices");
    }
    let x = g.tail(darts[0]);
    let y = g.head(darts[dist + 1]);
    let w = g.head(darts[1]);
    let vertices = if dist == 2 { vec![u, v, w, x, y] } else { vec![u, v, w, g.head(darts[2]), x, y] };
    Ok(Witness { vertices, edges: edges_of(g, &darts), faces: vec![f], darts })
}

fn eight_face(g: &PlaneGraph, d: Dart) -> Result<Witness, &'static str> {
    let walk = cycle_walk(g, d, 8)?;
    let (v1, v5) = (g.tail(walk[0]), g.tail(walk[4]));
    if g.degree(v1) != 2 || g.degree(v5) != 2 {
        return Err("opposite vertices are not both 2-vertices");
    }
    if !far_apart(g, g.edge_of(walk[1]), g.edge_of(walk[5])) {
        return Err("identified edges are 2-facial neighbors");
    }
    Ok(Witness { vertices: vec![v1, v5], edges: edges_of(g, &walk), faces: vec![g.face_of(d)], darts: walk })
}

/// Vertices and edges of the face of `d` (or of its twin, whichever lies on
/// `f`), listed around the face starting at `from` and crossing the edge of
/// `d` first.
fn around_from(g: &PlaneGraph, d: Dart, f: FaceId, from: VertexId) -> (Vec<VertexId>, Vec<EdgeId>) {
    let dd = if g.face_of(d) == f { d } else { g.twin(d) };
    let walk = g.walk_from(dd);
    if g.tail(dd) == from {
        (walk.iter().map(|&x| g.tail(x)).collect(), edges_of(g, &walk))
    } else {
        let mut verts = vec![g.head(dd)];
        let mut edges = vec![g.edge_of(dd)];
        verts.push(g.tail(dd));
        for &x in walk[1..].iter().rev() {
            edges.push(g.edge_of(x));
            verts.push(g.tail(x));
        }
        verts.pop();
        (verts, edges)
    }
}

fn mapped_pair(m: &SurgeryMap, e: EdgeId, f: EdgeId) -> Result<(EdgeId, EdgeId), &'static str> {
    match (m.edge(e), m.edge(f)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err("edge lost by the removal"),
    }
}

fn four_five(g: &PlaneGraph, d: Dart) -> Result<Witness, &'static str> {
    let (u, v) = (g.tail(d), g.head(d));
    let (fa, fb) = (g.face_of(d), g.face_of(g.twin(d)));
    let (alpha, beta) = match (g.face_len(fa), g.face_len(fb)) {
        (4, 5) => (fa, fb),
        (5, 4) => (fb, fa),
        _ => return Err("edge does not join a 4-face and a 5-face"),
    };
    if u == v || g.degree(u) > 3 {
        return Err("first endpoint is not a 3⁻-vertex");
    }
    if !g.face_is_cycle(alpha) || !g.face_is_cycle(beta) {
        return Err("faces are not cycles");
    }
    let (av, ae) = around_from(g, d, alpha, u);
    let (bv, be) = around_from(g, d, beta, u);
    let vertices = vec![u, v, av[2], av[3], bv[2], bv[3], bv[4]];
    if !distinct(&vertices) {
        return Err("the 4-face and the 5-face share more than their common edge");
    }
    let (vv1, u2w) = (ae[1], be[3]);
    if !far_apart(g, vv1, u2w) {
        return Err("identified edges are 2-facial neighbors");
    }
    let (g2, m) = g.delete_edge(ae[0]).map_err(|_| "cannot remove the shared edge")?;
    let (a2, b2) = mapped_pair(&m, vv1, u2w)?;
    if !far_apart(&g2, a2, b2) {
        return Err("identified edges are 2-facial neighbors after removing the shared edge");
    }
    zip_across(g, &g2, &m, (vv1, alpha), (u2w, beta), [(v, bv[3]), (av[2], bv[4])])?
        .map_err(|_| "identified edges do not zip")?;
    let edges = vec![ae[0], ae[1], ae[2], ae[3], be[1], be[2], be[3], be[4]];
    Ok(Witness { vertices, edges, faces: vec![alpha, beta], darts: vec![d] })
}

fn five_five(g: &PlaneGraph, d: Dart) -> Result<Witness, &'static str> {
    let (u, v) = (g.tail(d), g.head(d));
    let (alpha, beta) = (g.face_of(d), g.face_of(g.twin(d)));
    if g.face_len(alpha) != 5 || g.face_len(beta) != 5 || alpha == beta {
        return Err("edge does not join two 5-faces");
    }
    if u == v || g.degree(u) > 3 || g.degree(v) > 3 {
        return Err("an endpoint is a 4⁺-vertex");
    }
    if !g.face_is_cycle(alpha) || !g.face_is_cycle(beta) {
        return Err("faces are not cycles");
    }
    let (av, ae) = around_from(g, d, alpha, u);
    let (bv, be) = around_from(g, d, beta, u);
    let vertices = vec![u, v, av[2], av[3], av[4], bv[2], bv[3], bv[4]];
    if !distinct(&vertices) {
        return Err("the 5-faces share more than their common edge");
    }
    let (u1w1, v2w2) = (ae[3], be[2]);
    if !far_apart(g, u1w1, v2w2) {
        return Err("identified edges are 2-facial neighbors");
    }
    let (g2, m) = g.delete_edge(ae[0]).map_err(|_| "cannot remove the shared edge")?;
    let (a2, b2) = mapped_pair(&m, u1w1, v2w2)?;
    if !far_apart(&g2, a2, b2) {
        return Err("identified edges are 2-facial neighbors after removing the shared edge");
    }
    // u1 → w2, w1 → v2
    zip_across(g, &g2, &m, (u1w1, alpha), (v2w2, beta), [(av[4], bv[3]), (av[3], bv[2])])?
        .map_err(|_| "identified edges do not zip")?;
    let edges = vec![ae[0], ae[1], ae[2], ae[3], ae[4], be[1], be[2], be[3], be[4]];
    Ok(Witness { vertices, edges, faces: vec![alpha, beta], darts: vec![d] })
}

fn four_all_threes(g: &PlaneGraph, f: FaceId) -> Result<Witness, &'static str> {
    if g.face_len(f) != 4 || !g.face_is_cycle(f) {
        return Err("face is not a 4-cycle");
    }
    let vertices = g.face_vertices(f);
    if vertices.iter().any(|&v| g.degree(v) > 3) {
        return Err("face has a 4⁺-vertex");
    }
    let mut edges: Vec<EdgeId> = vertices.iter().flat_map(|&v| g.rotation(v).iter().map(|&d| g.edge_of(d))).collect();
    edges.sort();
    edges.dedup();
    Ok(Witness { vertices, edges, faces: vec![f], ..Witness::default() })
}
