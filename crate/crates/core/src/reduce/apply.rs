//! The surgery of every configuration.

use alloc::vec;
use alloc::vec::Vec;

use super::detect::{self, Anchor};
use super::{Configuration, Kind, ReduceError, ReducedPart, ReductionStep, SmallFaceCase};
use crate::embed::{Dart, EdgeId, FaceId, PlaneGraph, SurgeryMap, VertexId};

/// Performs the reduction of `config` on `g`. The witness is re-checked
/// first; a failing side condition is reported, never worked around.
pub fn apply(g: &PlaneGraph, config: &Configuration) -> Result<ReductionStep, ReduceError> {
    let kind = config.kind;
    let side = |reason: &'static str| ReduceError::SideCondition { kind, reason };
    detect::check(g, config).map_err(side)?;
    let w = &config.witness;
    let darts = &w.darts;
    let e = |d: Dart| g.edge_of(d);

    let (parts, to_color, min_lists): (Vec<ReducedPart>, Vec<EdgeId>, Vec<usize>) = match kind {
        Kind::Cutvertex => (cutvertex_parts(g, w.vertices[0]).map_err(side)?, vec![], vec![]),
        Kind::DegreeLE1 => {
            let (g2, map) = g.delete_vertex(w.vertices[0])?;
            (one(g2, map), w.edges.clone(), vec![0; w.edges.len()])
        }
        Kind::AdjacentTwoVertices => {
            let (g2, map) = g.delete_vertex(w.vertices[1])?;
            (one(g2, map), w.edges.clone(), vec![2, 2])
        }
        Kind::FaceLE3 => match darts.len() {
            1 => {
                let (g2, map) = g.delete_edge(w.edges[0])?;
                (one(g2, map), vec![w.edges[0]], vec![3])
            }
            3 => {
                let (g2, map) = g.contract_face(w.faces[0])?;
                (one(g2, map), w.edges.clone(), vec![3, 3, 3])
            }
            _ => {
                let top = *w.edges.iter().max().expect("face has an edge");
                let (g2, map) = g.delete_edge(top)?;
                let need = if darts.len() == 2 && w.edges[0] != w.edges[1] { 2 } else { 0 };
                (one(g2, map), vec![top], vec![need])
            }
        },
        Kind::SeparatingCycleLE5 => (cycle_parts(g, w).map_err(side)?, vec![], vec![]),
        Kind::SixFace => {
            let (g2, map) = g.identify_along(darts[5], darts[2])?;
            (one(g2, map), vec![e(darts[0]), e(darts[1]), e(darts[3]), e(darts[4])], vec![2; 4])
        }
        Kind::SmallFaceWithTwoVertex(case) => {
            let v = w.vertices[0];
            let len = case.face_length();
            let (uv, vw) = (e(darts[len - 1]), e(darts[0]));
            match case {
                SmallFaceCase::Four => {
                    let (g2, map) = g.delete_vertex(v)?;
                    (one(g2, map), vec![uv, vw], vec![2, 2])
                }
                SmallFaceCase::FiveBesideFive => {
                    let (g2, map) = g.delete_vertex(v)?;
                    let forced = merged_six_face(g, &g2, &map, darts[1]);
                    (vec![ReducedPart { graph: g2, map, forced }], vec![uv, vw], vec![2, 2])
                }
                SmallFaceCase::FiveBesideLong => {
                    let (ydart, zdart) = (darts[5], darts[6]);
                    let (g2, map) = g.delete_vertex(v)?;
                    let x = map_dart(g, &g2, &map, ydart).ok_or(side("corner dart lost"))?;
                    let y = map_dart(g, &g2, &map, g.phi(zdart)).ok_or(side("corner dart lost"))?;
                    let (g3, m2) = g2.identify_at_corners(x, y)?;
                    (one(g3, map.then(&m2)), vec![uv, vw, e(ydart), e(zdart)], vec![1; 4])
                }
                SmallFaceCase::Seven => {
                    let (g2, map) = g.identify_along(darts[5], darts[2])?;
                    let to_color = vec![uv, vw, e(darts[1]), e(darts[3]), e(darts[4])];
                    (one(g2, map), to_color, vec![3, 3, 2, 2, 2])
                }
            }
        }
        Kind::TwoVerticesClose(dist) => {
            let (g2, map) = g.delete_vertices(&w.vertices[..2])?;
            if dist == 2 {
                (one(g2, map), w.edges.clone(), vec![2, 3, 3, 2])
            } else {
                let to_color = vec![w.edges[0], w.edges[1], w.edges[3], w.edges[4]];
                (one(g2, map), to_color, vec![1, 2, 2, 1])
            }
        }
        Kind::EightFaceTwoTwoVertices => {
            let (g2, map) = g.identify_along(darts[1], darts[5])?;
            let to_color = [0, 2, 3, 4, 6, 7].iter().map(|&i| e(darts[i])).collect();
            (one(g2, map), to_color, vec![3, 2, 3, 3, 2, 3])
        }
        Kind::AdjacentFourFaces => {
            let (g2, map) = g.delete_edge(w.edges[0])?;
            (one(g2, map), w.edges.clone(), vec![1])
        }
        Kind::FourFiveLowDegree => {
            // vertices u, v, v1, u1, v2, w, u2; edges uv, vv1, v1u1, u1u, vv2, v2w, wu2, u2u
            let (vs, es) = (&w.vertices, &w.edges);
            let (g2, m1) = g.delete_edge(es[0])?;
            let (g3, m2) =
                zip_across(g, &g2, &m1, (es[1], w.faces[0]), (es[6], w.faces[1]), [(vs[1], vs[5]), (vs[2], vs[6])])
                    .map_err(side)??;
            let to_color = vec![es[3], es[2], es[4], es[5], es[7], es[0]];
            (one(g3, m1.then(&m2)), to_color, vec![3, 2, 2, 2, 3, 6])
        }
        Kind::FiveFiveLowDegree => {
            // vertices u, v, v1, w1, u1, v2, w2, u2;
            // edges uv, vv1, v1w1, w1u1, u1u, vv2, v2w2, w2u2, u2u
            let (vs, es) = (&w.vertices, &w.edges);
            let (g2, m1) = g.delete_edge(es[0])?;
            let (g3, m2) =
                zip_across(g, &g2, &m1, (es[3], w.faces[0]), (es[6], w.faces[1]), [(vs[4], vs[6]), (vs[3], vs[5])])
                    .map_err(side)??;
            let to_color = vec![es[4], es[2], es[1], es[5], es[7], es[8], es[0]];
            (one(g3, m1.then(&m2)), to_color, vec![3, 2, 3, 3, 2, 3, 6])
        }
        Kind::FourFaceAllThrees => {
            let (g2, map) = g.delete_vertices(&w.vertices)?;
            let face = g.face_edges(w.faces[0]);
            let min_lists = w.edges.iter().map(|x| if face.contains(x) { 5 } else { 3 }).collect();
            (one(g2, map), w.edges.clone(), min_lists)
        }
    };
    for p in &parts {
        if p.graph.num_vertices() + p.graph.num_edges() >= g.num_vertices() + g.num_edges() {
            return Err(side("reduced graph is not smaller"));
        }
    }
    Ok(ReductionStep { config: config.clone(), parts, to_color, min_lists })
}

fn one(graph: PlaneGraph, map: SurgeryMap) -> Vec<ReducedPart> {
    vec![ReducedPart { graph, map, forced: None }]
}

/// The dart of `g2` that `d` of `g` became: same edge, same tail.
pub(crate) fn map_dart(g: &PlaneGraph, g2: &PlaneGraph, map: &SurgeryMap, d: Dart) -> Option<Dart> {
    let e2 = map.edge(g.edge_of(d))?;
    let t2 = map.vertex(g.tail(d))?;
    g2.edge_darts(e2).into_iter().find(|&x| g2.tail(x) == t2)
}

type Surgery = Result<(PlaneGraph, SurgeryMap), crate::embed::EmbedError>;

/// After a removal `m: g → g2`, zips edge `e.0` of face `e.1` onto edge
/// `f.0` of face `f.1` across the face of `g2` containing both, merging the
/// vertex pairs given (in `g` ids).
pub(crate) fn zip_across(
    g: &PlaneGraph,
    g2: &PlaneGraph,
    m: &SurgeryMap,
    e: (EdgeId, FaceId),
    f: (EdgeId, FaceId),
    pairs: [(VertexId, VertexId); 2],
) -> Result<Surgery, &'static str> {
    let on = |(x, face): (EdgeId, FaceId)| {
        g.edge_darts(x).into_iter().find(|&d| g.face_of(d) == face).ok_or("edge is not on its face")
    };
    let (a, b) = (on(e)?, on(f)?);
    let zip = [(g.head(a), g.tail(b)), (g.tail(a), g.head(b))];
    if !pairs.iter().all(|p| zip.contains(p)) {
        return Err("identified vertices do not match the zip");
    }
    let lost = "element lost by the removal";
    let a2 = map_dart(g, g2, m, a).ok_or(lost)?;
    let b2 = map_dart(g, g2, m, b).ok_or(lost)?;
    Ok(g2.identify_along(a2, b2))
}

/// The SixFace reduction of the 6-face formed in `g2` by deleting a
/// 2-vertex between two 5-faces, if one of its three edge pairs qualifies.
fn merged_six_face(g: &PlaneGraph, g2: &PlaneGraph, map: &SurgeryMap, on_face: Dart) -> Option<Configuration> {
    let start = map_dart(g, g2, map, on_face)?;
    let walk = g2.walk_from(start);
    if walk.len() != 6 {
        return None;
    }
    walk.iter().take(3).find_map(|&d| detect::build(g2, Kind::SixFace, &Anchor::Dart(d)).ok())
}

/// Components of `g - x`, in order of least vertex, as vertex masks.
/// The edges of `g` grouped by the pieces `x` separates: each component of
/// `g - x` with its edges to `x`, and each loop at `x` alone.
fn classes_at(g: &PlaneGraph, x: VertexId) -> Vec<Vec<bool>> {
    let n = g.num_vertices();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in g.vertices() {
        if s == x || comp[s.0] != usize::MAX {
            continue;
        }
        comp[s.0] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &d in g.rotation(v) {
                let t = g.head(d);
                if t != x && comp[t.0] == usize::MAX {
                    comp[t.0] = count;
                    stack.push(t);
                }
            }
        }
        count += 1;
    }
    let mut out: Vec<Vec<bool>> = vec![vec![false; g.num_edges()]; count];
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        if a == x && b == x {
            let mut mask = vec![false; g.num_edges()];
            mask[e.0] = true;
            out.push(mask);
        } else {
            let v = if a == x { b } else { a };
            out[comp[v.0]][e.0] = true;
        }
    }
    out.retain(|m| m.iter().any(|&b| b));
    out
}

/// Whether the darts at `x` on edges of `class` form one interval of its
/// rotation.
fn contiguous_at(g: &PlaneGraph, x: VertexId, class: &[bool]) -> bool {
    let marks: Vec<bool> = g.rotation(x).iter().map(|&d| class[g.edge_of(d).0]).collect();
    let changes = (0..marks.len()).filter(|&i| marks[i] != marks[(i + 1) % marks.len()]).count();
    changes <= 2
}

fn cutvertex_parts(g: &PlaneGraph, x: VertexId) -> Result<Vec<ReducedPart>, &'static str> {
    let classes = classes_at(g, x);
    if classes.len() < 2 {
        return Err("vertex separates nothing");
    }
    let in1 = classes.iter().find(|m| contiguous_at(g, x, m)).ok_or("no piece at the cut vertex is an interval")?;
    let in2: Vec<bool> = in1.iter().map(|b| !b).collect();
    let touched = |edges: &[bool]| {
        let mut keep = vec![false; g.num_vertices()];
        for e in g.edges().filter(|e| edges[e.0]) {
            let (a, b) = g.endpoints(e);
            keep[a.0] = true;
            keep[b.0] = true;
        }
        keep
    };
    let (h1, m1) = g.subgraph(&touched(in1), in1).map_err(|_| "first part is not plane")?;
    let (h2, m2) = g.subgraph(&touched(&in2), &in2).map_err(|_| "second part is not plane")?;
    Ok(vec![ReducedPart { graph: h1, map: m1, forced: None }, ReducedPart { graph: h2, map: m2, forced: None }])
}

fn cycle_parts(g: &PlaneGraph, w: &super::Witness) -> Result<Vec<ReducedPart>, &'static str> {
    let cycle = crate::embed::Cycle { darts: w.darts.clone() };
    let sides = g.cycle_sides(&cycle);
    let covered = w.edges.len() + sides.edges[0].len() + sides.edges[1].len();
    if covered != g.num_edges() {
        return Err("cycle sides do not cover every edge");
    }
    let mut parts = Vec::with_capacity(2);
    for s in 0..2 {
        let mut keep_v = vec![false; g.num_vertices()];
        let mut keep_e = vec![false; g.num_edges()];
        for &v in w.vertices.iter().chain(&sides.vertices[s]) {
            keep_v[v.0] = true;
        }
        for &e in w.edges.iter().chain(&sides.edges[s]) {
            keep_e[e.0] = true;
        }
        let (graph, map) = g.subgraph(&keep_v, &keep_e).map_err(|_| "side is not plane")?;
        parts.push(ReducedPart { graph, map, forced: None });
    }
    Ok(parts)
}
