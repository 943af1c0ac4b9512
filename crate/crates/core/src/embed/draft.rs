//! Mutable working copy of a rotation system used to implement surgeries.
//!
//! Darts keep their original numbering while a draft is edited; new edges
//! and vertices are appended. [`Draft::finish`] compacts the survivors into a
//! fresh, validated [`PlaneGraph`].

use alloc::vec;
use alloc::vec::Vec;

use super::{Dart, EdgeId, EmbedError, PlaneGraph, RotationSpec, SurgeryMap, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct Draft {
    twin: Vec<usize>,
    slot_of: Vec<usize>,
    edge_of: Vec<usize>,
    edge_darts: Vec<[usize; 2]>,
    edge_alive: Vec<bool>,
    rot: Vec<Vec<usize>>,
    slot_alive: Vec<bool>,
    vertex_slot: Vec<usize>,
    old_edges: usize,
}

impl Draft {
    pub(crate) fn new(g: &PlaneGraph) -> Draft {
        Draft {
            twin: g.twin.iter().map(|d| d.0).collect(),
            slot_of: g.vertex_of.iter().map(|v| v.0).collect(),
            edge_of: g.edge_of.iter().map(|e| e.0).collect(),
            edge_darts: g.edge_darts.iter().map(|[a, b]| [a.0, b.0]).collect(),
            edge_alive: vec![true; g.num_edges()],
            rot: g.rotations.iter().map(|r| r.iter().map(|d| d.0).collect()).collect(),
            slot_alive: vec![true; g.num_vertices()],
            vertex_slot: (0..g.num_vertices()).collect(),
            old_edges: g.num_edges(),
        }
    }

    pub(crate) fn slot_of_dart(&self, d: Dart) -> usize {
        self.slot_of[d.0]
    }

    pub(crate) fn twin(&self, d: Dart) -> Dart {
        Dart(self.twin[d.0])
    }

    pub(crate) fn rotation_of_slot(&self, s: usize) -> &[usize] {
        &self.rot[s]
    }

    fn detach(&mut self, d: usize) {
        let s = self.slot_of[d];
        let r = &mut self.rot[s];
        let i = r.iter().position(|&x| x == d).expect("dart in its rotation");
        r.remove(i);
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) {
        if !self.edge_alive[e.0] {
            return;
        }
        self.edge_alive[e.0] = false;
        let [a, b] = self.edge_darts[e.0];
        self.detach(a);
        self.detach(b);
    }

    /// Removes every edge at the vertex and the vertex itself.
    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        let s = self.vertex_slot[v.0];
        while let Some(&d) = self.rot[s].first() {
            let e = self.edge_of[d];
            self.remove_edge(EdgeId(e));
        }
        self.slot_alive[s] = false;
    }

    /// Merges the two vertices leaving along `out_a` and `out_b`. The merged
    /// rotation runs from `out_a` through the rest of the first vertex, then
    /// from `out_b` through the rest of the second. When both darts lie on the
    /// same face this splits that face at the two corners preceding them.
    pub(crate) fn merge_at(&mut self, out_a: Dart, out_b: Dart) {
        let sa = self.slot_of[out_a.0];
        let sb = self.slot_of[out_b.0];
        assert_ne!(sa, sb, "merge_at needs two distinct vertices");
        let ra = rotate_to(&self.rot[sa], out_a.0);
        let rb = rotate_to(&self.rot[sb], out_b.0);
        let mut merged = ra;
        merged.extend(rb);
        for &d in &merged {
            self.slot_of[d] = sa;
        }
        self.rot[sa] = merged;
        self.rot[sb].clear();
        self.slot_alive[sb] = false;
        for s in self.vertex_slot.iter_mut() {
            if *s == sb {
                *s = sa;
            }
        }
    }

    /// Shrinks the face walked by `walk`, a cycle, to a single vertex. Every
    /// boundary edge disappears; the wedges met at its corners are joined
    /// against the walk.
    pub(crate) fn collapse_face(&mut self, walk: &[Dart]) {
        let n = walk.len();
        let boundary: Vec<usize> = walk.iter().map(|d| self.edge_of[d.0]).collect();
        let ends: Vec<usize> = walk.iter().map(|d| self.twin[d.0]).collect();
        let mut merged = Vec::new();
        for i in (0..n).rev() {
            let start = walk[(i + 1) % n].0;
            for d in rotate_to(&self.rot[self.slot_of[start]], start) {
                if !boundary.contains(&self.edge_of[d]) {
                    merged.push(d);
                }
                if ends.contains(&d) {
                    break;
                }
            }
        }
        let target = self.slot_of[walk[0].0];
        let slots: Vec<usize> = walk.iter().map(|d| self.slot_of[d.0]).collect();
        for &e in &boundary {
            self.edge_alive[e] = false;
        }
        for &s in &slots {
            self.rot[s].clear();
            if s != target {
                self.slot_alive[s] = false;
            }
        }
        for &d in &merged {
            self.slot_of[d] = target;
        }
        self.rot[target] = merged;
        for s in self.vertex_slot.iter_mut() {
            if slots.contains(s) {
                *s = target;
            }
        }
    }

    /// Adds an isolated vertex and returns its slot.
    pub(crate) fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.slot_alive.push(true);
        self.rot.len() - 1
    }

    /// Adds an edge between two corners. A corner is given by a slot and the
    /// dart that leaves the slot right after the corner (`None` for a vertex
    /// without darts). Returns the new edge id and its dart at `a`.
    pub(crate) fn add_edge(&mut self, a: (usize, Option<Dart>), b: (usize, Option<Dart>)) -> (EdgeId, Dart) {
        let da = self.twin.len();
        let db = da + 1;
        let e = self.edge_darts.len();
        self.twin.push(db);
        self.twin.push(da);
        self.edge_of.push(e);
        self.edge_of.push(e);
        self.slot_of.push(a.0);
        self.slot_of.push(b.0);
        self.edge_darts.push([da, db]);
        self.edge_alive.push(true);
        // insert b first so that a loop with identical corners nests correctly
        insert_before(&mut self.rot[b.0], db, b.1.map(|d| d.0));
        insert_before(&mut self.rot[a.0], da, a.1.map(|d| d.0));
        (EdgeId(e), Dart(da))
    }

    /// Splits edge `e` with a new vertex; returns the new slot and the edge
    /// covering the second half. The first half keeps id `e`.
    pub(crate) fn subdivide(&mut self, e: EdgeId) -> (usize, EdgeId) {
        let [_, b] = self.edge_darts[e.0];
        let s = self.add_vertex();
        let sb = self.slot_of[b];
        // dart b is re-homed at the new vertex; a fresh edge joins it to sb
        let pos = self.rot[sb].iter().position(|&x| x == b).expect("dart in rotation");
        let da = self.twin.len();
        let db = da + 1;
        let ne = self.edge_darts.len();
        self.twin.push(db);
        self.twin.push(da);
        self.edge_of.push(ne);
        self.edge_of.push(ne);
        self.slot_of.push(s);
        self.slot_of.push(sb);
        self.edge_darts.push([da, db]);
        self.edge_alive.push(true);
        self.rot[sb][pos] = db;
        self.slot_of[b] = s;
        self.rot[s] = vec![b, da];
        (s, EdgeId(ne))
    }

    /// Compacts the draft into a validated graph.
    pub(crate) fn finish(self) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let mut new_edge = vec![None; self.edge_darts.len()];
        let mut edges = Vec::new();
        let mut new_dart = vec![usize::MAX; self.twin.len()];
        for (e, &[a, b]) in self.edge_darts.iter().enumerate() {
            if !self.edge_alive[e] {
                continue;
            }
            let id = edges.len();
            new_edge[e] = Some(EdgeId(id));
            new_dart[a] = 2 * id;
            new_dart[b] = 2 * id + 1;
            edges.push([Dart(2 * id), Dart(2 * id + 1)]);
        }

        let mut new_slot = vec![None; self.rot.len()];
        let mut rotations: Vec<Vec<Dart>> = Vec::new();
        let old_vertex_slots = self.vertex_slot.iter().copied();
        let fresh_slots = self.vertex_slot.len()..self.rot.len();
        for s in old_vertex_slots.chain(fresh_slots) {
            if !self.slot_alive[s] || new_slot[s].is_some() {
                continue;
            }
            new_slot[s] = Some(VertexId(rotations.len()));
            let mut r: Vec<Dart> = self.rot[s].iter().map(|&d| Dart(new_dart[d])).collect();
            if let Some(min) = r.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
                r.rotate_left(min);
            }
            rotations.push(r);
        }
        let vertices = self.vertex_slot.iter().map(|&s| new_slot[s]).collect();
        let g = PlaneGraph::from_rotation(RotationSpec { edges, rotations })?;
        let map = SurgeryMap { edges: new_edge[..self.old_edges].to_vec(), vertices };
        Ok((g, map))
    }
}

fn rotate_to(r: &[usize], d: usize) -> Vec<usize> {
    let i = r.iter().position(|&x| x == d).expect("dart in rotation");
    r[i..].iter().chain(r[..i].iter()).copied().collect()
}

fn insert_before(r: &mut Vec<usize>, d: usize, before: Option<usize>) {
    match before.and_then(|b| r.iter().position(|&x| x == b)) {
        Some(i) => r.insert(i, d),
        None => r.push(d),
    }
}
