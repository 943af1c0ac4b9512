//! Deletions, identifications and contractions.

use alloc::vec;
use alloc::vec::Vec;

use super::{Dart, Draft, EdgeId, EmbedError, FaceId, PlaneGraph, VertexId};

/// How ids of the input graph relate to ids of a surgery's result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryMap {
    /// Old edge id → new edge id; `None` for removed edges. Identified edges
    /// map to the same new id.
    pub edges: Vec<Option<EdgeId>>,
    /// Old vertex id → new vertex id; `None` for removed vertices.
    pub vertices: Vec<Option<VertexId>>,
}

impl SurgeryMap {
    pub fn edge(&self, e: EdgeId) -> Option<EdgeId> {
        self.edges.get(e.0).copied().flatten()
    }

    pub fn vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertices.get(v.0).copied().flatten()
    }

    /// Composes `self` (G → G') with `next` (G' → G'').
    pub fn then(&self, next: &SurgeryMap) -> SurgeryMap {
        SurgeryMap {
            edges: self.edges.iter().map(|e| e.and_then(|e| next.edge(e))).collect(),
            vertices: self.vertices.iter().map(|v| v.and_then(|v| next.vertex(v))).collect(),
        }
    }
}

impl PlaneGraph {
    pub fn delete_edge(&self, e: EdgeId) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        self.delete_edges(&[e])
    }

    pub fn delete_edges(&self, es: &[EdgeId]) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let mut draft = Draft::new(self);
        for &e in es {
            self.check_edge(e)?;
            draft.remove_edge(e);
        }
        draft.finish()
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        self.delete_vertices(&[v])
    }

    pub fn delete_vertices(&self, vs: &[VertexId]) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let mut draft = Draft::new(self);
        for &v in vs {
            self.check_vertex(v)?;
            draft.remove_vertex(v);
        }
        draft.finish()
    }

    /// Subgraph on the given vertices keeping only the marked edges (an edge
    /// survives only if both its endpoints do).
    pub fn subgraph(&self, keep_vertex: &[bool], keep_edge: &[bool]) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let mut draft = Draft::new(self);
        for e in self.edges() {
            if !keep_edge[e.0] {
                draft.remove_edge(e);
            }
        }
        for v in self.vertices() {
            if !keep_vertex[v.0] {
                draft.remove_vertex(v);
            }
        }
        draft.finish()
    }

    /// Places a new 2-vertex on edge `e`. The half at the first endpoint
    /// keeps the id of `e`; the other half becomes the last edge.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        self.check_edge(e)?;
        let mut draft = Draft::new(self);
        draft.subdivide(e);
        draft.finish()
    }

    /// One graph per connected component, in order of least vertex.
    pub fn split_components(&self) -> Vec<(PlaneGraph, SurgeryMap)> {
        let comps = self.components();
        if comps.len() == 1 {
            let map =
                SurgeryMap { edges: self.edges().map(Some).collect(), vertices: self.vertices().map(Some).collect() };
            return vec![(self.clone(), map)];
        }
        comps
            .iter()
            .map(|comp| {
                let mut keep = vec![false; self.num_vertices()];
                for v in comp {
                    keep[v.0] = true;
                }
                let keep_edge: Vec<bool> = self.edges().map(|e| keep[self.endpoints(e).0 .0]).collect();
                self.subgraph(&keep, &keep_edge).expect("components of a plane graph are plane")
            })
            .collect()
    }

    /// Merges the tails of two darts on the same face, splitting that face at
    /// the corners just before `x` and `y`.
    pub fn identify_at_corners(&self, x: Dart, y: Dart) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let (u, v) = (self.tail(x), self.tail(y));
        if u == v {
            return Err(EmbedError::SameVertex(u));
        }
        if self.face_of(x) != self.face_of(y) {
            return Err(EmbedError::VerticesNotCofacial(u, v));
        }
        let mut draft = Draft::new(self);
        draft.merge_at(x, y);
        draft.finish()
    }

    /// Identifies two non-adjacent vertices that share a face. The rotations
    /// are spliced at the first corners of `u` and `v` on the first such
    /// face.
    pub fn identify_vertices(&self, u: VertexId, v: VertexId) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(EmbedError::SameVertex(u));
        }
        if self.are_adjacent(u, v) {
            return Err(EmbedError::AdjacentVertices(u, v));
        }
        for walk in &self.faces {
            let x = walk.darts.iter().find(|&&d| self.tail(d) == u);
            let y = walk.darts.iter().find(|&&d| self.tail(d) == v);
            if let (Some(&x), Some(&y)) = (x, y) {
                return self.identify_at_corners(x, y);
            }
        }
        Err(EmbedError::VerticesNotCofacial(u, v))
    }

    /// Identifies the edges of darts `a` and `b`, which lie on one face, by
    /// zipping that face shut between them: the head of `a` is merged with
    /// the tail of `b` and the tail of `a` with the head of `b`. The edge of
    /// `b` disappears and maps onto the edge of `a`.
    pub fn identify_along(&self, a: Dart, b: Dart) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        let (e, f) = (self.edge_of(a), self.edge_of(b));
        let ends = [self.tail(a), self.head(a), self.tail(b), self.head(b)];
        for i in 0..4 {
            for j in i + 1..4 {
                if ends[i] == ends[j] {
                    return Err(EmbedError::SharedEndpoint(e, f));
                }
            }
        }
        if self.face_of(a) != self.face_of(b) {
            return Err(EmbedError::EdgesNotCofacial(e, f));
        }
        let mut draft = Draft::new(self);
        draft.merge_at(self.phi(a), b);
        // corner at the head of b after the first splice
        let tb = draft.twin(b);
        let rot = draft.rotation_of_slot(draft.slot_of_dart(tb));
        let i = rot.iter().position(|&d| d == tb.0).expect("twin in rotation");
        let after = Dart(rot[(i + 1) % rot.len()]);
        draft.merge_at(after, a);
        draft.remove_edge(f);
        let (g, mut map) = draft.finish()?;
        map.edges[f.0] = map.edges[e.0];
        Ok((g, map))
    }

    /// Identifies edges `e` and `f` so that each listed endpoint of `e` is
    /// merged with the paired endpoint of `f`. The two edges must lie on a
    /// common face with the mapping matching the zip across that face; the
    /// result has two fewer vertices and one fewer edge.
    pub fn identify_edges(
        &self,
        e: EdgeId,
        f: EdgeId,
        orientation: [(VertexId, VertexId); 2],
    ) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        let (e0, e1) = self.endpoints(e);
        let (f0, f1) = self.endpoints(f);
        let ends = [e0, e1, f0, f1];
        for i in 0..4 {
            for j in i + 1..4 {
                if ends[i] == ends[j] {
                    return Err(EmbedError::SharedEndpoint(e, f));
                }
            }
        }
        let mut cofacial = false;
        for a in self.edge_darts(e) {
            for b in self.edge_darts(f) {
                if self.face_of(a) != self.face_of(b) {
                    continue;
                }
                cofacial = true;
                let zip = [(self.head(a), self.tail(b)), (self.tail(a), self.head(b))];
                let matches = orientation.iter().all(|p| zip.contains(p)) && orientation[0].0 != orientation[1].0;
                if matches {
                    return self.identify_along(a, b);
                }
            }
        }
        if cofacial {
            Err(EmbedError::OrientationMismatch(e, f))
        } else {
            Err(EmbedError::EdgesNotCofacial(e, f))
        }
    }

    /// Removes the three boundary edges of a face bounded by a 3-cycle and
    /// merges its vertices.
    pub fn contract_face(&self, face: FaceId) -> Result<(PlaneGraph, SurgeryMap), EmbedError> {
        if face.0 >= self.num_faces() {
            return Err(EmbedError::UnknownFace(face));
        }
        let len = self.face_len(face);
        if len != 3 {
            return Err(EmbedError::FaceLength { face, len, expected: 3 });
        }
        if !self.face_is_cycle(face) {
            return Err(EmbedError::DegenerateFace(face));
        }
        let mut draft = Draft::new(self);
        draft.collapse_face(&self.face(face).darts);
        draft.finish()
    }
}
