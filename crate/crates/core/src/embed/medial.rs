//! Medial and dual graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{Dart, EdgeId, EmbedError, PlaneGraph, RotationSpec, VertexId};

impl PlaneGraph {
    /// The medial graph: one vertex per edge of `self` (vertex `i` is edge
    /// `i`), and one edge per facial corner `(d, phi(d))` joining the edges
    /// of `d` and `phi(d)`. Medial edge `i` is the corner that follows dart
    /// `i`. A bridge meets itself at the corners around its pendant ends, so
    /// it receives loops.
    pub fn medial_graph(&self) -> Result<PlaneGraph, EmbedError> {
        if self.num_edges() == 0 {
            return Err(EmbedError::NoEdges);
        }
        let n = self.num_darts();
        // medial dart 2i sits at edge_of(i) ("after i"), 2i+1 at edge_of(phi(i))
        let after = |d: Dart| Dart(2 * d.0);
        let before = |d: Dart| Dart(2 * self.phi_inv(d).0 + 1);
        let edges: Vec<[Dart; 2]> = (0..n).map(|i| [Dart(2 * i), Dart(2 * i + 1)]).collect();
        let mut rotations = vec![Vec::with_capacity(4); self.num_edges()];
        for e in self.edges() {
            let [d, t] = self.edge_darts(e);
            // around the midpoint: head side of d, then tail side
            rotations[e.0] = vec![after(d), before(t), after(t), before(d)];
        }
        PlaneGraph::from_rotation(RotationSpec { edges, rotations })
    }

    /// The dual graph: vertex `i` is face `i`, and edge `i` crosses edge
    /// `i`. Dart `d` of the dual leaves the face of dart `d`, and the
    /// rotation at a face is its boundary walk, so the faces of the dual
    /// correspond to the vertices of `self` (isolated vertices excepted).
    pub fn dual(&self) -> Result<PlaneGraph, EmbedError> {
        if self.num_edges() == 0 {
            return Err(EmbedError::NoEdges);
        }
        let edges = self.edges().map(|e| self.edge_darts(e)).collect();
        let rotations = self.faces().iter().map(|w| w.darts.clone()).collect();
        PlaneGraph::from_rotation(RotationSpec { edges, rotations })
    }

    /// The medial vertex standing for edge `e`.
    pub fn medial_vertex(e: EdgeId) -> VertexId {
        VertexId(e.0)
    }
}
