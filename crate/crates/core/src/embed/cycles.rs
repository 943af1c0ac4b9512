//! Short cycles and the two sides of a cycle in the embedding.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{Dart, EdgeId, PlaneGraph, VertexId};

/// A cycle through distinct vertices, stored as darts `c_i : v_i → v_{i+1}`.
/// Loops are cycles of length 1 and a pair of parallel edges is a cycle of
/// length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub darts: Vec<Dart>,
}

/// Vertices and edges strictly on either side of a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleSides {
    pub vertices: [Vec<VertexId>; 2],
    pub edges: [Vec<EdgeId>; 2],
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self, g: &PlaneGraph) -> Vec<VertexId> {
        self.darts.iter().map(|&d| g.tail(d)).collect()
    }

    pub fn edges(&self, g: &PlaneGraph) -> Vec<EdgeId> {
        self.darts.iter().map(|&d| g.edge_of(d)).collect()
    }
}

impl PlaneGraph {
    /// Splits everything off the cycle into its two sides.
    pub fn cycle_sides(&self, cycle: &Cycle) -> CycleSides {
        let k = cycle.darts.len();
        let on_cycle_vertex: BTreeSet<VertexId> = cycle.vertices(self).into_iter().collect();
        let on_cycle_edge: BTreeSet<EdgeId> = cycle.edges(self).into_iter().collect();
        // side of every non-cycle dart leaving a cycle vertex
        let mut dart_side = vec![None; self.num_darts()];
        for i in 0..k {
            let incoming = self.twin(cycle.darts[i]);
            let outgoing = cycle.darts[(i + 1) % k];
            let mut side = 0;
            let mut d = self.sigma(incoming);
            // walk once around the vertex starting after the incoming dart
            for _ in 0..self.degree(self.tail(incoming)) {
                if d == outgoing {
                    side = 1;
                } else if d == incoming {
                    side = 0;
                } else if !on_cycle_edge.contains(&self.edge_of(d)) {
                    dart_side[d.0] = Some(side);
                }
                d = self.sigma(d);
            }
        }

        let mut vertex_side = vec![None; self.num_vertices()];
        for s in 0..2 {
            let mut queue = VecDeque::new();
            for d in self.darts() {
                if dart_side[d.0] == Some(s) {
                    let w = self.head(d);
                    if !on_cycle_vertex.contains(&w) && vertex_side[w.0].is_none() {
                        vertex_side[w.0] = Some(s);
                        queue.push_back(w);
                    }
                }
            }
            while let Some(v) = queue.pop_front() {
                for &d in self.rotation(v) {
                    let w = self.head(d);
                    if !on_cycle_vertex.contains(&w) && vertex_side[w.0].is_none() {
                        vertex_side[w.0] = Some(s);
                        queue.push_back(w);
                    }
                }
            }
        }

        let mut sides = CycleSides::default();
        for v in self.vertices() {
            if let Some(s) = vertex_side[v.0] {
                sides.vertices[s].push(v);
            }
        }
        for e in self.edges() {
            if on_cycle_edge.contains(&e) {
                continue;
            }
            let (a, b) = self.endpoints(e);
            let side = vertex_side[a.0]
                .or(vertex_side[b.0])
                .or_else(|| self.edge_darts(e).iter().find_map(|d| dart_side[d.0]));
            if let Some(s) = side {
                sides.edges[s].push(e);
            }
        }
        sides
    }

    /// Whether both sides of the cycle contain a vertex.
    pub fn is_separating(&self, cycle: &Cycle) -> bool {
        let sides = self.cycle_sides(cycle);
        !sides.vertices[0].is_empty() && !sides.vertices[1].is_empty()
    }

    /// All cycles of length at most `max_len`, each once, shortest first and
    /// then by least dart.
    pub fn cycles_up_to(&self, max_len: usize) -> Vec<Cycle> {
        let mut seen: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            let dist = self.bfs_distances(s);
            let mut path: Vec<Dart> = Vec::new();
            let mut on_path = vec![false; self.num_vertices()];
            on_path[s.0] = true;
            self.extend_cycles(s, s, max_len, &dist, &mut path, &mut on_path, &mut seen, &mut out);
        }
        out.sort_by_key(|c| (c.len(), c.darts.iter().min().copied()));
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycles(
        &self,
        start: VertexId,
        at: VertexId,
        max_len: usize,
        dist: &[usize],
        path: &mut Vec<Dart>,
        on_path: &mut [bool],
        seen: &mut BTreeSet<Vec<EdgeId>>,
        out: &mut Vec<Cycle>,
    ) {
        for &d in self.rotation(at) {
            let w = self.head(d);
            let e = self.edge_of(d);
            if path.iter().any(|&p| self.edge_of(p) == e) {
                continue;
            }
            if w == start {
                path.push(d);
                let mut key: Vec<EdgeId> = path.iter().map(|&p| self.edge_of(p)).collect();
                key.sort();
                if seen.insert(key) {
                    out.push(Cycle { darts: path.clone() });
                }
                path.pop();
                continue;
            }
            if w < start || on_path[w.0] {
                continue;
            }
            if path.len() + 1 + dist[w.0] > max_len {
                continue;
            }
            path.push(d);
            on_path[w.0] = true;
            self.extend_cycles(start, w, max_len, dist, path, on_path, seen, out);
            on_path[w.0] = false;
            path.pop();
        }
    }

    pub(crate) fn bfs_distances(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX / 4; self.num_vertices()];
        dist[s.0] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &d in self.rotation(v) {
                let w = self.head(d);
                if dist[w.0] > dist[v.0] + 1 {
                    dist[w.0] = dist[v.0] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Separating cycles of length at most `max_len`.
    pub fn separating_cycles_up_to(&self, max_len: usize) -> Vec<Cycle> {
        self.cycles_up_to(max_len).into_iter().filter(|c| self.is_separating(c)).collect()
    }
}
